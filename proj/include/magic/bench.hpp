#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "magic/core.hpp"

namespace magic {

class DegenerateDesignError : public Error {
public:
    using Error::Error;
};

enum class BenchMethod { Fast, Csp };

const char* to_string(BenchMethod method);

struct BenchSample {
    int n;
    OrderClass order_class;
    BenchMethod method;
    double seconds;  // best of r repetitions
};

struct BenchConfig {
    int repetitions = 3;
    std::chrono::milliseconds csp_time_limit{120'000};
};

// One sample per order: a warm-up run first, its output verified once,
// then `repetitions` timed runs keeping the minimum. The timer brackets
// only the construction (or CSP solve); verification and I/O stay outside
// the window.
std::vector<BenchSample> run_bench(const std::vector<int>& orders,
                                   BenchMethod method,
                                   const BenchConfig& config = {});

struct QuadraticFit {
    OrderClass order_class;
    double a = 0.0;  // leading coefficient of a n^2 + b n + c
    double b = 0.0;
    double c = 0.0;
    double residual_rms = 0.0;
};

// Least-squares a n^2 + b n + c through the samples, solved via normal
// equations on standardized orders for stability. Needs >= 3 distinct
// orders. The recorded class is taken from the samples.
QuadraticFit fit_quadratic(const std::vector<BenchSample>& samples);

// Groups samples by order class and fits each class with >= 3 distinct
// orders; classes with fewer samples are omitted.
std::vector<QuadraticFit> fit_per_class(const std::vector<BenchSample>& samples);

// CSV rows "n,class,method,seconds" (no header), sorted by
// (method, class, n).
void write_bench_csv(std::ostream& out, std::vector<BenchSample> samples);

// JSON array of {class, a, b, c, residual_rms}.
void write_fit_json(std::ostream& out, const std::vector<QuadraticFit>& fits);

}  // namespace magic
