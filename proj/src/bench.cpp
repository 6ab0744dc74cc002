#include "magic/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <set>

#include <json.hpp>

#include "magic/construct.hpp"
#include "magic/csp.hpp"
#include "magic/io.hpp"
#include "magic/verify.hpp"

namespace magic {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point from, Clock::time_point to) {
    return std::chrono::duration<double>(to - from).count();
}

// Keeps the timed construction from being optimized away.
volatile std::int64_t g_sink = 0;

double time_fast(int n, int repetitions) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < repetitions; ++r) {
        const auto t0 = Clock::now();
        const Square square = make_magic_square(n, 1);
        const auto t1 = Clock::now();
        g_sink = g_sink + square.at(0, 0);
        best = std::min(best, elapsed_seconds(t0, t1));
    }
    return best;
}

double time_csp(const ConstraintModel& model, const SolveOptions& options,
                int repetitions) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < repetitions; ++r) {
        const auto t0 = Clock::now();
        const SolveResult result = solve_builtin(model, options);
        const auto t1 = Clock::now();
        if (result.status != SolveStatus::Solved) {
            throw Error(std::string("csp solve ") + to_string(result.status) +
                        " at n=" + std::to_string(model.n()));
        }
        g_sink = g_sink + result.squares.front().at(0, 0);
        best = std::min(best, elapsed_seconds(t0, t1));
    }
    return best;
}

void require_verified(const Square& square) {
    const VerifyReport report = verify(square);
    if (!report.is_magic) {
        throw Error("constructed square failed verification at n=" +
                    std::to_string(square.n()));
    }
}

}  // namespace

const char* to_string(BenchMethod method) {
    return method == BenchMethod::Fast ? "fast" : "csp";
}

std::vector<BenchSample> run_bench(const std::vector<int>& orders,
                                   BenchMethod method,
                                   const BenchConfig& config) {
    if (config.repetitions < 1) {
        throw InvalidArgumentError("repetitions must be at least 1");
    }
    std::vector<BenchSample> samples;
    samples.reserve(orders.size());
    for (int n : orders) {
        const OrderClass order_class = classify_order(n);
        double seconds = 0.0;
        if (method == BenchMethod::Fast) {
            // Warm-up run, verified once; the timed runs skip verification.
            require_verified(make_magic_square(n, 1));
            seconds = time_fast(n, config.repetitions);
        } else {
            const ConstraintModel model = build_model(n, 1);
            SolveOptions options;
            options.time_limit = config.csp_time_limit;
            const SolveResult warm = solve_builtin(model, options);
            if (warm.status != SolveStatus::Solved) {
                throw Error(std::string("csp solve ") +
                            to_string(warm.status) + " at n=" +
                            std::to_string(n));
            }
            require_verified(warm.squares.front());
            seconds = time_csp(model, options, config.repetitions);
        }
        // Clamp to one clock tick so samples stay positive.
        samples.push_back({n, order_class, method,
                           std::max(seconds, 1e-9)});
    }
    return samples;
}

QuadraticFit fit_quadratic(const std::vector<BenchSample>& samples) {
    std::set<int> distinct;
    for (const BenchSample& sample : samples) distinct.insert(sample.n);
    if (distinct.size() < 3) {
        throw DegenerateDesignError(
            "need at least 3 distinct orders to fit a quadratic, got " +
            std::to_string(distinct.size()));
    }

    // Standardize the orders before solving the normal equations; the raw
    // moments up to n^4 would otherwise lose precision for n in the
    // thousands.
    const std::size_t count = samples.size();
    long double mean = 0.0L;
    for (const BenchSample& s : samples) mean += s.n;
    mean /= static_cast<long double>(count);
    long double variance = 0.0L;
    for (const BenchSample& s : samples) {
        const long double d = s.n - mean;
        variance += d * d;
    }
    variance /= static_cast<long double>(count);
    const long double scale = std::sqrt(variance);

    // Normal equations for t = p2 u^2 + p1 u + p0 with u = (n - mean)/scale.
    long double m[3][4] = {};
    for (const BenchSample& s : samples) {
        const long double u = (s.n - mean) / scale;
        const long double basis[3] = {u * u, u, 1.0L};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
            m[r][3] += basis[r] * static_cast<long double>(s.seconds);
        }
    }
    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        }
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const long double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    const long double p2 = m[0][3] / m[0][0];
    const long double p1 = m[1][3] / m[1][1];
    const long double p0 = m[2][3] / m[2][2];

    QuadraticFit fit;
    fit.order_class = samples.front().order_class;
    fit.a = static_cast<double>(p2 / (scale * scale));
    fit.b = static_cast<double>(p1 / scale - 2.0L * p2 * mean / (scale * scale));
    fit.c = static_cast<double>(p2 * mean * mean / (scale * scale) -
                                p1 * mean / scale + p0);
    long double residual = 0.0L;
    for (const BenchSample& s : samples) {
        const long double n = s.n;
        const long double predicted =
            static_cast<long double>(fit.a) * n * n +
            static_cast<long double>(fit.b) * n + static_cast<long double>(fit.c);
        const long double d = predicted - static_cast<long double>(s.seconds);
        residual += d * d;
    }
    fit.residual_rms =
        static_cast<double>(std::sqrt(residual / static_cast<long double>(count)));
    return fit;
}

std::vector<QuadraticFit> fit_per_class(
    const std::vector<BenchSample>& samples) {
    std::vector<QuadraticFit> fits;
    for (OrderClass order_class :
         {OrderClass::Odd, OrderClass::SinglyEven, OrderClass::DoublyEven}) {
        std::vector<BenchSample> group;
        for (const BenchSample& sample : samples) {
            if (sample.order_class == order_class) group.push_back(sample);
        }
        std::set<int> distinct;
        for (const BenchSample& sample : group) distinct.insert(sample.n);
        if (distinct.size() < 3) continue;
        fits.push_back(fit_quadratic(group));
    }
    return fits;
}

void write_bench_csv(std::ostream& out, std::vector<BenchSample> samples) {
    std::stable_sort(samples.begin(), samples.end(),
                     [](const BenchSample& lhs, const BenchSample& rhs) {
                         if (lhs.method != rhs.method) {
                             return lhs.method < rhs.method;
                         }
                         if (lhs.order_class != rhs.order_class) {
                             return lhs.order_class < rhs.order_class;
                         }
                         return lhs.n < rhs.n;
                     });
    char buffer[128];
    for (const BenchSample& sample : samples) {
        std::snprintf(buffer, sizeof(buffer), "%d,%s,%s,%.9e\n", sample.n,
                      to_string(sample.order_class), to_string(sample.method),
                      sample.seconds);
        out << buffer;
    }
    if (!out.good()) {
        throw IoError("failed to write bench CSV");
    }
}

void write_fit_json(std::ostream& out, const std::vector<QuadraticFit>& fits) {
    auto doc = nlohmann::ordered_json::array();
    for (const QuadraticFit& fit : fits) {
        nlohmann::ordered_json entry;
        entry["class"] = to_string(fit.order_class);
        entry["a"] = fit.a;
        entry["b"] = fit.b;
        entry["c"] = fit.c;
        entry["residual_rms"] = fit.residual_rms;
        doc.push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
    if (!out.good()) {
        throw IoError("failed to write fit JSON");
    }
}

}  // namespace magic
