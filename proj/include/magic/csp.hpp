#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magic/core.hpp"

namespace magic {

class ModelTooLargeError : public Error {
public:
    using Error::Error;
};

// An external solution assigns zero or several values to some cell.
class NotExactlyOneError : public Error {
public:
    NotExactlyOneError(const std::string& what, int row, int col)
        : Error(what), row(row), col(col) {}
    int row;  // 1-based
    int col;
};

class SolutionFormatError : public Error {
public:
    using Error::Error;
};

// Constraint families of the binary model. One binary variable x_{i,j}^k
// per cell (i, j) and candidate value k in [a_min, a_max]:
//   ValueUsedOnce:  sum_{i,j} x_{i,j}^k           = 1   (one per value)
//   CellFilledOnce: sum_k     x_{i,j}^k           = 1   (one per cell)
//   RowSum:         sum_{j,k} k x_{i,j}^k         = C   (one per row)
//   ColSum:         sum_{i,k} k x_{i,j}^k         = C   (one per column)
//   MainDiagSum:    sum_{i,k} k x_{i,i}^k         = C
//   AntiDiagSum:    sum_{i,k} k x_{i,n+1-i}^k     = C
enum class ConstraintFamily {
    ValueUsedOnce,
    CellFilledOnce,
    RowSum,
    ColSum,
    MainDiagSum,
    AntiDiagSum,
};

struct Constraint {
    ConstraintFamily family;
    int i = 0;           // 1-based row (CellFilledOnce, RowSum)
    int j = 0;           // 1-based column (CellFilledOnce, ColSum)
    std::int64_t k = 0;  // value (ValueUsedOnce)
    std::int64_t rhs = 0;
};

struct Term {
    std::int64_t var;    // variable id in [0, n^4)
    std::int64_t coeff;
};

// The full model for order n: n^4 binary variables and 2n^2 + 2n + 2
// equality constraints. Coefficient lists are generated on demand so the
// model itself stays O(n^2) in memory.
class ConstraintModel {
public:
    static constexpr std::int64_t kDefaultVariableLimit = 10'000'000;

    int n() const { return n_; }
    std::int64_t a_min() const { return a_min_; }
    std::int64_t a_max() const {
        return a_min_ + static_cast<std::int64_t>(n_) * n_ - 1;
    }
    std::int64_t magic_sum() const { return magic_sum_; }
    std::int64_t variable_count() const;

    const std::vector<Constraint>& constraints() const { return constraints_; }

    // Variable ids enumerate (i, j, k) with k fastest: cell (i, j) 1-based.
    std::int64_t variable_id(int i, int j, std::int64_t k) const;
    struct VariableRef {
        int i, j;
        std::int64_t k;
    };
    VariableRef variable_ref(std::int64_t var) const;
    std::string variable_name(std::int64_t var) const;  // "x_i_j_k"
    // Inverse of variable_name; nullopt when the name is not a model
    // variable.
    std::optional<std::int64_t> parse_variable_name(std::string_view name) const;

    // Coefficient list of one constraint, deterministic term order.
    std::vector<Term> constraint_terms(const Constraint& constraint) const;
    std::string constraint_label(const Constraint& constraint) const;

private:
    friend ConstraintModel build_model(int, std::int64_t, std::int64_t);
    ConstraintModel() = default;

    int n_ = 0;
    std::int64_t a_min_ = 1;
    std::int64_t magic_sum_ = 0;
    std::vector<Constraint> constraints_;
};

ConstraintModel build_model(
    int n, std::int64_t a_min = 1,
    std::int64_t variable_limit = ConstraintModel::kDefaultVariableLimit);

enum class SolveStatus { Solved, Infeasible, Timeout };

const char* to_string(SolveStatus status);

struct SolveStats {
    std::int64_t nodes = 0;
    std::int64_t backtracks = 0;
    double seconds = 0.0;
};

// Test hook: pin x_{i,j}^k = 1 before the search starts. Conflicting pins
// make the model provably infeasible.
struct ForcedAssignment {
    int i, j;  // 1-based
    std::int64_t k;
};

struct SolveOptions {
    std::chrono::milliseconds time_limit{60'000};
    bool enumerate = false;  // keep searching after the first solution
    std::size_t max_solutions = std::numeric_limits<std::size_t>::max();
    std::vector<ForcedAssignment> forced;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    // First solution, or every solution found in enumerate mode, in
    // deterministic search order.
    std::vector<Square> squares;
    // True when the search tree was exhausted, i.e. the solution list is
    // provably complete (or the infeasibility proven).
    bool complete = false;
    SolveStats stats;
};

// Deterministic exact search: cells in row-major order, candidate values
// ascending, pruned by used-value elimination and line-sum bounds from the
// smallest/largest unused values. Absence of a solution within the time
// limit is reported as Timeout, never as infeasibility.
SolveResult solve_builtin(const ConstraintModel& model,
                          const SolveOptions& options = {});

// CPLEX-style LP text: Minimize / Subject To / Binary / End sections, LF
// line endings, byte-stable for identical models.
void export_lp(const ConstraintModel& model, std::ostream& out);

// Decodes a 0/1 assignment (indexed by variable id) into a Square; every
// cell must have exactly one value set.
Square decode_solution(const ConstraintModel& model,
                       const std::vector<std::uint8_t>& values);

// Reads "name value" lines ("x_2_3_7 1"); '#' starts a comment line.
// Unlisted variables default to 0.
std::vector<std::uint8_t> parse_solution_file(const ConstraintModel& model,
                                              std::istream& in);

}  // namespace magic
