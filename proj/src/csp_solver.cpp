#include "magic/csp.hpp"

#include <algorithm>

namespace magic {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first search over cell assignments in row-major order with
// ascending candidate values. Equivalent to the binary model: a cell
// assignment picks exactly one x_{i,j}^k per cell, the global used-value
// set enforces the one-per-value family, and the line-sum bounds prune
// against the sum constraints.
class Backtracker {
public:
    Backtracker(const ConstraintModel& model, const SolveOptions& options)
        : n_(model.n()),
          a_min_(model.a_min()),
          a_max_(model.a_max()),
          target_(model.magic_sum()),
          options_(options),
          grid_(static_cast<std::size_t>(n_) * n_, 0),
          used_(static_cast<std::size_t>(n_) * n_, 0),
          row_sum_(n_, 0),
          col_sum_(n_, 0),
          row_left_(n_, n_),
          col_left_(n_, n_),
          diag_left_(n_),
          anti_left_(n_) {}

    SolveResult run() {
        start_ = Clock::now();
        deadline_ = start_ + options_.time_limit;
        SolveResult result;
        if (seed_forced() && lines_consistent()) {
            search(0);
        }
        result.stats.nodes = nodes_;
        result.stats.backtracks = backtracks_;
        result.stats.seconds =
            std::chrono::duration<double>(Clock::now() - start_).count();
        result.squares = std::move(solutions_);
        if (!result.squares.empty()) {
            result.status = SolveStatus::Solved;
            result.complete = !timed_out_ && !stopped_early_;
        } else if (timed_out_) {
            result.status = SolveStatus::Timeout;
            result.complete = false;
        } else {
            result.status = SolveStatus::Infeasible;
            result.complete = true;
        }
        return result;
    }

private:
    std::size_t slot(int row, int col) const {
        return static_cast<std::size_t>(row) * n_ + col;
    }

    // Places forced variables; false on a direct conflict.
    bool seed_forced() {
        for (const ForcedAssignment& forced : options_.forced) {
            if (forced.i < 1 || forced.i > n_ || forced.j < 1 ||
                forced.j > n_ || forced.k < a_min_ || forced.k > a_max_) {
                throw InvalidArgumentError("forced assignment out of range");
            }
            const int row = forced.i - 1, col = forced.j - 1;
            const std::int64_t existing = grid_[slot(row, col)];
            if (existing == forced.k) continue;
            if (existing != 0) return false;           // cell already pinned
            if (used_[forced.k - a_min_]) return false;  // value already pinned
            place(row, col, forced.k);
        }
        return true;
    }

    bool lines_consistent() {
        for (int i = 0; i < n_; ++i) {
            if (!check_line(row_sum_[i], row_left_[i])) return false;
            if (!check_line(col_sum_[i], col_left_[i])) return false;
        }
        return check_line(diag_sum_, diag_left_) &&
               check_line(anti_sum_, anti_left_);
    }

    void place(int row, int col, std::int64_t value) {
        grid_[slot(row, col)] = value;
        used_[value - a_min_] = 1;
        row_sum_[row] += value;
        col_sum_[col] += value;
        --row_left_[row];
        --col_left_[col];
        if (row == col) {
            diag_sum_ += value;
            --diag_left_;
        }
        if (row + col == n_ - 1) {
            anti_sum_ += value;
            --anti_left_;
        }
    }

    void unplace(int row, int col, std::int64_t value) {
        grid_[slot(row, col)] = 0;
        used_[value - a_min_] = 0;
        row_sum_[row] -= value;
        col_sum_[col] -= value;
        ++row_left_[row];
        ++col_left_[col];
        if (row == col) {
            diag_sum_ -= value;
            ++diag_left_;
        }
        if (row + col == n_ - 1) {
            anti_sum_ -= value;
            ++anti_left_;
        }
    }

    std::int64_t min_completion(int count) const {
        std::int64_t sum = 0;
        for (std::int64_t v = 0; count > 0; ++v) {
            if (!used_[v]) {
                sum += a_min_ + v;
                --count;
            }
        }
        return sum;
    }

    std::int64_t max_completion(int count) const {
        std::int64_t sum = 0;
        for (std::int64_t v = static_cast<std::int64_t>(used_.size()) - 1;
             count > 0; --v) {
            if (!used_[v]) {
                sum += a_min_ + v;
                --count;
            }
        }
        return sum;
    }

    // A line with `left` open cells can still reach the target iff the
    // target lies between the smallest and largest completions drawn from
    // the unused values.
    bool check_line(std::int64_t sum, int left) const {
        if (left == 0) return sum == target_;
        return sum + min_completion(left) <= target_ &&
               sum + max_completion(left) >= target_;
    }

    bool feasible_after(int row, int col) const {
        if (!check_line(row_sum_[row], row_left_[row])) return false;
        if (!check_line(col_sum_[col], col_left_[col])) return false;
        if (row == col && !check_line(diag_sum_, diag_left_)) return false;
        if (row + col == n_ - 1 && !check_line(anti_sum_, anti_left_)) {
            return false;
        }
        return true;
    }

    bool out_of_time() {
        if (timed_out_) return true;
        if ((nodes_ & 0x1fff) == 0 && Clock::now() >= deadline_) {
            timed_out_ = true;
        }
        return timed_out_;
    }

    // Returns true to abort the whole search (first solution found in
    // single-solution mode, solution cap reached, or timeout).
    bool search(int cell) {
        if (out_of_time()) return true;
        const int total = n_ * n_;
        while (cell < total && grid_[cell] != 0) ++cell;  // forced cells
        if (cell == total) {
            solutions_.emplace_back(n_, a_min_, grid_);
            if (!options_.enumerate ||
                solutions_.size() >= options_.max_solutions) {
                stopped_early_ = true;
                return true;
            }
            return false;
        }
        const int row = cell / n_, col = cell % n_;
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(used_.size());
             ++v) {
            if (used_[v]) continue;
            const std::int64_t value = a_min_ + v;
            place(row, col, value);
            ++nodes_;
            if (feasible_after(row, col) && search(cell + 1)) return true;
            unplace(row, col, value);
            ++backtracks_;
            if (out_of_time()) return true;
        }
        return false;
    }

    int n_;
    std::int64_t a_min_, a_max_, target_;
    const SolveOptions& options_;
    std::vector<std::int64_t> grid_;
    std::vector<std::uint8_t> used_;
    std::vector<std::int64_t> row_sum_, col_sum_;
    std::vector<int> row_left_, col_left_;
    int diag_left_, anti_left_;
    std::int64_t diag_sum_ = 0, anti_sum_ = 0;
    std::vector<Square> solutions_;
    std::int64_t nodes_ = 0, backtracks_ = 0;
    bool timed_out_ = false;
    bool stopped_early_ = false;
    Clock::time_point start_, deadline_;
};

}  // namespace

SolveResult solve_builtin(const ConstraintModel& model,
                          const SolveOptions& options) {
    Backtracker backtracker(model, options);
    return backtracker.run();
}

}  // namespace magic
