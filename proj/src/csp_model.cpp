#include "magic/csp.hpp"

#include <charconv>

namespace magic {

namespace {

using int128 = __int128;

std::optional<std::int64_t> parse_int(std::string_view text) {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Timeout: return "timeout";
    }
    return "unknown";
}

std::int64_t ConstraintModel::variable_count() const {
    const std::int64_t cells = static_cast<std::int64_t>(n_) * n_;
    return cells * cells;
}

std::int64_t ConstraintModel::variable_id(int i, int j, std::int64_t k) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || k < a_min() || k > a_max()) {
        throw InvalidArgumentError("variable (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," +
                                   std::to_string(k) + ") out of range");
    }
    const std::int64_t cells = static_cast<std::int64_t>(n_) * n_;
    const std::int64_t cell =
        static_cast<std::int64_t>(i - 1) * n_ + (j - 1);
    return cell * cells + (k - a_min());
}

ConstraintModel::VariableRef ConstraintModel::variable_ref(
    std::int64_t var) const {
    if (var < 0 || var >= variable_count()) {
        throw InvalidArgumentError("variable id " + std::to_string(var) +
                                   " out of range");
    }
    const std::int64_t cells = static_cast<std::int64_t>(n_) * n_;
    const std::int64_t cell = var / cells;
    return {static_cast<int>(cell / n_) + 1, static_cast<int>(cell % n_) + 1,
            a_min() + var % cells};
}

std::string ConstraintModel::variable_name(std::int64_t var) const {
    const VariableRef ref = variable_ref(var);
    return "x_" + std::to_string(ref.i) + "_" + std::to_string(ref.j) + "_" +
           std::to_string(ref.k);
}

std::optional<std::int64_t> ConstraintModel::parse_variable_name(
    std::string_view name) const {
    if (!name.starts_with("x_")) return std::nullopt;
    name.remove_prefix(2);
    const std::size_t first = name.find('_');
    if (first == std::string_view::npos) return std::nullopt;
    const std::size_t second = name.find('_', first + 1);
    if (second == std::string_view::npos) return std::nullopt;
    const auto i = parse_int(name.substr(0, first));
    const auto j = parse_int(name.substr(first + 1, second - first - 1));
    const auto k = parse_int(name.substr(second + 1));
    if (!i || !j || !k) return std::nullopt;
    if (*i < 1 || *i > n_ || *j < 1 || *j > n_ || *k < a_min() ||
        *k > a_max()) {
        return std::nullopt;
    }
    return variable_id(static_cast<int>(*i), static_cast<int>(*j), *k);
}

std::vector<Term> ConstraintModel::constraint_terms(
    const Constraint& constraint) const {
    std::vector<Term> terms;
    switch (constraint.family) {
        case ConstraintFamily::ValueUsedOnce:
            terms.reserve(static_cast<std::size_t>(n_) * n_);
            for (int i = 1; i <= n_; ++i) {
                for (int j = 1; j <= n_; ++j) {
                    terms.push_back({variable_id(i, j, constraint.k), 1});
                }
            }
            break;
        case ConstraintFamily::CellFilledOnce:
            terms.reserve(static_cast<std::size_t>(n_) * n_);
            for (std::int64_t k = a_min(); k <= a_max(); ++k) {
                terms.push_back({variable_id(constraint.i, constraint.j, k), 1});
            }
            break;
        case ConstraintFamily::RowSum:
            for (int j = 1; j <= n_; ++j) {
                for (std::int64_t k = a_min(); k <= a_max(); ++k) {
                    terms.push_back({variable_id(constraint.i, j, k), k});
                }
            }
            break;
        case ConstraintFamily::ColSum:
            for (int i = 1; i <= n_; ++i) {
                for (std::int64_t k = a_min(); k <= a_max(); ++k) {
                    terms.push_back({variable_id(i, constraint.j, k), k});
                }
            }
            break;
        case ConstraintFamily::MainDiagSum:
            for (int i = 1; i <= n_; ++i) {
                for (std::int64_t k = a_min(); k <= a_max(); ++k) {
                    terms.push_back({variable_id(i, i, k), k});
                }
            }
            break;
        case ConstraintFamily::AntiDiagSum:
            for (int i = 1; i <= n_; ++i) {
                for (std::int64_t k = a_min(); k <= a_max(); ++k) {
                    terms.push_back({variable_id(i, n_ + 1 - i, k), k});
                }
            }
            break;
    }
    return terms;
}

std::string ConstraintModel::constraint_label(
    const Constraint& constraint) const {
    switch (constraint.family) {
        case ConstraintFamily::ValueUsedOnce:
            return "value_" + std::to_string(constraint.k);
        case ConstraintFamily::CellFilledOnce:
            return "cell_" + std::to_string(constraint.i) + "_" +
                   std::to_string(constraint.j);
        case ConstraintFamily::RowSum:
            return "row_" + std::to_string(constraint.i);
        case ConstraintFamily::ColSum:
            return "col_" + std::to_string(constraint.j);
        case ConstraintFamily::MainDiagSum: return "diag_main";
        case ConstraintFamily::AntiDiagSum: return "diag_anti";
    }
    return "c";
}

ConstraintModel build_model(int n, std::int64_t a_min,
                            std::int64_t variable_limit) {
    const std::int64_t target = magic_constant(n, a_min);  // validates n, a_min
    const int128 cells = int128{n} * n;
    if (cells * cells > int128{variable_limit}) {
        throw ModelTooLargeError("model for n=" + std::to_string(n) +
                                 " needs n^4 binary variables, over the limit "
                                 "of " + std::to_string(variable_limit));
    }
    if (int128{a_min} + cells - 1 > std::numeric_limits<std::int64_t>::max()) {
        throw OverflowError("a_max exceeds the 64-bit range");
    }

    ConstraintModel model;
    model.n_ = n;
    model.a_min_ = a_min;
    model.magic_sum_ = target;
    auto& constraints = model.constraints_;
    constraints.reserve(2 * static_cast<std::size_t>(n) * n + 2 * n + 2);
    for (std::int64_t k = model.a_min(); k <= model.a_max(); ++k) {
        constraints.push_back({ConstraintFamily::ValueUsedOnce, 0, 0, k, 1});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            constraints.push_back({ConstraintFamily::CellFilledOnce, i, j, 0, 1});
        }
    }
    for (int i = 1; i <= n; ++i) {
        constraints.push_back({ConstraintFamily::RowSum, i, 0, 0, target});
    }
    for (int j = 1; j <= n; ++j) {
        constraints.push_back({ConstraintFamily::ColSum, 0, j, 0, target});
    }
    constraints.push_back({ConstraintFamily::MainDiagSum, 0, 0, 0, target});
    constraints.push_back({ConstraintFamily::AntiDiagSum, 0, 0, 0, target});
    return model;
}

}  // namespace magic
