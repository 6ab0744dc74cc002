#include "magic/csp.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "magic/io.hpp"

namespace magic {

namespace {

constexpr int kTermsPerLine = 8;

void write_constraint(std::ostream& out, const ConstraintModel& model,
                      const Constraint& constraint) {
    const bool weighted = constraint.family != ConstraintFamily::ValueUsedOnce &&
                          constraint.family != ConstraintFamily::CellFilledOnce;
    out << ' ' << model.constraint_label(constraint) << ':';
    int on_line = 0;
    bool first = true;
    for (const Term& term : model.constraint_terms(constraint)) {
        if (on_line == kTermsPerLine) {
            out << '\n' << "   ";
            on_line = 0;
        }
        out << (first ? " " : " + ");
        if (weighted) out << term.coeff << ' ';
        out << model.variable_name(term.var);
        first = false;
        ++on_line;
    }
    out << " = " << constraint.rhs << '\n';
}

}  // namespace

void export_lp(const ConstraintModel& model, std::ostream& out) {
    out << "Minimize\n obj: 0\nSubject To\n";
    for (const Constraint& constraint : model.constraints()) {
        write_constraint(out, model, constraint);
    }
    out << "Binary\n";
    const std::int64_t count = model.variable_count();
    for (std::int64_t var = 0; var < count; ++var) {
        out << ' ' << model.variable_name(var) << '\n';
    }
    out << "End\n";
    if (!out.good()) {
        throw IoError("failed to write LP document");
    }
}

Square decode_solution(const ConstraintModel& model,
                       const std::vector<std::uint8_t>& values) {
    if (values.size() != static_cast<std::size_t>(model.variable_count())) {
        throw InvalidArgumentError(
            "assignment covers " + std::to_string(values.size()) +
            " variables, model has " +
            std::to_string(model.variable_count()));
    }
    const int n = model.n();
    std::vector<std::int64_t> cells(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int set_count = 0;
            std::int64_t chosen = 0;
            for (std::int64_t k = model.a_min(); k <= model.a_max(); ++k) {
                if (values[model.variable_id(i, j, k)]) {
                    ++set_count;
                    chosen = k;
                }
            }
            if (set_count != 1) {
                throw NotExactlyOneError(
                    "cell (" + std::to_string(i) + "," + std::to_string(j) +
                    ") has " + std::to_string(set_count) +
                    " assigned values, expected exactly 1", i, j);
            }
            cells[static_cast<std::size_t>(i - 1) * n + (j - 1)] = chosen;
        }
    }
    return Square(n, model.a_min(), std::move(cells));
}

std::vector<std::uint8_t> parse_solution_file(const ConstraintModel& model,
                                              std::istream& in) {
    std::vector<std::uint8_t> values(
        static_cast<std::size_t>(model.variable_count()), 0);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name) || name.starts_with('#')) continue;
        const auto var = model.parse_variable_name(name);
        if (!var) {
            throw SolutionFormatError("line " + std::to_string(line_no) +
                                      ": unknown variable '" + name + "'");
        }
        double value = 0.0;
        if (!(fields >> value)) {
            throw SolutionFormatError("line " + std::to_string(line_no) +
                                      ": missing value for '" + name + "'");
        }
        values[static_cast<std::size_t>(*var)] = value > 0.5 ? 1 : 0;
    }
    return values;
}

}  // namespace magic
