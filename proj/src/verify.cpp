#include "magic/verify.hpp"

#include <limits>
#include <numeric>

namespace magic {

namespace {

void require_even(int n) {
    if (n % 2 != 0) {
        throw NotEvenError("order " + std::to_string(n) + " is not even");
    }
}

void require_doubly_even(int n) {
    if (classify_order(n) != OrderClass::DoublyEven) {
        throw NotDoublyEvenError("order " + std::to_string(n) +
                                 " is not divisible by 4");
    }
}

void require_singly_even(int n) {
    if (classify_order(n) != OrderClass::SinglyEven) {
        throw NotSinglyEvenError("order " + std::to_string(n) +
                                 " is not singly even");
    }
}

// Appends to `failures` respecting the cap; always counts.
struct FindingSink {
    std::vector<Finding>& failures;
    std::int64_t& total;
    int cap;

    void add(Finding finding) {
        ++total;
        if (static_cast<int>(failures.size()) < cap) {
            failures.push_back(finding);
        }
    }
};

}  // namespace

const char* property_tag(Property property) {
    switch (property) {
        case Property::Uniqueness: return "(i)";
        case Property::Range: return "(ii)";
        case Property::ColumnSum: return "(iii)";
        case Property::RowSum: return "(iv)";
        case Property::MainDiagonal: return "(v)";
        case Property::SecondaryDiagonal: return "(vi)";
    }
    return "?";
}

std::string describe(const Finding& f) {
    const std::string tag = property_tag(f.property);
    switch (f.property) {
        case Property::Uniqueness:
            return "property " + tag + " cell (" + std::to_string(f.row) +
                   "," + std::to_string(f.col) + "): value " +
                   std::to_string(f.observed) + " duplicated";
        case Property::Range:
            return "property " + tag + " cell (" + std::to_string(f.row) +
                   "," + std::to_string(f.col) + "): value " +
                   std::to_string(f.observed) + " outside bound " +
                   std::to_string(f.expected);
        case Property::ColumnSum:
            return "property " + tag + " column " + std::to_string(f.col) +
                   ": expected " + std::to_string(f.expected) + ", observed " +
                   std::to_string(f.observed);
        case Property::RowSum:
            return "property " + tag + " row " + std::to_string(f.row) +
                   ": expected " + std::to_string(f.expected) + ", observed " +
                   std::to_string(f.observed);
        case Property::MainDiagonal:
            return "property " + tag + " main diagonal: expected " +
                   std::to_string(f.expected) + ", observed " +
                   std::to_string(f.observed);
        case Property::SecondaryDiagonal:
            return "property " + tag + " secondary diagonal: expected " +
                   std::to_string(f.expected) + ", observed " +
                   std::to_string(f.observed);
    }
    return "?";
}

VerifyReport verify(const Square& square, int failure_cap) {
    if (failure_cap < 0) {
        throw InvalidArgumentError("failure cap must be non-negative");
    }
    const int n = square.n();
    const std::int64_t a_min = square.a_min();
    const std::int64_t a_max = square.a_max();

    VerifyReport report;
    report.magic_constant = magic_constant(n, a_min);
    report.failure_cap = failure_cap;

    // Buckets keep the documented order: uniqueness, range, rows, columns,
    // main diagonal, secondary diagonal.
    std::vector<Finding> uniqueness, range, lines;
    std::int64_t uniq_total = 0, range_total = 0, line_total = 0;
    FindingSink uniq_sink{uniqueness, uniq_total, failure_cap};
    FindingSink range_sink{range, range_total, failure_cap};
    FindingSink line_sink{lines, line_total, failure_cap};

    // Presence bitmap indexed by value - a_min; out-of-range entries are
    // range failures, never uniqueness failures.
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::int64_t value = square.at(i, j);
            if (value < a_min || value > a_max) {
                range_sink.add({Property::Range, i + 1, j + 1,
                                value < a_min ? a_min : a_max, value});
                continue;
            }
            const std::size_t slot = static_cast<std::size_t>(value - a_min);
            if (seen[slot]) {
                uniq_sink.add(
                    {Property::Uniqueness, i + 1, j + 1, value, value});
            } else {
                seen[slot] = 1;
            }
        }
    }

    const std::int64_t target = report.magic_constant;
    for (int i = 0; i < n; ++i) {
        std::int64_t sum = 0;
        for (int j = 0; j < n; ++j) sum += square.at(i, j);
        if (sum != target) {
            line_sink.add({Property::RowSum, i + 1, 0, target, sum});
        }
    }
    for (int j = 0; j < n; ++j) {
        std::int64_t sum = 0;
        for (int i = 0; i < n; ++i) sum += square.at(i, j);
        if (sum != target) {
            line_sink.add({Property::ColumnSum, 0, j + 1, target, sum});
        }
    }
    std::int64_t main_diag = 0, anti_diag = 0;
    for (int i = 0; i < n; ++i) {
        main_diag += square.at(i, i);
        anti_diag += square.at(i, n - 1 - i);
    }
    if (main_diag != target) {
        line_sink.add({Property::MainDiagonal, 0, 0, target, main_diag});
    }
    if (anti_diag != target) {
        line_sink.add({Property::SecondaryDiagonal, 0, 0, target, anti_diag});
    }

    report.total_failures = uniq_total + range_total + line_total;
    report.is_magic = report.total_failures == 0;
    report.failures.reserve(
        std::min<std::int64_t>(report.total_failures, failure_cap));
    for (auto* bucket : {&uniqueness, &range, &lines}) {
        for (const Finding& f : *bucket) {
            if (static_cast<int>(report.failures.size()) >= failure_cap) break;
            report.failures.push_back(f);
        }
    }
    report.truncated =
        report.total_failures > static_cast<std::int64_t>(report.failures.size());
    return report;
}

IndexSets index_sets(int n) {
    require_doubly_even(n);
    IndexSets sets;
    sets.quarter = n / 4;
    for (int j = 1; j <= sets.quarter; ++j) sets.outer.push_back(j);
    for (int j = 3 * sets.quarter + 1; j <= n; ++j) sets.outer.push_back(j);
    for (int j = sets.quarter + 1; j <= 3 * sets.quarter; ++j) {
        sets.inner.push_back(j);
    }
    return sets;
}

std::pair<std::int64_t, std::int64_t> lemma1_sums(int n) {
    const IndexSets sets = index_sets(n);
    const auto sum = [](const std::vector<int>& indices) {
        return std::accumulate(indices.begin(), indices.end(),
                               std::int64_t{0});
    };
    return {sum(sets.outer), sum(sets.inner)};
}

PartialSumReport partial_sums(const Square& square) {
    const int n = square.n();
    require_even(n);
    PartialSumReport report;
    report.column_sums.assign(n, 0);
    report.upper_row_sums.reserve(n / 2);
    report.lower_row_sums.reserve(n / 2);
    for (int i = 0; i < n; ++i) {
        std::int64_t row_sum = 0;
        for (int j = 0; j < n; ++j) {
            const std::int64_t value = square.at(i, j);
            row_sum += value;
            report.column_sums[j] += value;
        }
        (i < n / 2 ? report.upper_row_sums : report.lower_row_sums)
            .push_back(row_sum);
        report.main_diag_sum += square.at(i, i);
        report.anti_diag_sum += square.at(i, n - 1 - i);
    }
    return report;
}

TransferConstants check_transfer_constants(int n) {
    require_singly_even(n);
    using int128 = __int128;
    const int128 order = n;
    const int128 c_num = 3 * order * order * order - 6 * order * order;
    const int128 d_num = order * order * order - 6 * order * order;
    if (c_num % 16 != 0 || d_num % 16 != 0) {
        throw Error("transfer constants are not integral at n=" +
                    std::to_string(n));
    }
    const int128 c = c_num / 16;
    const int128 d = d_num / 16;
    if (c > std::numeric_limits<std::int64_t>::max()) {
        throw OverflowError("transfer constants exceed 64 bits at n=" +
                            std::to_string(n));
    }
    return {static_cast<std::int64_t>(c), static_cast<std::int64_t>(d)};
}

}  // namespace magic
