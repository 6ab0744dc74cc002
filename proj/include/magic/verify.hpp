#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "magic/core.hpp"

namespace magic {

// The six defining properties of a magic square:
// (i) all entries unique, (ii) entries exactly span [a_min, a_max],
// (iii) every column sums to the constant, (iv) every row sums to the
// constant, (v) the main diagonal sums to the constant, (vi) the secondary
// diagonal sums to the constant.
enum class Property {
    Uniqueness,
    Range,
    ColumnSum,
    RowSum,
    MainDiagonal,
    SecondaryDiagonal,
};

// Roman-numeral tag "(i)".."(vi)" for a property.
const char* property_tag(Property property);

struct Finding {
    Property property;
    // 1-based coordinates. Cell findings set both; row/column findings set
    // one and leave the other 0; diagonal findings leave both 0.
    int row = 0;
    int col = 0;
    // For line sums: expected = the magic constant, observed = the sum.
    // For range: expected = the violated bound, observed = the entry.
    // For uniqueness: both carry the duplicated value.
    std::int64_t expected = 0;
    std::int64_t observed = 0;

    friend bool operator==(const Finding&, const Finding&) = default;
};

std::string describe(const Finding& finding);

struct VerifyReport {
    bool is_magic = false;
    std::int64_t magic_constant = 0;
    // Deterministic order: uniqueness, range (both row-major over cells),
    // rows ascending, columns ascending, main diagonal, secondary diagonal.
    std::vector<Finding> failures;
    // Total number of violations found; failures is truncated to the cap.
    std::int64_t total_failures = 0;
    int failure_cap = 0;
    bool truncated = false;
};

inline constexpr int kDefaultFailureCap = 100;

// Checks all six properties against the square's declared a_min. The
// constant is recomputed from (n, a_min), never trusted from elsewhere.
VerifyReport verify(const Square& square, int failure_cap = kDefaultFailureCap);

// Index bookkeeping for doubly even orders: outer = first and last
// quarters of 1..n, inner = middle two quarters.
struct IndexSets {
    std::vector<int> outer;
    std::vector<int> inner;
    int quarter = 0;  // n/4
};

IndexSets index_sets(int n);  // doubly even n only

// Sums the outer and inner index sets by direct summation. Both sides
// equal 4k^2 + k with k = n/4; tests assert the identity.
std::pair<std::int64_t, std::int64_t> lemma1_sums(int n);

// Raw line sums of an even-order square, split into the upper and lower
// halves. No magic judgment applied.
struct PartialSumReport {
    std::vector<std::int64_t> column_sums;     // n entries
    std::vector<std::int64_t> upper_row_sums;  // first n/2 rows
    std::vector<std::int64_t> lower_row_sums;  // last n/2 rows
    std::int64_t main_diag_sum = 0;
    std::int64_t anti_diag_sum = 0;
};

PartialSumReport partial_sums(const Square& square);

// Exact mass moved between the matrix halves by the singly even block
// exchanges: c = (3n^3 - 6n^2)/16 by exchanges 1-3, d = (n^3 - 6n^2)/16
// back by exchange 4. Both divide exactly for singly even n.
struct TransferConstants {
    std::int64_t c = 0;
    std::int64_t d = 0;
};

TransferConstants check_transfer_constants(int n);

}  // namespace magic
