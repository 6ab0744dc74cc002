#pragma once

#include <array>
#include <cstdint>

#include "magic/core.hpp"

namespace magic {

// Siamese construction for odd n >= 3: 1 starts at the middle of the top
// row, successive values move up-right with wraparound and drop one row on
// collision or from the top-right corner.
Square siamese(int n, std::int64_t a_min = 1);

// Block-complement construction for n divisible by 4. Cells in the X
// pattern keep their natural row-major value (i-1)n + j, cells in Y get
// the complement n^2 + 1 - ((i-1)n + j).
Square doubly_even(int n, std::int64_t a_min = 1);

// X/Y membership of a cell (0-based) for the doubly even pattern: X where
// the row quarter and column quarter are both outer or both inner.
bool in_x_block(int n, int row, int col);

// Singly even construction (n >= 6, n = 2 mod 4): four odd quadrants with
// value offsets, then four deterministic vertical block exchanges.
//
// build_quadrants returns the intermediate matrix before any exchange:
// quadrant order p = n/2, top-left holds 1..p^2, bottom-right the next
// band, then top-right, then bottom-left (offset (l-1)n^2/4 for quadrant l).
Square build_quadrants(int n);

// Applies the first `count` (0..4) of the four exchanges to a copy:
// (1) upper-left corner blocks, (2) lower-left corner blocks, (3) middle
// row segments, (4) the right column band between the off-diagonal
// quadrants. Exposed so the intermediate row sums can be examined.
Square apply_block_exchanges(const Square& square, int count = 4);

Square singly_even(int n, std::int64_t a_min = 1);

// Half-open 0-based cell ranges of the exchanged blocks. upper[i] swaps
// with lower[i]; the two ranges of a pair have identical shape and column
// span (all exchanges are strictly vertical).
struct CellRange {
    int row_begin = 0, row_end = 0;
    int col_begin = 0, col_end = 0;

    int rows() const { return row_end - row_begin; }
    int cols() const { return col_end - col_begin; }
    std::int64_t cell_count() const {
        return static_cast<std::int64_t>(rows()) * cols();
    }
    friend bool operator==(const CellRange&, const CellRange&) = default;
};

struct ExchangeGeometry {
    int p = 0;  // quadrant order n/2
    int m = 0;  // corner block size (n-2)/4
    std::array<CellRange, 4> upper;
    std::array<CellRange, 4> lower;
};

ExchangeGeometry exchange_geometry(int n);

// Dispatches on classify_order(n) to the matching construction.
Square make_magic_square(int n, std::int64_t a_min = 1);

}  // namespace magic
