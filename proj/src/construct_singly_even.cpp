#include "magic/construct.hpp"

#include <limits>
#include <utility>

namespace magic {

namespace {

void require_singly_even(int n) {
    if (n < 3) {
        throw OrderTooSmallError("order must be at least 3, got " +
                                 std::to_string(n));
    }
    if (classify_order(n) != OrderClass::SinglyEven) {
        throw NotSinglyEvenError("order " + std::to_string(n) +
                                 " is not singly even");
    }
}

// Intermediate matrix: the odd square of order p in each quadrant, offset
// by (l-1)n^2/4 for quadrant l, laid out [A1 A3; A4 A2].
std::vector<std::int64_t> quadrant_cells(int n) {
    const int p = n / 2;
    const std::int64_t quarter = static_cast<std::int64_t>(n) * n / 4;
    const Square base = siamese(p, 1);
    std::vector<std::int64_t> cells(static_cast<std::size_t>(n) * n);
    struct Placement {
        int row0, col0;
        std::int64_t offset;
    };
    const Placement placements[] = {
        {0, 0, 0},            // A1 top-left
        {p, p, quarter},      // A2 bottom-right
        {0, p, 2 * quarter},  // A3 top-right
        {p, 0, 3 * quarter},  // A4 bottom-left
    };
    for (const Placement& placement : placements) {
        for (int r = 0; r < p; ++r) {
            for (int c = 0; c < p; ++c) {
                cells[static_cast<std::size_t>(placement.row0 + r) * n +
                      placement.col0 + c] = base.at(r, c) + placement.offset;
            }
        }
    }
    return cells;
}

void swap_ranges(std::vector<std::int64_t>& cells, int n, const CellRange& a,
                 const CellRange& b) {
    for (int dr = 0; dr < a.rows(); ++dr) {
        for (int dc = 0; dc < a.cols(); ++dc) {
            std::swap(cells[static_cast<std::size_t>(a.row_begin + dr) * n +
                            a.col_begin + dc],
                      cells[static_cast<std::size_t>(b.row_begin + dr) * n +
                            b.col_begin + dc]);
        }
    }
}

void exchange_in_place(std::vector<std::int64_t>& cells, int n, int count) {
    const ExchangeGeometry geometry = exchange_geometry(n);
    for (int e = 0; e < count; ++e) {
        swap_ranges(cells, n, geometry.upper[e], geometry.lower[e]);
    }
}

}  // namespace

ExchangeGeometry exchange_geometry(int n) {
    require_singly_even(n);
    const int p = n / 2;
    const int m = (n - 2) / 4;
    ExchangeGeometry g;
    g.p = p;
    g.m = m;
    // (1) upper-left m x m corner blocks of the diagonal quadrants.
    g.upper[0] = {0, m, 0, m};
    g.lower[0] = {p, p + m, 0, m};
    // (2) lower-left m x m corner blocks.
    g.upper[1] = {m + 1, p, 0, m};
    g.lower[1] = {p + m + 1, n, 0, m};
    // (3) middle-row segments covering columns m+1..2m (1-based).
    g.upper[2] = {m, m + 1, m, 2 * m};
    g.lower[2] = {p + m, p + m + 1, m, 2 * m};
    // (4) right band of the off-diagonal quadrants: quadrant columns past
    // (n+6)/4, width (n-6)/4 (empty exactly at n = 6).
    const int band_start = p + (n + 6) / 4;
    g.upper[3] = {0, p, band_start, n};
    g.lower[3] = {p, n, band_start, n};
    return g;
}

Square build_quadrants(int n) {
    require_singly_even(n);
    return Square(n, 1, quadrant_cells(n));
}

Square apply_block_exchanges(const Square& square, int count) {
    require_singly_even(square.n());
    if (count < 0 || count > 4) {
        throw InvalidArgumentError("exchange count must be in 0..4, got " +
                                   std::to_string(count));
    }
    std::vector<std::int64_t> cells = square.cells();
    exchange_in_place(cells, square.n(), count);
    return Square(square.n(), square.a_min(), std::move(cells));
}

Square singly_even(int n, std::int64_t a_min) {
    require_singly_even(n);
    std::vector<std::int64_t> cells = quadrant_cells(n);
    exchange_in_place(cells, n, 4);
    if (a_min != 1) {
        if (a_min < 1) {
            throw InvalidArgumentError("a_min must be at least 1, got " +
                                       std::to_string(a_min));
        }
        const std::int64_t offset = a_min - 1;
        const std::int64_t headroom =
            std::numeric_limits<std::int64_t>::max() -
            static_cast<std::int64_t>(n) * n;
        if (offset > headroom) {
            throw OverflowError("entries overflow 64 bits at a_min=" +
                                std::to_string(a_min));
        }
        for (std::int64_t& value : cells) value += offset;
    }
    return Square(n, a_min, std::move(cells));
}

Square make_magic_square(int n, std::int64_t a_min) {
    switch (classify_order(n)) {
        case OrderClass::Odd: return siamese(n, a_min);
        case OrderClass::DoublyEven: return doubly_even(n, a_min);
        case OrderClass::SinglyEven: return singly_even(n, a_min);
    }
    throw Error("unreachable order class");
}

}  // namespace magic
