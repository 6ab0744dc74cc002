#include "magic/construct.hpp"

namespace magic {

Square siamese(int n, std::int64_t a_min) {
    if (n < 3) {
        throw OrderTooSmallError("order must be at least 3, got " +
                                 std::to_string(n));
    }
    if (n % 2 == 0) {
        throw NotOddError("order " + std::to_string(n) + " is not odd");
    }
    // 0 marks an unoccupied cell; placed values are >= 1 until the final
    // offset.
    std::vector<std::int64_t> grid(static_cast<std::size_t>(n) * n, 0);
    const auto slot = [n](int row, int col) {
        return static_cast<std::size_t>(row) * n + col;
    };
    int row = 0, col = n / 2;  // middle of the top row
    grid[slot(row, col)] = 1;
    const std::int64_t total = static_cast<std::int64_t>(n) * n;
    for (std::int64_t k = 2; k <= total; ++k) {
        const bool at_top_right = row == 0 && col == n - 1;
        const int up = (row + n - 1) % n;
        const int right = (col + 1) % n;
        if (at_top_right || grid[slot(up, right)] != 0) {
            row = (row + 1) % n;  // same column, next row down
        } else {
            row = up;
            col = right;
        }
        if (grid[slot(row, col)] != 0) {
            throw Error("siamese placement revisited cell (" +
                        std::to_string(row + 1) + "," +
                        std::to_string(col + 1) + ") at k=" +
                        std::to_string(k));
        }
        grid[slot(row, col)] = k;
    }
    Square square(n, 1, std::move(grid));
    return a_min == 1 ? square : apply_min_offset(square, a_min);
}

}  // namespace magic
