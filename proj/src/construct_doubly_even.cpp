#include "magic/construct.hpp"

namespace magic {

bool in_x_block(int n, int row, int col) {
    const int quarter = n / 4;
    const int qi = row / quarter;
    const int qj = col / quarter;
    const bool outer_row = qi == 0 || qi == 3;
    const bool outer_col = qj == 0 || qj == 3;
    return outer_row == outer_col;
}

Square doubly_even(int n, std::int64_t a_min) {
    if (n < 3) {
        throw OrderTooSmallError("order must be at least 3, got " +
                                 std::to_string(n));
    }
    if (n % 4 != 0) {
        throw NotDoublyEvenError("order " + std::to_string(n) +
                                 " is not divisible by 4");
    }
    std::vector<std::int64_t> grid(static_cast<std::size_t>(n) * n);
    const std::int64_t complement = static_cast<std::int64_t>(n) * n + 1;
    std::size_t slot = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j, ++slot) {
            const std::int64_t natural = static_cast<std::int64_t>(i) * n + j + 1;
            grid[slot] = in_x_block(n, i, j) ? natural : complement - natural;
        }
    }
    Square square(n, 1, std::move(grid));
    return a_min == 1 ? square : apply_min_offset(square, a_min);
}

}  // namespace magic
