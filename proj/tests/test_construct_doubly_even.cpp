#include <doctest.h>

#include "magic/construct.hpp"
#include "magic/verify.hpp"
#include "reference_squares.hpp"

using namespace magic;

TEST_CASE("doubly_even reproduces the known 4x4 square") {
    const Square square = doubly_even(4);
    CHECK(square.cells() == testdata::kDoublyEven4Cells);
    // Main diagonal entries 1, 6, 11, 16.
    CHECK(square.at(0, 0) + square.at(1, 1) + square.at(2, 2) +
              square.at(3, 3) ==
          34);
}

TEST_CASE("doubly_even n=8 first row") {
    const Square square = doubly_even(8);
    const std::vector<std::int64_t> expected = {1, 2, 62, 61, 60, 59, 7, 8};
    std::int64_t sum = 0;
    for (int j = 0; j < 8; ++j) {
        CHECK(square.at(0, j) == expected[j]);
        sum += square.at(0, j);
    }
    CHECK(sum == 260);
}

TEST_CASE("doubly_even verifies across a range of orders") {
    for (int n = 4; n <= 200; n += 4) {
        CHECK(verify(doubly_even(n)).is_magic);
    }
}

TEST_CASE("both diagonals lie in X blocks") {
    for (int n : {4, 8, 12, 40, 100}) {
        for (int i = 0; i < n; ++i) {
            CHECK(in_x_block(n, i, i));
            CHECK(in_x_block(n, i, n - 1 - i));
        }
    }
}

TEST_CASE("every row and column splits evenly between X and Y") {
    for (int n : {4, 8, 12, 36}) {
        for (int i = 0; i < n; ++i) {
            int x_in_row = 0, x_in_col = 0;
            for (int j = 0; j < n; ++j) {
                x_in_row += in_x_block(n, i, j) ? 1 : 0;
                x_in_col += in_x_block(n, j, i) ? 1 : 0;
            }
            CHECK(x_in_row == n / 2);
            CHECK(x_in_col == n / 2);
        }
    }
}

TEST_CASE("Y cells hold the complement of their natural value") {
    for (int n : {4, 8, 16}) {
        const Square square = doubly_even(n);
        const std::int64_t complement = static_cast<std::int64_t>(n) * n + 1;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const std::int64_t natural =
                    static_cast<std::int64_t>(i) * n + j + 1;
                if (in_x_block(n, i, j)) {
                    CHECK(square.at(i, j) == natural);
                } else {
                    CHECK(square.at(i, j) + natural == complement);
                }
            }
        }
    }
}

TEST_CASE("per-row X and Y contributions combine to the constant") {
    for (int n : {4, 8, 20}) {
        const Square square = doubly_even(n);
        const std::int64_t target = magic_constant(n, 1);
        for (int i = 0; i < n; ++i) {
            std::int64_t x_part = 0, y_part = 0;
            for (int j = 0; j < n; ++j) {
                (in_x_block(n, i, j) ? x_part : y_part) += square.at(i, j);
            }
            CHECK(x_part + y_part == target);
        }
    }
}

TEST_CASE("doubly_even rejects other orders") {
    CHECK_THROWS_AS(doubly_even(6), NotDoublyEvenError);
    CHECK_THROWS_AS(doubly_even(7), NotDoublyEvenError);
    CHECK_THROWS_AS(doubly_even(2), OrderTooSmallError);
}

TEST_CASE("doubly_even honours a_min") {
    const Square square = doubly_even(4, 5);
    CHECK(square.a_min() == 5);
    const VerifyReport report = verify(square);
    CHECK(report.is_magic);
    CHECK(report.magic_constant == 34 + 16);
}
