#pragma once

// Golden matrices used across the test suites. The 4x4 and 10x10 tables are
// frozen published examples of the block-complement and quadrant-exchange
// constructions; the 10x10 intermediate is the same square before the four
// block exchanges.

#include <cstdint>
#include <vector>

#include "magic/core.hpp"

namespace testdata {

inline magic::Square make_square(int n, std::int64_t a_min,
                                 std::vector<std::int64_t> cells) {
    return magic::Square(n, a_min, std::move(cells));
}

inline const std::vector<std::int64_t> kLoShuCells = {
    4, 9, 2,
    3, 5, 7,
    8, 1, 6,
};

inline const std::vector<std::int64_t> kSiamese3Cells = {
    8, 1, 6,
    3, 5, 7,
    4, 9, 2,
};

inline const std::vector<std::int64_t> kSiamese5Cells = {
    17, 24,  1,  8, 15,
    23,  5,  7, 14, 16,
     4,  6, 13, 20, 22,
    10, 12, 19, 21,  3,
    11, 18, 25,  2,  9,
};

inline const std::vector<std::int64_t> kDoublyEven4Cells = {
     1, 15, 14,  4,
    12,  6,  7,  9,
     8, 10, 11,  5,
    13,  3,  2, 16,
};

// Intermediate 10x10: four Siamese quadrants with offsets 0/25/50/75 in
// the layout [A1 A3; A4 A2], before any exchange.
inline const std::vector<std::int64_t> kQuadrants10Cells = {
    17, 24,  1,  8, 15, 67, 74, 51, 58, 65,
    23,  5,  7, 14, 16, 73, 55, 57, 64, 66,
     4,  6, 13, 20, 22, 54, 56, 63, 70, 72,
    10, 12, 19, 21,  3, 60, 62, 69, 71, 53,
    11, 18, 25,  2,  9, 61, 68, 75, 52, 59,
    92, 99, 76, 83, 90, 42, 49, 26, 33, 40,
    98, 80, 82, 89, 91, 48, 30, 32, 39, 41,
    79, 81, 88, 95, 97, 29, 31, 38, 45, 47,
    85, 87, 94, 96, 78, 35, 37, 44, 46, 28,
    86, 93, 100, 77, 84, 36, 43, 50, 27, 34,
};

// The same square after the four block exchanges: a magic square with
// constant 505.
inline const std::vector<std::int64_t> kSinglyEven10Cells = {
    92, 99,  1,  8, 15, 67, 74, 51, 58, 40,
    98, 80,  7, 14, 16, 73, 55, 57, 64, 41,
     4,  6, 88, 95, 22, 54, 56, 63, 70, 47,
    85, 87, 19, 21,  3, 60, 62, 69, 71, 28,
    86, 93, 25,  2,  9, 61, 68, 75, 52, 34,
    17, 24, 76, 83, 90, 42, 49, 26, 33, 65,
    23,  5, 82, 89, 91, 48, 30, 32, 39, 66,
    79, 81, 13, 20, 97, 29, 31, 38, 45, 72,
    10, 12, 94, 96, 78, 35, 37, 44, 46, 53,
    11, 18, 100, 77, 84, 36, 43, 50, 27, 59,
};

inline const char* kDoublyEven4Csv =
    "1,15,14,4\n"
    "12,6,7,9\n"
    "8,10,11,5\n"
    "13,3,2,16\n";

inline const char* kSinglyEven10Csv =
    "92,99,1,8,15,67,74,51,58,40\n"
    "98,80,7,14,16,73,55,57,64,41\n"
    "4,6,88,95,22,54,56,63,70,47\n"
    "85,87,19,21,3,60,62,69,71,28\n"
    "86,93,25,2,9,61,68,75,52,34\n"
    "17,24,76,83,90,42,49,26,33,65\n"
    "23,5,82,89,91,48,30,32,39,66\n"
    "79,81,13,20,97,29,31,38,45,72\n"
    "10,12,94,96,78,35,37,44,46,53\n"
    "11,18,100,77,84,36,43,50,27,59\n";

}  // namespace testdata
