#pragma once

// Independent 3x3 reference enumeration: walk every permutation of 1..9 in
// lexicographic order and keep the layouts whose rows, columns and both
// diagonals sum to 15, checked with plain arithmetic (no library calls).

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "magic/core.hpp"

namespace testdata {

inline std::vector<magic::Square> brute_force_3x3() {
    std::array<std::int64_t, 9> v = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<magic::Square> solutions;
    do {
        const bool ok =
            v[0] + v[1] + v[2] == 15 && v[3] + v[4] + v[5] == 15 &&
            v[6] + v[7] + v[8] == 15 && v[0] + v[3] + v[6] == 15 &&
            v[1] + v[4] + v[7] == 15 && v[2] + v[5] + v[8] == 15 &&
            v[0] + v[4] + v[8] == 15 && v[2] + v[4] + v[6] == 15;
        if (ok) {
            solutions.emplace_back(
                3, 1, std::vector<std::int64_t>(v.begin(), v.end()));
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return solutions;
}

}  // namespace testdata
