#include <doctest.h>

#include <algorithm>

#include "magic/construct.hpp"
#include "magic/verify.hpp"
#include "reference_squares.hpp"

using namespace magic;

namespace {

Square transpose(const Square& square) {
    const int n = square.n();
    std::vector<std::int64_t> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cells[static_cast<std::size_t>(j) * n + i] = square.at(i, j);
        }
    }
    return Square(n, square.a_min(), std::move(cells));
}

std::vector<Finding> of_property(const VerifyReport& report, Property p) {
    std::vector<Finding> out;
    for (const Finding& f : report.failures) {
        if (f.property == p) out.push_back(f);
    }
    return out;
}

}  // namespace

TEST_CASE("verify accepts the known squares") {
    const Square four = testdata::make_square(4, 1, testdata::kDoublyEven4Cells);
    VerifyReport report = verify(four);
    CHECK(report.is_magic);
    CHECK(report.magic_constant == 34);
    CHECK(report.failures.empty());

    const Square lo_shu = testdata::make_square(3, 1, testdata::kLoShuCells);
    report = verify(lo_shu);
    CHECK(report.is_magic);
    CHECK(report.magic_constant == 15);

    const Square ten = testdata::make_square(10, 1, testdata::kSinglyEven10Cells);
    CHECK(verify(ten).is_magic);
}

TEST_CASE("verify pinpoints the lines broken by a swap") {
    // Swapping cells (1,1) and (1,2) of the 4x4 keeps row 1 and the
    // secondary diagonal intact and breaks columns 1, 2 and the main
    // diagonal.
    auto cells = testdata::kDoublyEven4Cells;
    std::swap(cells[0], cells[1]);
    const VerifyReport report = verify(Square(4, 1, std::move(cells)));
    CHECK_FALSE(report.is_magic);
    REQUIRE(report.failures.size() == 3);
    CHECK(report.failures[0] ==
          Finding{Property::ColumnSum, 0, 1, 34, 48});
    CHECK(report.failures[1] ==
          Finding{Property::ColumnSum, 0, 2, 34, 20});
    CHECK(report.failures[2] ==
          Finding{Property::MainDiagonal, 0, 0, 34, 48});
}

TEST_CASE("verify reports range and uniqueness separately") {
    // Replace one entry by a duplicate and another by an out-of-range
    // value: the duplicate is a uniqueness failure, the outlier a range
    // failure, and they come before any line findings.
    auto cells = testdata::kDoublyEven4Cells;
    cells[5] = 1;    // duplicates cell (1,1)
    cells[10] = 99;  // outside [1, 16]
    const VerifyReport report = verify(Square(4, 1, std::move(cells)));
    CHECK_FALSE(report.is_magic);
    REQUIRE(report.failures.size() >= 2);
    CHECK(report.failures[0] == Finding{Property::Uniqueness, 2, 2, 1, 1});
    CHECK(report.failures[1] == Finding{Property::Range, 3, 3, 16, 99});
}

TEST_CASE("verify failure list is capped but the verdict is not") {
    // All-ones square: huge failure count, bounded report.
    const Square bad(10, 1, std::vector<std::int64_t>(100, 1));
    const VerifyReport capped = verify(bad, 5);
    CHECK_FALSE(capped.is_magic);
    CHECK(capped.failures.size() == 5);
    CHECK(capped.failure_cap == 5);
    CHECK(capped.truncated);
    CHECK(capped.total_failures > 5);

    const VerifyReport dflt = verify(bad);
    CHECK(dflt.failures.size() == 100);
    CHECK(dflt.truncated);
}

TEST_CASE("verify is transposition-compatible") {
    // Corrupt a few cells of a real square, then compare the report with
    // the transposed square's report.
    Square base = make_magic_square(7, 1);
    auto cells = base.cells();
    std::swap(cells[1], cells[9]);
    cells[17] = 3;  // duplicate
    const Square broken(7, 1, cells);
    const VerifyReport rep = verify(broken, 1000);
    const VerifyReport rep_t = verify(transpose(broken), 1000);

    CHECK(rep.is_magic == rep_t.is_magic);
    CHECK(rep.total_failures == rep_t.total_failures);

    // Uniqueness and range findings match as value multisets.
    for (Property p : {Property::Uniqueness, Property::Range}) {
        auto a = of_property(rep, p);
        auto b = of_property(rep_t, p);
        REQUIRE(a.size() == b.size());
        auto key = [](const Finding& f) { return f.observed; };
        std::vector<std::int64_t> va, vb;
        for (const auto& f : a) va.push_back(key(f));
        for (const auto& f : b) vb.push_back(key(f));
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        CHECK(va == vb);
    }

    // Row failures of the original are the column failures of the
    // transpose, index for index.
    const auto rows = of_property(rep, Property::RowSum);
    const auto cols_t = of_property(rep_t, Property::ColumnSum);
    REQUIRE(rows.size() == cols_t.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].row == cols_t[i].col);
        CHECK(rows[i].observed == cols_t[i].observed);
    }
    // The secondary diagonal maps to itself under transposition.
    CHECK(of_property(rep, Property::SecondaryDiagonal).size() ==
          of_property(rep_t, Property::SecondaryDiagonal).size());
}

TEST_CASE("lemma1_sums agrees with direct summation and the closed form") {
    CHECK(lemma1_sums(4) == std::pair<std::int64_t, std::int64_t>{5, 5});
    CHECK(lemma1_sums(8) == std::pair<std::int64_t, std::int64_t>{18, 18});
    CHECK(lemma1_sums(12) == std::pair<std::int64_t, std::int64_t>{39, 39});
    for (int n = 4; n <= 400; n += 4) {
        const auto [outer, inner] = lemma1_sums(n);
        const std::int64_t k = n / 4;
        CHECK(outer == inner);
        CHECK(outer == 4 * k * k + k);
    }
    CHECK_THROWS_AS(lemma1_sums(10), NotDoublyEvenError);
    CHECK_THROWS_AS(lemma1_sums(7), NotDoublyEvenError);
}

TEST_CASE("index_sets partition 1..n") {
    for (int n : {4, 8, 20, 64}) {
        const IndexSets sets = index_sets(n);
        CHECK(sets.quarter == n / 4);
        CHECK(sets.outer.size() == static_cast<std::size_t>(n / 2));
        CHECK(sets.inner.size() == static_cast<std::size_t>(n / 2));
        std::vector<int> all = sets.outer;
        all.insert(all.end(), sets.inner.begin(), sets.inner.end());
        std::sort(all.begin(), all.end());
        for (int j = 1; j <= n; ++j) CHECK(all[j - 1] == j);
    }
}

TEST_CASE("partial_sums of the 10x10 intermediate matrix") {
    const Square inter = testdata::make_square(10, 1, testdata::kQuadrants10Cells);
    const PartialSumReport report = partial_sums(inter);
    for (std::int64_t s : report.column_sums) CHECK(s == 505);
    for (std::int64_t s : report.upper_row_sums) CHECK(s == 380);
    for (std::int64_t s : report.lower_row_sums) CHECK(s == 630);
    CHECK(report.main_diag_sum == 255);
    CHECK(report.anti_diag_sum == 755);
}

TEST_CASE("partial_sums of the n=6 intermediate matrix") {
    const Square inter = build_quadrants(6);
    const PartialSumReport report = partial_sums(inter);
    for (std::int64_t s : report.column_sums) CHECK(s == 111);
    for (std::int64_t s : report.upper_row_sums) CHECK(s == 84);
    for (std::int64_t s : report.lower_row_sums) CHECK(s == 138);
    CHECK(report.main_diag_sum == 111 - 54);
    CHECK(report.anti_diag_sum == 111 + 54);
}

TEST_CASE("partial_sums of a magic square reports the constant everywhere") {
    const Square ten = testdata::make_square(10, 1, testdata::kSinglyEven10Cells);
    const PartialSumReport report = partial_sums(ten);
    for (std::int64_t s : report.column_sums) CHECK(s == 505);
    for (std::int64_t s : report.upper_row_sums) CHECK(s == 505);
    for (std::int64_t s : report.lower_row_sums) CHECK(s == 505);
    CHECK(report.main_diag_sum == 505);
    CHECK(report.anti_diag_sum == 505);
}

TEST_CASE("partial_sums rejects odd orders") {
    CHECK_THROWS_AS(partial_sums(testdata::make_square(3, 1, testdata::kLoShuCells)),
                    NotEvenError);
}

TEST_CASE("check_transfer_constants known values and identity") {
    TransferConstants tc = check_transfer_constants(10);
    CHECK(tc.c == 150);
    CHECK(tc.d == 25);
    tc = check_transfer_constants(6);
    CHECK(tc.c == 27);
    CHECK(tc.d == 0);
    tc = check_transfer_constants(14);
    CHECK(tc.c == 441);
    CHECK(tc.d == 98);

    for (int n = 6; n <= 200; n += 4) {
        const auto [c, d] = check_transfer_constants(n);
        const std::int64_t n3 = static_cast<std::int64_t>(n) * n * n;
        CHECK(c - d == n3 / 8);
    }

    CHECK_THROWS_AS(check_transfer_constants(8), NotSinglyEvenError);
    CHECK_THROWS_AS(check_transfer_constants(9), NotSinglyEvenError);
}
