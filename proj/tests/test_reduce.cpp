#include <doctest.h>

#include <numeric>

#include "heffter/reduce.hpp"
#include "heffter/verify.hpp"
#include "test_util.hpp"

using namespace heffter;

namespace {

DesignParams plain(int m, int n, int s, int k) {
    return DesignParams{m, n, s, k, std::nullopt, std::nullopt};
}

}  // namespace

TEST_SUITE("reduce") {
    TEST_CASE("cell map basics") {
        CHECK(psi(7, 7, 6, 12) == CellPosition{1, 7});
        CHECK(psi(1, 1, 6, 12) == CellPosition{1, 1});
        CHECK(psi(1, 1, 3, 3) == CellPosition{1, 1});
        CHECK(psi(12, 1, 6, 12) == CellPosition{6, 1});
    }

    TEST_CASE("plan derives the square side and cofactors") {
        auto plan = ReductionPlan::make(plain(6, 12, 6, 3));
        CHECK(plan.d == 3);
        CHECK(plan.s_bar == 2);
        CHECK(plan.k_bar == 1);
        CHECK(plan.c == 6);
        CHECK(plan.source_side == 12);
    }

    TEST_CASE("normalization rotates the band to start at zero") {
        auto fx = test::load_fixture("h_12_3.grid").grid;
        CHECK(normalize_diagonals(fx, 3) == fx);

        auto rot = rotate_columns(fx, -5);  // band now starts at D_5
        CHECK(normalize_diagonals(rot, 3) == fx);
        CHECK(normalize_diagonals(normalize_diagonals(rot, 3), 3) ==
              normalize_diagonals(rot, 3));

        PartiallyFilledArray full(4, 4);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) full.set(i, j, 1);
        CHECK_THROWS_AS(normalize_diagonals(full, 3), NotDiagonalError);
    }

    TEST_CASE("the 12x12 square reduces to the printed 6x12 rectangle") {
        auto sq = test::load_fixture("h_12_3.grid").grid;
        auto want = test::load_fixture("h_6_12_6_3.grid").grid;
        auto got = reduce(sq, plain(6, 12, 6, 3));
        CHECK(got == want);
        CHECK(verify_integer_heffter(got, plain(6, 12, 6, 3)).passed);
    }

    TEST_CASE("reduction with m = n = side is the identity") {
        auto sq = test::load_fixture("h_12_3.grid").grid;
        CHECK(reduce(sq, plain(12, 12, 3, 3)) == sq);
    }

    TEST_CASE("a rotated source reduces to the same rectangle") {
        auto sq = rotate_columns(test::load_fixture("h_12_3.grid").grid, -4);
        auto want = test::load_fixture("h_6_12_6_3.grid").grid;
        CHECK(reduce(sq, plain(6, 12, 6, 3)) == want);
    }

    TEST_CASE("the derived 24x24 square reduces to the printed 8x12") {
        auto sq = test::load_fixture("h_24_3.grid").grid;
        auto want = test::load_fixture("h_8_12_9_6.grid").grid;
        DesignParams p = plain(8, 12, 9, 6);
        REQUIRE(ReductionPlan::make(p).source_side == 24);
        auto got = reduce(sq, p);
        CHECK(got == want);
        CHECK(verify_integer_heffter(got, p).passed);

        // and the bundled square is exactly the cell-map inverse of the
        // printed rectangle
        CHECK(test::psi_inverse(want, 24, 3) == sq);
    }

    TEST_CASE("entry conservation") {
        auto sq = test::load_fixture("h_24_3.grid").grid;
        auto got = reduce(sq, plain(8, 12, 9, 6));
        CHECK(test::sorted_entries(got) == test::sorted_entries(sq));
    }

    TEST_CASE("injectivity on band skeletons across a parameter grid") {
        // For every (s_bar, k_bar, c, d) grid with side <= 40, transport a
        // synthetic band and require no collisions and exact fill counts.
        for (int d = 2; d <= 6; ++d)
            for (int s_bar = 1; s_bar <= 4; ++s_bar)
                for (int k_bar = 1; k_bar <= 4; ++k_bar) {
                    if (std::gcd(s_bar, k_bar) != 1) continue;
                    for (int c = d; c <= 8; ++c) {
                        int side = s_bar * k_bar * c;
                        if (side > 40 || side < d) continue;
                        int m = k_bar * c, n = s_bar * c;
                        int s = d * s_bar, k = d * k_bar;
                        if (s > n || k > m) continue;
                        PartiallyFilledArray sq(side, side);
                        Entry tick = 1;
                        for (int i = 1; i <= side; ++i)
                            for (int r = 0; r < d; ++r)
                                sq.set(i, i + r, tick++);
                        auto got = reduce(sq, plain(m, n, s, k));
                        for (int i = 1; i <= m; ++i)
                            CHECK(got.row_fill(i) == s);
                        for (int j = 1; j <= n; ++j)
                            CHECK(got.col_fill(j) == k);
                    }
                }
    }

    TEST_CASE("shiftability transfers") {
        // 2-diagonal shiftable square: each row holds x and -x.
        PartiallyFilledArray q(4, 4);
        for (int i = 1; i <= 4; ++i) {
            q.set(i, i, i);
            q.set(i, i + 1, -i);
        }
        REQUIRE(is_shiftable(q));
        auto got = reduce(q, plain(2, 4, 4, 2));
        CHECK(is_shiftable(got));
        CHECK(got.rows() == 2);
        CHECK(got.cols() == 4);
        CHECK(got.row_fill(1) == 4);
    }

    TEST_CASE("shape and parameter errors") {
        auto sq = test::load_fixture("h_12_3.grid").grid;
        CHECK_THROWS_AS(reduce(sq, plain(6, 12, 6, 4)), ParamMismatchError);
        // wrong source side: d = 1 would need a 36x36 square
        CHECK_THROWS_AS(reduce(sq, plain(9, 12, 4, 3)), ParamMismatchError);
        // band width disagrees with gcd(s, k)
        CHECK_THROWS_AS(reduce(sq, plain(2, 12, 12, 2)), NotDiagonalError);
        PartiallyFilledArray full(12, 12);
        for (int i = 1; i <= 12; ++i)
            for (int j = 1; j <= 12; ++j) full.set(i, j, 1);
        CHECK_THROWS_AS(reduce(full, plain(6, 12, 6, 3)), NotDiagonalError);
    }
}
