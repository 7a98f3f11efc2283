#include <doctest.h>

#include "heffter/blocks.hpp"
#include "test_util.hpp"

using namespace heffter;

namespace {

std::vector<Entry> row_of(const PartiallyFilledArray& a, int i) {
    std::vector<Entry> out;
    for (int j = 1; j <= a.cols(); ++j)
        if (a.filled(i, j)) out.push_back(a.value(i, j));
    return out;
}

}  // namespace

TEST_SUITE("blocks") {
    TEST_CASE("first width-4 sequence at mu = 0") {
        auto seq = seq_blocks_a1(0);
        REQUIRE(seq.blocks.size() == 2);
        CHECK(row_of(seq.blocks[0], 1) == std::vector<Entry>{4, -7, 5, -2});
        CHECK(row_of(seq.blocks[0], 2) ==
              std::vector<Entry>{9, 18, -15, -12});
        CHECK(row_of(seq.blocks[0], 3) ==
              std::vector<Entry>{-13, -11, 10, 14});
        CHECK(row_of(seq.blocks[1], 1) == std::vector<Entry>{6, 3, -1, -8});
        CHECK(row_of(seq.blocks[1], 2) ==
              std::vector<Entry>{17, 19, -20, -16});
        CHECK(row_of(seq.blocks[1], 3) ==
              std::vector<Entry>{-23, -22, 21, 24});
    }

    TEST_CASE("sequence contracts hold over a range of sizes") {
        for (int mu = 0; mu <= 10; ++mu) {
            auto seq = seq_blocks_a1(mu);
            CHECK(seq.blocks.size() == static_cast<std::size_t>(2 * mu + 2));
            CHECK(seq.support_hi == 24 * mu + 24);
        }
        for (int nu = 0; nu <= 10; ++nu) {
            auto seq = seq_blocks_a2(nu);
            CHECK(seq.blocks.size() == static_cast<std::size_t>(2 * nu + 3));
            CHECK(seq.support_hi == 24 * nu + 36);
        }
        for (int mu = 0; mu <= 10; ++mu) {
            auto seq = seq_signed_skolem(mu);
            CHECK(seq.blocks.size() == static_cast<std::size_t>(2 * mu + 1));
            CHECK(seq.support_hi == 12 * mu + 6);
        }
        CHECK_THROWS_AS(seq_blocks_a1(-1), BadParamError);
    }

    TEST_CASE("second sequence at nu = 0 starts as computed by hand") {
        auto seq = seq_blocks_a2(0);
        CHECK(row_of(seq.blocks[0], 1) == std::vector<Entry>{1, -5, -8, 12});
        CHECK(row_of(seq.blocks[0], 2) ==
              std::vector<Entry>{30, -28, -26, 24});
        CHECK(row_of(seq.blocks[0], 3) ==
              std::vector<Entry>{-31, 33, 34, -36});
    }

    TEST_CASE("signed sequence blocks") {
        auto seq = seq_signed_skolem(0);
        CHECK(row_of(seq.blocks[0], 1) == std::vector<Entry>{1, 2, -2, -1});
        CHECK(row_of(seq.blocks[0], 2) == std::vector<Entry>{3, -6, -3, 6});
        CHECK(row_of(seq.blocks[0], 3) == std::vector<Entry>{-4, 4, 5, -5});

        auto seq1 = seq_signed_skolem(1);
        CHECK(row_of(seq1.blocks[1], 1) == std::vector<Entry>{3, 5, -5, -3});
    }

    TEST_CASE("filler stacks carry their declared supports") {
        CHECK(build_filler_stack(0, FillerVariant::HeffterV) == q4_block());
        auto w0 = build_filler_stack(0, FillerVariant::HeffterW);
        CHECK(w0 == q6_block());
        auto s0 = support(w0);
        CHECK(s0.front() == 1);
        CHECK(s0.back() == 24);

        auto v2 = build_filler_stack(2, FillerVariant::HeffterV);
        CHECK(v2.rows() == 12);
        auto sup = support(v2);
        for (std::size_t i = 0; i < sup.size(); ++i)
            CHECK(sup[i] == static_cast<Entry>(i) + 1);

        auto q1 = build_filler_stack(1, FillerVariant::SmaV);
        CHECK(row_of(q1, 1) == std::vector<Entry>{1, -2, -3, 4});
        CHECK(row_of(q1, 2) == std::vector<Entry>{-1, 2, 3, -4});
        CHECK(row_of(q1, 3) == std::vector<Entry>{5, -6, -7, 8});
        CHECK(row_of(q1, 4) == std::vector<Entry>{-5, 6, 7, -8});
        CHECK(test::sorted_entries(q1) ==
              std::vector<Entry>{-8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 4,
                                 5, 6, 7, 8});
    }

    TEST_CASE("all filler rows and columns sum to zero and stay shiftable") {
        for (int h = 0; h <= 4; ++h)
            for (auto variant : {FillerVariant::HeffterV,
                                 FillerVariant::HeffterW,
                                 FillerVariant::SmaV}) {
                auto f = build_filler_stack(h, variant);
                for (int i = 1; i <= f.rows(); ++i) CHECK(f.row_sum(i) == 0);
                for (int j = 1; j <= 4; ++j) CHECK(f.col_sum(j) == 0);
                CHECK(is_shiftable(f));
            }
    }

    TEST_CASE("column-strip assembly reproduces the 14x8 layout") {
        auto fx = test::load_fixture("h_14_8_4_7.grid").grid;
        PartiallyFilledArray b0(7, 4), b1(7, 4);
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 4; ++j) {
                b0.set(i, j, fx.value(i, j));
                b1.set(i, j, fx.value(i + 7, j + 4));
            }
        CHECK(assemble_columnwise({b0, b1}, 14, 8) == fx);
        CHECK(assemble_columnwise({b0}, 7, 4) == b0);
    }

    TEST_CASE("assembly rejects shapes that do not close up") {
        auto b = q4_block();
        CHECK_THROWS_AS(assemble_columnwise({b, b}, 14, 8),
                        ParamMismatchError);  // 4*2 block-rows vs 14 rows
        CHECK_THROWS_AS(assemble_columnwise({b}, 4, 8), ParamMismatchError);
    }
}
