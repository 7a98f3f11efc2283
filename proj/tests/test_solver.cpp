#include <doctest.h>

#include "heffter/solver.hpp"
#include "heffter/square.hpp"
#include "heffter/verify.hpp"
#include "test_util.hpp"

using namespace heffter;

TEST_SUITE("solver") {
    TEST_CASE("finds a small 3-diagonal integer square") {
        auto c = SearchConstraints::diagonal_square(ArrayKind::HeffterInteger,
                                                    4, 3);
        auto out = solve(c);
        REQUIRE(out.verdict == SearchOutcome::Verdict::Found);
        CHECK(verify_integer_heffter(*out.array, c.params).passed);
        CHECK(verify_diagonal(*out.array, 3).passed);
    }

    TEST_CASE("finds a shiftable 4-diagonal signed square of side 8") {
        auto c = SearchConstraints::diagonal_square(ArrayKind::Sma, 8, 4,
                                                    /*shiftable=*/true);
        auto out = solve(c);
        REQUIRE(out.verdict == SearchOutcome::Verdict::Found);
        CHECK(verify_sma(*out.array, c.params).passed);
        CHECK(verify_diagonal(*out.array, 4).passed);
        CHECK(is_shiftable(*out.array));
    }

    TEST_CASE("proves the fully filled 3x3 integer square impossible") {
        SearchConstraints c;
        c.kind = ArrayKind::HeffterInteger;
        c.params = DesignParams{3, 3, 3, 3, std::nullopt, std::nullopt};
        auto out = solve(c);
        CHECK(out.verdict == SearchOutcome::Verdict::ExhaustedUnsat);
    }

    TEST_CASE("unsat verdicts are reproducible node for node") {
        SearchConstraints c;
        c.kind = ArrayKind::HeffterInteger;
        c.params = DesignParams{3, 3, 3, 3, std::nullopt, std::nullopt};
        auto a = solve(c);
        auto b = solve(c);
        CHECK(a.verdict == b.verdict);
        CHECK(a.stats.nodes == b.stats.nodes);
    }

    TEST_CASE("found arrays agree with the formula constructions") {
        // both the search and the closed form produce signed squares over
        // the same domain
        auto c = SearchConstraints::diagonal_square(ArrayKind::Sma, 3, 3);
        auto out = solve(c);
        REQUIRE(out.verdict == SearchOutcome::Verdict::Found);
        CHECK(test::sorted_entries(*out.array) ==
              test::sorted_entries(sma3_diag_odd(3)));
    }

    TEST_CASE("budget exhaustion is distinct from unsat") {
        auto c = SearchConstraints::diagonal_square(ArrayKind::HeffterInteger,
                                                    12, 3);
        c.node_budget = 10;
        auto out = solve(c);
        CHECK(out.verdict == SearchOutcome::Verdict::BudgetExceeded);
        CHECK(!out.array.has_value());
    }

    TEST_CASE("search respects the diagonal-major toggle") {
        auto c = SearchConstraints::diagonal_square(ArrayKind::HeffterInteger,
                                                    4, 3);
        c.diagonal_major = true;
        auto out = solve(c);
        REQUIRE(out.verdict == SearchOutcome::Verdict::Found);
        CHECK(verify_diagonal(*out.array, 3).passed);
    }

    TEST_CASE("seeded runs stay deterministic") {
        auto c = SearchConstraints::diagonal_square(ArrayKind::Sma, 5, 3);
        c.seed = 1234;
        auto a = solve(c);
        auto b = solve(c);
        REQUIRE(a.verdict == SearchOutcome::Verdict::Found);
        CHECK(a.stats.nodes == b.stats.nodes);
        CHECK(*a.array == *b.array);
    }

    TEST_CASE("tight magic rectangle search") {
        SearchConstraints c;
        c.kind = ArrayKind::Mr;
        c.params = DesignParams{3, 3, 3, 3, std::nullopt, std::nullopt};
        auto out = solve(c);
        REQUIRE(out.verdict == SearchOutcome::Verdict::Found);
        auto rep = verify_mr(*out.array, c.params);
        CHECK(rep.passed);
        CHECK(rep.observed_constants->first == 12);
    }

    TEST_CASE("magic rectangle with fractional constants is unsat upfront") {
        SearchConstraints c;
        c.kind = ArrayKind::Mr;
        // side 4, band 3: c1 = 3 * 11 / 2 is not an integer
        c.params = DesignParams{4, 4, 3, 3, std::nullopt, std::nullopt};
        c.diagonal = true;
        auto out = solve(c);
        CHECK(out.verdict == SearchOutcome::Verdict::ExhaustedUnsat);
    }

    TEST_CASE("relative search over a small modular domain") {
        // 15 cells, each admissible pair used twice across signs
        SearchConstraints c;
        c.kind = ArrayKind::RelativeModular;
        c.params = DesignParams{5, 5, 3, 3, 1, 2};
        c.diagonal = true;
        c.node_budget = 2'000'000;
        auto out = solve(c);
        REQUIRE(out.verdict == SearchOutcome::Verdict::Found);
        CHECK(verify_relative(*out.array, c.params, false).passed);
        CHECK(verify_diagonal(*out.array, 3).passed);
    }

    TEST_CASE("constraint validation") {
        SearchConstraints c;
        c.kind = ArrayKind::Sma;
        c.params = DesignParams{4, 6, 3, 2, std::nullopt, std::nullopt};
        c.diagonal = true;  // not a square shape
        CHECK_THROWS_AS(solve(c), BadConstraintsError);
        SearchConstraints bad;
        bad.params = DesignParams{3, 3, 3, 3, std::nullopt, std::nullopt};
        bad.node_budget = 0;
        CHECK_THROWS_AS(solve(bad), BadConstraintsError);
    }
}

TEST_SUITE("solver-oracle-agreement") {
    TEST_CASE("search and formulas agree on the small 3-diagonal squares") {
        for (int a : {3, 5, 6, 7}) {
            auto out = solve(
                SearchConstraints::diagonal_square(ArrayKind::Sma, a, 3));
            REQUIRE(out.verdict == SearchOutcome::Verdict::Found);
            DesignParams p{a, a, 3, 3, std::nullopt, std::nullopt};
            CHECK(verify_sma(*out.array, p).passed);
            auto formula = a % 2 == 1 ? sma3_diag_odd(a) : sma3_diag_even(a);
            CHECK(verify_sma(formula, p).passed);
            // same domain, not necessarily the same array
            CHECK(test::sorted_entries(*out.array) ==
                  test::sorted_entries(formula));
        }
    }
}
