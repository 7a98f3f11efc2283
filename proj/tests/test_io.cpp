#include <doctest.h>

#include "heffter/io.hpp"
#include "test_util.hpp"

using namespace heffter;

TEST_SUITE("io") {
    TEST_CASE("grid parsing keeps empties and exact integers") {
        auto doc = test::load_fixture("h_12_3.grid");
        CHECK(doc.kind == "integer-heffter");
        CHECK(doc.params.m == 12);
        CHECK(doc.params.s == 3);
        CHECK(doc.grid.filled_count() == 36);
        CHECK(doc.grid.value(1, 1) == -36);
        CHECK(!doc.grid.filled(1, 4));
    }

    TEST_CASE("headerless grids infer parameters from the shape") {
        auto doc = parse_array("-3 1 2\n", ArrayFormat::Grid);
        CHECK(doc.params.m == 1);
        CHECK(doc.params.n == 3);
        CHECK(doc.params.s == 3);
        CHECK(doc.params.k == 1);
        CHECK(entry_list(doc.grid) == std::vector<Entry>{-3, 1, 2});
    }

    TEST_CASE("json layout round trip") {
        auto doc =
            parse_array(R"({"kind":"raw","params":{"m":2,"n":2,"s":1,"k":1},)"
                        R"("grid":[[1,null],[null,-1]],)"
                        R"("provenance":{"tag":"","detail":""}})",
                        ArrayFormat::Json);
        CHECK(doc.grid.filled_count() == 2);
        CHECK(doc.grid.value(1, 1) == 1);
        CHECK(doc.grid.value(2, 2) == -1);
        CHECK(parse_array(emit_array(doc, ArrayFormat::Json),
                          ArrayFormat::Json) == doc);
    }

    TEST_CASE("ragged rows are a dimension error") {
        CHECK_THROWS_AS(parse_array("1 2 3\n4 5\n", ArrayFormat::Grid),
                        DimensionMismatchError);
    }

    TEST_CASE("bad tokens carry positions") {
        try {
            parse_array("1 2\nx 4\n", ArrayFormat::Grid);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.column == 1);
        }
    }

    TEST_CASE("every fixture round-trips in both formats") {
        for (const char* name :
             {"h_12_3.grid", "h_6_12_6_3.grid", "h_8_12_9_6.grid",
              "h_14_8_4_7.grid", "h_28_16_12_21.grid", "h_24_3.grid",
              "h_tight_15_4.grid", "sma_14_3.grid", "sma_20_8_6_15.grid",
              "mr_9_18_12_6_printed.grid"}) {
            auto doc = test::load_fixture(name);
            INFO(name);
            auto grid_rt = parse_array(emit_array(doc, ArrayFormat::Grid),
                                       ArrayFormat::Grid);
            CHECK(grid_rt == doc);
            auto json_rt = parse_array(emit_array(doc, ArrayFormat::Json),
                                       ArrayFormat::Json);
            CHECK(json_rt == doc);
        }
    }

    TEST_CASE("emit is canonical: emit(parse(emit(x))) == emit(x)") {
        auto doc = test::load_fixture("sma_14_3.grid");
        for (auto fmt : {ArrayFormat::Grid, ArrayFormat::Json}) {
            std::string once = emit_array(doc, fmt);
            std::string twice = emit_array(parse_array(once, fmt), fmt);
            CHECK(once == twice);
        }
    }

    TEST_CASE("empty one-cell grid renders as a dot") {
        ArrayDocument doc;
        doc.grid = PartiallyFilledArray(1, 1);
        doc.params = DesignParams{1, 1, 0, 0, std::nullopt, std::nullopt};
        CHECK(emit_array(doc, ArrayFormat::Grid) == ".\n");
    }

    TEST_CASE("relative parameters survive the header") {
        auto doc = parse_array("# kind: sma\n1 2 2 1 1 2\n5 -5\n",
                               ArrayFormat::Grid);
        CHECK(doc.params.t == 1);
        CHECK(doc.params.lambda == 2);
        auto rt =
            parse_array(emit_array(doc, ArrayFormat::Grid), ArrayFormat::Grid);
        CHECK(rt == doc);
    }
}
