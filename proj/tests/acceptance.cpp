// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are exact integer equalities; the only
// numeric bounds are the stated wall-clock budgets.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "heffter/blocks.hpp"
#include "heffter/constructors.hpp"
#include "heffter/io.hpp"
#include "heffter/reduce.hpp"
#include "heffter/solver.hpp"
#include "heffter/square.hpp"
#include "heffter/supplier.hpp"
#include "heffter/verify.hpp"

using namespace heffter;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        if (notes.size() < 8) notes.push_back(why);
    }
};

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ArrayDocument fixture(const std::string& name) {
    return load_array_file(std::string(FIXTURE_DIR) + "/" + name);
}

DesignParams plain(int m, int n, int s, int k) {
    return DesignParams{m, n, s, k, std::nullopt, std::nullopt};
}

// Deterministic found-or-give-up helper: a fixed seed schedule with a
// fixed per-seed budget.
std::optional<PartiallyFilledArray> find_with_seeds(SearchConstraints c) {
    c.node_budget = 1'250'000;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        c.seed = seed;
        auto out = solve(c);
        if (out.verdict == SearchOutcome::Verdict::Found) return out.array;
    }
    return std::nullopt;
}

// Criterion 1: the bundled 12x12 band square reduces, cell for cell, onto
// the bundled 6x12 rectangle in under 10 ms.
Criterion criterion_1() {
    Criterion c;
    auto sq = fixture("h_12_3.grid").grid;
    auto want = fixture("h_6_12_6_3.grid").grid;
    auto t0 = Clock::now();
    auto got = reduce(sq, plain(6, 12, 6, 3));
    double el = secs_since(t0);
    if (!(got == want)) c.fail("reduction does not match the fixture");
    if (el >= 0.010) c.fail("took " + std::to_string(el * 1000) + " ms");
    return c;
}

// Criterion 2: the two width-4 block rectangles match their fixtures, each
// built in under 50 ms.
Criterion criterion_2() {
    Criterion c;
    {
        auto t0 = Clock::now();
        auto got = heffter_s0mod4(14, 8, 4, 7);
        double el = secs_since(t0);
        if (!(got == fixture("h_14_8_4_7.grid").grid))
            c.fail("14x8 build does not match the fixture");
        if (el >= 0.050)
            c.fail("14x8 took " + std::to_string(el * 1000) + " ms");
    }
    {
        auto t0 = Clock::now();
        auto got = heffter_s0mod4(28, 16, 12, 21);
        double el = secs_since(t0);
        if (!(got == fixture("h_28_16_12_21.grid").grid))
            c.fail("28x16 build does not match the fixture");
        if (el >= 0.050)
            c.fail("28x16 took " + std::to_string(el * 1000) + " ms");
    }
    return c;
}

// Criterion 3: the even-side three-diagonal square of side 14 matches the
// fixture in under 10 ms.
Criterion criterion_3() {
    Criterion c;
    auto t0 = Clock::now();
    auto got = sma3_diag_even(14);
    double el = secs_since(t0);
    if (!(got == fixture("sma_14_3.grid").grid))
        c.fail("side-14 square does not match the fixture");
    if (el >= 0.010) c.fail("took " + std::to_string(el * 1000) + " ms");
    return c;
}

// Criterion 4: the pairing construction, seeded with the bundled tight
// 15x4 ingredient, reproduces the printed 20x8 array cell for cell.
Criterion criterion_4() {
    Criterion c;
    IngredientSupplier sup;
    sup.disable_search();
    auto got = sma_from_tight(20, 8, 6, 15, sup);
    if (!(got == fixture("sma_20_8_6_15.grid").grid))
        c.fail("pairing output does not match the fixture");
    auto prov = sup.provenance(IngredientRequest::rectangular(
        ArrayKind::HeffterInteger, plain(15, 4, 4, 15)));
    if (!prov || prov->source != "bundled")
        c.fail("tight ingredient did not come from the bundled fixture");
    return c;
}

// Criterion 5: the printed magic rectangle, stored as an 18x9 grid, has
// every displayed-row sum 321 and displayed-column sum 642, and its
// transpose verifies with parameters (9,18;12,6).
Criterion criterion_5() {
    Criterion c;
    auto printed = fixture("mr_9_18_12_6_printed.grid").grid;
    if (printed.rows() != 18 || printed.cols() != 9)
        c.fail("fixture is not stored as printed");
    for (int i = 1; i <= printed.rows(); ++i)
        if (printed.row_sum(i) != 321)
            c.fail("displayed row " + std::to_string(i) + " sums to " +
                   std::to_string(printed.row_sum(i)));
    for (int j = 1; j <= printed.cols(); ++j)
        if (printed.col_sum(j) != 642)
            c.fail("displayed column " + std::to_string(j) + " sums to " +
                   std::to_string(printed.col_sum(j)));
    auto rep = verify_mr(transpose(printed), plain(9, 18, 12, 6));
    if (!rep.passed) c.fail("transpose fails: " + rep.summary());
    if (rep.observed_constants !=
        std::make_pair(static_cast<Entry>(642), static_cast<Entry>(321)))
        c.fail("unexpected constants");
    return c;
}

// Independent restatement of the coverage rules, re-derived from the
// existence conditions each route implements rather than taken from the
// dispatcher's code.
bool expected_heffter_claim(int /*m*/, int n, int s, int k) {
    long long nk = static_cast<long long>(n) * k;
    int d = std::gcd(s, k);
    bool nk03 = nk % 4 == 0 || nk % 4 == 3;
    bool direct = (s % 4 == 0 && k % 2 == 1 && k != 5) ||
                  (k % 4 == 0 && s % 2 == 1 && s != 5);
    bool r0 = d >= 3 && d % 4 == 0;
    bool r1 = d >= 5 && d % 4 == 1 && nk % 4 == 3;
    bool r3 = d >= 3 && d % 4 == 3 && nk03;
    return direct || r0 || r1 || r3;
}

bool expected_sma_claim(int s, int k) {
    int d = std::gcd(s, k);
    return (s % 4 == 0 && k % 2 == 1) || (k % 4 == 0 && s % 2 == 1) || d >= 2;
}

bool expected_mr_claim(int s, int k, long long nk) {
    int d = std::gcd(s, k);
    return d % 2 == 0 || (d >= 3 && nk % 2 == 1);
}

// Criteria 6 and 9 share one sweep over every (m,n,s,k) with ms = nk <= 600.
void criterion_6_and_9(Criterion& c6, Criterion& c9) {
    IngredientSupplier sup;
    sup.set_search_budget(1'600'000, 2.0);
    auto t0 = Clock::now();
    long long built = 0, missing = 0, uncovered = 0, shiftable_smas = 0;
    for (int total = 9; total <= 600; ++total)
        for (int n = 3; n * 3 <= total; ++n) {
            if (total % n != 0) continue;
            int k = total / n;
            if (k < 3) continue;
            for (int m = 3; m * 3 <= total; ++m) {
                if (total % m != 0) continue;
                int s = total / m;
                if (s < 3 || s > n || k > m) continue;
                const long long nk = static_cast<long long>(n) * k;
                const int d = std::gcd(s, k);
                for (auto kind : {ConstructKind::Heffter, ConstructKind::Sma,
                                  ConstructKind::Mr}) {
                    bool expect =
                        kind == ConstructKind::Heffter
                            ? expected_heffter_claim(m, n, s, k)
                        : kind == ConstructKind::Sma
                            ? expected_sma_claim(s, k)
                            : expected_mr_claim(s, k, nk);
                    auto cov = coverage(kind, m, n, s, k);
                    if (cov.covered != expect) {
                        c6.fail("claim mismatch for " +
                                std::string(to_string(kind)) + " at (" +
                                std::to_string(m) + "," + std::to_string(n) +
                                "," + std::to_string(s) + "," +
                                std::to_string(k) + ")");
                        continue;
                    }
                    try {
                        auto res = construct(kind, m, n, s, k, sup);
                        if (!cov.covered) {
                            c6.fail("built an uncovered shape");
                            continue;
                        }
                        ++built;
                        DesignParams p = plain(m, n, s, k);
                        VerificationReport rep =
                            kind == ConstructKind::Heffter
                                ? verify_integer_heffter(res.array, p)
                            : kind == ConstructKind::Sma
                                ? verify_sma(res.array, p)
                                : verify_mr(res.array, p);
                        if (!rep.passed)
                            c6.fail("output fails verification at (" +
                                    std::to_string(m) + "," +
                                    std::to_string(n) + "," +
                                    std::to_string(s) + "," +
                                    std::to_string(k) + ")");
                        if (kind == ConstructKind::Heffter && d % 4 == 0 &&
                            !is_shiftable(res.array))
                            c6.fail("gcd 0 mod 4 output is not shiftable");
                        if (kind == ConstructKind::Sma &&
                            is_shiftable(res.array)) {
                            ++shiftable_smas;
                            try {
                                auto mr = mr_from_shiftable_sma(res.array, p);
                                auto mrep = verify_mr(mr, p);
                                if (!mrep.passed ||
                                    mrep.observed_constants !=
                                        std::make_pair(
                                            static_cast<Entry>(s * (nk - 1) /
                                                               2),
                                            static_cast<Entry>(k * (nk - 1) /
                                                               2)))
                                    c9.fail("transform constants wrong at (" +
                                            std::to_string(m) + "," +
                                            std::to_string(n) + "," +
                                            std::to_string(s) + "," +
                                            std::to_string(k) + ")");
                            } catch (const Error& e) {
                                c9.fail(std::string("transform failed: ") +
                                        e.what());
                            }
                        }
                    } catch (const NotCoveredError&) {
                        if (cov.covered)
                            c6.fail("covered shape reported as not covered");
                        ++uncovered;
                    } catch (const IngredientUnavailableError&) {
                        if (!cov.covered)
                            c6.fail("uncovered shape reported as missing an "
                                    "ingredient");
                        ++missing;
                    }
                }
            }
        }
    double el = secs_since(t0);
    std::ostringstream note;
    note << built << " built, " << missing << " missing ingredients, "
         << uncovered << " not covered, " << shiftable_smas
         << " shiftable signed arrays, " << el << " s";
    c6.notes.push_back(note.str());
    if (el >= 60.0) c6.fail("sweep exceeded 60 s");
    if (built < 3000) c6.fail("suspiciously few shapes built");
    if (shiftable_smas < 100) c9.fail("too few shiftable arrays reached");
    c9.notes.push_back(std::to_string(shiftable_smas) + " transforms checked");
}

// Criterion 7: reduction transfers every kind from diagonal squares to
// rectangles, preserving the entry multiset.
Criterion criterion_7() {
    Criterion c;
    auto t0 = Clock::now();
    struct Square {
        ArrayKind kind;
        PartiallyFilledArray array;
        int band;
        std::optional<int> t, lambda;
    };
    std::vector<Square> squares;
    auto add = [&](ArrayKind kind, const PartiallyFilledArray& a, int band,
                   std::optional<int> t = std::nullopt,
                   std::optional<int> lambda = std::nullopt) {
        squares.push_back({kind, a, band, t, lambda});
    };

    // fixtures, reused across the compatible kinds
    auto h12 = fixture("h_12_3.grid").grid;
    auto h24 = fixture("h_24_3.grid").grid;
    add(ArrayKind::HeffterInteger, h12, 3);
    add(ArrayKind::HeffterModular, h12, 3);
    add(ArrayKind::RelativeInteger, h12, 3, 1, 1);
    add(ArrayKind::RelativeModular, h12, 3, 1, 1);
    add(ArrayKind::HeffterInteger, h24, 3);
    add(ArrayKind::HeffterModular, h24, 3);

    // searched integer squares
    for (auto [a, b] :
         {std::pair{4, 3}, {5, 3}, {8, 3}, {9, 3}, {4, 4}, {8, 4}, {7, 5}}) {
        auto found = find_with_seeds(SearchConstraints::diagonal_square(
            ArrayKind::HeffterInteger, a, b));
        if (!found) {
            c.fail("no integer square of side " + std::to_string(a));
            continue;
        }
        add(ArrayKind::HeffterInteger, *found, b);
    }
    // searched relative squares (pair multiplicity 2)
    for (int a : {5, 9}) {
        SearchConstraints rc;
        rc.kind = ArrayKind::RelativeModular;
        rc.params = DesignParams{a, a, 3, 3, 1, 2};
        rc.diagonal = true;
        auto found = find_with_seeds(rc);
        if (!found) {
            c.fail("no relative square of side " + std::to_string(a));
            continue;
        }
        add(ArrayKind::RelativeModular, *found, 3, 1, 2);
    }
    // formula-built signed squares
    for (int a : {3, 5, 7, 9, 11, 13, 15, 17})
        add(ArrayKind::Sma, sma3_diag_odd(a), 3);
    for (int a : {6, 10, 14, 18}) add(ArrayKind::Sma, sma3_diag_even(a), 3);
    for (int a : {5, 7, 9, 11, 13, 15})
        add(ArrayKind::Sma, sma5_diag_odd(a), 5);
    for (int a : {6, 7, 8, 9, 10, 11, 12, 13, 14, 15})
        add(ArrayKind::Sma, sma6_diag(a), 6);
    {
        IngredientSupplier sup;
        add(ArrayKind::Sma, sma_diag(9, 7, false, sup), 7);
        add(ArrayKind::Sma, sma_diag(12, 10, true, sup), 10);
    }
    // searched magic rectangles
    for (auto [a, b] :
         {std::pair{3, 3}, {5, 3}, {7, 3}, {9, 3}, {4, 4}, {6, 4}}) {
        auto found = find_with_seeds(
            SearchConstraints::diagonal_square(ArrayKind::Mr, a, b));
        if (!found) {
            c.fail("no magic square of side " + std::to_string(a));
            continue;
        }
        add(ArrayKind::Mr, *found, b);
    }

    long long transfers = 0;
    for (const auto& sq : squares) {
        const int side = sq.array.rows();
        const int d = sq.band;
        // up to two factorizations side = s_bar * k_bar * c with c >= d,
        // preferring genuinely rectangular targets
        int picked = 0;
        for (int cfac = d; cfac <= side && picked < 2; ++cfac) {
            if (side % cfac != 0) continue;
            int rest = side / cfac;
            for (int s_bar = rest; s_bar >= 1 && picked < 2; --s_bar) {
                if (rest % s_bar != 0) continue;
                int k_bar = rest / s_bar;
                if (std::gcd(s_bar, k_bar) != 1) continue;
                DesignParams p{k_bar * cfac, s_bar * cfac, d * s_bar,
                               d * k_bar, sq.t, sq.lambda};
                if (p.s > p.n || p.k > p.m) continue;
                try {
                    auto got = reduce(sq.array, p);
                    auto rep = verify_kind(sq.kind, got, p);
                    if (!rep.passed)
                        c.fail(std::string(to_string(sq.kind)) +
                               " transfer fails at side " +
                               std::to_string(side));
                    auto a_entries = entry_list(sq.array);
                    auto b_entries = entry_list(got);
                    std::sort(a_entries.begin(), a_entries.end());
                    std::sort(b_entries.begin(), b_entries.end());
                    if (a_entries != b_entries)
                        c.fail("entry multiset changed at side " +
                               std::to_string(side));
                    ++transfers;
                    ++picked;
                } catch (const Error& e) {
                    c.fail(std::string("reduce threw: ") + e.what());
                }
            }
        }
    }
    double el = secs_since(t0);
    c.notes.push_back(std::to_string(squares.size()) + " squares, " +
                      std::to_string(transfers) + " transfers, " +
                      std::to_string(el) + " s");
    if (squares.size() < 50) c.fail("fewer than 50 squares");
    if (el >= 30.0) c.fail("exceeded 30 s");
    return c;
}

// Criterion 8: search oracle duties within the default budgets.
Criterion criterion_8() {
    Criterion c;
    {
        auto out = solve(
            SearchConstraints::diagonal_square(ArrayKind::HeffterInteger, 4, 3));
        if (out.verdict != SearchOutcome::Verdict::Found)
            c.fail("no 4x4 band square found");
        else if (!verify_integer_heffter(*out.array, plain(4, 4, 3, 3)).passed)
            c.fail("4x4 result fails verification");
    }
    {
        auto out = solve(
            SearchConstraints::diagonal_square(ArrayKind::Sma, 8, 4, true));
        if (out.verdict != SearchOutcome::Verdict::Found)
            c.fail("no shiftable 8x8 band square found");
        else if (!verify_sma(*out.array, plain(8, 8, 4, 4)).passed ||
                 !is_shiftable(*out.array))
            c.fail("8x8 result fails verification");
    }
    {
        SearchConstraints sc;
        sc.kind = ArrayKind::HeffterInteger;
        sc.params = plain(3, 3, 3, 3);
        sc.symmetry_breaking = true;
        auto t0 = Clock::now();
        auto out = solve(sc);
        double el = secs_since(t0);
        if (out.verdict != SearchOutcome::Verdict::ExhaustedUnsat)
            c.fail("3x3 search did not exhaust");
        if (el >= 60.0) c.fail("3x3 refutation exceeded 60 s");
        c.notes.push_back("3x3 refuted in " + std::to_string(out.stats.nodes) +
                          " nodes");
    }
    return c;
}

// Criterion 10: every bundled fixture survives parse -> emit -> parse in
// both formats.
Criterion criterion_10() {
    Criterion c;
    for (const char* name :
         {"h_12_3.grid", "h_6_12_6_3.grid", "h_8_12_9_6.grid",
          "h_14_8_4_7.grid", "h_28_16_12_21.grid", "h_24_3.grid",
          "h_tight_15_4.grid", "sma_14_3.grid", "sma_20_8_6_15.grid",
          "mr_9_18_12_6_printed.grid"}) {
        auto doc = fixture(name);
        for (auto fmt : {ArrayFormat::Grid, ArrayFormat::Json}) {
            auto again = parse_array(emit_array(doc, fmt), fmt);
            if (!(again == doc))
                c.fail(std::string(name) + " does not round-trip");
        }
    }
    return c;
}

int report(int index, const std::string& title, const Criterion& c) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << index << ": "
              << title;
    if (!c.notes.empty()) {
        std::cout << " [";
        for (std::size_t i = 0; i < c.notes.size(); ++i)
            std::cout << (i ? "; " : "") << c.notes[i];
        std::cout << "]";
    }
    std::cout << "\n";
    return c.pass ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures +=
        report(1, "square-to-rectangle reduction fixture", criterion_1());
    failures += report(2, "width-4 block rectangles match the fixtures",
                       criterion_2());
    failures += report(3, "three-diagonal side-14 square matches the fixture",
                       criterion_3());
    failures += report(4, "pairing construction matches the printed 20x8",
                       criterion_4());
    failures +=
        report(5, "printed magic rectangle sums and transpose", criterion_5());
    Criterion c6, c9;
    criterion_6_and_9(c6, c9);
    failures += report(6, "construction sweep over nk <= 600", c6);
    failures += report(7, "reduction kind transfer", criterion_7());
    failures += report(8, "search oracle duties", criterion_8());
    failures += report(9, "signed-to-magic transform law", c9);
    failures += report(10, "fixture round-trips", criterion_10());
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
