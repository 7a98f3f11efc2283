#include "heffter/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace heffter {

namespace {

std::string rc(const char* what, int i) {
    return std::string(what) + " " + std::to_string(i);
}

long long mod_v(Entry e, long long v) {
    long long r = e % v;
    if (r < 0) r += v;
    return r;
}

void check_shape(const PartiallyFilledArray& a, const DesignParams& p) {
    if (a.rows() != p.m || a.cols() != p.n)
        throw ParamMismatchError(
            "array is " + std::to_string(a.rows()) + "x" +
            std::to_string(a.cols()) + ", parameters say " +
            std::to_string(p.m) + "x" + std::to_string(p.n));
}

void check_fill_counts(const PartiallyFilledArray& a, const DesignParams& p,
                       VerificationReport& rep) {
    for (int i = 1; i <= p.m; ++i)
        if (a.row_fill(i) != p.s)
            rep.add(ViolationKind::RowFill, rc("row", i),
                    "has " + std::to_string(a.row_fill(i)) +
                        " filled cells, expected " + std::to_string(p.s));
    for (int j = 1; j <= p.n; ++j)
        if (a.col_fill(j) != p.k)
            rep.add(ViolationKind::ColFill, rc("column", j),
                    "has " + std::to_string(a.col_fill(j)) +
                        " filled cells, expected " + std::to_string(p.k));
}

void check_zero_sums(const PartiallyFilledArray& a, const DesignParams& p,
                     VerificationReport& rep) {
    for (int i = 1; i <= p.m; ++i)
        if (a.row_sum(i) != 0)
            rep.add(ViolationKind::RowSum, rc("row", i),
                    "sums to " + std::to_string(a.row_sum(i)));
    for (int j = 1; j <= p.n; ++j)
        if (a.col_sum(j) != 0)
            rep.add(ViolationKind::ColSum, rc("column", j),
                    "sums to " + std::to_string(a.col_sum(j)));
}

void check_modular_sums(const PartiallyFilledArray& a, const DesignParams& p,
                        long long v, VerificationReport& rep) {
    for (int i = 1; i <= p.m; ++i)
        if (mod_v(a.row_sum(i), v) != 0)
            rep.add(ViolationKind::RowSum, rc("row", i),
                    "sums to " + std::to_string(mod_v(a.row_sum(i), v)) +
                        " mod " + std::to_string(v));
    for (int j = 1; j <= p.n; ++j)
        if (mod_v(a.col_sum(j), v) != 0)
            rep.add(ViolationKind::ColSum, rc("column", j),
                    "sums to " + std::to_string(mod_v(a.col_sum(j), v)) +
                        " mod " + std::to_string(v));
}

}  // namespace

void VerificationReport::add(ViolationKind kind, std::string location,
                             std::string detail) {
    passed = false;
    violations.push_back({kind, std::move(location), std::move(detail)});
}

std::string VerificationReport::summary() const {
    if (passed) return "passed";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations)
        os << "\n  [" << to_string(v.kind) << "] " << v.location << ": "
           << v.detail;
    return os.str();
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::RowFill: return "RowFill";
        case ViolationKind::ColFill: return "ColFill";
        case ViolationKind::RowSum: return "RowSum";
        case ViolationKind::ColSum: return "ColSum";
        case ViolationKind::Domain: return "Domain";
        case ViolationKind::SupportMultiplicity: return "SupportMultiplicity";
        case ViolationKind::DiagonalProfile: return "DiagonalProfile";
        case ViolationKind::Shiftability: return "Shiftability";
    }
    return "?";
}

const char* to_string(ArrayKind k) {
    switch (k) {
        case ArrayKind::HeffterModular: return "heffter";
        case ArrayKind::HeffterInteger: return "integer-heffter";
        case ArrayKind::RelativeModular: return "relative";
        case ArrayKind::RelativeInteger: return "integer-relative";
        case ArrayKind::Sma: return "sma";
        case ArrayKind::Mr: return "mr";
    }
    return "?";
}

std::optional<ArrayKind> array_kind_from_string(const std::string& name) {
    if (name == "heffter") return ArrayKind::HeffterModular;
    if (name == "integer-heffter") return ArrayKind::HeffterInteger;
    if (name == "relative") return ArrayKind::RelativeModular;
    if (name == "integer-relative") return ArrayKind::RelativeInteger;
    if (name == "sma") return ArrayKind::Sma;
    if (name == "mr") return ArrayKind::Mr;
    return std::nullopt;
}

VerificationReport verify_heffter_modular(const PartiallyFilledArray& a,
                                          const DesignParams& p) {
    p.validate(1);
    check_shape(a, p);
    const long long v = 2 * p.cells() + 1;
    VerificationReport rep;
    check_fill_counts(a, p, rep);

    // One of {x, -x} exactly once for every nonzero x of Z_v. Count each
    // entry under the canonical pair representative min(r, v - r).
    std::map<long long, int> pair_count;
    for (int i = 1; i <= p.m; ++i)
        for (int j = 1; j <= p.n; ++j)
            if (a.filled(i, j)) {
                long long r = mod_v(a.value(i, j), v);
                if (r == 0) {
                    rep.add(ViolationKind::Domain,
                            "cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ")",
                            "entry reduces to 0 mod " + std::to_string(v));
                    continue;
                }
                ++pair_count[std::min(r, v - r)];
            }
    for (long long x = 1; x <= p.cells(); ++x) {
        int c = pair_count.count(x) ? pair_count.at(x) : 0;
        if (c != 1)
            rep.add(ViolationKind::SupportMultiplicity,
                    "pair {" + std::to_string(x) + "," +
                        std::to_string(v - x) + "}",
                    "appears " + std::to_string(c) + " times, expected 1");
    }
    check_modular_sums(a, p, v, rep);
    return rep;
}

VerificationReport verify_integer_heffter(const PartiallyFilledArray& a,
                                          const DesignParams& p) {
    p.validate(1);
    check_shape(a, p);
    VerificationReport rep;
    if (p.cells() % 4 == 1 || p.cells() % 4 == 2)
        rep.warnings.push_back(
            "nk = " + std::to_string(p.cells()) +
            " is 1 or 2 mod 4, so no integer array with these parameters "
            "exists; checking the given array anyway");
    check_fill_counts(a, p, rep);

    std::map<Entry, int> abs_count;
    for (int i = 1; i <= p.m; ++i)
        for (int j = 1; j <= p.n; ++j)
            if (a.filled(i, j)) {
                Entry e = a.value(i, j);
                if (e == 0 || std::llabs(e) > p.cells()) {
                    rep.add(ViolationKind::Domain,
                            "cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ")",
                            std::to_string(e) + " is outside {+-1..+-" +
                                std::to_string(p.cells()) + "}");
                    continue;
                }
                ++abs_count[std::llabs(e)];
            }
    for (Entry x = 1; x <= p.cells(); ++x) {
        int c = abs_count.count(x) ? abs_count.at(x) : 0;
        if (c != 1)
            rep.add(ViolationKind::SupportMultiplicity,
                    "absolute value " + std::to_string(x),
                    "appears " + std::to_string(c) + " times, expected 1");
    }
    check_zero_sums(a, p, rep);
    return rep;
}

VerificationReport verify_relative(const PartiallyFilledArray& a,
                                   const DesignParams& p, bool integer) {
    p.validate_relative(1);
    check_shape(a, p);
    const long long lam = p.lambda.value_or(1);
    const long long t = p.t.value_or(1);
    const long long v = p.v();
    const long long ell = p.ell();
    VerificationReport rep;
    check_fill_counts(a, p, rep);

    if (!integer) {
        // J is generated by ell: multiples of ell mod v.
        std::map<long long, long long> pair_count;  // rep -> count in E u -E
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.n; ++j)
                if (a.filled(i, j)) {
                    long long r = mod_v(a.value(i, j), v);
                    if (r % ell == 0) {
                        rep.add(ViolationKind::Domain,
                                "cell (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")",
                                "entry lies in the forbidden subgroup mod " +
                                    std::to_string(v));
                        continue;
                    }
                    ++pair_count[std::min(r, v - r)];
                }
        // x and -x both pick up one occurrence from each entry of the pair,
        // so "lambda times in E u -E" means pair multiplicity lambda, or
        // lambda/2 entries when x = -x = v/2.
        for (long long x = 1; x <= v / 2; ++x) {
            if (x % ell == 0) continue;
            long long c = pair_count.count(x) ? pair_count.at(x) : 0;
            long long expect = (2 * x == v) ? lam / 2 : lam;
            if (c != expect)
                rep.add(ViolationKind::SupportMultiplicity,
                        "pair {" + std::to_string(x) + "," +
                            std::to_string(v - x) + "}",
                        "appears " + std::to_string(c) + " times, expected " +
                            std::to_string(expect));
        }
        check_modular_sums(a, p, v, rep);
        return rep;
    }

    // Integer mode: absolute values in Phi, multiplicities as stated.
    std::map<Entry, long long> abs_count;
    auto in_phi = [&](Entry x) {
        return x >= 1 && x <= v / 2 && (x % ell != 0 || x / ell > t / 2);
    };
    for (int i = 1; i <= p.m; ++i)
        for (int j = 1; j <= p.n; ++j)
            if (a.filled(i, j)) {
                Entry e = a.value(i, j);
                if (e == 0 || !in_phi(std::llabs(e))) {
                    rep.add(ViolationKind::Domain,
                            "cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ")",
                            std::to_string(e) +
                                " is not a signed element of the admissible "
                                "set");
                    continue;
                }
                ++abs_count[std::llabs(e)];
            }
    const bool halve_top = (v % 2 == 0) && (t % 2 == 1);
    for (Entry x = 1; x <= v / 2; ++x) {
        if (!in_phi(x)) continue;
        long long c = abs_count.count(x) ? abs_count.at(x) : 0;
        long long expect = (halve_top && 2 * x == v) ? lam / 2 : lam;
        if (c != expect)
            rep.add(ViolationKind::SupportMultiplicity,
                    "absolute value " + std::to_string(x),
                    "appears " + std::to_string(c) + " times, expected " +
                        std::to_string(expect));
    }
    check_zero_sums(a, p, rep);
    return rep;
}

VerificationReport verify_sma(const PartiallyFilledArray& a,
                              const DesignParams& p) {
    p.validate(1);
    check_shape(a, p);
    const long long nk = p.cells();
    const Entry bound = (nk % 2 == 1) ? (nk - 1) / 2 : nk / 2;
    const bool with_zero = nk % 2 == 1;
    VerificationReport rep;
    check_fill_counts(a, p, rep);

    std::map<Entry, int> count;
    for (int i = 1; i <= p.m; ++i)
        for (int j = 1; j <= p.n; ++j)
            if (a.filled(i, j)) {
                Entry e = a.value(i, j);
                if (std::llabs(e) > bound || (e == 0 && !with_zero)) {
                    rep.add(ViolationKind::Domain,
                            "cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ")",
                            std::to_string(e) + " is outside the range");
                    continue;
                }
                ++count[e];
            }
    for (Entry x = -bound; x <= bound; ++x) {
        if (x == 0 && !with_zero) continue;
        int c = count.count(x) ? count.at(x) : 0;
        if (c != 1)
            rep.add(ViolationKind::SupportMultiplicity,
                    "value " + std::to_string(x),
                    "appears " + std::to_string(c) + " times, expected 1");
    }
    check_zero_sums(a, p, rep);
    return rep;
}

VerificationReport verify_mr(const PartiallyFilledArray& a,
                             const DesignParams& p) {
    p.validate(1);
    check_shape(a, p);
    const long long nk = p.cells();
    VerificationReport rep;
    check_fill_counts(a, p, rep);

    std::map<Entry, int> count;
    for (int i = 1; i <= p.m; ++i)
        for (int j = 1; j <= p.n; ++j)
            if (a.filled(i, j)) {
                Entry e = a.value(i, j);
                if (e < 0 || e >= nk) {
                    rep.add(ViolationKind::Domain,
                            "cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ")",
                            std::to_string(e) + " is outside 0.." +
                                std::to_string(nk - 1));
                    continue;
                }
                ++count[e];
            }
    for (Entry x = 0; x < nk; ++x) {
        int c = count.count(x) ? count.at(x) : 0;
        if (c != 1)
            rep.add(ViolationKind::SupportMultiplicity,
                    "value " + std::to_string(x),
                    "appears " + std::to_string(c) + " times, expected 1");
    }

    // Row sums must share one constant, column sums another. The constants
    // are forced: m*c1 = n*c2 = nk(nk-1)/2.
    const Entry c1 = a.row_sum(1);
    for (int i = 2; i <= p.m; ++i)
        if (a.row_sum(i) != c1)
            rep.add(ViolationKind::RowSum, rc("row", i),
                    "sums to " + std::to_string(a.row_sum(i)) +
                        ", row 1 sums to " + std::to_string(c1));
    const Entry c2 = a.col_sum(1);
    for (int j = 2; j <= p.n; ++j)
        if (a.col_sum(j) != c2)
            rep.add(ViolationKind::ColSum, rc("column", j),
                    "sums to " + std::to_string(a.col_sum(j)) +
                        ", column 1 sums to " + std::to_string(c2));
    if (rep.passed) {
        if (2 * c1 != p.s * (nk - 1))
            rep.add(ViolationKind::RowSum, "row constant",
                    "c1 = " + std::to_string(c1) + ", expected s(nk-1)/2");
        if (2 * c2 != p.k * (nk - 1))
            rep.add(ViolationKind::ColSum, "column constant",
                    "c2 = " + std::to_string(c2) + ", expected k(nk-1)/2");
    }
    if (rep.passed) rep.observed_constants = std::make_pair(c1, c2);
    return rep;
}

VerificationReport verify_diagonal(const PartiallyFilledArray& a, int b) {
    if (a.rows() != a.cols())
        throw NonSquareError("diagonal check requires a square array");
    if (b < 1 || b > a.rows())
        throw BadParamError("need 1 <= b <= side");
    DiagonalProfile prof = diagonal_profile(a);
    VerificationReport rep;
    if (static_cast<int>(prof.indices.size()) != b || !prof.consecutive) {
        rep.add(ViolationKind::DiagonalProfile, "skeleton",
                "filled cells span " + std::to_string(prof.indices.size()) +
                    " diagonal(s), expected " + std::to_string(b) +
                    " consecutive");
        return rep;
    }
    for (int r : prof.indices)
        if (prof.fill_count[r] != a.rows())
            rep.add(ViolationKind::DiagonalProfile,
                    "diagonal " + std::to_string(r),
                    "has " + std::to_string(prof.fill_count[r]) +
                        " filled cells of " + std::to_string(a.rows()));
    return rep;
}

VerificationReport verify_kind(ArrayKind kind, const PartiallyFilledArray& a,
                               const DesignParams& p) {
    switch (kind) {
        case ArrayKind::HeffterModular: return verify_heffter_modular(a, p);
        case ArrayKind::HeffterInteger: return verify_integer_heffter(a, p);
        case ArrayKind::RelativeModular: return verify_relative(a, p, false);
        case ArrayKind::RelativeInteger: return verify_relative(a, p, true);
        case ArrayKind::Sma: return verify_sma(a, p);
        case ArrayKind::Mr: return verify_mr(a, p);
    }
    throw BadParamError("unknown kind");
}

EntryDomain entry_domain(ArrayKind kind, const DesignParams& p) {
    EntryDomain dom;
    dom.kind = kind;
    const long long nk = p.cells();
    switch (kind) {
        case ArrayKind::HeffterInteger:
            for (Entry x = 1; x <= nk; ++x)
                dom.classes.push_back({x, true, 1});
            break;
        case ArrayKind::HeffterModular:
            dom.modular_sums = true;
            dom.v = 2 * nk + 1;
            for (Entry x = 1; x <= nk; ++x)
                dom.classes.push_back({x, true, 1});
            break;
        case ArrayKind::Sma: {
            const Entry bound = (nk % 2 == 1) ? (nk - 1) / 2 : nk / 2;
            if (nk % 2 == 1) dom.classes.push_back({0, false, 1});
            for (Entry x = 1; x <= bound; ++x) {
                dom.classes.push_back({x, false, 1});
                dom.classes.push_back({-x, false, 1});
            }
            break;
        }
        case ArrayKind::Mr:
            for (Entry x = 0; x < nk; ++x)
                dom.classes.push_back({x, false, 1});
            dom.row_target = p.s * (nk - 1) / 2;
            dom.col_target = p.k * (nk - 1) / 2;
            break;
        case ArrayKind::RelativeInteger: {
            p.validate_relative(1);
            const long long v = p.v();
            const long long ell = p.ell();
            const long long t = p.t.value_or(1);
            const int lam = static_cast<int>(p.lambda.value_or(1));
            const bool halve_top = (v % 2 == 0) && (t % 2 == 1);
            for (Entry x = 1; x <= v / 2; ++x) {
                if (x % ell == 0 && x / ell <= t / 2) continue;
                int mult = (halve_top && 2 * x == v) ? lam / 2 : lam;
                if (mult > 0) dom.classes.push_back({x, true, mult});
            }
            break;
        }
        case ArrayKind::RelativeModular: {
            p.validate_relative(1);
            dom.modular_sums = true;
            dom.v = p.v();
            const long long ell = p.ell();
            const int lam = static_cast<int>(p.lambda.value_or(1));
            for (Entry x = 1; x <= dom.v / 2; ++x) {
                if (x % ell == 0) continue;
                if (2 * x == dom.v) {
                    if (lam / 2 > 0) dom.classes.push_back({x, false, lam / 2});
                } else {
                    dom.classes.push_back({x, true, lam});
                }
            }
            break;
        }
    }
    return dom;
}

}  // namespace heffter
