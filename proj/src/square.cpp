#include "heffter/square.hpp"

#include <string>

#include "heffter/reduce.hpp"
#include "heffter/supplier.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

DesignParams square_params(int a, int b) {
    return DesignParams{a, a, b, b, std::nullopt, std::nullopt};
}

void check_sma_diag(const PartiallyFilledArray& a, int b, const char* who) {
    VerificationReport r = verify_sma(a, square_params(a.rows(), b));
    if (!r.passed)
        throw Error(std::string(who) + ": output fails the signed-magic "
                    "check: " + r.summary());
    VerificationReport dg = verify_diagonal(a, b);
    if (!dg.passed)
        throw Error(std::string(who) + ": output is not cyclically " +
                    std::to_string(b) + "-diagonal");
}

}  // namespace

PartiallyFilledArray sma3_diag_odd(int a) {
    if (a < 3 || a % 2 == 0)
        throw BadParamError("need odd a >= 3, got " + std::to_string(a));
    const int g = (a - 1) / 2;
    PartiallyFilledArray out(a, a);
    for (int l = 0; l <= g; ++l) {
        int r = 1 + 2 * l;
        out.set(r, r, -(2 * g + 1) + l);
        out.set(r, r + 1, g - 2 * l);
        out.set(r, r + 2, (g + 1) + l);
    }
    for (int l = 0; l <= g - 1; ++l) {
        int r = 2 + 2 * l;
        out.set(r, r, -(3 * g + 1) + l);
        out.set(r, r + 1, (g - 1) - 2 * l);
        out.set(r, r + 2, (2 * g + 2) + l);
    }
    check_sma_diag(out, 3, "sma3_diag_odd");
    return out;
}

PartiallyFilledArray sma3_diag_even(int a) {
    if (a < 6 || a % 4 != 2)
        throw BadParamError("need a >= 6 with a = 2 (mod 4), got " +
                            std::to_string(a));
    const int g = (a - 2) / 4;
    PartiallyFilledArray out(a, a);
    out.set(1, 1, -(3 * g + 2));
    out.set(1, 2, 1);
    out.set(1, 3, 3 * g + 1);
    for (int l = 0; l <= g - 1; ++l) {
        int r = 2 + 2 * l;
        out.set(r, r, -(5 * g + 4) - l);
        out.set(r, r + 1, 3 + 2 * l);
        out.set(r, r + 2, (5 * g + 1) - l);
    }
    for (int l = 0; l <= g - 2; ++l) {
        int r = 3 + 2 * l;
        out.set(r, r, -(3 * g + 4) - l);
        out.set(r, r + 1, 4 + 2 * l);
        out.set(r, r + 2, 3 * g - l);
    }
    out.set(2 * g + 1, 2 * g + 1, -(4 * g + 3));
    out.set(2 * g + 1, 2 * g + 2, 2);
    out.set(2 * g + 1, 2 * g + 3, 4 * g + 1);
    for (int l = 0; l <= g - 1; ++l) {
        int r = 2 * g + 2 + 2 * l;
        out.set(r, r, -(4 * g + 4) - l);
        out.set(r, r + 1, -(2 * g - 1) + 2 * l);
        out.set(r, r + 2, (6 * g + 3) - l);
    }
    for (int l = 0; l <= g - 2; ++l) {
        int r = 2 * g + 3 + 2 * l;
        out.set(r, r, -(2 * g + 2) - l);
        out.set(r, r + 1, -(2 * g - 2) + 2 * l);
        out.set(r, r + 2, 4 * g - l);
    }
    out.set(a - 1, a - 1, -(3 * g + 1));
    out.set(a - 1, a, -(2 * g + 1));
    out.set(a - 1, a + 1, 5 * g + 2);  // wraps to column 1
    out.set(a, a, -(3 * g + 3));
    out.set(a, a + 1, -2 * g);
    out.set(a, a + 2, 5 * g + 3);
    check_sma_diag(out, 3, "sma3_diag_even");
    return out;
}

PartiallyFilledArray sma5_diag_odd(int a) {
    if (a < 5 || a % 2 == 0)
        throw BadParamError("need odd a >= 5, got " + std::to_string(a));
    const int g = (a - 1) / 2;
    PartiallyFilledArray out(a, a);
    out.set(1, 1, -(5 * g + 2));
    out.set(1, 2, -(g + 1));
    out.set(1, 3, g);
    out.set(1, 4, g + 2);
    out.set(1, 5, 4 * g + 1);
    for (int l = 0; l <= g - 1; ++l) {
        int r = 2 + 2 * l;
        out.set(r, r, -(4 * g + 2) - l);
        out.set(r, r + 1, -(3 * g + 1) + 2 * l);
        out.set(r, r + 2, (g - 1) - 2 * l);
        out.set(r, r + 3, (g + 3) + 2 * l);
        out.set(r, r + 4, (5 * g + 1) - l);
    }
    for (int l = 0; l <= g - 2; ++l) {
        int r = 3 + 2 * l;
        out.set(r, r, -(3 * g + 2) - l);
        out.set(r, r + 1, -3 * g + 2 * l);
        out.set(r, r + 2, (g - 2) - 2 * l);
        out.set(r, r + 3, (g + 4) + 2 * l);
        out.set(r, r + 4, 4 * g - l);
    }
    out.set(a, a, -(4 * g + 1));
    out.set(a, a + 1, -(g + 2));
    out.set(a, a + 2, -g);
    out.set(a, a + 3, g + 1);
    out.set(a, a + 4, 5 * g + 2);
    check_sma_diag(out, 5, "sma5_diag_odd");
    return out;
}

PartiallyFilledArray sma6_diag(int a) {
    if (a < 6) throw BadParamError("need a >= 6, got " + std::to_string(a));
    PartiallyFilledArray out(a, a);
    for (int l = 1; l <= a - 3; ++l) {
        out.set(l, l, l);
        out.set(l, l + 1, a + l);
        out.set(l, l + 2, -a - 2 * l);
        out.set(l, l + 3, -3 - l);
        out.set(l, l + 4, (3 * a - 2) - l);
        out.set(l, l + 5, -(3 * a - 5) + 2 * l);
    }
    out.set(a - 2, a - 2, a - 2);
    out.set(a - 2, a - 1, 2 * a - 2);
    out.set(a - 2, a, -(3 * a - 4));
    out.set(a - 2, a + 1, -1);
    out.set(a - 2, a + 2, 3 * a);
    out.set(a - 2, a + 3, -(3 * a - 1));
    out.set(a - 1, a - 1, a - 1);
    out.set(a - 1, a, 2 * a - 1);
    out.set(a - 1, a + 1, -(3 * a - 2));
    out.set(a - 1, a + 2, -2);
    out.set(a - 1, a + 3, 3 * a - 1);
    out.set(a - 1, a + 4, -(3 * a - 3));
    out.set(a, a, a);
    out.set(a, a + 1, 2 * a);
    out.set(a, a + 2, -3 * a);
    out.set(a, a + 3, -3);
    out.set(a, a + 4, 3 * a - 2);
    out.set(a, a + 5, -(3 * a - 5));
    check_sma_diag(out, 6, "sma6_diag");
    if (!is_shiftable(out))
        throw Error("sma6_diag: output is not shiftable");
    return out;
}

PartiallyFilledArray compose_diag_sma(const PartiallyFilledArray& base, int b,
                                      IngredientSupplier& supplier) {
    if (base.rows() != base.cols())
        throw BadParamError("base must be square");
    const int a = base.rows();
    DiagonalProfile prof = diagonal_profile(base);
    if (!prof.consecutive || prof.start.value_or(1) != 0)
        throw BadParamError("base must occupy diagonals D_0..D_{r-1}");
    const int r = static_cast<int>(prof.indices.size());
    if (r != 3 && r != 5 && r != 6)
        throw BadParamError("base must have 3, 5 or 6 diagonals");
    if (b < r || (b - r) % 4 != 0 || b > a)
        throw BadParamError("need b = r + 4h with b <= a");
    const int h = (b - r) / 4;
    if (h == 0) return base;

    PartiallyFilledArray four = supplier.supply(
        IngredientRequest::diagonal(ArrayKind::Sma, a, 4, /*shiftable=*/true));
    PartiallyFilledArray four0 = normalize_diagonals(four, 4);
    const long long ar = static_cast<long long>(a) * r;
    const Entry sigma0 = (ar % 2 == 1) ? (ar - 1) / 2 : ar / 2;
    PartiallyFilledArray out = base;
    for (int j = 0; j < h; ++j) {
        PartiallyFilledArray copy =
            rotate_columns(shift(four0, sigma0 + 2LL * a * j), -(r + 4 * j));
        out = place_block(out, copy, 0, 0, true);
    }
    check_sma_diag(out, b, "compose_diag_sma");
    return out;
}

PartiallyFilledArray sma_diag(int a, int b, bool shiftable_required,
                              IngredientSupplier& supplier) {
    if (b < 3 || a < b)
        throw BadParamError("need a >= b >= 3, got a=" + std::to_string(a) +
                            " b=" + std::to_string(b));
    if (shiftable_required && b % 2 != 0)
        throw BadParamError("a shiftable square needs an even diagonal count");
    PartiallyFilledArray out(1, 1);
    bool built = false;
    if (b == 3) {
        if (a % 2 == 1) {
            out = sma3_diag_odd(a);
            built = true;
        } else if (a % 4 == 2) {
            out = sma3_diag_even(a);
            built = true;
        }
    } else if (b == 5 && a % 2 == 1) {
        out = sma5_diag_odd(a);
        built = true;
    } else if (b == 6) {
        out = sma6_diag(a);
        built = true;
    } else if (b > 6 && b % 4 != 0) {
        // b = 4h + r with r in {3,5,6}; build the base when a formula covers
        // it, then overlay shifted 4-diagonal copies.
        int r = (b % 4 == 3) ? 3 : (b % 4 == 1 ? 5 : 6);
        bool base_ok = (r == 6) || (a % 2 == 1) ||
                       (r == 3 && a % 4 == 2);
        if (base_ok) {
            out = compose_diag_sma(sma_diag(a, r, false, supplier), b,
                                   supplier);
            built = true;
        }
    }
    if (!built)
        out = supplier.supply(IngredientRequest::diagonal(
            ArrayKind::Sma, a, b, shiftable_required || b % 2 == 0));
    check_sma_diag(out, b, "sma_diag");
    if (shiftable_required && !is_shiftable(out))
        throw Error("sma_diag: shiftable square required but result is not");
    return out;
}

PartiallyFilledArray sma_shiftable_rect(int m, int n, int s, int k,
                                        IngredientSupplier& supplier) {
    DesignParams p{m, n, s, k, std::nullopt, std::nullopt};
    p.validate();
    if (s % 2 != 0 || k % 2 != 0)
        throw BadParamError("s and k must both be even");
    if (m < n) return transpose(sma_shiftable_rect(n, m, k, s, supplier));
    if (m == n) return sma_diag(n, s, /*shiftable_required=*/true, supplier);

    PartiallyFilledArray top = sma_diag(n, s, true, supplier);
    DesignParams rest{m - n, n, s, k - s, std::nullopt, std::nullopt};
    PartiallyFilledArray bottom = supplier.supply(
        IngredientRequest::rectangular(ArrayKind::Sma, rest, true));
    PartiallyFilledArray out =
        vstack(top, shift(bottom, static_cast<Entry>(n) * s / 2));
    VerificationReport rep = verify_sma(out, p);
    if (!rep.passed)
        throw Error("sma_shiftable_rect: stack fails the signed-magic check: " +
                    rep.summary());
    if (!is_shiftable(out))
        throw Error("sma_shiftable_rect: stack is not shiftable");
    return out;
}

}  // namespace heffter
