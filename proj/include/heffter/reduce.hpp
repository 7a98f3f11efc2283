#pragma once

#include "heffter/array.hpp"
#include "heffter/params.hpp"

namespace heffter {

// Shape bookkeeping for rebuilding an m x n array from a square cyclically
// d-diagonal array of side nk/d, where d = gcd(s, k).
struct ReductionPlan {
    int m, n, s, k;
    int d;            // gcd(s, k)
    int s_bar, k_bar; // s/d, k/d
    int c;            // gcd(m, n) = n/s_bar = m/k_bar
    int source_side;  // nk/d = n*k_bar = m*s_bar

    // Validates ms = nk, min_fill <= s <= n, min_fill <= k <= m and the
    // divisibility identities above.
    static ReductionPlan make(const DesignParams& p, int min_fill = 2);
};

// The reduction cell map: (i, j) -> (u, v) with u = i (mod m) in 1..m and
// v = j (mod n) in 1..n.
CellPosition psi(int i, int j, int m, int n);

// Rotates columns so that a cyclically d-diagonal square occupies exactly
// D_0..D_{d-1}. Throws NotDiagonalError otherwise.
PartiallyFilledArray normalize_diagonals(const PartiallyFilledArray& a, int d);

// Rebuilds the m x n array from a square cyclically d-diagonal array of
// side nk/d by transporting each filled cell along psi. The diagonal start
// is normalized first. Entry list, zero/modular sums, domain and
// shiftability all transfer; the map is injective on the skeleton, so the
// collision error can never fire on valid input.
PartiallyFilledArray reduce(const PartiallyFilledArray& a,
                            const DesignParams& p);

}  // namespace heffter
