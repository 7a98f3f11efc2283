#pragma once

#include "heffter/array.hpp"

namespace heffter {

class IngredientSupplier;

// Diagonal signed magic squares built row by row from closed formulas.
// Each returns a square occupying diagonals D_0..D_{b-1} that passes the
// signed-magic and diagonal checks (outputs are re-verified before return).

// SMA(a;3) for odd a >= 3. Diagonal entry ranges: D_0 = [-(3g+1), -(g+1)],
// D_1 = [-g, g], D_2 = [g+1, 3g+1] with a = 2g+1.
PartiallyFilledArray sma3_diag_odd(int a);

// SMA(a;3) for a >= 6, a = 2 (mod 4). D_0 = [-(6g+3), -(2g+2)],
// D_1 = [-(2g+1), -1] u [1, 2g+1], D_2 = [2g+2, 6g+3] with a = 4g+2.
PartiallyFilledArray sma3_diag_even(int a);

// SMA(a;5) for odd a >= 5.
PartiallyFilledArray sma5_diag_odd(int a);

// Shiftable SMA(a;6) for a >= 6; every row and column has three positive
// and three negative entries.
PartiallyFilledArray sma6_diag(int a);

// Extends a diagonal SMA(a;r), r in {3,5,6}, to a diagonal SMA(a;b) with
// b = 4h + r by overlaying h column-rotated, shifted copies of a shiftable
// diagonal SMA(a;4) ingredient onto diagonals D_r..D_{b-1}. Copy j is
// shifted by sigma + 2aj where sigma = (ar-1)/2 for ar odd and ar/2 for ar
// even, which makes the supports abut exactly.
PartiallyFilledArray compose_diag_sma(const PartiallyFilledArray& base, int b,
                                      IngredientSupplier& supplier);

// Diagonal SMA(a;b) for a >= b >= 3: own formulas where available,
// composition where a shiftable SMA(a;4) ingredient can be found, whole
// ingredients for the remaining families.
PartiallyFilledArray sma_diag(int a, int b, bool shiftable_required,
                              IngredientSupplier& supplier);

// Shiftable SMA(m,n;s,k) for s, k both even: a diagonal square when m = n,
// otherwise a shiftable diagonal SMA(n;s) stacked over a shifted
// SMA(m-n, n; s, k-s) ingredient.
PartiallyFilledArray sma_shiftable_rect(int m, int n, int s, int k,
                                        IngredientSupplier& supplier);

}  // namespace heffter
