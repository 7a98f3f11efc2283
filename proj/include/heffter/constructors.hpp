#pragma once

#include <string>

#include "heffter/array.hpp"
#include "heffter/params.hpp"

namespace heffter {

class IngredientSupplier;

// Integer Heffter array H(m,n;s,k) for s = 0 (mod 4) and odd k != 5, built
// from width-4 zero-sum blocks stacked over shiftable fillers and laid out
// column strip by column strip.
PartiallyFilledArray heffter_s0mod4(int m, int n, int s, int k);

// Signed magic array for s = 0 (mod 4). Odd k with n = 4 (mod 8) uses the
// signed block sequence directly; n = 0 (mod 8) goes through the pairing
// construction below; even k falls back to the gcd-based routes.
PartiallyFilledArray sma_s0mod4(int m, int n, int s, int k,
                                IngredientSupplier& supplier);

// Integer lambda-fold array with t = 1 built by pairing each column C of a
// tight integer H(k, n/lambda; n/lambda, k) ingredient into a k x 2 block
// [C | -C] and laying lambda/2 copies of the strip sequence cyclically.
PartiallyFilledArray lambda_fold_from_tight(int m, int n, int s, int k,
                                            int lambda,
                                            IngredientSupplier& supplier);

// The lambda = 2 pairing: for n, s even and nk = 0 or 6 (mod 8) the result
// is additionally a signed magic array.
PartiallyFilledArray sma_from_tight(int m, int n, int s, int k,
                                    IngredientSupplier& supplier);

// Turns a shiftable SMA(m,n;s,k) into an MR(m,n;s,k) by the entry map
// e -> nk/2 + e - 1 for e > 0 and e -> nk/2 - |e| for e < 0.
PartiallyFilledArray mr_from_shiftable_sma(const PartiallyFilledArray& a,
                                           const DesignParams& p);

enum class ConstructKind { Heffter, Sma, Mr };

const char* to_string(ConstructKind k);
std::optional<ConstructKind> construct_kind_from_string(
    const std::string& name);

struct ConstructResult {
    PartiallyFilledArray array;
    std::string provenance;  // deterministic route tag
};

// Which route, if any, the dispatcher claims for these parameters. Pure
// function of the parameters: ingredient availability does not change the
// claim, only whether construct() can realize it.
struct CoverageDecision {
    bool covered = false;
    std::string route;   // when covered
    std::string reason;  // when not: the nearest open case
};
CoverageDecision coverage(ConstructKind kind, int m, int n, int s, int k);

// Builds an array of the requested kind, trying routes in priority order:
// direct block constructions, then reduction from squares. Throws
// NotCoveredError when no implemented construction applies and
// IngredientUnavailableError when every applicable route lacks an
// ingredient. The output is re-verified before being returned.
ConstructResult construct(ConstructKind kind, int m, int n, int s, int k,
                          IngredientSupplier& supplier);

}  // namespace heffter
