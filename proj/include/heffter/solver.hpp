#pragma once

#include <cstdint>
#include <optional>

#include "heffter/array.hpp"
#include "heffter/params.hpp"
#include "heffter/verify.hpp"

namespace heffter {

// A request for exact depth-first search. Shapes are desk scale: the
// exhaustive guideline is at most a few dozen cells.
struct SearchConstraints {
    ArrayKind kind = ArrayKind::HeffterInteger;
    DesignParams params;        // m, n, s, k (+ t, lambda for relative kinds)
    bool diagonal = false;      // square with skeleton D_0..D_{k-1}
    bool require_shiftable = false;

    // Cells are assigned in a fixed order; diagonal shapes default to
    // sweeping the band row by row, which closes each row sum after k
    // cells. diagonal_major switches to whole-diagonal-at-a-time order.
    bool diagonal_major = false;

    // Fix the sign and a canonical position of the largest value, shrinking
    // the search by the symmetry group. Turn off to enumerate raw.
    bool symmetry_breaking = true;

    long long node_budget = 10'000'000;
    double time_budget_secs = 60.0;
    std::uint64_t seed = 0;  // nonzero: deterministic shuffle of value order

    static SearchConstraints diagonal_square(ArrayKind kind, int a, int b,
                                             bool shiftable = false);
};

struct SearchStats {
    long long nodes = 0;
    int max_depth = 0;
    double elapsed_secs = 0.0;
};

struct SearchOutcome {
    enum class Verdict { Found, ExhaustedUnsat, BudgetExceeded };
    Verdict verdict = Verdict::BudgetExceeded;
    std::optional<PartiallyFilledArray> array;
    SearchStats stats;
};

const char* to_string(SearchOutcome::Verdict v);

// Depth-first search with partial-sum pruning and forced-value closure.
// Deterministic: identical constraints, seed and budget give identical
// outcome and node statistics. Found arrays always pass the corresponding
// verifier; ExhaustedUnsat means the (symmetry-reduced) space is complete.
SearchOutcome solve(const SearchConstraints& constraints);

}  // namespace heffter
