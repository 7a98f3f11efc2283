#include "heffter/reduce.hpp"

#include <numeric>
#include <string>

namespace heffter {

ReductionPlan ReductionPlan::make(const DesignParams& p, int min_fill) {
    p.validate(min_fill);
    ReductionPlan plan{};
    plan.m = p.m;
    plan.n = p.n;
    plan.s = p.s;
    plan.k = p.k;
    plan.d = std::gcd(p.s, p.k);
    plan.s_bar = p.s / plan.d;
    plan.k_bar = p.k / plan.d;
    plan.c = std::gcd(p.m, p.n);
    plan.source_side = p.n * plan.k_bar;
    // ms = nk with gcd(s_bar, k_bar) = 1 forces m = k_bar*c, n = s_bar*c.
    if (plan.m != plan.k_bar * plan.c || plan.n != plan.s_bar * plan.c)
        throw ParamMismatchError("inconsistent reduction parameters");
    return plan;
}

CellPosition psi(int i, int j, int m, int n) {
    return {cyclic_index(i, m), cyclic_index(j, n)};
}

PartiallyFilledArray normalize_diagonals(const PartiallyFilledArray& a,
                                         int d) {
    if (a.rows() != a.cols())
        throw NotDiagonalError("not a square array");
    DiagonalProfile prof = diagonal_profile(a);
    if (!prof.consecutive || static_cast<int>(prof.indices.size()) != d)
        throw NotDiagonalError("array is not cyclically " + std::to_string(d) +
                               "-diagonal");
    for (int r : prof.indices)
        if (prof.fill_count[r] != a.rows())
            throw NotDiagonalError("diagonal " + std::to_string(r) +
                                   " is not fully filled");
    int start = prof.start.value_or(0);
    if (start == 0) return a;
    return rotate_columns(a, start);
}

PartiallyFilledArray reduce(const PartiallyFilledArray& a,
                            const DesignParams& p) {
    ReductionPlan plan = ReductionPlan::make(p);
    if (a.rows() != plan.source_side || a.cols() != plan.source_side)
        throw ParamMismatchError(
            "source must be a square of side nk/d = " +
            std::to_string(plan.source_side) + ", got " +
            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    PartiallyFilledArray src = normalize_diagonals(a, plan.d);
    PartiallyFilledArray out(plan.m, plan.n);
    for (int i = 1; i <= src.rows(); ++i)
        for (int j = 1; j <= src.cols(); ++j)
            if (src.filled(i, j)) {
                CellPosition uv = psi(i, j, plan.m, plan.n);
                if (out.filled(uv.row, uv.col))
                    throw CollisionError(
                        "cell map collision at (" + std::to_string(uv.row) +
                        "," + std::to_string(uv.col) + ")");
                out.set(uv.row, uv.col, src.value(i, j));
            }
    return out;
}

}  // namespace heffter
