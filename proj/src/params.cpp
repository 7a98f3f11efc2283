#include "heffter/params.hpp"

#include <numeric>
#include <string>

namespace heffter {

int DesignParams::d() const { return std::gcd(s, k); }

int DesignParams::c() const { return std::gcd(m, n); }

long long DesignParams::v() const {
    long long lam = lambda.value_or(1);
    long long tt = t.value_or(1);
    return 2 * cells() / lam + tt;
}

long long DesignParams::ell() const { return v() / t.value_or(1); }

void DesignParams::validate(int min_fill) const {
    if (m <= 0 || n <= 0 || s <= 0 || k <= 0)
        throw ParamMismatchError("parameters must be positive");
    if (static_cast<long long>(m) * s != static_cast<long long>(n) * k)
        throw ParamMismatchError("ms = nk violated: m=" + std::to_string(m) +
                                 " n=" + std::to_string(n) + " s=" +
                                 std::to_string(s) + " k=" + std::to_string(k));
    if (s < min_fill || s > n)
        throw ParamMismatchError("need " + std::to_string(min_fill) +
                                 " <= s <= n");
    if (k < min_fill || k > m)
        throw ParamMismatchError("need " + std::to_string(min_fill) +
                                 " <= k <= m");
}

void DesignParams::validate_relative(int min_fill) const {
    validate(min_fill);
    long long lam = lambda.value_or(1);
    long long tt = t.value_or(1);
    if (lam <= 0 || tt <= 0)
        throw BadRelativeParamsError("t and lambda must be positive");
    if ((2 * cells()) % lam != 0)
        throw BadRelativeParamsError("lambda must divide 2nk");
    if ((2 * cells() / lam) % tt != 0)
        throw BadRelativeParamsError("t must divide 2nk/lambda");
}

}  // namespace heffter
