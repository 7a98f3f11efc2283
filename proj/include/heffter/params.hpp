#pragma once

#include <optional>

#include "heffter/errors.hpp"

namespace heffter {

// Shape parameters (m, n, s, k) of an m x n array with s filled cells per
// row and k per column, plus (t, lambda) for the relative variants.
struct DesignParams {
    int m = 0;
    int n = 0;
    int s = 0;
    int k = 0;
    std::optional<int> t;
    std::optional<int> lambda;

    int d() const;       // gcd(s, k)
    int c() const;       // gcd(m, n)
    long long cells() const { return static_cast<long long>(n) * k; }

    // Ambient modulus of the relative variants: 2nk/lambda + t.
    // With (t, lambda) = (1, 1) this is the plain modulus 2nk + 1.
    long long v() const;
    long long ell() const;  // v / t

    // Checks ms = nk and min_fill <= s <= n, min_fill <= k <= m.
    void validate(int min_fill = 3) const;
    // Additionally checks lambda | 2nk and t | (2nk / lambda).
    void validate_relative(int min_fill = 3) const;

    bool operator==(const DesignParams&) const = default;
};

}  // namespace heffter
