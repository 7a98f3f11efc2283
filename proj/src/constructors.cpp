#include "heffter/constructors.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "heffter/blocks.hpp"
#include "heffter/reduce.hpp"
#include "heffter/square.hpp"
#include "heffter/supplier.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

DesignParams plain(int m, int n, int s, int k) {
    return DesignParams{m, n, s, k, std::nullopt, std::nullopt};
}

void require_pass(const VerificationReport& rep, const std::string& who) {
    if (!rep.passed) throw Error(who + ": output fails its check: " + rep.summary());
}

}  // namespace

PartiallyFilledArray heffter_s0mod4(int m, int n, int s, int k) {
    DesignParams p = plain(m, n, s, k);
    p.validate();
    if (s % 4 != 0) throw BadParamError("s must be divisible by 4");
    if (k % 2 == 0 || k == 5) throw BadParamError("k must be odd and not 5");
    // ms = nk with 4 | s and k odd forces 4 | n.
    if (n % 4 != 0) throw BadParamError("n must be divisible by 4");

    std::vector<PartiallyFilledArray> base;
    if (n % 8 == 0) {
        base = seq_blocks_a1((n - 8) / 8).blocks;
    } else if (n == 4) {
        base.push_back(base_block_3x4());
    } else {
        base = seq_blocks_a2((n - 12) / 8).blocks;
    }

    std::vector<PartiallyFilledArray> strips;
    if (k == 3) {
        strips = base;
    } else {
        const int q = (k % 4 == 3) ? (k - 7) / 4 : (k - 9) / 4;
        const FillerVariant variant =
            (k % 4 == 3) ? FillerVariant::HeffterV : FillerVariant::HeffterW;
        const Entry step = (k % 4 == 3) ? 16 * q + 16 : 16 * q + 24;
        PartiallyFilledArray filler = build_filler_stack(q, variant);
        for (int i = 0; i < static_cast<int>(base.size()); ++i)
            strips.push_back(vstack(base[static_cast<std::size_t>(i)],
                                    shift(filler, 3LL * n + step * i)));
    }
    PartiallyFilledArray out = assemble_columnwise(strips, m, n, 4);
    require_pass(verify_integer_heffter(out, p), "heffter_s0mod4");
    return out;
}

PartiallyFilledArray sma_s0mod4(int m, int n, int s, int k,
                                IngredientSupplier& supplier) {
    DesignParams p = plain(m, n, s, k);
    p.validate();
    if (s % 4 != 0) throw BadParamError("s must be divisible by 4");
    if (k % 2 == 0) {
        // Even k: the gcd is at least 2, so the square-reduction or the
        // shiftable-stack route applies.
        const int d = p.d();
        PartiallyFilledArray out =
            d >= 3 ? reduce(sma_diag(static_cast<int>(p.cells()) / d, d,
                                     false, supplier),
                            p)
                   : sma_shiftable_rect(m, n, s, k, supplier);
        require_pass(verify_sma(out, p), "sma_s0mod4");
        return out;
    }
    if (n % 4 != 0) throw BadParamError("n must be divisible by 4");
    if (n % 8 == 0) return sma_from_tight(m, n, s, k, supplier);

    std::vector<PartiallyFilledArray> base =
        seq_signed_skolem((n - 4) / 8).blocks;
    std::vector<PartiallyFilledArray> strips;
    if (k == 3) {
        strips = base;
    } else {
        const int q = (k - 5) / 2;
        const Entry step = 4 * q + 4;
        PartiallyFilledArray filler =
            build_filler_stack(q, FillerVariant::SmaV);
        for (int i = 0; i < static_cast<int>(base.size()); ++i)
            strips.push_back(vstack(base[static_cast<std::size_t>(i)],
                                    shift(filler, 3LL * n / 2 + step * i)));
    }
    PartiallyFilledArray out = assemble_columnwise(strips, m, n, 4);
    require_pass(verify_sma(out, p), "sma_s0mod4");
    return out;
}

PartiallyFilledArray lambda_fold_from_tight(int m, int n, int s, int k,
                                            int lambda,
                                            IngredientSupplier& supplier) {
    DesignParams p = plain(m, n, s, k);
    p.validate();
    if (lambda <= 0 || lambda % 2 != 0)
        throw BadParamError("lambda must be a positive even integer");
    if (n % 2 != 0 || s % 2 != 0)
        throw BadParamError("n and s must be even");
    if (n % lambda != 0) throw BadParamError("lambda must divide n");
    if (n < 3 * lambda) throw BadParamError("need n >= 3*lambda");
    const int w = n / lambda;
    if ((static_cast<long long>(w) * k) % 4 != 0 &&
        (static_cast<long long>(w) * k) % 4 != 3)
        throw BadParamError("(n/lambda)*k must be 0 or 3 (mod 4)");

    PartiallyFilledArray tight = supplier.supply(IngredientRequest::rectangular(
        ArrayKind::HeffterInteger, plain(k, w, w, k)));

    // One k x 2 block per tight column: the column next to its negative.
    std::vector<PartiallyFilledArray> strips;
    for (int copy = 0; copy < lambda / 2; ++copy)
        for (int col = 1; col <= w; ++col) {
            PartiallyFilledArray f(k, 2);
            for (int r = 1; r <= k; ++r) {
                f.set(r, 1, tight.value(r, col));
                f.set(r, 2, -tight.value(r, col));
            }
            strips.push_back(f);
        }
    PartiallyFilledArray out = assemble_columnwise(strips, m, n, 2);
    DesignParams rel = p;
    rel.t = 1;
    rel.lambda = lambda;
    require_pass(verify_relative(out, rel, /*integer=*/true),
                 "lambda_fold_from_tight");
    return out;
}

PartiallyFilledArray sma_from_tight(int m, int n, int s, int k,
                                    IngredientSupplier& supplier) {
    DesignParams p = plain(m, n, s, k);
    p.validate();
    const long long nk = p.cells();
    if (n % 2 != 0 || s % 2 != 0)
        throw BadParamError("n and s must be even");
    if (nk % 8 != 0 && nk % 8 != 6)
        throw BadParamError("nk must be 0 or 6 (mod 8)");
    PartiallyFilledArray out =
        lambda_fold_from_tight(m, n, s, k, 2, supplier);
    require_pass(verify_sma(out, p), "sma_from_tight");
    return out;
}

PartiallyFilledArray mr_from_shiftable_sma(const PartiallyFilledArray& a,
                                           const DesignParams& p) {
    VerificationReport rep = verify_sma(a, p);
    if (!rep.passed)
        throw BadParamError("input is not an SMA: " + rep.summary());
    if (!is_shiftable(a))
        throw NotShiftableError("input array is not shiftable");
    const long long nk = p.cells();
    if (nk % 2 != 0) throw BadParamError("nk must be even");
    PartiallyFilledArray out(p.m, p.n);
    for (int i = 1; i <= p.m; ++i)
        for (int j = 1; j <= p.n; ++j)
            if (a.filled(i, j)) {
                Entry e = a.value(i, j);
                out.set(i, j, e > 0 ? nk / 2 + e - 1 : nk / 2 + e);
            }
    require_pass(verify_mr(out, p), "mr_from_shiftable_sma");
    return out;
}

const char* to_string(ConstructKind k) {
    switch (k) {
        case ConstructKind::Heffter: return "heffter";
        case ConstructKind::Sma: return "sma";
        case ConstructKind::Mr: return "mr";
    }
    return "?";
}

std::optional<ConstructKind> construct_kind_from_string(
    const std::string& name) {
    if (name == "heffter") return ConstructKind::Heffter;
    if (name == "sma") return ConstructKind::Sma;
    if (name == "mr") return ConstructKind::Mr;
    return std::nullopt;
}

CoverageDecision coverage(ConstructKind kind, int m, int n, int s, int k) {
    DesignParams p = plain(m, n, s, k);
    p.validate();
    const long long nk = p.cells();
    const int d = p.d();
    CoverageDecision out;
    switch (kind) {
        case ConstructKind::Heffter: {
            if (nk % 4 == 1 || nk % 4 == 2) {
                out.reason =
                    "no integer array exists unless nk is 0 or 3 (mod 4)";
                return out;
            }
            if (s % 4 == 0 && k % 2 == 1 && k != 5) {
                out.covered = true;
                out.route = "blocks-4wide";
                return out;
            }
            if (k % 4 == 0 && s % 2 == 1 && s != 5) {
                out.covered = true;
                out.route = "blocks-4wide+transpose";
                return out;
            }
            if (d >= 3 && d % 4 == 0) {
                out.covered = true;
                out.route = "reduce-diagonal-shiftable";
                return out;
            }
            if (d >= 3 && d % 4 == 1 && nk % 4 == 3) {
                out.covered = true;
                out.route = "reduce-diagonal";
                return out;
            }
            if (d >= 3 && d % 4 == 3) {
                out.covered = true;
                out.route = "reduce-diagonal";
                return out;
            }
            if (d % 4 == 1)
                out.reason = d == 1 ? "open case: gcd(s,k) = 1"
                                    : "open case: gcd(s,k) = 1 (mod 4) with "
                                      "nk = 0 (mod 4)";
            else
                out.reason =
                    "even gcd with no direct route here: this family comes "
                    "from an external rectangular construction";
            return out;
        }
        case ConstructKind::Sma: {
            if (s % 4 == 0 && k % 2 == 1) {
                out.covered = true;
                out.route = (n % 8 == 0) ? "lambda-pairing"
                                         : "signed-blocks-4wide";
                return out;
            }
            if (k % 4 == 0 && s % 2 == 1) {
                out.covered = true;
                out.route = "signed-blocks-4wide+transpose";
                return out;
            }
            if (d >= 3) {
                out.covered = true;
                out.route = "reduce-diagonal-sma";
                return out;
            }
            if (d == 2) {
                out.covered = true;
                out.route = "shiftable-stack";
                return out;
            }
            out.reason =
                "open case: gcd(s,k) = 1 with neither s nor k divisible by 4";
            return out;
        }
        case ConstructKind::Mr: {
            if (d % 2 == 0) {
                out.covered = true;
                out.route = "sma-to-mr";
                return out;
            }
            if (d >= 3 && nk % 2 == 1) {
                out.covered = true;
                out.route = "reduce-diagonal-mr";
                return out;
            }
            out.reason = d == 1 ? "open case: gcd(s,k) = 1"
                                : "open case: odd gcd with nk even";
            return out;
        }
    }
    throw BadParamError("unknown construct kind");
}

ConstructResult construct(ConstructKind kind, int m, int n, int s, int k,
                          IngredientSupplier& supplier) {
    DesignParams p = plain(m, n, s, k);
    p.validate();
    CoverageDecision cov = coverage(kind, m, n, s, k);
    if (!cov.covered) throw NotCoveredError(cov.reason);
    const int d = p.d();
    const int side = static_cast<int>(p.cells()) / std::max(d, 1);

    // Routes in priority order: direct block constructions first, then
    // reductions from own squares, then reductions from supplied squares.
    // A route that cannot find its ingredient passes the turn.
    using Route = std::pair<std::string,
                            std::function<PartiallyFilledArray()>>;
    std::vector<Route> routes;
    switch (kind) {
        case ConstructKind::Heffter:
            if (s % 4 == 0 && k % 2 == 1 && k != 5)
                routes.emplace_back("blocks-4wide", [&] {
                    return heffter_s0mod4(m, n, s, k);
                });
            if (k % 4 == 0 && s % 2 == 1 && s != 5)
                routes.emplace_back("blocks-4wide+transpose", [&] {
                    return transpose(heffter_s0mod4(n, m, k, s));
                });
            if (d >= 3 &&
                (d % 4 == 0 || (d % 4 == 1 && p.cells() % 4 == 3) ||
                 d % 4 == 3))
                routes.emplace_back(
                    d % 4 == 0 ? "reduce-diagonal-shiftable"
                               : "reduce-diagonal",
                    [&, d, side] {
                        PartiallyFilledArray sq =
                            supplier.supply(IngredientRequest::diagonal(
                                ArrayKind::HeffterInteger, side, d,
                                /*shiftable=*/d % 4 == 0));
                        PartiallyFilledArray out = reduce(sq, p);
                        if (d % 4 == 0 && !is_shiftable(out))
                            throw Error(
                                "construct: reduction lost shiftability");
                        return out;
                    });
            break;
        case ConstructKind::Sma:
            if (s % 4 == 0 && k % 2 == 1)
                routes.emplace_back(n % 8 == 0 ? "lambda-pairing"
                                               : "signed-blocks-4wide",
                                    [&] {
                                        return sma_s0mod4(m, n, s, k,
                                                          supplier);
                                    });
            if (k % 4 == 0 && s % 2 == 1)
                routes.emplace_back("signed-blocks-4wide+transpose", [&] {
                    return transpose(sma_s0mod4(n, m, k, s, supplier));
                });
            if (d >= 3)
                routes.emplace_back("reduce-diagonal-sma", [&, d, side] {
                    return reduce(sma_diag(side, d, false, supplier), p);
                });
            if (d == 2)
                routes.emplace_back("shiftable-stack", [&] {
                    return sma_shiftable_rect(m, n, s, k, supplier);
                });
            break;
        case ConstructKind::Mr:
            if (d % 2 == 0)
                routes.emplace_back("sma-to-mr", [&] {
                    return mr_from_shiftable_sma(
                        sma_shiftable_rect(m, n, s, k, supplier), p);
                });
            if (d >= 3 && (p.cells() % 2 == 1 || d % 2 == 0))
                routes.emplace_back("reduce-diagonal-mr", [&, d, side] {
                    return reduce(supplier.supply(IngredientRequest::diagonal(
                                      ArrayKind::Mr, side, d)),
                                  p);
                });
            break;
    }
    if (routes.empty() || routes.front().first != cov.route)
        throw Error("internal: route table disagrees with coverage");

    std::optional<IngredientUnavailableError> first_miss;
    for (const auto& [name, build] : routes) {
        try {
            PartiallyFilledArray out = build();
            switch (kind) {
                case ConstructKind::Heffter:
                    require_pass(verify_integer_heffter(out, p), "construct");
                    break;
                case ConstructKind::Sma:
                    require_pass(verify_sma(out, p), "construct");
                    break;
                case ConstructKind::Mr:
                    require_pass(verify_mr(out, p), "construct");
                    break;
            }
            return {out, name};
        } catch (const IngredientUnavailableError& e) {
            if (!first_miss) first_miss = e;
        }
    }
    throw *first_miss;
}

}  // namespace heffter
