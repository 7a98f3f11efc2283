#include "heffter/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace heffter {

const char* to_string(SearchOutcome::Verdict v) {
    switch (v) {
        case SearchOutcome::Verdict::Found: return "found";
        case SearchOutcome::Verdict::ExhaustedUnsat: return "exhausted-unsat";
        case SearchOutcome::Verdict::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

SearchConstraints SearchConstraints::diagonal_square(ArrayKind kind, int a,
                                                     int b, bool shiftable) {
    SearchConstraints c;
    c.kind = kind;
    c.params = DesignParams{a, a, b, b, std::nullopt, std::nullopt};
    c.diagonal = true;
    c.require_shiftable = shiftable;
    return c;
}

namespace {

using Clock = std::chrono::steady_clock;

// One value class of the search pool. Sign-free classes stand for the pair
// {+base, -base}; fixed classes carry a single exact value in `base`.
struct ValueClass {
    Entry base = 0;
    bool sign_free = false;
    int remaining = 0;
    Entry max_entry() const { return sign_free ? base : base; }
    Entry min_entry() const { return sign_free ? -base : base; }
};

struct Dfs {
    const SearchConstraints& cons;
    int m, n, s, k;
    bool modular = false;
    long long v = 0;
    Entry row_target = 0, col_target = 0;
    bool skeleton_free = false;

    std::vector<std::pair<int, int>> cells;
    std::vector<bool> preassigned;

    std::vector<ValueClass> classes;
    std::vector<int> iter_order;     // branching order at free cells
    std::vector<int> desc_by_max;    // for max-gain walks
    std::vector<int> asc_by_min;     // for min-gain walks
    // sign-split walk lists for balance-aware bounds: (entry, class)
    std::vector<std::pair<Entry, int>> pos_desc, pos_asc, neg_desc, neg_asc;
    std::map<Entry, int> fixed_by_value;
    std::map<Entry, int> free_by_base;

    std::vector<Entry> row_sum, col_sum;
    std::vector<int> row_filled, col_filled;
    std::vector<int> row_positions_left, col_positions_left;
    std::vector<int> row_pos, row_neg, col_pos, col_neg;

    PartiallyFilledArray grid;
    SearchStats stats;
    bool aborted = false;
    Clock::time_point t0;

    explicit Dfs(const SearchConstraints& c)
        : cons(c),
          m(c.params.m),
          n(c.params.n),
          s(c.params.s),
          k(c.params.k),
          grid(c.params.m, c.params.n) {}

    bool over_budget() {
        if (aborted) return true;
        if (stats.nodes >= cons.node_budget) {
            aborted = true;
            return true;
        }
        if ((stats.nodes & 0xfff) == 0) {
            double el =
                std::chrono::duration<double>(Clock::now() - t0).count();
            if (el > cons.time_budget_secs) aborted = true;
        }
        return aborted;
    }

    Entry max_gain(int q) const {
        Entry acc = 0;
        for (int idx : desc_by_max) {
            if (q == 0) break;
            const auto& c = classes[static_cast<std::size_t>(idx)];
            int take = std::min(c.remaining, q);
            acc += take * c.max_entry();
            q -= take;
        }
        return acc;
    }

    Entry min_gain(int q) const {
        Entry acc = 0;
        for (int idx : asc_by_min) {
            if (q == 0) break;
            const auto& c = classes[static_cast<std::size_t>(idx)];
            int take = std::min(c.remaining, q);
            acc += take * c.min_entry();
            q -= take;
        }
        return acc;
    }

    // Sum of the first q usable entries of a sign-split walk list; nullopt
    // when fewer than q remain with that sign.
    std::optional<Entry> take_sum(const std::vector<std::pair<Entry, int>>& w,
                                  int q) const {
        Entry acc = 0;
        for (const auto& [entry, idx] : w) {
            if (q == 0) break;
            int take =
                std::min(classes[static_cast<std::size_t>(idx)].remaining, q);
            acc += take * entry;
            q -= take;
        }
        if (q > 0) return std::nullopt;
        return acc;
    }

    bool window_contains(Entry lo, Entry hi, Entry target) const {
        if (!modular) return lo <= target && target <= hi;
        // Some value congruent to target mod v inside [lo, hi]?
        auto floor_div = [](Entry a, Entry b) {
            Entry r = a / b;
            if ((a % b != 0) && ((a < 0) != (b < 0))) --r;
            return r;
        };
        Entry t = ((target % v) + v) % v;
        return floor_div(hi - t, v) >= -floor_div(t - lo, v);
    }

    bool sum_reachable(Entry sigma, int q, Entry target) const {
        return window_contains(sigma + min_gain(q), sigma + max_gain(q),
                               target);
    }

    // Like sum_reachable, but the remaining cells must take exactly p
    // positive and m negative entries.
    bool sum_reachable_balanced(Entry sigma, int p, int mneg,
                                Entry target) const {
        if (p < 0 || mneg < 0) return false;
        auto hp = take_sum(pos_desc, p);
        auto hn = take_sum(neg_desc, mneg);
        auto lp = take_sum(pos_asc, p);
        auto ln = take_sum(neg_asc, mneg);
        if (!hp || !hn || !lp || !ln) return false;
        return window_contains(sigma + *lp + *ln, sigma + *hp + *hn, target);
    }

    struct Option {
        bool fill = false;
        int cls = -1;
        Entry entry = 0;
    };

    int lookup(Entry e) const {
        auto itf = fixed_by_value.find(e);
        if (itf != fixed_by_value.end()) return itf->second;
        if (e != 0) {
            auto itb = free_by_base.find(std::llabs(e));
            if (itb != free_by_base.end() &&
                classes[static_cast<std::size_t>(itb->second)].sign_free)
                return itb->second;
        }
        return -1;
    }

    // Entries congruent to `needed` that the pool could hold.
    void closure_candidates(Entry needed, std::vector<Entry>& out) const {
        out.clear();
        if (!modular) {
            out.push_back(needed);
            return;
        }
        Entry r = ((needed % v) + v) % v;
        if (r == 0) return;  // pool entries are never 0 mod v
        if (2 * r <= v) out.push_back(r);
        Entry x = v - r;
        if (x != r && 2 * x <= v) out.push_back(-x);
    }

    bool apply_fill(int i, int j, int cls, Entry e) {
        auto& c = classes[static_cast<std::size_t>(cls)];
        --c.remaining;
        grid.set(i, j, e);
        row_sum[static_cast<std::size_t>(i)] += e;
        col_sum[static_cast<std::size_t>(j)] += e;
        ++row_filled[static_cast<std::size_t>(i)];
        ++col_filled[static_cast<std::size_t>(j)];
        --row_positions_left[static_cast<std::size_t>(i)];
        --col_positions_left[static_cast<std::size_t>(j)];
        if (e > 0) {
            ++row_pos[static_cast<std::size_t>(i)];
            ++col_pos[static_cast<std::size_t>(j)];
        } else if (e < 0) {
            ++row_neg[static_cast<std::size_t>(i)];
            ++col_neg[static_cast<std::size_t>(j)];
        }
        return feasible_after_fill(i, j, e);
    }

    void undo_fill(int i, int j, int cls, Entry e) {
        auto& c = classes[static_cast<std::size_t>(cls)];
        ++c.remaining;
        grid.clear(i, j);
        row_sum[static_cast<std::size_t>(i)] -= e;
        col_sum[static_cast<std::size_t>(j)] -= e;
        --row_filled[static_cast<std::size_t>(i)];
        --col_filled[static_cast<std::size_t>(j)];
        ++row_positions_left[static_cast<std::size_t>(i)];
        ++col_positions_left[static_cast<std::size_t>(j)];
        if (e > 0) {
            --row_pos[static_cast<std::size_t>(i)];
            --col_pos[static_cast<std::size_t>(j)];
        } else if (e < 0) {
            --row_neg[static_cast<std::size_t>(i)];
            --col_neg[static_cast<std::size_t>(j)];
        }
    }

    bool feasible_after_fill(int i, int j, Entry e) {
        if (cons.require_shiftable) {
            if (e == 0) return false;
            if (row_pos[static_cast<std::size_t>(i)] > s / 2 ||
                row_neg[static_cast<std::size_t>(i)] > s / 2 ||
                col_pos[static_cast<std::size_t>(j)] > k / 2 ||
                col_neg[static_cast<std::size_t>(j)] > k / 2)
                return false;
        }
        int qr = s - row_filled[static_cast<std::size_t>(i)];
        Entry rsum = row_sum[static_cast<std::size_t>(i)];
        if (qr == 0) {
            if (modular ? ((rsum - row_target) % v + v) % v != 0
                        : rsum != row_target)
                return false;
        } else if (cons.require_shiftable) {
            if (!sum_reachable_balanced(
                    rsum, s / 2 - row_pos[static_cast<std::size_t>(i)],
                    s / 2 - row_neg[static_cast<std::size_t>(i)], row_target))
                return false;
        } else if (!sum_reachable(rsum, qr, row_target)) {
            return false;
        }
        int qc = k - col_filled[static_cast<std::size_t>(j)];
        Entry csum = col_sum[static_cast<std::size_t>(j)];
        if (qc == 0) {
            if (modular ? ((csum - col_target) % v + v) % v != 0
                        : csum != col_target)
                return false;
        } else if (cons.require_shiftable) {
            if (!sum_reachable_balanced(
                    csum, k / 2 - col_pos[static_cast<std::size_t>(j)],
                    k / 2 - col_neg[static_cast<std::size_t>(j)], col_target))
                return false;
        } else if (!sum_reachable(csum, qc, col_target)) {
            return false;
        }
        return true;
    }

    bool can_skip(int i, int j) const {
        if (!skeleton_free) return false;
        if (row_filled[static_cast<std::size_t>(i)] +
                row_positions_left[static_cast<std::size_t>(i)] - 1 <
            s)
            return false;
        if (col_filled[static_cast<std::size_t>(j)] +
                col_positions_left[static_cast<std::size_t>(j)] - 1 <
            k)
            return false;
        return true;
    }

    void gather_options(int i, int j, std::vector<Option>& out) {
        out.clear();
        const bool can_fill = row_filled[static_cast<std::size_t>(i)] < s &&
                              col_filled[static_cast<std::size_t>(j)] < k;
        if (can_fill) {
            const bool row_closing =
                s - row_filled[static_cast<std::size_t>(i)] == 1;
            const bool col_closing =
                k - col_filled[static_cast<std::size_t>(j)] == 1;
            if (row_closing || col_closing) {
                std::vector<Entry> cand;
                Entry needed =
                    row_closing
                        ? row_target - row_sum[static_cast<std::size_t>(i)]
                        : col_target - col_sum[static_cast<std::size_t>(j)];
                closure_candidates(needed, cand);
                for (Entry e : cand) {
                    int cls = lookup(e);
                    if (cls < 0 ||
                        classes[static_cast<std::size_t>(cls)].remaining == 0)
                        continue;
                    out.push_back({true, cls, e});
                }
            } else {
                bool no_pos = false, no_neg = false;
                if (cons.require_shiftable) {
                    no_pos = row_pos[static_cast<std::size_t>(i)] == s / 2 ||
                             col_pos[static_cast<std::size_t>(j)] == k / 2;
                    no_neg = row_neg[static_cast<std::size_t>(i)] == s / 2 ||
                             col_neg[static_cast<std::size_t>(j)] == k / 2;
                }
                for (int idx : iter_order) {
                    const auto& c = classes[static_cast<std::size_t>(idx)];
                    if (c.remaining == 0) continue;
                    if (c.sign_free) {
                        if (!no_pos) out.push_back({true, idx, c.base});
                        if (!no_neg) out.push_back({true, idx, -c.base});
                    } else {
                        if (c.base > 0 ? !no_pos
                                       : (c.base < 0 ? !no_neg
                                                     : !cons.require_shiftable))
                            out.push_back({true, idx, c.base});
                    }
                }
            }
        }
        if (can_skip(i, j)) out.push_back({false, -1, 0});
    }

    // one scratch option buffer per depth, reused across the search
    std::vector<std::vector<Option>> option_scratch;

    bool dfs(std::size_t pos, std::optional<PartiallyFilledArray>& found) {
        while (pos < cells.size() && preassigned[pos]) ++pos;
        if (pos == cells.size()) {
            found = grid;
            return true;
        }
        auto [i, j] = cells[pos];
        std::vector<Option>& options = option_scratch[pos];
        gather_options(i, j, options);
        for (const Option& opt : options) {
            if (over_budget()) return false;
            ++stats.nodes;
            stats.max_depth =
                std::max(stats.max_depth, static_cast<int>(pos) + 1);
            if (opt.fill) {
                bool ok = apply_fill(i, j, opt.cls, opt.entry);
                if (ok && dfs(pos + 1, found)) return true;
                undo_fill(i, j, opt.cls, opt.entry);
                if (aborted) return false;
            } else {
                --row_positions_left[static_cast<std::size_t>(i)];
                --col_positions_left[static_cast<std::size_t>(j)];
                if (dfs(pos + 1, found)) return true;
                ++row_positions_left[static_cast<std::size_t>(i)];
                ++col_positions_left[static_cast<std::size_t>(j)];
                if (aborted) return false;
            }
        }
        return false;
    }
};

void build_pool(Dfs& d) {
    const SearchConstraints& c = d.cons;
    EntryDomain dom = entry_domain(c.kind, c.params);
    d.modular = dom.modular_sums;
    d.v = dom.v;
    d.row_target = dom.row_target;
    d.col_target = dom.col_target;
    for (const auto& cl : dom.classes)
        d.classes.push_back({cl.base, cl.sign_free, cl.multiplicity});
    for (int idx = 0; idx < static_cast<int>(d.classes.size()); ++idx) {
        const auto& cl = d.classes[static_cast<std::size_t>(idx)];
        if (cl.sign_free)
            d.free_by_base[cl.base] = idx;
        else
            d.fixed_by_value[cl.base] = idx;
        d.iter_order.push_back(idx);
        d.desc_by_max.push_back(idx);
        d.asc_by_min.push_back(idx);
    }
    auto abs_of = [&](int idx) {
        return std::llabs(d.classes[static_cast<std::size_t>(idx)].base);
    };
    std::sort(d.iter_order.begin(), d.iter_order.end(), [&](int a, int b) {
        // smallest absolute value first, positive before negative
        if (abs_of(a) != abs_of(b)) return abs_of(a) < abs_of(b);
        return d.classes[static_cast<std::size_t>(a)].base >
               d.classes[static_cast<std::size_t>(b)].base;
    });
    if (c.seed != 0) {
        std::mt19937_64 rng(c.seed);
        std::shuffle(d.iter_order.begin(), d.iter_order.end(), rng);
    }
    std::sort(d.desc_by_max.begin(), d.desc_by_max.end(), [&](int a, int b) {
        Entry ma = d.classes[static_cast<std::size_t>(a)].max_entry();
        Entry mb = d.classes[static_cast<std::size_t>(b)].max_entry();
        if (ma != mb) return ma > mb;
        return a < b;
    });
    std::sort(d.asc_by_min.begin(), d.asc_by_min.end(), [&](int a, int b) {
        Entry ma = d.classes[static_cast<std::size_t>(a)].min_entry();
        Entry mb = d.classes[static_cast<std::size_t>(b)].min_entry();
        if (ma != mb) return ma < mb;
        return a < b;
    });
    for (int idx = 0; idx < static_cast<int>(d.classes.size()); ++idx) {
        const auto& cl = d.classes[static_cast<std::size_t>(idx)];
        if (cl.sign_free) {
            d.pos_desc.emplace_back(cl.base, idx);
            d.neg_asc.emplace_back(-cl.base, idx);
        } else if (cl.base > 0) {
            d.pos_desc.emplace_back(cl.base, idx);
        } else if (cl.base < 0) {
            d.neg_asc.emplace_back(cl.base, idx);
        }
    }
    auto by_entry_desc = [](const std::pair<Entry, int>& a,
                            const std::pair<Entry, int>& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    };
    auto by_entry_asc = [](const std::pair<Entry, int>& a,
                           const std::pair<Entry, int>& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    };
    std::sort(d.pos_desc.begin(), d.pos_desc.end(), by_entry_desc);
    d.pos_asc = d.pos_desc;
    std::sort(d.pos_asc.begin(), d.pos_asc.end(), by_entry_asc);
    std::sort(d.neg_asc.begin(), d.neg_asc.end(), by_entry_asc);
    d.neg_desc = d.neg_asc;
    std::sort(d.neg_desc.begin(), d.neg_desc.end(), by_entry_desc);
}

void build_cells(Dfs& d) {
    const SearchConstraints& c = d.cons;
    if (c.diagonal) {
        const int a = d.n, b = d.k;
        if (c.diagonal_major) {
            for (int r = 0; r < b; ++r)
                for (int i = 1; i <= a; ++i)
                    d.cells.emplace_back(i, cyclic_index(i + r, a));
        } else {
            for (int i = 1; i <= a; ++i)
                for (int r = 0; r < b; ++r)
                    d.cells.emplace_back(i, cyclic_index(i + r, a));
        }
        d.skeleton_free = false;
    } else {
        for (int i = 1; i <= d.m; ++i)
            for (int j = 1; j <= d.n; ++j) d.cells.emplace_back(i, j);
        d.skeleton_free = !(d.s == d.n && d.k == d.m);
    }
    d.preassigned.assign(d.cells.size(), false);
    d.option_scratch.assign(d.cells.size() + 1, {});
    d.row_sum.assign(static_cast<std::size_t>(d.m) + 1, 0);
    d.col_sum.assign(static_cast<std::size_t>(d.n) + 1, 0);
    d.row_filled.assign(static_cast<std::size_t>(d.m) + 1, 0);
    d.col_filled.assign(static_cast<std::size_t>(d.n) + 1, 0);
    d.row_positions_left.assign(static_cast<std::size_t>(d.m) + 1, 0);
    d.col_positions_left.assign(static_cast<std::size_t>(d.n) + 1, 0);
    d.row_pos.assign(static_cast<std::size_t>(d.m) + 1, 0);
    d.row_neg.assign(static_cast<std::size_t>(d.m) + 1, 0);
    d.col_pos.assign(static_cast<std::size_t>(d.n) + 1, 0);
    d.col_neg.assign(static_cast<std::size_t>(d.n) + 1, 0);
    for (auto [i, j] : d.cells) {
        ++d.row_positions_left[static_cast<std::size_t>(i)];
        ++d.col_positions_left[static_cast<std::size_t>(j)];
    }
}

// Canonical positions for the largest value under the shape's symmetry
// group: any diagonal solution can be translated along the diagonals so the
// largest value sits in row 1; any other shape admits row/column
// permutations moving it to cell (1,1). Negating all entries fixes its sign.
std::vector<std::size_t> canonical_positions(const Dfs& d) {
    std::vector<std::size_t> out;
    if (d.cons.diagonal) {
        for (std::size_t idx = 0; idx < d.cells.size(); ++idx)
            if (d.cells[idx].first == 1) out.push_back(idx);
    } else {
        out.push_back(0);  // row-major cell (1,1)
    }
    return out;
}

}  // namespace

SearchOutcome solve(const SearchConstraints& constraints) {
    const SearchConstraints& c = constraints;
    if (c.node_budget <= 0 || c.time_budget_secs <= 0)
        throw BadConstraintsError("budgets must be positive");
    if (c.diagonal && (c.params.m != c.params.n || c.params.s != c.params.k))
        throw BadConstraintsError(
            "diagonal shapes are squares with equal fill counts");
    c.params.validate(1);
    if (c.kind == ArrayKind::RelativeModular ||
        c.kind == ArrayKind::RelativeInteger)
        c.params.validate_relative(1);

    Dfs d(c);
    build_pool(d);
    build_cells(d);
    d.t0 = Clock::now();

    SearchOutcome out;
    // A magic rectangle needs integral row/column constants; otherwise the
    // candidate space is empty.
    if (c.kind == ArrayKind::Mr &&
        ((c.params.s * (c.params.cells() - 1)) % 2 != 0 ||
         (c.params.k * (c.params.cells() - 1)) % 2 != 0)) {
        out.verdict = SearchOutcome::Verdict::ExhaustedUnsat;
        out.stats.elapsed_secs = 0.0;
        return out;
    }

    std::optional<PartiallyFilledArray> found;

    // Pick the symmetry-breaking root: the unique class of largest
    // magnitude, used positively.
    int root_cls = -1;
    Entry root_entry = 0;
    if (c.symmetry_breaking) {
        Entry best = 0;
        for (int idx = 0; idx < static_cast<int>(d.classes.size()); ++idx) {
            const auto& cl = d.classes[static_cast<std::size_t>(idx)];
            if (cl.base > best) {
                best = cl.base;
                root_cls = idx;
            }
        }
        if (root_cls >= 0 &&
            d.classes[static_cast<std::size_t>(root_cls)].remaining != 1)
            root_cls = -1;  // repeated values: orbit rule does not apply
        if (root_cls >= 0)
            root_entry = d.classes[static_cast<std::size_t>(root_cls)].base;
    }

    bool complete = true;
    if (root_cls >= 0) {
        for (std::size_t pos : canonical_positions(d)) {
            auto [i, j] = d.cells[pos];
            ++d.stats.nodes;
            d.preassigned[pos] = true;
            bool ok = d.apply_fill(i, j, root_cls, root_entry);
            if (ok && d.dfs(0, found)) {
                d.preassigned[pos] = false;
                break;
            }
            d.undo_fill(i, j, root_cls, root_entry);
            d.preassigned[pos] = false;
            if (d.aborted) {
                complete = false;
                break;
            }
        }
    } else {
        d.dfs(0, found);
        complete = !d.aborted;
    }

    out.stats = d.stats;
    out.stats.elapsed_secs =
        std::chrono::duration<double>(Clock::now() - d.t0).count();
    if (found) {
        out.verdict = SearchOutcome::Verdict::Found;
        out.array = std::move(found);
        VerificationReport rep = verify_kind(c.kind, *out.array, c.params);
        if (!rep.passed)
            throw Error("internal: search produced an invalid array: " +
                        rep.summary());
        if (c.diagonal) {
            VerificationReport dg = verify_diagonal(*out.array, c.params.k);
            if (!dg.passed)
                throw Error("internal: search left the diagonal band");
        }
        if (c.require_shiftable && !is_shiftable(*out.array))
            throw Error("internal: search produced a non-shiftable array");
    } else if (d.aborted || !complete) {
        out.verdict = SearchOutcome::Verdict::BudgetExceeded;
    } else {
        out.verdict = SearchOutcome::Verdict::ExhaustedUnsat;
    }
    return out;
}

}  // namespace heffter
