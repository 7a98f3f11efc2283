#include "heffter/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace heffter {

namespace {

PartiallyFilledArray grid3x4(std::initializer_list<Entry> vals) {
    PartiallyFilledArray b(3, 4);
    auto it = vals.begin();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) b.set(i, j, *it++);
    return b;
}

}  // namespace

void BlockSequence::check_contract() const {
    std::vector<Entry> all;
    for (const auto& b : blocks) {
        if (b.filled_count() != b.rows() * b.cols())
            throw BadParamError("block is not fully filled");
        for (int i = 1; i <= b.rows(); ++i)
            if (b.row_sum(i) != 0)
                throw BadParamError("block row " + std::to_string(i) +
                                    " does not sum to zero");
        for (int j = 1; j <= b.cols(); ++j)
            if (b.col_sum(j) != 0)
                throw BadParamError("block column " + std::to_string(j) +
                                    " does not sum to zero");
        auto e = entry_list(b);
        all.insert(all.end(), e.begin(), e.end());
    }
    std::vector<Entry> want;
    if (signed_entries) {
        for (Entry x = -support_hi; x <= support_hi; ++x)
            if (x != 0) want.push_back(x);
    } else {
        for (auto& e : all) e = std::llabs(e);
        for (Entry x = 1; x <= support_hi; ++x) want.push_back(x);
    }
    std::sort(all.begin(), all.end());
    if (all != want) throw BadParamError("block sequence entry contract fails");
}

BlockSequence seq_blocks_a1(int mu) {
    if (mu < 0) throw BadParamError("mu must be nonnegative");
    const Entry u = mu;
    BlockSequence seq;
    seq.support_hi = 24 * u + 24;
    seq.blocks.push_back(grid3x4({
        4 * u + 4, -8 * u - 7, 4 * u + 5, -2,
        8 * u + 9, 18 * u + 18, -14 * u - 15, -12 * u - 12,
        -12 * u - 13, -10 * u - 11, 10 * u + 10, 12 * u + 14,
    }));
    seq.blocks.push_back(grid3x4({
        4 * u + 6, 4 * u + 3, -1, -8 * u - 8,
        18 * u + 17, 18 * u + 19, -20 * u - 20, -16 * u - 16,
        -22 * u - 23, -22 * u - 22, 20 * u + 21, 24 * u + 24,
    }));
    for (Entry a = 0; a < u; ++a)
        seq.blocks.push_back(grid3x4({
            8 * u + 10 + 2 * a, 14 * u + 14 - 2 * a, -8 * u - 11 - 2 * a,
            -14 * u - 13 + 2 * a,
            8 * u + 5 - 4 * a, -4 * u - 2 + 4 * a, -8 * u - 3 + 4 * a,
            4 * u - 4 * a,
            -16 * u - 15 + 2 * a, -10 * u - 12 - 2 * a, 16 * u + 14 - 2 * a,
            10 * u + 13 + 2 * a,
        }));
    for (Entry a = 0; a < u; ++a)
        seq.blocks.push_back(grid3x4({
            4 * u + 1 - 4 * a, -8 * u - 6 + 4 * a, -4 * u + 1 + 4 * a,
            8 * u + 4 - 4 * a,
            18 * u + 20 + 2 * a, -16 * u - 17 - 2 * a, -18 * u - 21 - 2 * a,
            16 * u + 18 + 2 * a,
            -22 * u - 21 + 2 * a, 24 * u + 23 - 2 * a, 22 * u + 20 - 2 * a,
            -24 * u - 22 + 2 * a,
        }));
    seq.check_contract();
    return seq;
}

BlockSequence seq_blocks_a2(int nu) {
    if (nu < 0) throw BadParamError("nu must be nonnegative");
    const Entry v = nu;
    BlockSequence seq;
    seq.support_hi = 24 * v + 36;
    seq.blocks.push_back(grid3x4({
        4 * v + 1, -4 * v - 5, -4 * v - 8, 4 * v + 12,
        18 * v + 30, -18 * v - 28, -18 * v - 26, 18 * v + 24,
        -22 * v - 31, 22 * v + 33, 22 * v + 34, -22 * v - 36,
    }));
    seq.blocks.push_back(grid3x4({
        4 * v + 6, -18 * v - 25, 4 * v + 2, 10 * v + 17,
        8 * v + 13, -4 * v - 10, 10 * v + 18, -14 * v - 21,
        -12 * v - 19, 22 * v + 35, -14 * v - 20, 4 * v + 4,
    }));
    seq.blocks.push_back(grid3x4({
        4 * v + 7, 10 * v + 14, 8 * v + 11, -22 * v - 32,
        10 * v + 15, 4 * v + 9, -18 * v - 27, 4 * v + 3,
        -14 * v - 22, -14 * v - 23, 10 * v + 16, 18 * v + 29,
    }));
    for (Entry a = 0; a < v; ++a)
        seq.blocks.push_back(grid3x4({
            4 * v - 3 - 4 * a, -4 * v + 2 + 4 * a, -4 * v + 1 + 4 * a,
            4 * v - 4 * a,
            18 * v + 32 + 2 * a, -10 * v - 20 - 2 * a, -18 * v - 31 - 2 * a,
            10 * v + 19 + 2 * a,
            -22 * v - 29 + 2 * a, 14 * v + 18 - 2 * a, 22 * v + 30 - 2 * a,
            -14 * v - 19 + 2 * a,
        }));
    for (Entry a = 0; a < v; ++a)
        seq.blocks.push_back(grid3x4({
            8 * v + 7 - 4 * a, -8 * v - 9 + 4 * a, -8 * v - 10 + 4 * a,
            8 * v + 12 - 4 * a,
            8 * v + 15 + 2 * a, -8 * v - 14 - 2 * a, -16 * v - 25 - 2 * a,
            16 * v + 24 + 2 * a,
            -16 * v - 22 + 2 * a, 16 * v + 23 - 2 * a, 24 * v + 35 - 2 * a,
            -24 * v - 36 + 2 * a,
        }));
    seq.check_contract();
    return seq;
}

BlockSequence seq_signed_skolem(int mu) {
    if (mu < 0) throw BadParamError("mu must be nonnegative");
    const Entry u = mu;
    BlockSequence seq;
    seq.support_hi = 12 * u + 6;
    seq.signed_entries = true;
    seq.blocks.push_back(grid3x4({
        1, 2, -2, -1,
        4 * u + 3, -(4 * u + 6), -(12 * u + 3), 12 * u + 6,
        -(4 * u + 4), 4 * u + 4, 12 * u + 5, -(12 * u + 5),
    }));
    for (Entry a = 0; a < u; ++a)
        seq.blocks.push_back(grid3x4({
            4 * a + 3, 4 * a + 5, -(4 * a + 5), -(4 * a + 3),
            4 * u + 4 * a + 5, -(4 * u + 8 * a + 12), -(12 * u - 8 * a - 3),
            12 * u - 4 * a + 4,
            -(4 * u + 8 * a + 8), 4 * u + 4 * a + 7, 12 * u - 4 * a + 2,
            -(12 * u - 8 * a + 1),
        }));
    for (Entry a = 0; a < u; ++a)
        seq.blocks.push_back(grid3x4({
            4 * a + 4, 4 * a + 6, -(4 * a + 6), -(4 * a + 4),
            4 * u + 4 * a + 6, -(4 * u + 8 * a + 14), -(12 * u - 8 * a - 5),
            12 * u - 4 * a + 3,
            -(4 * u + 8 * a + 10), 4 * u + 4 * a + 8, 12 * u - 4 * a + 1,
            -(12 * u - 8 * a - 1),
        }));
    seq.check_contract();
    return seq;
}

PartiallyFilledArray base_block_3x4() {
    return grid3x4({
        1, 2, 3, -6,
        8, -12, -7, 11,
        -9, 10, 4, -5,
    });
}

PartiallyFilledArray q4_block() {
    return PartiallyFilledArray::from_rows({
        {1, -2, -3, 4},
        {-5, 6, 7, -8},
        {-9, 10, 11, -12},
        {13, -14, -15, 16},
    });
}

PartiallyFilledArray q6_block() {
    return PartiallyFilledArray::from_rows({
        {1, -14, -3, 16},
        {-2, 13, 4, -15},
        {5, -18, -7, 20},
        {-6, 17, 8, -19},
        {-9, 23, 10, -24},
        {11, -21, -12, 22},
    });
}

PartiallyFilledArray q2_block() {
    return PartiallyFilledArray::from_rows({
        {1, -2, -3, 4},
        {-1, 2, 3, -4},
    });
}

PartiallyFilledArray build_filler_stack(int h, FillerVariant variant) {
    if (h < 0) throw BadParamError("h must be nonnegative");
    switch (variant) {
        case FillerVariant::HeffterV: {
            PartiallyFilledArray out = q4_block();
            for (int j = 1; j <= h; ++j)
                out = vstack(out, shift(q4_block(), 16 * j));
            return out;
        }
        case FillerVariant::HeffterW: {
            PartiallyFilledArray out = q6_block();
            for (int j = 0; j < h; ++j)
                out = vstack(out, shift(q4_block(), 24 + 16 * j));
            return out;
        }
        case FillerVariant::SmaV: {
            PartiallyFilledArray out = q2_block();
            for (int j = 1; j <= h; ++j)
                out = vstack(out, shift(q2_block(), 4 * j));
            return out;
        }
    }
    throw BadParamError("unknown filler variant");
}

PartiallyFilledArray assemble_columnwise(
    const std::vector<PartiallyFilledArray>& blocks, int m, int n, int width) {
    if (width <= 0 || n % width != 0 ||
        static_cast<int>(blocks.size()) != n / width)
        throw ParamMismatchError("need n/width blocks");
    PartiallyFilledArray out(m, n);
    int k = 0;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
        const auto& b = blocks[static_cast<std::size_t>(i)];
        if (b.cols() != width)
            throw ParamMismatchError("block width mismatch");
        if (i == 0)
            k = b.rows();
        else if (b.rows() != k)
            throw ParamMismatchError("blocks must share one height");
        out = place_block(out, b, k * i, width * i, true);
    }
    // Rows must close up evenly: every column k filled, every row s filled.
    const long long total = static_cast<long long>(k) * (n / width) * width;
    if (total % m != 0)
        throw ParamMismatchError("row fill does not close up");
    const int s = static_cast<int>(total / m);
    for (int i = 1; i <= m; ++i)
        if (out.row_fill(i) != s)
            throw ParamMismatchError("uneven row fill after assembly");
    for (int j = 1; j <= n; ++j)
        if (out.col_fill(j) != k)
            throw ParamMismatchError("uneven column fill after assembly");
    return out;
}

}  // namespace heffter
