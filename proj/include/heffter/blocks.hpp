#pragma once

#include <string>
#include <vector>

#include "heffter/array.hpp"

namespace heffter {

// An ordered list of equal-width fully filled blocks whose rows and columns
// each sum to zero, together with the contract its concatenated entries
// satisfy: either "support covers [1, support_hi] once each" or
// "entries are exactly +-[1, support_hi]".
struct BlockSequence {
    std::vector<PartiallyFilledArray> blocks;
    Entry support_hi = 0;
    bool signed_entries = false;  // true: E = +-[1, support_hi]

    // Throws if any block breaks zero sums or the entry contract fails.
    void check_contract() const;
};

// Width-4 zero-sum 3x4 blocks whose union of supports is [1, 24*mu + 24];
// the sequence has length 2*mu + 2. Used when the column count is 0 mod 8.
BlockSequence seq_blocks_a1(int mu);

// Width-4 zero-sum 3x4 blocks with support [1, 24*nu + 36]; length
// 2*nu + 3. Used when the column count is 4 mod 8 (and at least 12).
BlockSequence seq_blocks_a2(int nu);

// Signed variant built from signed Skolem-type blocks: 3x4 blocks with
// entries exactly +-[1, 12*mu + 6]; length 2*mu + 1.
BlockSequence seq_signed_skolem(int mu);

// The 3x4 fully filled integer block with zero row/column sums and support
// [1, 12] used as the single-column-strip base case.
PartiallyFilledArray base_block_3x4();

// The two shiftable seed blocks (4x4 with support [1,16]; 6x4 with support
// [1,24]) and the 2x4 signed seed with entries +-[1,4].
PartiallyFilledArray q4_block();
PartiallyFilledArray q6_block();
PartiallyFilledArray q2_block();

enum class FillerVariant {
    HeffterV,  // (4h+4)x4 stack of q4 shifts, support [1, 16h+16]
    HeffterW,  // (4h+6)x4: q6 then q4 shifts, support [1, 16h+24]
    SmaV,      // (2h+2)x4 stack of q2 shifts, entries +-[1, 4h+4]
};

// Shiftable column filler with zero row/column sums and the support or
// entry contract declared above.
PartiallyFilledArray build_filler_stack(int h, FillerVariant variant);

// Lays n/width equal blocks of size k x width into an m x n array: block i
// occupies columns width*i+1 .. width*i+width and rows k*i+1 .. k*i+k,
// cyclically mod m. Every column ends up with k filled cells and every row
// with s = width * k * (n/width) / m; both are re-checked.
PartiallyFilledArray assemble_columnwise(
    const std::vector<PartiallyFilledArray>& blocks, int m, int n,
    int width = 4);

}  // namespace heffter
