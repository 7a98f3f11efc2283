#pragma once

#include <optional>
#include <set>
#include <vector>

#include "heffter/errors.hpp"

namespace heffter {

using Entry = long long;
using Cell = std::optional<Entry>;

struct CellPosition {
    int row = 1;
    int col = 1;
    bool operator==(const CellPosition&) const = default;
    auto operator<=>(const CellPosition&) const = default;
};

// Reduces an arbitrary 1-based index cyclically into {1..period}.
int cyclic_index(int index, int period);

// An m x n grid of optional signed integers, the carrier for every array
// kind in this library. Indices are 1-based; index arithmetic is cyclic, so
// at(0, j) is row m and at(m + 1, j) is row 1. Values are treated as
// immutable once built: all operations below are pure and return new arrays.
class PartiallyFilledArray {
public:
    PartiallyFilledArray(int rows, int cols);

    // Builds from explicit rows; every row must have the same length.
    static PartiallyFilledArray from_rows(
        const std::vector<std::vector<Cell>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Cell& at(int i, int j) const;
    bool filled(int i, int j) const { return at(i, j).has_value(); }
    Entry value(int i, int j) const { return at(i, j).value(); }

    void set(int i, int j, Entry v);
    void clear(int i, int j);

    int filled_count() const;
    int row_fill(int i) const;
    int col_fill(int j) const;
    Entry row_sum(int i) const;
    Entry col_sum(int j) const;

    bool operator==(const PartiallyFilledArray&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Cell> cells_;  // row-major, rows_ * cols_
    std::size_t idx(int i, int j) const;
};

// Multiset of |e| over all filled cells, sorted ascending.
std::vector<Entry> support(const PartiallyFilledArray& a);

// E(A): entries of the filled cells in row-major order.
std::vector<Entry> entry_list(const PartiallyFilledArray& a);

// Occupancy per diagonal D_r = {(i,j) : j - i = r (mod n)} of a square array,
// plus whether the occupied set is one cyclically consecutive run.
struct DiagonalProfile {
    std::set<int> indices;          // r with at least one filled cell on D_r
    std::vector<int> fill_count;    // filled cells per diagonal, size n
    bool consecutive = false;       // indices form one cyclic run
    std::optional<int> start;       // first diagonal of the run (0 if full)
};
DiagonalProfile diagonal_profile(const PartiallyFilledArray& a);

// True iff every row and column has equally many positive and negative
// entries. Any 0 entry breaks balance: its sign is ambiguous.
bool is_shiftable(const PartiallyFilledArray& a);

// A +/- x: adds x to positive entries, -x to negative ones. Requires every
// filled entry to be nonzero.
PartiallyFilledArray shift(const PartiallyFilledArray& a, Entry x);

PartiallyFilledArray transpose(const PartiallyFilledArray& a);

// Copies block's filled cells into target at the given 0-based offset.
// With wrap, positions reduce cyclically; without, the block must fit.
// Writing over a filled target cell is an error.
PartiallyFilledArray place_block(const PartiallyFilledArray& target,
                                 const PartiallyFilledArray& block,
                                 int row_offset, int col_offset, bool wrap);

// Relabels columns j -> j - amount cyclically (diagonal D_r moves to
// D_{r-amount} for squares).
PartiallyFilledArray rotate_columns(const PartiallyFilledArray& a, int amount);

// Stacks b below a; both must have the same width.
PartiallyFilledArray vstack(const PartiallyFilledArray& a,
                            const PartiallyFilledArray& b);

}  // namespace heffter
