#include "heffter/array.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace heffter {

int cyclic_index(int index, int period) {
    int r = (index - 1) % period;
    if (r < 0) r += period;
    return r + 1;
}

PartiallyFilledArray::PartiallyFilledArray(int rows, int cols)
    : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw BadParamError("array dimensions must be positive");
    cells_.assign(static_cast<std::size_t>(rows) * cols, std::nullopt);
}

PartiallyFilledArray PartiallyFilledArray::from_rows(
    const std::vector<std::vector<Cell>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw BadParamError("array dimensions must be positive");
    PartiallyFilledArray a(static_cast<int>(rows.size()),
                           static_cast<int>(rows.front().size()));
    for (int i = 0; i < a.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != a.cols_)
            throw DimensionMismatchError("ragged rows in array literal");
        for (int j = 0; j < a.cols_; ++j)
            a.cells_[static_cast<std::size_t>(i) * a.cols_ + j] = rows[i][j];
    }
    return a;
}

std::size_t PartiallyFilledArray::idx(int i, int j) const {
    int r = cyclic_index(i, rows_) - 1;
    int c = cyclic_index(j, cols_) - 1;
    return static_cast<std::size_t>(r) * cols_ + c;
}

const Cell& PartiallyFilledArray::at(int i, int j) const {
    return cells_[idx(i, j)];
}

void PartiallyFilledArray::set(int i, int j, Entry v) { cells_[idx(i, j)] = v; }

void PartiallyFilledArray::clear(int i, int j) {
    cells_[idx(i, j)] = std::nullopt;
}

int PartiallyFilledArray::filled_count() const {
    return static_cast<int>(
        std::count_if(cells_.begin(), cells_.end(),
                      [](const Cell& c) { return c.has_value(); }));
}

int PartiallyFilledArray::row_fill(int i) const {
    int n = 0;
    for (int j = 1; j <= cols_; ++j)
        if (filled(i, j)) ++n;
    return n;
}

int PartiallyFilledArray::col_fill(int j) const {
    int n = 0;
    for (int i = 1; i <= rows_; ++i)
        if (filled(i, j)) ++n;
    return n;
}

Entry PartiallyFilledArray::row_sum(int i) const {
    Entry s = 0;
    for (int j = 1; j <= cols_; ++j)
        if (filled(i, j)) s += value(i, j);
    return s;
}

Entry PartiallyFilledArray::col_sum(int j) const {
    Entry s = 0;
    for (int i = 1; i <= rows_; ++i)
        if (filled(i, j)) s += value(i, j);
    return s;
}

std::vector<Entry> support(const PartiallyFilledArray& a) {
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(a.filled_count()));
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.filled(i, j)) out.push_back(std::llabs(a.value(i, j)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Entry> entry_list(const PartiallyFilledArray& a) {
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(a.filled_count()));
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.filled(i, j)) out.push_back(a.value(i, j));
    return out;
}

DiagonalProfile diagonal_profile(const PartiallyFilledArray& a) {
    if (a.rows() != a.cols())
        throw NonSquareError("diagonals are defined for square arrays only");
    const int n = a.rows();
    DiagonalProfile p;
    p.fill_count.assign(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a.filled(i, j)) {
                int r = (j - i) % n;
                if (r < 0) r += n;
                ++p.fill_count[r];
                p.indices.insert(r);
            }
    const int b = static_cast<int>(p.indices.size());
    if (b == 0) {
        p.consecutive = true;  // vacuously one run
        return p;
    }
    if (b == n) {
        p.consecutive = true;
        p.start = 0;
        return p;
    }
    // A run of length b < n has exactly one start: the occupied r whose
    // predecessor is free.
    for (int r : p.indices) {
        int prev = (r + n - 1) % n;
        if (!p.indices.count(prev)) {
            bool run = true;
            for (int off = 0; off < b; ++off)
                if (!p.indices.count((r + off) % n)) {
                    run = false;
                    break;
                }
            if (run) {
                p.consecutive = true;
                p.start = r;
            }
            break;
        }
    }
    return p;
}

bool is_shiftable(const PartiallyFilledArray& a) {
    for (int i = 1; i <= a.rows(); ++i) {
        int pos = 0, neg = 0;
        for (int j = 1; j <= a.cols(); ++j)
            if (a.filled(i, j)) {
                Entry v = a.value(i, j);
                if (v > 0)
                    ++pos;
                else if (v < 0)
                    ++neg;
                else
                    return false;  // 0 has no sign to balance
            }
        if (pos != neg) return false;
    }
    for (int j = 1; j <= a.cols(); ++j) {
        int pos = 0, neg = 0;
        for (int i = 1; i <= a.rows(); ++i)
            if (a.filled(i, j)) {
                if (a.value(i, j) > 0)
                    ++pos;
                else
                    ++neg;
            }
        if (pos != neg) return false;
    }
    return true;
}

PartiallyFilledArray shift(const PartiallyFilledArray& a, Entry x) {
    if (x < 0) throw BadParamError("shift amount must be nonnegative");
    PartiallyFilledArray out(a.rows(), a.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.filled(i, j)) {
                Entry v = a.value(i, j);
                if (v == 0)
                    throw ZeroEntryError("shift requires nonzero entries");
                out.set(i, j, v > 0 ? v + x : v - x);
            }
    return out;
}

PartiallyFilledArray transpose(const PartiallyFilledArray& a) {
    PartiallyFilledArray out(a.cols(), a.rows());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.filled(i, j)) out.set(j, i, a.value(i, j));
    return out;
}

PartiallyFilledArray place_block(const PartiallyFilledArray& target,
                                 const PartiallyFilledArray& block,
                                 int row_offset, int col_offset, bool wrap) {
    if (!wrap && (row_offset < 0 || col_offset < 0 ||
                  row_offset + block.rows() > target.rows() ||
                  col_offset + block.cols() > target.cols()))
        throw OutOfBoundsError("block does not fit at offset (" +
                               std::to_string(row_offset) + ", " +
                               std::to_string(col_offset) + ")");
    PartiallyFilledArray out = target;
    for (int i = 1; i <= block.rows(); ++i)
        for (int j = 1; j <= block.cols(); ++j)
            if (block.filled(i, j)) {
                int u = i + row_offset;
                int v = j + col_offset;
                if (out.filled(u, v))
                    throw OverlapError(
                        "target cell (" + std::to_string(cyclic_index(u, target.rows())) +
                        ", " + std::to_string(cyclic_index(v, target.cols())) +
                        ") is already filled");
                out.set(u, v, block.value(i, j));
            }
    return out;
}

PartiallyFilledArray rotate_columns(const PartiallyFilledArray& a, int amount) {
    PartiallyFilledArray out(a.rows(), a.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.filled(i, j)) out.set(i, j - amount, a.value(i, j));
    return out;
}

PartiallyFilledArray vstack(const PartiallyFilledArray& a,
                            const PartiallyFilledArray& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatchError("vstack requires equal widths");
    PartiallyFilledArray out(a.rows() + b.rows(), a.cols());
    out = place_block(out, a, 0, 0, false);
    out = place_block(out, b, a.rows(), 0, false);
    return out;
}

}  // namespace heffter
