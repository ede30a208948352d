#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "afmx/error.hpp"

namespace afmx {

/// Dense Boolean matrix, row-major, one word-packed bit row per matrix row.
/// Indices are 0-based. Zero-extent shapes (0 x c, r x 0) are legal.
class BoolMatrix {
public:
  using Row = boost::dynamic_bitset<std::uint64_t>;

  BoolMatrix() = default;
  BoolMatrix(int rows, int cols) : cols_(cols), rows_(rows, Row(cols)) {}

  /// Literal construction, mostly for tests: from_rows({{0,1},{1,0}}).
  static BoolMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const int nrows = static_cast<int>(rows.size());
    const int ncols = nrows ? static_cast<int>(rows.begin()->size()) : 0;
    BoolMatrix m(nrows, ncols);
    int r = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != ncols) throw IndexError("ragged matrix literal");
      int c = 0;
      for (int v : row) m.set(r, c++, v != 0);
      ++r;
    }
    return m;
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return rows_[r].test(c); }
  void set(int r, int c, bool v = true) { rows_[r].set(c, v); }
  const Row& row(int r) const { return rows_[r]; }

  /// Bit c is set iff column c holds at least one 1.
  Row column_support() const {
    Row acc(cols_);
    for (const auto& r : rows_) acc |= r;
    return acc;
  }

  bool column_nonzero(int c) const {
    for (const auto& r : rows_)
      if (r.test(c)) return true;
    return false;
  }

  bool is_zero() const {
    for (const auto& r : rows_)
      if (r.any()) return false;
    return true;
  }

  /// Entries at the intersection of the given rows and columns, in the given order.
  BoolMatrix pick(std::span<const int> row_idx, std::span<const int> col_idx) const {
    BoolMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
      const Row& src = rows_[row_idx[r]];
      for (std::size_t c = 0; c < col_idx.size(); ++c)
        if (src.test(col_idx[c])) out.rows_[r].set(c);
    }
    return out;
  }

  /// Contiguous block [r0, r0+nr) x [c0, c0+nc).
  BoolMatrix slice(int r0, int nr, int c0, int nc) const {
    BoolMatrix out(nr, nc);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c)
        if (rows_[r0 + r].test(c0 + c)) out.rows_[r].set(c);
    return out;
  }

  void swap_rows(int a, int b) { rows_[a].swap(rows_[b]); }

  void swap_cols(int a, int b) {
    for (auto& r : rows_) {
      const bool va = r.test(a);
      r.set(a, r.test(b));
      r.set(b, va);
    }
  }

  /// 2x2 block assembly [[tl, tr], [bl, br]].
  static BoolMatrix assemble(const BoolMatrix& tl, const BoolMatrix& tr, const BoolMatrix& bl, const BoolMatrix& br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() || tr.cols() != br.cols())
      throw IndexError("block shapes do not tile");
    BoolMatrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
    auto put = [&out](const BoolMatrix& b, int r0, int c0) {
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          if (b.get(r, c)) out.set(r0 + r, c0 + c);
    };
    put(tl, 0, 0);
    put(tr, 0, tl.cols());
    put(bl, tl.rows(), 0);
    put(br, tl.rows(), tl.cols());
    return out;
  }

  /// One line per row, cells as 0/1 separated by spaces.
  std::string to_string() const {
    std::string out;
    for (const auto& r : rows_) {
      for (int c = 0; c < cols_; ++c) {
        if (c) out += ' ';
        out += r.test(c) ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  friend std::ostream& operator<<(std::ostream& os, const BoolMatrix& m) {
    return os << m.rows() << 'x' << m.cols() << '\n' << m.to_string();
  }

private:
  int cols_ = 0;
  std::vector<Row> rows_;
};

} // namespace afmx
