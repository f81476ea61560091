#pragma once

/*
 * Dense linear algebra over F2, bit-packed 64 entries per word.
 *
 * Conventions (fixed, so every caller sees the same canonical answers):
 *   - vectors are column vectors; a matrix maps F2^cols -> F2^rows via m*v;
 *   - rref uses first-nonzero pivoting, scanning columns left to right;
 *   - kernel_basis rows carry the identity pattern on free columns, listed
 *     by free column ascending;
 *   - solve returns the rref-first solution (free coordinates zero).
 * Trailing pad bits of every row are kept zero.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "common.hpp"

namespace sylcoh {

constexpr size_t kNpos = static_cast<size_t>(-1);

class BitVector {
 public:
  BitVector() : len_(0) {}
  explicit BitVector(size_t len) : len_(len), w_((len + 63) / 64, 0) {}

  size_t size() const { return len_; }
  bool get(size_t i) const { return w_[i >> 6] >> (i & 63) & 1u; }
  void set(size_t i, bool v) {
    u64 mask = u64(1) << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }
  void flip(size_t i) { w_[i >> 6] ^= u64(1) << (i & 63); }

  void xor_with(const BitVector& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }

  bool is_zero() const {
    for (u64 w : w_)
      if (w) return false;
    return true;
  }

  size_t popcount() const {
    size_t n = 0;
    for (u64 w : w_) n += static_cast<size_t>(std::popcount(w));
    return n;
  }

  /* Index of the first set bit, or kNpos. */
  size_t leading_bit() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + static_cast<size_t>(std::countr_zero(w_[k]));
    return kNpos;
  }

  bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }

  const std::vector<u64>& words() const { return w_; }
  std::vector<u64>& words() { return w_; }

 private:
  size_t len_;
  std::vector<u64> w_;
};

class BitMatrix {
 public:
  BitMatrix() : rows_(0), cols_(0), wpr_(0) {}
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

  static BitMatrix identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words_per_row() const { return wpr_; }

  bool get(size_t r, size_t c) const { return w_[r * wpr_ + (c >> 6)] >> (c & 63) & 1u; }
  void set(size_t r, size_t c, bool v) {
    u64 mask = u64(1) << (c & 63);
    if (v)
      w_[r * wpr_ + (c >> 6)] |= mask;
    else
      w_[r * wpr_ + (c >> 6)] &= ~mask;
  }

  const u64* row(size_t r) const { return w_.data() + r * wpr_; }
  u64* row(size_t r) { return w_.data() + r * wpr_; }

  void xor_rows(size_t dst, size_t src) {
    u64* d = row(dst);
    const u64* s = row(src);
    for (size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
  }

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    u64* pa = row(a);
    u64* pb = row(b);
    for (size_t k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
  }

  BitVector row_vector(size_t r) const {
    BitVector v(cols_);
    const u64* s = row(r);
    for (size_t k = 0; k < wpr_; ++k) v.words()[k] = s[k];
    return v;
  }

  void set_row(size_t r, const BitVector& v) {
    u64* d = row(r);
    for (size_t k = 0; k < wpr_; ++k) d[k] = v.words()[k];
  }

  BitVector col_vector(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; ++r)
      if (get(r, c)) v.set(r, true);
    return v;
  }

  void set_col(size_t c, const BitVector& v) {
    for (size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
      const u64* src = row(r);
      for (size_t k = 0; k < wpr_; ++k) {
        u64 w = src[k];
        while (w) {
          size_t c = k * 64 + static_cast<size_t>(std::countr_zero(w));
          t.set(c, r, true);
          w &= w - 1;
        }
      }
    }
    return t;
  }

  /* Column-vector action: (m*v)[r] = <row r, v>. */
  BitVector mul(const BitVector& v) const {
    require_internal(v.size() == cols_, "BitMatrix::mul: size mismatch");
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
      const u64* p = row(r);
      u64 acc = 0;
      for (size_t k = 0; k < wpr_; ++k) acc ^= p[k] & v.words()[k];
      if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
  }

  BitMatrix mul(const BitMatrix& o) const {
    require_internal(cols_ == o.rows_, "BitMatrix::mul: shape mismatch");
    BitMatrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
      const u64* p = row(r);
      u64* d = out.row(r);
      for (size_t k = 0; k < wpr_; ++k) {
        u64 w = p[k];
        while (w) {
          size_t mid = k * 64 + static_cast<size_t>(std::countr_zero(w));
          const u64* s = o.row(mid);
          for (size_t j = 0; j < o.wpr_; ++j) d[j] ^= s[j];
          w &= w - 1;
        }
      }
    }
    return out;
  }

  bool is_zero() const {
    for (u64 w : w_)
      if (w) return false;
    return true;
  }

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
  }

  /* Stack other's rows below this matrix (column counts must agree). */
  void append_rows(const BitMatrix& o) {
    require_internal(cols_ == o.cols_, "append_rows: col mismatch");
    w_.insert(w_.end(), o.w_.begin(), o.w_.end());
    rows_ += o.rows_;
  }

  const std::vector<u64>& words() const { return w_; }
  std::vector<u64>& words() { return w_; }

 private:
  size_t rows_, cols_, wpr_;
  std::vector<u64> w_;
};

struct RrefResult {
  BitMatrix m;
  std::vector<size_t> pivots;  // pivot column of each leading row, ascending
};

/*
 * Reduced row echelon form. Pivot choice is deterministic: for each column
 * left to right, the first remaining row with a nonzero entry.
 */
inline RrefResult rref(BitMatrix m) {
  std::vector<size_t> pivots;
  size_t next_row = 0;
  for (size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    size_t sel = kNpos;
    for (size_t r = next_row; r < m.rows(); ++r)
      if (m.get(r, c)) {
        sel = r;
        break;
      }
    if (sel == kNpos) continue;
    m.swap_rows(next_row, sel);
    for (size_t r = 0; r < m.rows(); ++r)
      if (r != next_row && m.get(r, c)) m.xor_rows(r, next_row);
    pivots.push_back(c);
    ++next_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

/*
 * Basis of {v : m*v = 0}, one row per free column (ascending). Row for free
 * column f has a 1 at f and zeros at every other free column, so the
 * coordinates of any kernel element with respect to this basis can be read
 * off at the free columns directly.
 */
struct KernelResult {
  BitMatrix basis;                // one row per free column, ascending
  std::vector<size_t> free_cols;  // positions where the identity pattern sits
};

inline KernelResult kernel_basis_full(const BitMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  BitMatrix out(free_cols.size(), m.cols());
  for (size_t i = 0; i < free_cols.size(); ++i) {
    size_t f = free_cols[i];
    out.set(i, f, true);
    for (size_t r = 0; r < rr.pivots.size(); ++r)
      if (rr.m.get(r, f)) out.set(i, rr.pivots[r], true);
  }
  return {std::move(out), std::move(free_cols)};
}

inline BitMatrix kernel_basis(const BitMatrix& m) { return kernel_basis_full(m).basis; }

/*
 * Solve m*x = b for each column b of rhs. Returns one solution per column
 * (free coordinates zero) or nullopt for inconsistent columns.
 */
inline std::vector<std::optional<BitVector>> solve_many(const BitMatrix& m,
                                                        const BitMatrix& rhs) {
  require_internal(rhs.rows() == m.rows(), "solve_many: rhs row mismatch");
  BitMatrix aug(m.rows(), m.cols() + rhs.cols());
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) aug.set(r, c, true);
    for (size_t c = 0; c < rhs.cols(); ++c)
      if (rhs.get(r, c)) aug.set(r, m.cols() + c, true);
  }

  /* Eliminate using pivots from the m-part only. */
  std::vector<size_t> pivots;
  size_t next_row = 0;
  for (size_t c = 0; c < m.cols() && next_row < aug.rows(); ++c) {
    size_t sel = kNpos;
    for (size_t r = next_row; r < aug.rows(); ++r)
      if (aug.get(r, c)) {
        sel = r;
        break;
      }
    if (sel == kNpos) continue;
    aug.swap_rows(next_row, sel);
    for (size_t r = 0; r < aug.rows(); ++r)
      if (r != next_row && aug.get(r, c)) aug.xor_rows(r, next_row);
    pivots.push_back(c);
    ++next_row;
  }

  std::vector<std::optional<BitVector>> out(rhs.cols());
  for (size_t j = 0; j < rhs.cols(); ++j) {
    bool consistent = true;
    for (size_t r = pivots.size(); r < aug.rows(); ++r)
      if (aug.get(r, m.cols() + j)) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    BitVector x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
      if (aug.get(r, m.cols() + j)) x.set(pivots[r], true);
    out[j] = std::move(x);
  }
  return out;
}

inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  BitMatrix rhs(m.rows(), 1);
  rhs.set_col(0, b);
  return solve_many(m, rhs)[0];
}

/*
 * Reusable solver for m*x = b with many right-hand sides: performs the
 * elimination of m once, recording the row transform, so each later solve is
 * a single matrix-vector product. Produces exactly the same solutions as
 * solve_many (free coordinates zero, same pivot order).
 */
class LinearSolver {
 public:
  explicit LinearSolver(const BitMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    BitMatrix aug(rows_, cols_ + rows_);
    for (size_t r = 0; r < rows_; ++r) {
      u64* d = aug.row(r);
      const u64* s = m.row(r);
      for (size_t k = 0; k < m.words_per_row(); ++k) d[k] = s[k];
      aug.set(r, cols_ + r, true);
    }
    size_t next_row = 0;
    for (size_t c = 0; c < cols_ && next_row < rows_; ++c) {
      size_t sel = kNpos;
      for (size_t r = next_row; r < rows_; ++r)
        if (aug.get(r, c)) {
          sel = r;
          break;
        }
      if (sel == kNpos) continue;
      aug.swap_rows(next_row, sel);
      for (size_t r = 0; r < rows_; ++r)
        if (r != next_row && aug.get(r, c)) aug.xor_rows(r, next_row);
      pivots_.push_back(c);
      ++next_row;
    }
    transform_ = BitMatrix(rows_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < rows_; ++c)
        if (aug.get(r, cols_ + c)) transform_.set(r, c, true);
  }

  size_t rank() const { return pivots_.size(); }
  const std::vector<size_t>& pivots() const { return pivots_; }

  std::optional<BitVector> solve(const BitVector& b) const {
    require_internal(b.size() == rows_, "LinearSolver::solve: size mismatch");
    BitVector y = transform_.mul(b);
    for (size_t r = pivots_.size(); r < rows_; ++r)
      if (y.get(r)) return std::nullopt;
    BitVector x(cols_);
    for (size_t r = 0; r < pivots_.size(); ++r)
      if (y.get(r)) x.set(pivots_[r], true);
    return x;
  }

  /* One solve per column of rhs. */
  std::vector<std::optional<BitVector>> solve_cols(const BitMatrix& rhs) const {
    require_internal(rhs.rows() == rows_, "LinearSolver::solve_cols: row mismatch");
    BitMatrix y = transform_.mul(rhs);
    std::vector<std::optional<BitVector>> out(rhs.cols());
    for (size_t j = 0; j < rhs.cols(); ++j) {
      bool consistent = true;
      for (size_t r = pivots_.size(); r < rows_ && consistent; ++r)
        if (y.get(r, j)) consistent = false;
      if (!consistent) continue;
      BitVector x(cols_);
      for (size_t r = 0; r < pivots_.size(); ++r)
        if (y.get(r, j)) x.set(pivots_[r], true);
      out[j] = std::move(x);
    }
    return out;
  }

 private:
  size_t rows_, cols_;
  BitMatrix transform_;
  std::vector<size_t> pivots_;
};

/*
 * Incremental echelon accumulator for spanning/rank computations. Rows are
 * kept in echelon order by leading column; reduce() maps a vector to the
 * unique coset representative vanishing on all pivot columns, so it is a
 * canonical linear projection whose kernel is the accumulated span.
 */
class RrefAccumulator {
 public:
  explicit RrefAccumulator(size_t width) : width_(width) {}

  size_t width() const { return width_; }
  size_t rank() const { return rows_.size(); }

  BitVector reduce(BitVector v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v.get(pivot)) v.xor_with(row);
    }
    return v;
  }

  /* Insert v's residue; returns true if it enlarged the span. */
  bool insert(BitVector v) {
    for (const auto& [pivot, row] : rows_) {
      if (v.get(pivot)) v.xor_with(row);
    }
    size_t lead = v.leading_bit();
    if (lead == kNpos) return false;
    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), lead,
        [](const auto& entry, size_t key) { return entry.first < key; });
    rows_.insert(it, {lead, std::move(v)});
    return true;
  }

  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

  const std::vector<std::pair<size_t, BitVector>>& rows() const { return rows_; }

 private:
  size_t width_;
  std::vector<std::pair<size_t, BitVector>> rows_;
};

}  // namespace sylcoh
