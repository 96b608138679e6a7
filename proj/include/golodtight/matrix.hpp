#pragma once

#include <cstdint>
#include <vector>

#include "golodtight/field.hpp"
#include "golodtight/gfp_kernels.hpp"

namespace golodtight {

/// Dense row-major matrix over a runtime field.  All elimination is exact and
/// deterministic: pivots are chosen as the first nonzero entry in column
/// order, never by magnitude.
template <class Ops>
class DenseMatrix {
 public:
  using Elem = typename Ops::Elem;

  DenseMatrix() : ops_{}, rows_(0), cols_(0) {}
  DenseMatrix(Ops ops, int rows, int cols)
      : ops_(ops), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), ops.zero()) {}

  static DenseMatrix identity(Ops ops, int n) {
    DenseMatrix m(ops, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ops.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ops& ops() const { return ops_; }

  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
  const Elem* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  /// dst_row += c * src_row (full width).
  void row_axpy(int dst, int src, const Elem& c) {
    if constexpr (std::is_same_v<Ops, GfpOps>) {
      gfp_kernels().axpy(row(dst), row(src), static_cast<std::size_t>(cols_), c, ops_.p);
    } else {
      if (ops_.is_zero(c)) return;
      Elem* d = row(dst);
      const Elem* s = row(src);
      for (int j = 0; j < cols_; ++j) d[j] = ops_.add(d[j], ops_.mul(c, s[j]));
    }
  }

  void row_scale(int dst, const Elem& c) {
    if constexpr (std::is_same_v<Ops, GfpOps>) {
      gfp_kernels().scale(row(dst), static_cast<std::size_t>(cols_), c, ops_.p);
    } else {
      Elem* d = row(dst);
      for (int j = 0; j < cols_; ++j) d[j] = ops_.mul(c, d[j]);
    }
  }

  DenseMatrix transposed() const {
    DenseMatrix t(ops_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!ops_.equal(a_[i], o.a_[i])) return false;
    return true;
  }

 private:
  Ops ops_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

template <class Ops>
struct RrefResult {
  DenseMatrix<Ops> r;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form (leading ones, zeros above and below pivots).
template <class Ops>
RrefResult<Ops> rref(DenseMatrix<Ops> m) {
  const Ops& ops = m.ops();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!ops.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    auto inv = ops.inv(m.at(r, c));
    m.row_scale(r, inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || ops.is_zero(m.at(i, c))) continue;
      auto f = ops.neg(m.at(i, c));
      m.row_axpy(i, r, f);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Ops>
int rank(const DenseMatrix<Ops>& m) {
  return static_cast<int>(rref(m).pivot_cols.size());
}

/// Columns spanning ker(A); deterministic: one column per free column of the
/// rref, in increasing column order, with a 1 in the free slot.
template <class Ops>
DenseMatrix<Ops> kernel_basis(const DenseMatrix<Ops>& m) {
  const Ops& ops = m.ops();
  auto rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  DenseMatrix<Ops> k(ops, m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int f = free_cols[j];
    k.at(f, static_cast<int>(j)) = ops.one();
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
      k.at(rr.pivot_cols[i], static_cast<int>(j)) = ops.neg(rr.r.at(static_cast<int>(i), f));
  }
  return k;
}

template <class Ops>
DenseMatrix<Ops> multiply(const DenseMatrix<Ops>& a, const DenseMatrix<Ops>& b) {
  const Ops& ops = a.ops();
  DenseMatrix<Ops> c(ops, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const auto& f = a.at(i, k);
      if (ops.is_zero(f)) continue;
      if constexpr (std::is_same_v<Ops, GfpOps>) {
        gfp_kernels().axpy(c.row(i), b.row(k), static_cast<std::size_t>(b.cols()), f, ops.p);
      } else {
        for (int j = 0; j < b.cols(); ++j)
          c.at(i, j) = ops.add(c.at(i, j), ops.mul(f, b.at(k, j)));
      }
    }
  return c;
}

template <class Ops>
std::vector<typename Ops::Elem> apply(const DenseMatrix<Ops>& a,
                                      const std::vector<typename Ops::Elem>& x) {
  const Ops& ops = a.ops();
  std::vector<typename Ops::Elem> y(static_cast<std::size_t>(a.rows()), ops.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!ops.is_zero(a.at(i, j)))
        y[static_cast<std::size_t>(i)] =
            ops.add(y[static_cast<std::size_t>(i)], ops.mul(a.at(i, j), x[static_cast<std::size_t>(j)]));
  return y;
}

/// Integer matrices feed both field instantiations; boundary operators and
/// oracle cell complexes are born integral.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <class Ops>
DenseMatrix<Ops> to_field_matrix(const IntMatrix& m, Ops ops) {
  DenseMatrix<Ops> out(ops, m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out.at(i, j) = ops.from_long(m.at(i, j));
  return out;
}

/// Exact rank over Q by fraction-free (Bareiss) elimination; runs in int64
/// with __int128 intermediates and falls back to GMP integers on overflow.
int rank_over_rationals(const IntMatrix& m);

/// Exact rank of an integer matrix over the given field.
int rank_over(const IntMatrix& m, const FieldSpec& field);

}  // namespace golodtight
