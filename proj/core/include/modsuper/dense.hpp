#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modsuper/field.hpp"

namespace modsuper {

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

// y += c * x
template <class F>
void axpy(const F& f, Vec<F>& y, const typename F::value_type& c, const Vec<F>& x) {
  if (f.is_zero(c)) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!f.is_zero(x[k])) y[k] = f.fma(y[k], c, x[k]);
}

template <class F>
void scale_vec(const F& f, Vec<F>& v, const typename F::value_type& c) {
  for (auto& x : v) x = f.mul(x, c);
}

template <class F>
class DenseMatrix {
 public:
  using V = typename F::value_type;

  DenseMatrix() = default;
  DenseMatrix(const F& f, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  V& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const V& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const {
    return Vec<F>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  static DenseMatrix identity(const F& f, std::size_t n) {
    DenseMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<V> a_;
};

template <class F>
DenseMatrix<F> multiply(const F& f, const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  DenseMatrix<F> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.fma(c(i, j), a(i, k), b(k, j));
    }
  return c;
}

// Reduced row echelon form in place. Pivots are the first nonzero entry in
// the lowest remaining row, scanning columns left to right. Returns the
// pivot column of each nonzero row.
template <class F>
std::vector<std::size_t> rref_in_place(const F& f, DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!f.is_zero(m(i, c))) {
        sel = i;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = f.neg(m(i, c));
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(m(r, j))) m(i, j) = f.fma(m(i, j), factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, DenseMatrix<F> m) {
  return rref_in_place(f, m).size();
}

template <class F>
DenseMatrix<F> inverse(const F& f, const DenseMatrix<F>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  DenseMatrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto piv = rref_in_place(f, aug);
  if (piv.size() < n || piv[n - 1] >= n) throw Error(ErrorKind::Singular, "matrix is not invertible");
  DenseMatrix<F> out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Basis of {v : m v = 0}; one vector per free column, in column order.
template <class F>
std::vector<Vec<F>> null_space(const F& f, DenseMatrix<F> m) {
  auto piv = rref_in_place(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incrementally grown semi-echelon basis that also records, for each stored
// row, its expression in the vectors that were accepted as independent.
template <class F>
class Echelon {
 public:
  using V = typename F::value_type;

  Echelon(const F& f, std::size_t dim) : f_(f), dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }

  // Reduces v; returns the coefficients of v over accepted vectors when v is
  // dependent, otherwise accepts it and returns nullopt.
  std::optional<Vec<F>> insert(Vec<F> v) {
    Vec<F> c;
    if (reduce(v, c)) return c;
    std::size_t k = rows_.size();
    std::size_t pc = 0;
    while (f_.is_zero(v[pc])) ++pc;
    auto inv = f_.inv(v[pc]);
    scale_vec(f_, v, inv);
    // coefficients of the reduced row: (e_new - c) / lead
    Vec<F> coeff(k + 1, f_.zero());
    for (std::size_t t = 0; t < k; ++t) coeff[t] = f_.neg(f_.mul(c[t], inv));
    coeff[k] = inv;
    for (auto& old : coeffs_) old.push_back(f_.zero());
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    coeffs_.push_back(std::move(coeff));
    return std::nullopt;
  }

  // Expression of v over accepted vectors, or nullopt if v is independent.
  std::optional<Vec<F>> express(Vec<F> v) const {
    Vec<F> c;
    if (reduce(v, c)) return c;
    return std::nullopt;
  }

  bool contains(Vec<F> v) const {
    Vec<F> c;
    return reduce(v, c);
  }

 private:
  bool reduce(Vec<F>& v, Vec<F>& c) const {
    const std::size_t k = rows_.size();
    c.assign(k, f_.zero());
    for (std::size_t r = 0; r < k; ++r) {
      const auto& x = v[pivots_[r]];
      if (f_.is_zero(x)) continue;
      auto factor = x;
      auto neg = f_.neg(factor);
      const auto& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < dim_; ++j)
        if (!f_.is_zero(row[j])) v[j] = f_.fma(v[j], neg, row[j]);
      axpy(f_, c, factor, coeffs_[r]);
    }
    return is_zero_vec(f_, v);
  }

  F f_;
  std::size_t dim_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec<F>> coeffs_;
};

// Row space membership without coefficient tracking; cheaper for building
// large kernels.
template <class F>
class RowSpace {
 public:
  using V = typename F::value_type;

  RowSpace(const F& f, std::size_t dim) : f_(f), dim_(dim), pivot_row_(dim, npos) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Returns true if v enlarged the space.
  bool insert(Vec<F> v) {
    if (!reduce(v)) return false;
    std::size_t pc = 0;
    while (f_.is_zero(v[pc])) ++pc;
    scale_vec(f_, v, f_.inv(v[pc]));
    pivot_row_[pc] = rows_.size();
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
  }

  bool contains(Vec<F> v) const { return !reduce(v); }

  // Reduces v in place against the stored rows; true if a remainder is left.
  bool reduce(Vec<F>& v) const {
    bool any = false;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (f_.is_zero(v[j])) continue;
      std::size_t r = pivot_row_[j];
      if (r == npos) {
        any = true;
        continue;
      }
      auto neg = f_.neg(v[j]);
      const auto& row = rows_[r];
      for (std::size_t k = j; k < dim_; ++k)
        if (!f_.is_zero(row[k])) v[k] = f_.fma(v[k], neg, row[k]);
    }
    return any;
  }

  const std::vector<Vec<F>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  F f_;
  std::size_t dim_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace modsuper
