#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "modsuper/dense.hpp"
#include "modsuper/field.hpp"

namespace modsuper {

// Row-major matrix of exact scalars. Entries are interpreted in whatever
// field the operation is given; they are not reduced on construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const noexcept { return a_; }

  Matrix reduced(const FieldSpec& f) const;
  Matrix transposed() const;
  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

template <class F>
DenseMatrix<F> to_dense(const F& f, const Matrix& m) {
  DenseMatrix<F> d(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = f.from_rational(m(i, j));
  return d;
}

template <class F>
Matrix from_dense(const F& f, const DenseMatrix<F>& d) {
  Matrix m(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) m(i, j) = f.to_rational(d(i, j));
  return m;
}

std::size_t rank(const Matrix& m, const FieldSpec& f);
Matrix inverse(const Matrix& m, const FieldSpec& f);
std::vector<std::vector<Rational>> null_space(const Matrix& m, const FieldSpec& f);
Matrix multiply(const Matrix& a, const Matrix& b, const FieldSpec& f);
std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v, const FieldSpec& f);
bool is_identity(const Matrix& m, const FieldSpec& f);

}  // namespace modsuper
