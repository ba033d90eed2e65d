#include "modsuper/matrix.hpp"

#include <sstream>

namespace modsuper {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long long x : r) a_.emplace_back(x);
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    m.a_.insert(m.a_.end(), r.begin(), r.end());
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::reduced(const FieldSpec& f) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = f.reduce(x);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

std::size_t rank(const Matrix& m, const FieldSpec& f) {
  return with_field(f, [&](auto field) { return rank(field, to_dense(field, m)); });
}

Matrix inverse(const Matrix& m, const FieldSpec& f) {
  return with_field(f, [&](auto field) { return from_dense(field, inverse(field, to_dense(field, m))); });
}

std::vector<std::vector<Rational>> null_space(const Matrix& m, const FieldSpec& f) {
  return with_field(f, [&](auto field) {
    std::vector<std::vector<Rational>> out;
    for (const auto& v : null_space(field, to_dense(field, m))) {
      std::vector<Rational> r;
      for (const auto& x : v) r.push_back(field.to_rational(x));
      out.push_back(std::move(r));
    }
    return out;
  });
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldSpec& f) {
  return with_field(f, [&](auto field) {
    return from_dense(field, multiply(field, to_dense(field, a), to_dense(field, b)));
  });
}

std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v, const FieldSpec& f) {
  if (v.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = f.reduce(s);
  }
  return out;
}

bool is_identity(const Matrix& m, const FieldSpec& f) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (f.reduce(m(i, j)) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace modsuper
