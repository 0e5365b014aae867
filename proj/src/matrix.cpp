#include "k3pol/matrix.hpp"

#include "k3pol/error.hpp"

#include <utility>

namespace k3pol {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(Errc::invalid_argument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(Errc::invalid_argument, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntVector>& cols,
                                          std::size_t rows) {
  IntegerMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw Error(Errc::invalid_argument, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const Integer> diag) {
  IntegerMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntVector IntegerMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntegerMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntegerMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Integer IntegerMatrix::determinant() const {
  if (!is_square())
    throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t IntegerMatrix::rank() const {
  IntegerMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, c) == 0) continue;
      const Integer f = a(i, c), g = a(r, c);
      for (std::size_t j = c; j < cols_; ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
      const Integer cont = content(a.row(i));
      if (cont > 1)
        for (auto& x : a.row(i)) x /= cont;
    }
    ++r;
  }
  return r;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (auto& x : row(i)) x = -x;
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(Errc::invalid_argument, "matrix product dimension mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntegerMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size())
    throw Error(Errc::invalid_argument, "matrix-vector dimension mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

IntegerMatrix operator-(const IntegerMatrix& a) {
  IntegerMatrix out = a;
  for (std::size_t i = 0; i < out.rows(); ++i) out.negate_row(i);
  return out;
}

bool is_unimodular(const IntegerMatrix& m) {
  return m.is_square() && abs(m.determinant()) == 1;
}

}  // namespace k3pol
