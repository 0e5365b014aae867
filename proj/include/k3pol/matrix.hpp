#pragma once

#include "k3pol/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace k3pol {

// Dense row-major matrix of arbitrary-precision integers. Zero-sized
// dimensions are allowed internally (an empty relation set, for example).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows,
                                 std::size_t cols);
  static IntegerMatrix from_columns(const std::vector<IntVector>& cols,
                                    std::size_t rows);
  static IntegerMatrix diagonal(std::span<const Integer> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;

  IntegerMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  // Fraction-free (Bareiss) determinant; requires a square matrix.
  Integer determinant() const;
  // Rank over the rationals.
  std::size_t rank() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntVector operator*(const IntegerMatrix& a, std::span<const Integer> x);
IntegerMatrix operator-(const IntegerMatrix& a);

// |det| == 1 for a square matrix.
bool is_unimodular(const IntegerMatrix& m);

}  // namespace k3pol
