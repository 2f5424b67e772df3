#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace zpalg::zpmod {

/// Dense row-major matrix of residues. Arithmetic takes the modulus explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<std::int64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<std::int64_t> column(std::size_t j) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, std::int64_t q);
std::vector<std::int64_t> apply(const Matrix& a, std::span<const std::int64_t> x, std::int64_t q);
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix reduce(Matrix a, std::int64_t q);

}  // namespace zpalg::zpmod
