#include "zpalg/zpmod/matrix.hpp"

#include <algorithm>

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::zpmod {

Matrix::Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("matrix: row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<std::int64_t>>& cols,
                            std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("matrix: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<std::int64_t> Matrix::column(std::size_t j) const {
  std::vector<std::int64_t> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  Matrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    std::copy(row(first + i).begin(), row(first + i).end(), m.row(i).begin());
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::int64_t q) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = (c(i, j) + mul_mod(aik, b(k, j), q)) % q;
    }
  }
  return c;
}

std::vector<std::int64_t> apply(const Matrix& a, std::span<const std::int64_t> x,
                                std::int64_t q) {
  if (a.cols() != x.size()) throw InvalidInput("matrix apply: shape mismatch");
  std::vector<std::int64_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = (acc + mul_mod(a(i, j), mod_norm(x[j], q), q)) % q;
    y[i] = acc;
  }
  return y;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidInput("hconcat: row count mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), c.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), c.row(i).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return c;
}

Matrix reduce(Matrix a, std::int64_t q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto& v : a.row(i)) v = mod_norm(v, q);
  return a;
}

}  // namespace zpalg::zpmod
