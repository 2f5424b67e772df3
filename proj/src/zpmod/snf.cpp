#include "zpalg/zpmod/snf.hpp"

#include <algorithm>
#include <functional>

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::zpmod {

bool BasisChange::consistent(std::int64_t q) const {
  const std::size_t n = matrix.rows();
  if (matrix.cols() != n || inverse.rows() != n || inverse.cols() != n) return false;
  const Matrix id = Matrix::identity(n);
  return multiply(matrix, inverse, q) == id && multiply(inverse, matrix, q) == id;
}

namespace {

// row_a -= f * row_b over Z/q
void row_axpy(Matrix& m, std::size_t a, std::size_t b, std::int64_t f, std::int64_t q) {
  if (f == 0) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t j = 0; j < ra.size(); ++j)
    if (rb[j] != 0) ra[j] = mod_norm(ra[j] - mul_mod(f, rb[j], q), q);
}

void col_axpy(Matrix& m, std::size_t a, std::size_t b, std::int64_t f, std::int64_t q) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, b) != 0) m(i, a) = mod_norm(m(i, a) - mul_mod(f, m(i, b), q), q);
}

void scale_row(Matrix& m, std::size_t r, std::int64_t f, std::int64_t q) {
  for (auto& v : m.row(r)) v = mul_mod(v, f, q);
}

void scale_col(Matrix& m, std::size_t c, std::int64_t f, std::int64_t q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = mul_mod(m(i, c), f, q);
}

}  // namespace

SNFResult smith_normal_form(const Matrix& a, const RingSpec& ring) {
  const std::int64_t q = ring.modulus();
  const std::size_t m = a.rows(), n = a.cols();
  Matrix d = reduce(a, q);
  SNFResult res{{Matrix::identity(m), Matrix::identity(m)},
                {Matrix::identity(n), Matrix::identity(n)},
                {}};
  Matrix& u = res.U.matrix;
  Matrix& u_inv = res.U.inverse;
  Matrix& v = res.V.matrix;
  Matrix& v_inv = res.V.inverse;

  const std::size_t r = std::min(m, n);
  res.diagonal.assign(r, ring.s());
  for (std::size_t k = 0; k < r; ++k) {
    int best = ring.s();
    std::size_t bi = k, bj = k;
    for (std::size_t i = k; i < m && best > 0; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (d(i, j) == 0) continue;
        const int val = ring.valuation(d(i, j));
        if (val < best) {
          best = val;
          bi = i;
          bj = j;
          if (best == 0) break;
        }
      }
    }
    if (best == ring.s()) break;  // remaining block is zero

    d.swap_rows(k, bi);
    u.swap_rows(k, bi);
    u_inv.swap_cols(k, bi);
    d.swap_cols(k, bj);
    v.swap_cols(k, bj);
    v_inv.swap_rows(k, bj);

    const std::int64_t pv = ring.pow_p(best);
    const std::int64_t unit = d(k, k) / pv;
    const std::int64_t unit_inv = inv_mod(unit, q);
    scale_row(d, k, unit_inv, q);
    scale_row(u, k, unit_inv, q);
    scale_col(u_inv, k, unit, q);

    for (std::size_t i = k + 1; i < m; ++i) {
      if (d(i, k) == 0) continue;
      const std::int64_t f = d(i, k) / pv;
      row_axpy(d, i, k, f, q);
      row_axpy(u, i, k, f, q);
      col_axpy(u_inv, k, i, q - f, q);  // col_k += f * col_i
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (d(k, j) == 0) continue;
      const std::int64_t f = d(k, j) / pv;
      col_axpy(d, j, k, f, q);
      col_axpy(v, j, k, f, q);
      row_axpy(v_inv, k, j, q - f, q);  // row_k += f * row_j
    }
    res.diagonal[k] = best;
  }
  return res;
}

Matrix diagonal_matrix(const SNFResult& snf, std::size_t rows, std::size_t cols,
                       const RingSpec& ring) {
  Matrix d(rows, cols);
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i)
    d(i, i) = snf.diagonal[i] >= ring.s() ? 0 : ring.pow_p(snf.diagonal[i]);
  return d;
}

Matrix kernel_generators(const Matrix& a, const RingSpec& ring) {
  const std::int64_t q = ring.modulus();
  const std::size_t m = a.rows(), n = a.cols();
  const SNFResult snf = smith_normal_form(a, ring);
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t scale = 1;
    if (i < m) {
      const int val = i < snf.diagonal.size() ? snf.diagonal[i] : ring.s();
      if (val == 0) continue;
      scale = val >= ring.s() ? 1 : ring.pow_p(ring.s() - val);
    }
    std::vector<std::int64_t> g(n);
    bool nonzero = false;
    for (std::size_t r = 0; r < n; ++r) {
      g[r] = mul_mod(snf.V.matrix(r, i), scale, q);
      nonzero = nonzero || g[r] != 0;
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  return Matrix::from_columns(gens, n);
}

std::vector<int> cokernel_exponents(const Matrix& gens, std::size_t ambient,
                                    const RingSpec& ring) {
  if (gens.rows() != ambient && !(gens.cols() == 0))
    throw InvalidInput("cokernel_exponents: generator length mismatch");
  std::vector<int> out;
  if (gens.cols() == 0) {
    out.assign(ambient, ring.s());
    return out;
  }
  const SNFResult snf = smith_normal_form(gens, ring);
  for (int v : snf.diagonal)
    if (v > 0) out.push_back(v);
  for (std::size_t i = snf.diagonal.size(); i < ambient; ++i) out.push_back(ring.s());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<int> column_span_exponents(const Matrix& a, const RingSpec& ring) {
  std::vector<int> out;
  if (a.empty()) return out;
  const SNFResult snf = smith_normal_form(a, ring);
  for (int v : snf.diagonal)
    if (v < ring.s()) out.push_back(ring.s() - v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<std::vector<std::int64_t>> solve(const Matrix& a, std::span<const std::int64_t> b,
                                               const RingSpec& ring) {
  const std::int64_t q = ring.modulus();
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw InvalidInput("solve: right-hand side length mismatch");
  const SNFResult snf = smith_normal_form(a, ring);
  const std::vector<std::int64_t> c = apply(snf.U.matrix, b, q);
  std::vector<std::int64_t> y(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const int val = i < snf.diagonal.size() ? snf.diagonal[i] : ring.s();
    if (val >= ring.s()) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    const std::int64_t pv = ring.pow_p(val);
    if (c[i] % pv != 0) return std::nullopt;
    y[i] = c[i] / pv;
  }
  return apply(snf.V.matrix, y, q);
}

std::size_t rank_mod_p(const Matrix& a, std::int64_t p) {
  Matrix m = reduce(a, p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(rank, piv);
    const std::int64_t inv = inv_mod(m(rank, col), p);
    for (auto& v : m.row(rank)) v = mul_mod(v, inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const std::int64_t f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = mod_norm(m(i, j) - mul_mod(f, m(rank, j), p), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace zpalg::zpmod
