#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zpalg/zpmod/matrix.hpp"
#include "zpalg/zpmod/ring.hpp"

namespace zpalg::zpmod {

/// An invertible matrix over Z/p^s together with its inverse.
struct BasisChange {
  Matrix matrix;
  Matrix inverse;

  /// matrix * inverse == I (mod q) and inverse * matrix == I.
  bool consistent(std::int64_t q) const;
};

/// U * A * V = D with D diagonal, D_ii = p^{diagonal[i]} (p^s meaning 0).
struct SNFResult {
  BasisChange U;
  BasisChange V;
  std::vector<int> diagonal;  // length min(rows, cols), non-decreasing
};

/// Smith normal form over Z/p^s. Pivot: minimal valuation, then smallest
/// row, then smallest column of the remaining block.
SNFResult smith_normal_form(const Matrix& a, const RingSpec& ring);

/// Rebuilds the diagonal matrix D from an SNF result (rows x cols).
Matrix diagonal_matrix(const SNFResult& snf, std::size_t rows, std::size_t cols,
                       const RingSpec& ring);

/// Generators (as columns) of ker(A : (Z/p^s)^n -> (Z/p^s)^m).
Matrix kernel_generators(const Matrix& a, const RingSpec& ring);

/// Summand exponents (descending) of (Z/p^s)^ambient / colspan(gens).
std::vector<int> cokernel_exponents(const Matrix& gens, std::size_t ambient,
                                    const RingSpec& ring);

/// Summand exponents (descending) of colspan(a) inside the free module.
std::vector<int> column_span_exponents(const Matrix& a, const RingSpec& ring);

/// Some x with A x = b, or nullopt when b is not in the column span.
std::optional<std::vector<std::int64_t>> solve(const Matrix& a, std::span<const std::int64_t> b,
                                               const RingSpec& ring);

/// Rank of A reduced mod p, by plain Gaussian elimination over F_p.
std::size_t rank_mod_p(const Matrix& a, std::int64_t p);

}  // namespace zpalg::zpmod
