#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zpalg/difflie/differential.hpp"
#include "zpalg/growth/growth.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::difflie {

/// dim^k(M) = sum_{i=1}^k dim(M^i) / i, with dims keyed by weight.
/// Weights above k are ignored.
Rational weighted_dim(const std::map<int, std::int64_t>& dims, int k);

struct WeightInequalityRow {
  int k = 0;
  Rational dim_L, dim_HL, dim_BL;
  bool homology_bound = false;  // dim^k HL < dim^k L / p
  bool boundary_bound = false;  // dim^k BL > (p-1)/(2p) dim^k L
};

/// Both weighted-dimension bounds over F_p for k = 1..K. Throws NotAcyclic
/// when V itself (weight 1) has homology.
std::vector<WeightInequalityRow> check_weight_inequalities(const DifferentialSpec& d, int K,
                                                           bool unsafe = false);

struct BoundaryGrowthRow {
  int k = 0;
  BigInt lhs;    // dim of BL in degrees 1..n k
  Rational rhs;  // (p-1)/(2pk) W_l(k)
  bool holds = false;
};

struct BoundaryGrowthReport {
  int top_degree = 0;  // n
  std::size_t rank = 0;  // l
  /// (j, dim of BL in degrees 1..j) for j = 1..n K.
  growth::GrowthSequence cumulative;
  std::vector<BoundaryGrowthRow> rows;
};

/// Needs at least two generators and V acyclic. Every weight that reaches
/// degree n K is included, so the cumulative dimensions are exact.
BoundaryGrowthReport boundary_growth(const DifferentialSpec& d, int K, bool unsafe = false);

}  // namespace zpalg::difflie
