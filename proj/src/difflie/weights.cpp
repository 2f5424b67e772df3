#include "zpalg/difflie/weights.hpp"

#include <algorithm>

#include "zpalg/difflie/homology.hpp"
#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"

namespace zpalg::difflie {

namespace {

void require_acyclic_generators(const HomologyReport& weight1) {
  for (const auto& [deg, spot] : weight1.spots)
    if (!spot.H.empty())
      throw NotAcyclic(deg, 1,
                       "V is not acyclic: homology in degree " + std::to_string(deg) +
                           " (need d to pair the generators)");
}

}  // namespace

Rational weighted_dim(const std::map<int, std::int64_t>& dims, int k) {
  if (k < 1) throw InvalidInput("weighted_dim: k must be at least 1");
  Rational out = 0;
  for (const auto& [w, n] : dims) {
    if (w < 1) throw InvalidInput("weighted_dim: weights must be positive");
    if (w > k) break;
    out += Rational(n, w);
  }
  return out;
}

std::vector<WeightInequalityRow> check_weight_inequalities(const DifferentialSpec& d, int K,
                                                           bool unsafe) {
  if (K < 1) throw InvalidInput("check_weight_inequalities: K must be at least 1");
  const auto reports = homology_upto(d, K, 1, unsafe);
  require_acyclic_generators(reports.front());
  const std::int64_t p = d.generators().ring().p();
  std::map<int, std::int64_t> L, H, B;
  for (const auto& r : reports) {
    L[r.weight] = r.dim_L();
    H[r.weight] = r.dim_H();
    B[r.weight] = r.dim_B();
  }
  std::vector<WeightInequalityRow> rows;
  for (int k = 1; k <= K; ++k) {
    WeightInequalityRow row;
    row.k = k;
    row.dim_L = weighted_dim(L, k);
    row.dim_HL = weighted_dim(H, k);
    row.dim_BL = weighted_dim(B, k);
    row.homology_bound = row.dim_HL < row.dim_L / p;
    row.boundary_bound = row.dim_BL > Rational(p - 1, 2 * p) * row.dim_L;
    rows.push_back(std::move(row));
  }
  return rows;
}

BoundaryGrowthReport boundary_growth(const DifferentialSpec& d, int K, bool unsafe) {
  const GeneratorSet& v = d.generators();
  if (v.size() < 2) throw InvalidInput("boundary_growth: V needs total dimension at least 2");
  if (K < 1) throw InvalidInput("boundary_growth: K must be at least 1");
  int n = 0, min_deg = v.degree(0);
  for (int g = 0; g < static_cast<int>(v.size()); ++g) {
    n = std::max(n, v.degree(g));
    min_deg = std::min(min_deg, v.degree(g));
  }
  const int top = n * K;
  const int max_weight = top / min_deg;
  const auto reports = homology_upto(d, max_weight, 1, unsafe);
  require_acyclic_generators(reports.front());

  std::map<int, std::int64_t> by_degree;
  for (const auto& r : reports)
    for (const auto& [deg, spot] : r.spots)
      if (deg <= top) by_degree[deg] += static_cast<std::int64_t>(spot.B.size());

  BoundaryGrowthReport out;
  out.top_degree = n;
  out.rank = v.size();
  BigInt running = 0;
  for (int j = 1; j <= top; ++j) {
    if (auto it = by_degree.find(j); it != by_degree.end()) running += it->second;
    out.cumulative.push_back(j, running);
  }
  const std::int64_t p = v.ring().p();
  const auto ell = static_cast<std::int64_t>(v.size());
  for (int k = 1; k <= K; ++k) {
    BoundaryGrowthRow row;
    row.k = k;
    row.lhs = out.cumulative.points()[static_cast<std::size_t>(n * k - 1)].a;
    row.rhs = Rational(p - 1, 2 * p * k) * Rational(freelie::witt(ell, k));
    row.holds = Rational(row.lhs) > row.rhs;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace zpalg::difflie
