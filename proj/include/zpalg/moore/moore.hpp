#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "zpalg/freelie/bracket.hpp"
#include "zpalg/growth/growth.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::moore {

/// The Moore space P^dim(p^r).
struct MooreSummand {
  int dim = 2;
  std::int64_t p = 2;
  int r = 1;

  /// Throws InvalidInput unless dim >= 2, p prime and r >= 1.
  void validate() const;
  friend auto operator<=>(const MooreSummand&, const MooreSummand&) = default;
};

/// A finite wedge of Moore spaces with multiplicities, kept sorted by
/// (dim, p, r).
class MooreWedge {
 public:
  MooreWedge() = default;
  MooreWedge(std::initializer_list<std::pair<MooreSummand, std::int64_t>> entries);

  void add(const MooreSummand& s, std::int64_t mult = 1);
  const std::map<MooreSummand, std::int64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Number of Moore spaces, counted with multiplicity.
  std::int64_t count() const;

  friend bool operator==(const MooreWedge&, const MooreWedge&) = default;

 private:
  std::map<MooreSummand, std::int64_t> entries_;
};

MooreWedge wedge(const MooreWedge& a, const MooreWedge& b);

/// P^n(l) split over the prime powers of l. Needs n >= 3 and l >= 2.
MooreWedge crt_split(int n, std::int64_t ell);

using Poly = std::map<int, std::int64_t>;  // exponent -> coefficient

/// Poincare polynomial of reduced homology with Z/p^s coefficients: each
/// P^n(p^r) gives t^n + t^(n-1), summands at other primes give 0. Throws
/// InvalidInput if s > r for a summand at p.
Poly homology_poincare(const MooreWedge& w, std::int64_t p, int s);

/// Smash product, distributed over the wedges:
/// P^n(p^r) ^ P^m(p^r) = P^(n+m)(p^r) v P^(n+m-1)(p^r).
/// All summands must share one (p, r) with p^r != 2.
MooreWedge smash(const MooreWedge& a, const MooreWedge& b);

/// Closed form of (P^n)^{^k1} ^ (P^m)^{^k2} with k = k1 + k2 >= 1:
/// the wedge over i = 0..k-1 of C(k-1, i) copies of P^(k1 n + k2 m - i).
MooreWedge smash_power_binomial(int n, int m, int k1, int k2, std::int64_t p, int r);

/// One class of Hilton-Milnor factors: the basic products on two
/// generators with k1 copies of the first and k2 of the second, and the
/// suspended smash power that each of them loops.
struct HMFactor {
  int k1 = 0, k2 = 0;
  MooreWedge wedge;
  std::int64_t count = 0;
};

/// Factors of weight <= K for Omega Sigma(P^n v P^m), weight first, then k1
/// descending. The enumeration is capped at 2^18 basic products unless
/// unsafe is set.
std::vector<HMFactor> hilton_milnor_expansion(int n, int m, std::int64_t p, int r, int K,
                                              bool unsafe = false);

struct GrowthParams {
  int n = 2, m = 2;
  std::int64_t p = 3;
  int r = 1, s = 1;
  int j = 0;  // stable offset
  int K = 1;

  /// Throws InvalidInput on n, m < 2, p not prime, s outside [1, r], j < 0,
  /// K < 1 or p^r = 2.
  void validate() const;
};

struct Contribution {
  int k = 0;
  BigInt count;           // 2^(k-1) W_2(k)
  std::int64_t maxdim = 0;  // k max(n, m) + 1 + j
  Rational comparison;    // 4^k / (2k)
};

struct Certificate {
  GrowthParams params;
  std::vector<Contribution> contributions;  // contributing weights only
  /// Cumulative counts sampled at each contribution's maxdim.
  growth::GrowthSequence cumulative;
};

/// Weight k contributes when k (min(n, m) - 1) > j + 1. K is capped at 256
/// unless unsafe is set.
Certificate growth_certificate(const GrowthParams& params, bool unsafe = false);

}  // namespace zpalg::moore
