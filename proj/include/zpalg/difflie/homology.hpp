#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zpalg/difflie/differential.hpp"
#include "zpalg/freelie/lie.hpp"
#include "zpalg/zpmod/module.hpp"

namespace zpalg::difflie {

using zpmod::Exponents;

/// Cycles, boundaries and homology of L(V) at one (degree, weight), as
/// summand exponents over Z/p^u.
struct HomologySpot {
  int degree = 0;
  Exponents L, Z, B, H;
};

struct HomologyReport {
  int weight = 0;
  zpmod::RingSpec ring;
  std::map<int, HomologySpot> spots;  // every degree where L is nonzero

  std::int64_t dim_L() const;  // summand counts, summed over degrees
  std::int64_t dim_Z() const;
  std::int64_t dim_B() const;
  std::int64_t dim_H() const;
};

/// Homology of the weight-k part of L(V) over Z/p^u in the commutator-span
/// model. Weights 1..K share one construction in homology_upto.
HomologyReport homology(const DifferentialSpec& d, int k, int u, bool unsafe = false);
std::vector<HomologyReport> homology_upto(const DifferentialSpec& d, int K, int u,
                                          bool unsafe = false);

/// Over F_p: the rank of the span of the given homogeneous cycles modulo
/// boundaries. Throws InvalidInput if an element is not a cycle.
std::size_t independent_classes(const DifferentialSpec& d, const std::vector<FreeNAElement>& cycles,
                                bool unsafe = false);

/// Spot key (degree, weight).
using Spot = std::pair<int, int>;

/// Free F_p-complex with one block per (degree, weight) and d of degree -1
/// preserving weight.
struct BigradedComplex {
  std::int64_t p = 0;
  std::map<Spot, std::size_t> ranks;
  /// d out of a spot: ranks[(deg-1, w)] x ranks[(deg, w)]. Missing means 0.
  std::map<Spot, zpmod::Matrix> d;

  /// Throws InvalidInput on shape mismatch or d^2 != 0.
  void validate() const;
};

/// L(V) over F_p restricted to the given weights, in the SNF bases of
/// lie_component.
BigradedComplex build_lie_complex(const DifferentialSpec& d, const std::vector<int>& weights,
                                  bool unsafe = false);

struct AcyclicPair {
  Spot spot;                     // where x lives; y lives at (deg - 1, w)
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;   // d x
};

struct AcyclicBasis {
  std::vector<AcyclicPair> even;  // (x_a, y_a), deg x_a even
  std::vector<AcyclicPair> odd;   // (z_b, w_b), deg z_b odd
};

/// Pairs every basis vector of an exact complex as (x, dx), lifting a
/// kernel basis through d from the bottom degree up. Throws NotAcyclic at
/// the first (weight, degree) with homology.
AcyclicBasis acyclic_basis(const BigradedComplex& c);

}  // namespace zpalg::difflie
