#pragma once

#include <string>
#include <vector>

#include "zpalg/zpmod/ring.hpp"

namespace zpalg::freelie {

using zpmod::RingSpec;

struct Generator {
  std::string name;
  int degree;
};

/// Ordered graded generators of a free Z/p^r-module V.
class GeneratorSet {
 public:
  /// Names must be distinct and non-empty, degrees positive.
  GeneratorSet(RingSpec ring, std::vector<Generator> gens);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  int degree(int i) const { return gens_.at(static_cast<std::size_t>(i)).degree; }
  const std::string& name(int i) const { return gens_.at(static_cast<std::size_t>(i)).name; }
  /// Index of a named generator; throws InvalidInput if absent.
  int index_of(const std::string& name) const;

  /// Same generators over another ring.
  GeneratorSet over(RingSpec ring) const { return GeneratorSet(ring, gens_); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&);

 private:
  RingSpec ring_;
  std::vector<Generator> gens_;
};

/// x of even degree n and dx = y of degree n - 1.
GeneratorSet standard_pair(RingSpec ring, int deg_x);

}  // namespace zpalg::freelie
