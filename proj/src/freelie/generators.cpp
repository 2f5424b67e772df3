#include "zpalg/freelie/generators.hpp"

#include <set>

#include "zpalg/errors.hpp"

namespace zpalg::freelie {

GeneratorSet::GeneratorSet(RingSpec ring, std::vector<Generator> gens)
    : ring_(ring), gens_(std::move(gens)) {
  if (gens_.empty()) throw InvalidInput("generator set must be non-empty");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw InvalidInput("generator names must be non-empty");
    if (g.degree < 1)
      throw InvalidInput("generator " + g.name + ": degree must be positive, got " +
                         std::to_string(g.degree));
    if (!seen.insert(g.name).second) throw InvalidInput("duplicate generator name " + g.name);
  }
}

int GeneratorSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  throw InvalidInput("unknown generator " + name);
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
  if (!(a.ring_ == b.ring_) || a.gens_.size() != b.gens_.size()) return false;
  for (std::size_t i = 0; i < a.gens_.size(); ++i)
    if (a.gens_[i].name != b.gens_[i].name || a.gens_[i].degree != b.gens_[i].degree)
      return false;
  return true;
}

GeneratorSet standard_pair(RingSpec ring, int deg_x) {
  if (deg_x < 2 || deg_x % 2 != 0)
    throw InvalidInput("deg(x) must be even and at least 2, got " + std::to_string(deg_x));
  return GeneratorSet(ring, {{"x", deg_x}, {"y", deg_x - 1}});
}

}  // namespace zpalg::freelie
