#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zpalg/freelie/bracket.hpp"
#include "zpalg/freelie/generators.hpp"

namespace zpalg::freelie {

using Word = std::vector<int>;

/// Element of the reduced tensor algebra T(V) over Z/q: a combination of
/// non-empty words. Need not be homogeneous.
class TensorElement {
 public:
  explicit TensorElement(std::int64_t modulus) : q_(modulus) {}
  TensorElement(std::int64_t modulus, const Word& w, std::int64_t coeff = 1);

  std::int64_t modulus() const noexcept { return q_; }
  const std::map<Word, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Word& w, std::int64_t coeff);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scaled(std::int64_t c) const;
  /// Coefficients reduced into a smaller modulus dividing this one.
  TensorElement reduced(std::int64_t modulus) const;

  /// Word lengths present.
  std::set<int> weights() const;
  bool is_homogeneous(const GeneratorSet& v) const;

  std::string str(const GeneratorSet& v) const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::int64_t q_;
  std::map<Word, std::int64_t> terms_;
};

int word_degree(const Word& w, const GeneratorSet& v);

/// Concatenation product.
TensorElement multiply(const TensorElement& a, const TensorElement& b);

/// Projection onto V^{(x)i}.
TensorElement zeta(const TensorElement& e, int i);

/// Inclusion of V^{(x)i}; throws InvalidInput if e has words of other length.
TensorElement iota(const TensorElement& e, int i);

/// Recursive expansion [a,b] -> ab - (-1)^{|a||b|} ba.
TensorElement embed_tensor(const BracketTree& t, const GeneratorSet& v, std::int64_t modulus);
TensorElement embed_tensor(const FreeNAElement& xi, const GeneratorSet& v);

}  // namespace zpalg::freelie
