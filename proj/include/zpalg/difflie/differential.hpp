#pragma once

#include <vector>

#include "zpalg/freelie/bracket.hpp"
#include "zpalg/freelie/tensor.hpp"

namespace zpalg::difflie {

using freelie::BracketTree;
using freelie::FreeNAElement;
using freelie::GeneratorSet;
using freelie::TensorElement;

/// A differential on the free algebra, given by d of each generator.
class DifferentialSpec {
 public:
  /// images[i] = d(generator i): zero, or a weight-1 element of degree
  /// deg(i) - 1. Throws InvalidInput unless d(d(gen)) = 0.
  DifferentialSpec(GeneratorSet v, std::vector<FreeNAElement> images);

  /// d x = y, d y = 0 with deg x = n even, deg y = n - 1.
  static DifferentialSpec standard(freelie::RingSpec ring, int deg_x);

  const GeneratorSet& generators() const noexcept { return v_; }
  const FreeNAElement& image(int g) const { return images_.at(static_cast<std::size_t>(g)); }
  std::int64_t modulus() const noexcept { return v_.ring().modulus(); }

 private:
  GeneratorSet v_;
  std::vector<FreeNAElement> images_;
};

/// d[a,b] = [da,b] + (-1)^{|a|}[a,db].
FreeNAElement differentiate(const BracketTree& t, const DifferentialSpec& d);
FreeNAElement differentiate(const FreeNAElement& xi, const DifferentialSpec& d);

/// Leibniz rule on words with Koszul signs. Coefficients are reduced to the
/// element's modulus, which must divide the differential's.
TensorElement differentiate(const TensorElement& e, const DifferentialSpec& d);

}  // namespace zpalg::difflie
