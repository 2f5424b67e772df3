#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zpalg/freelie/tensor.hpp"
#include "zpalg/numeric.hpp"
#include "zpalg/zpmod/module.hpp"

namespace zpalg::freelie {

/// Largest word count n^k enumerated without --unsafe-limits.
inline constexpr std::int64_t kWordLimit = std::int64_t{1} << 20;

/// n^k, rejecting k < 1 (no degree-0 copy of the ground ring).
std::int64_t tensor_dim(const GeneratorSet& v, int k);

/// Throws ResourceLimit when n^k exceeds kWordLimit and unsafe is false.
void check_word_guard(std::size_t n_gens, int k, bool unsafe);

/// All words of length k in topological degree d, sorted.
std::map<int, std::vector<Word>> words_by_degree(const GeneratorSet& v, int k);

/// One topological degree of the weight-k Lie component, as a submodule of
/// the span of the words in that degree.
struct LieBlock {
  int degree = 0;
  std::vector<Word> words;        // coordinates of T in this degree
  zpmod::Matrix basis;            // words.size() x exps.size(); columns span L
  zpmod::Exponents exponents;     // order exponent of each basis column
};

struct LieComponent {
  int weight = 0;
  zpmod::RingSpec ring;              // Z/p^u
  zpmod::GradedModule dims;          // summands per degree
  std::map<int, LieBlock> blocks;    // nonzero degrees only

  /// Basis columns as tensor elements, by degree then column.
  std::vector<TensorElement> basis() const;
};

/// L(V)^k over Z/p^u, computed as the span of the commutators
/// [x_{i1}, [x_{i2}, ..., x_{ik}]] inside T(V). 1 <= u <= r.
LieComponent lie_component(const GeneratorSet& v, int k, int u, bool unsafe = false);

/// Components for weights 1..K (index k - 1), built weight by weight from
/// [x_i, b] with b running over a basis of the previous weight.
std::vector<LieComponent> lie_components(const GeneratorSet& v, int K, int u,
                                         bool unsafe = false);

struct PbwRow {
  int weight = 0;
  std::int64_t total = 0;
  std::int64_t even = 0;
  std::int64_t odd = 0;
  BigInt witt;
  bool matches_witt = false;
};

struct PbwReport {
  std::vector<PbwRow> rows;
  std::vector<BigInt> product_series;   // coefficients t^0..t^K
  std::vector<BigInt> expected_series;  // n^i
  bool series_matches = false;
};

/// Dimensions of L(V)^k over F_p for k <= K against W_n(k), and the
/// product prod (1+t^k)^{o_k} (1-t^k)^{-e_k} against 1/(1-nt) mod t^{K+1}.
PbwReport pbw_series_diagnostic(const GeneratorSet& v, int K, bool unsafe = false);

}  // namespace zpalg::freelie
