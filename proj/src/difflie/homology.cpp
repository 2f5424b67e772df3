#include "zpalg/difflie/homology.hpp"

#include <algorithm>
#include <numeric>

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::difflie {

using freelie::LieBlock;
using freelie::LieComponent;
using freelie::Word;
using zpmod::Matrix;

namespace {

std::int64_t count(const std::map<int, HomologySpot>& spots, Exponents HomologySpot::*field) {
  std::int64_t n = 0;
  for (const auto& [deg, s] : spots) n += static_cast<std::int64_t>((s.*field).size());
  return n;
}

TensorElement column_tensor(const LieBlock& b, std::size_t c, std::int64_t q) {
  TensorElement e(q);
  for (std::size_t r = 0; r < b.words.size(); ++r) e.add(b.words[r], b.basis(r, c));
  return e;
}

// d of each basis column of b, in the coordinates of the given words.
Matrix d_matrix(const LieBlock& b, const std::vector<Word>& target, const DifferentialSpec& d,
                std::int64_t q) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  Matrix m(target.size(), b.basis.cols());
  for (std::size_t c = 0; c < b.basis.cols(); ++c) {
    const TensorElement dc = differentiate(column_tensor(b, c, q), d);
    for (const auto& [w, a] : dc.terms()) {
      auto it = index.find(w);
      if (it == index.end()) throw std::logic_error("differential left its target degree");
      m(it->second, c) = a;
    }
  }
  return m;
}

// Coordinates of each column of y in the basis of b (which must span it).
Matrix to_lie_coordinates(const LieBlock& b, const Matrix& y, const zpmod::RingSpec& ring) {
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t c = 0; c < y.cols(); ++c) {
    auto x = zpmod::solve(b.basis, y.column(c), ring);
    if (!x) throw std::logic_error("boundary outside the Lie span");
    cols.push_back(std::move(*x));
  }
  return Matrix::from_columns(cols, b.basis.cols());
}

const std::vector<Word>& words_at(const std::map<int, std::vector<Word>>& words, int deg) {
  static const std::vector<Word> kNone;
  auto it = words.find(deg);
  return it == words.end() ? kNone : it->second;
}

}  // namespace

std::int64_t HomologyReport::dim_L() const { return count(spots, &HomologySpot::L); }
std::int64_t HomologyReport::dim_Z() const { return count(spots, &HomologySpot::Z); }
std::int64_t HomologyReport::dim_B() const { return count(spots, &HomologySpot::B); }
std::int64_t HomologyReport::dim_H() const { return count(spots, &HomologySpot::H); }

std::vector<HomologyReport> homology_upto(const DifferentialSpec& d, int K, int u, bool unsafe) {
  const GeneratorSet& v = d.generators();
  const auto comps = freelie::lie_components(v, K, u, unsafe);
  const zpmod::RingSpec ring = comps.front().ring;
  const std::int64_t q = ring.modulus();

  std::vector<HomologyReport> out;
  for (const LieComponent& comp : comps) {
    const auto words = freelie::words_by_degree(v, comp.weight);
    std::map<int, zpmod::Hom> dmaps;
    for (const auto& [deg, blk] : comp.blocks) {
      const auto& target = words_at(words, deg - 1);
      dmaps.emplace(deg, zpmod::Hom(ring, blk.exponents, Exponents(target.size(), ring.s()),
                                    d_matrix(blk, target, d, q)));
    }
    HomologyReport rep{comp.weight, ring, {}};
    for (const auto& [deg, blk] : comp.blocks) {
      HomologySpot spot;
      spot.degree = deg;
      spot.L = blk.exponents;
      const zpmod::Hom& out_map = dmaps.at(deg);
      spot.Z = zpmod::kernel_exponents(out_map);
      const Matrix z_gens = zpmod::free_kernel(out_map);
      Matrix b_gens(blk.basis.cols(), 0);
      if (auto it = dmaps.find(deg + 1); it != dmaps.end()) {
        spot.B = zpmod::image_exponents(it->second);
        b_gens = to_lie_coordinates(blk, it->second.matrix(), ring);
      }
      spot.H = zpmod::subquotient_exponents(ring, blk.exponents, z_gens, b_gens);
      rep.spots.emplace(deg, std::move(spot));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

HomologyReport homology(const DifferentialSpec& d, int k, int u, bool unsafe) {
  return std::move(homology_upto(d, k, u, unsafe).back());
}

std::size_t independent_classes(const DifferentialSpec& d, const std::vector<FreeNAElement>& cycles,
                                bool unsafe) {
  const GeneratorSet& v = d.generators();
  const std::int64_t p = v.ring().p();
  std::map<Spot, std::vector<TensorElement>> by_spot;
  for (const auto& c : cycles) {
    if (c.is_zero()) continue;
    const TensorElement t = freelie::embed_tensor(c, v).reduced(p);
    if (!differentiate(t, d).is_zero()) throw InvalidInput("independent_classes: not a cycle mod p");
    if (t.is_zero()) continue;
    by_spot[{c.degree(v), c.weight()}].push_back(t);
  }
  std::size_t total = 0;
  for (const auto& [spot, elems] : by_spot) {
    const auto [deg, w] = spot;
    const auto words = freelie::words_by_degree(v, w);
    const auto& target = words_at(words, deg);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
    const LieComponent comp = freelie::lie_component(v, w, 1, unsafe);
    Matrix bnd(target.size(), 0);
    if (auto it = comp.blocks.find(deg + 1); it != comp.blocks.end())
      bnd = d_matrix(it->second, target, d, p);
    Matrix cyc(target.size(), elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c)
      for (const auto& [word, a] : elems[c].terms()) cyc(index.at(word), c) = a;
    total += zpmod::rank_mod_p(zpmod::hconcat(bnd, cyc), p) - zpmod::rank_mod_p(bnd, p);
  }
  return total;
}

void BigradedComplex::validate() const {
  auto rank_at = [&](Spot s) {
    auto it = ranks.find(s);
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  for (const auto& [spot, m] : d) {
    if (!ranks.count(spot)) throw InvalidInput("complex: differential out of an absent spot");
    const Spot below{spot.first - 1, spot.second};
    if (m.cols() != rank_at(spot) || m.rows() != rank_at(below))
      throw InvalidInput("complex: differential has the wrong shape at degree " +
                         std::to_string(spot.first) + ", weight " + std::to_string(spot.second));
    if (auto it = d.find(below); it != d.end() && m.rows() > 0 && it->second.rows() > 0) {
      const Matrix dd = zpmod::multiply(it->second, m, p);
      if (dd != Matrix(dd.rows(), dd.cols()))
        throw InvalidInput("complex: d^2 != 0 at degree " + std::to_string(spot.first) +
                           ", weight " + std::to_string(spot.second));
    }
  }
}

BigradedComplex build_lie_complex(const DifferentialSpec& d, const std::vector<int>& weights,
                                  bool unsafe) {
  const GeneratorSet& v = d.generators();
  const std::int64_t p = v.ring().p();
  BigradedComplex c;
  c.p = p;
  if (weights.empty()) return c;
  const int K = *std::max_element(weights.begin(), weights.end());
  if (*std::min_element(weights.begin(), weights.end()) < 1)
    throw InvalidInput("build_lie_complex: weights must be positive");
  const auto comps = freelie::lie_components(v, K, 1, unsafe);
  const zpmod::RingSpec fp = comps.front().ring;
  for (int w : weights) {
    const LieComponent& comp = comps[static_cast<std::size_t>(w - 1)];
    for (const auto& [deg, blk] : comp.blocks) c.ranks[{deg, w}] = blk.basis.cols();
    for (const auto& [deg, blk] : comp.blocks) {
      auto below = comp.blocks.find(deg - 1);
      if (below == comp.blocks.end()) {
        const auto words = freelie::words_by_degree(v, w);
        const Matrix img = d_matrix(blk, words_at(words, deg - 1), d, p);
        if (img != Matrix(img.rows(), img.cols())) throw std::logic_error("d leaves the Lie span");
        continue;
      }
      const Matrix img = d_matrix(blk, below->second.words, d, p);
      c.d[{deg, w}] = to_lie_coordinates(below->second, img, fp);
    }
  }
  c.validate();
  return c;
}

AcyclicBasis acyclic_basis(const BigradedComplex& c) {
  c.validate();
  if (c.ranks.empty()) return {};
  const zpmod::RingSpec fp(c.p, 1);
  std::vector<Spot> order;
  for (const auto& [spot, r] : c.ranks) order.push_back(spot);
  std::sort(order.begin(), order.end(), [](const Spot& a, const Spot& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
  AcyclicBasis out;
  for (const Spot& spot : order) {
    const auto [deg, w] = spot;
    const std::size_t r = c.ranks.at(spot);
    if (r == 0) continue;
    Matrix kernel = Matrix::identity(r);
    if (auto it = c.d.find(spot); it != c.d.end() && it->second.rows() > 0)
      kernel = zpmod::kernel_generators(it->second, fp);
    const Spot above{deg + 1, w};
    Matrix din;
    if (auto it = c.d.find(above); it != c.d.end()) din = it->second;
    const std::size_t boundary_rank = din.cols() == 0 ? 0 : zpmod::rank_mod_p(din, c.p);
    if (boundary_rank != kernel.cols())
      throw NotAcyclic(deg, w,
                       "complex is not exact at degree " + std::to_string(deg) + ", weight " +
                           std::to_string(w) + " (homology of dimension " +
                           std::to_string(kernel.cols() - boundary_rank) + ")");
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
      const std::vector<std::int64_t> y = kernel.column(k);
      auto x = zpmod::solve(din, y, fp);
      if (!x) throw std::logic_error("acyclic_basis: kernel vector not in the image");
      AcyclicPair pair{above, std::move(*x), y};
      ((deg + 1) % 2 == 0 ? out.even : out.odd).push_back(std::move(pair));
    }
  }
  return out;
}

}  // namespace zpalg::difflie
