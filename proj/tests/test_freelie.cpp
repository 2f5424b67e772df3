#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"
#include "zpalg/freelie/lie.hpp"

using namespace zpalg;
using namespace zpalg::freelie;

namespace {

const GeneratorSet kXY(RingSpec(3, 1), {{"x", 2}, {"y", 1}});

BracketTree L(int g) { return BracketTree::leaf(g); }
BracketTree N(const BracketTree& a, const BracketTree& b) { return BracketTree::node(a, b); }

BracketTree random_tree(int weight, int n_gens, std::mt19937& rng) {
  if (weight == 1) return L(std::uniform_int_distribution<int>(0, n_gens - 1)(rng));
  const int a = std::uniform_int_distribution<int>(1, weight - 1)(rng);
  return N(random_tree(a, n_gens, rng), random_tree(weight - a, n_gens, rng));
}

std::vector<BracketTree> all_trees(int weight, int n_gens) {
  std::vector<BracketTree> out;
  if (weight == 1) {
    for (int g = 0; g < n_gens; ++g) out.push_back(L(g));
    return out;
  }
  for (int a = 1; a < weight; ++a)
    for (const auto& l : all_trees(a, n_gens))
      for (const auto& r : all_trees(weight - a, n_gens)) out.push_back(N(l, r));
  return out;
}

// Tensor degree of a homogeneous element, computed from its words.
int tdeg(const TensorElement& e, const GeneratorSet& v) {
  return e.is_zero() ? 0 : word_degree(e.terms().begin()->first, v);
}

// F_p dimension per degree of the span of a set of homogeneous tensors.
std::map<int, std::size_t> fp_dims(const std::vector<TensorElement>& elems, const GeneratorSet& v,
                                   std::int64_t p) {
  std::map<int, std::vector<const TensorElement*>> by_deg;
  for (const auto& e : elems)
    if (!e.is_zero()) by_deg[tdeg(e, v)].push_back(&e);
  std::map<int, std::size_t> out;
  for (const auto& [d, list] : by_deg) {
    std::map<Word, std::size_t> idx;
    for (const auto* e : list)
      for (const auto& [w, c] : e->terms()) idx.emplace(w, idx.size());
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto* e : list) {
      std::vector<std::int64_t> r(idx.size(), 0);
      for (const auto& [w, c] : e->terms()) r[idx.at(w)] = c;
      rows.push_back(r);
    }
    if (auto rk = oracle::rank_fp(rows, p)) out[d] = rk;
  }
  return out;
}

std::size_t total(const zpmod::GradedModule& m) {
  std::size_t n = 0;
  for (const auto& [d, e] : m.components()) n += e.size();
  return n;
}

}  // namespace

TEST(Mobius, Values) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(7), -1);
  EXPECT_THROW(mobius(0), InvalidInput);
}

TEST(Witt, Values) {
  EXPECT_EQ(witt(2, 1), 2);
  EXPECT_EQ(witt(2, 3), 2);
  EXPECT_EQ(witt(2, 6), 9);
  EXPECT_EQ(witt(1, 2), 0);
  EXPECT_EQ(witt(1, 1), 1);
  EXPECT_EQ(witt(2, 20), 52377);
  EXPECT_EQ(witt(3, 8), 810);
  const std::vector<int> w2{2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161};
  for (int k = 1; k <= 14; ++k) EXPECT_EQ(witt(2, k), w2[static_cast<std::size_t>(k - 1)]);
}

TEST(Witt, MatchesLyndonWordCount) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= (n == 3 ? 8 : 12); ++k) EXPECT_EQ(witt(n, k), oracle::lyndon_count(n, k));
}

TEST(BasicProducts, SmallCases) {
  const auto b2 = basic_products(2, 2);
  ASSERT_EQ(b2.size(), 1u);
  EXPECT_EQ(b2[0], N(L(0), L(1)));
  const auto b3 = basic_products(2, 3);
  ASSERT_EQ(b3.size(), 2u);
  EXPECT_EQ(b3[0].str(kXY), "[x,[x,y]]");
  EXPECT_EQ(b3[1].str(kXY), "[y,[x,y]]");
  EXPECT_TRUE(basic_products(1, 2).empty());
  const auto b1 = basic_products(3, 1);
  ASSERT_EQ(b1.size(), 3u);
  EXPECT_TRUE(b1[2].is_leaf());
}

TEST(BasicProducts, CountEqualsWitt) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = basic_products_upto(n, 12);
    for (int k = 1; k <= 12; ++k)
      EXPECT_EQ(BigInt(all[static_cast<std::size_t>(k)].size()), witt(n, k)) << n << "," << k;
  }
}

TEST(BasicProducts, SortedAndDistinct) {
  const auto b = basic_products(3, 6);
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_LT(b[i - 1], b[i]);
  for (const auto& t : b) EXPECT_EQ(t.weight(), 6);
}

TEST(BracketTree, OrderAndDegree) {
  EXPECT_LT(L(0), L(1));
  EXPECT_LT(L(1), N(L(0), L(0)));
  EXPECT_LT(N(L(0), L(1)), N(L(1), L(0)));
  EXPECT_EQ(N(L(0), N(L(0), L(1))).degree(kXY), 5);
  EXPECT_EQ(N(L(0), N(L(0), L(1))).count(0), 2);
}

TEST(EmbedTensor, Examples) {
  const std::int64_t q = 3;
  TensorElement xy = embed_tensor(N(L(0), L(1)), kXY, q);
  TensorElement expect(q, Word{0, 1});
  expect.add(Word{1, 0}, -1);
  EXPECT_EQ(xy, expect);
  EXPECT_EQ(embed_tensor(N(L(1), L(1)), kXY, q), TensorElement(q, Word{1, 1}, 2));
  EXPECT_TRUE(embed_tensor(N(L(0), L(0)), kXY, q).is_zero());
}

TEST(EmbedTensor, CommutatorHomomorphismOnRandomTrees) {
  const GeneratorSet v(RingSpec(5, 2), {{"a", 2}, {"b", 1}, {"c", 3}});
  const std::int64_t q = 25;
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int w = std::uniform_int_distribution<int>(2, 6)(rng);
    const BracketTree t = random_tree(w, 3, rng);
    const TensorElement a = embed_tensor(t.left(), v, q), b = embed_tensor(t.right(), v, q);
    const int sign = (tdeg(a, v) * tdeg(b, v)) % 2 ? -1 : 1;
    ASSERT_EQ(embed_tensor(t, v, q), multiply(a, b) - multiply(b, a).scaled(sign));
    const TensorElement m = embed_tensor(t, v, q);
    if (!m.is_zero()) ASSERT_EQ(tdeg(m, v), t.degree(v));
    ASSERT_TRUE(m.is_homogeneous(v));
  }
}

TEST(EmbedTensor, AntisymmetryAndJacobi) {
  const GeneratorSet v(RingSpec(3, 2), {{"a", 2}, {"b", 1}, {"c", 3}, {"e", 4}});
  const std::int64_t q = 9;
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const BracketTree a = random_tree(std::uniform_int_distribution<int>(1, 3)(rng), 4, rng);
    const BracketTree b = random_tree(std::uniform_int_distribution<int>(1, 3)(rng), 4, rng);
    const BracketTree c = random_tree(std::uniform_int_distribution<int>(1, 2)(rng), 4, rng);
    const int ab = (a.degree(v) * b.degree(v)) % 2 ? -1 : 1;
    const auto m = [&](const BracketTree& t) { return embed_tensor(t, v, q); };
    ASSERT_TRUE((m(N(a, b)) + m(N(b, a)).scaled(ab)).is_zero());
    ASSERT_TRUE((m(N(a, N(b, c))) - m(N(N(a, b), c)) - m(N(b, N(a, c))).scaled(ab)).is_zero());
  }
  // [z,[z,z]] = 0 for odd z, including odd brackets
  for (const auto& z : {L(1), L(2), N(L(0), L(1))}) {
    ASSERT_EQ(z.degree(v) % 2, 1);
    EXPECT_TRUE(embed_tensor(N(z, N(z, z)), v, q).is_zero());
  }
}

TEST(TensorOps, ZetaIota) {
  const std::int64_t q = 9;
  TensorElement e(q, Word{0, 1});
  e.add(Word{0}, 1);
  EXPECT_EQ(zeta(e, 2), TensorElement(q, Word{0, 1}));
  EXPECT_EQ(zeta(e, 1), TensorElement(q, Word{0}));
  EXPECT_TRUE(zeta(e, 3).is_zero());
  const TensorElement h(q, Word{1, 1, 0}, 4);
  EXPECT_EQ(zeta(iota(h, 3), 3), h);
  EXPECT_TRUE(zeta(iota(h, 3), 2).is_zero());
  EXPECT_THROW(iota(e, 2), InvalidInput);
}

TEST(TensorOps, TensorDim) {
  const GeneratorSet two(RingSpec(3, 1), {{"a", 2}, {"b", 2}});
  const GeneratorSet three(RingSpec(3, 1), {{"a", 2}, {"b", 2}, {"c", 1}});
  EXPECT_EQ(tensor_dim(two, 5), 32);
  EXPECT_EQ(tensor_dim(three, 2), 9);
  EXPECT_THROW(tensor_dim(two, 0), InvalidInput);
}

TEST(LieComponent, MixedParityExamples) {
  const auto c1 = lie_component(kXY, 1, 1);
  EXPECT_EQ(c1.dims, zpmod::GradedModule(RingSpec(3, 1), {{2, {1}}, {1, {1}}}));
  const auto c2 = lie_component(kXY, 2, 1);
  EXPECT_EQ(c2.dims, zpmod::GradedModule(RingSpec(3, 1), {{3, {1}}, {2, {1}}}));
  const auto c3 = lie_component(kXY, 3, 1);
  EXPECT_EQ(total(c3.dims), 2u);
  // [x,[y,y]] = 2[y,[x,y]] and [y,[y,y]] = 0 in T(V)
  const std::int64_t q = 3;
  const auto xyy = embed_tensor(N(L(0), N(L(1), L(1))), kXY, q);
  const auto yxy = embed_tensor(N(L(1), N(L(0), L(1))), kXY, q);
  EXPECT_EQ(xyy, yxy.scaled(2));
  EXPECT_TRUE(embed_tensor(N(L(1), N(L(1), L(1))), kXY, q).is_zero());
}

TEST(LieComponent, RightNormedSpanEqualsAllTrees) {
  const std::vector<GeneratorSet> sets{
      kXY, GeneratorSet(RingSpec(3, 2), {{"x", 2}, {"y", 1}}),
      GeneratorSet(RingSpec(2, 2), {{"a", 1}, {"b", 2}}),
      GeneratorSet(RingSpec(5, 1), {{"a", 2}, {"b", 2}, {"c", 1}})};
  for (const auto& v : sets) {
    const int K = v.size() == 3 ? 4 : 5;
    const auto comps = lie_components(v, K, v.ring().s());
    for (int k = 1; k <= K; ++k) {
      const auto& comp = comps[static_cast<std::size_t>(k - 1)];
      for (const auto& [deg, blk] : comp.blocks) {
        std::map<Word, std::size_t> idx;
        for (std::size_t i = 0; i < blk.words.size(); ++i) idx.emplace(blk.words[i], i);
        std::vector<std::vector<std::int64_t>> cols;
        for (const auto& t : all_trees(k, static_cast<int>(v.size()))) {
          if (t.degree(v) != deg) continue;
          std::vector<std::int64_t> c(blk.words.size(), 0);
          const TensorElement e = embed_tensor(t, v, comp.ring.modulus());
          for (const auto& [w, a] : e.terms()) c[idx.at(w)] = a;
          cols.push_back(c);
        }
        const auto trees = zpmod::Matrix::from_columns(cols, blk.words.size());
        const auto a = zpmod::column_span_exponents(trees, comp.ring);
        const auto both = zpmod::column_span_exponents(zpmod::hconcat(blk.basis, trees), comp.ring);
        ASSERT_EQ(a, blk.exponents);
        ASSERT_EQ(both, blk.exponents);
      }
      // degrees with no block carry no nonzero trees
      for (const auto& t : all_trees(k, static_cast<int>(v.size())))
        if (!comp.blocks.count(t.degree(v)))
          ASSERT_TRUE(embed_tensor(t, v, comp.ring.modulus()).is_zero());
    }
  }
}

TEST(LieComponent, UngradedControlMatchesWittAndRankOracle) {
  const GeneratorSet v(RingSpec(5, 1), {{"a", 2}, {"b", 2}});
  const auto comps = lie_components(v, 8, 1);
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(BigInt(total(comps[static_cast<std::size_t>(k - 1)].dims)), witt(2, k));
    std::vector<TensorElement> brackets;
    for (const auto& t : basic_products(2, k)) brackets.push_back(embed_tensor(t, v, 5));
    std::size_t rk = 0;
    for (const auto& [d, r] : fp_dims(brackets, v, 5)) rk += r;
    EXPECT_EQ(BigInt(rk), witt(2, k));
  }
}

TEST(LieComponent, MixedParityAgainstRankOracle) {
  for (int k = 1; k <= 6; ++k) {
    const auto comp = lie_component(kXY, k, 1);
    std::vector<TensorElement> trees;
    for (const auto& t : all_trees(k, 2)) trees.push_back(embed_tensor(t, kXY, 3));
    const auto dims = fp_dims(trees, kXY, 3);
    std::map<int, std::size_t> got;
    for (const auto& [d, e] : comp.dims.components()) got[d] = e.size();
    EXPECT_EQ(got, dims) << "weight " << k;
  }
}

TEST(LieComponent, GuardsAndErrors) {
  const GeneratorSet many(RingSpec(3, 1), {{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}});
  EXPECT_THROW(lie_component(many, 11, 1), ResourceLimit);
  EXPECT_THROW(lie_component(kXY, 2, 2), InvalidInput);
  EXPECT_THROW(lie_component(kXY, 0, 1), InvalidInput);
}

TEST(Pbw, Diagnostic) {
  const GeneratorSet even(RingSpec(5, 1), {{"a", 2}, {"b", 2}});
  const auto r1 = pbw_series_diagnostic(even, 6);
  for (const auto& row : r1.rows) EXPECT_TRUE(row.matches_witt) << row.weight;
  EXPECT_TRUE(r1.series_matches);

  const auto r2 = pbw_series_diagnostic(kXY, 2);
  EXPECT_EQ(r2.rows[1].total, 2);
  EXPECT_EQ(r2.rows[1].witt, 1);
  EXPECT_FALSE(r2.rows[1].matches_witt);

  const GeneratorSet one(RingSpec(3, 1), {{"x", 2}});
  const auto r3 = pbw_series_diagnostic(one, 5);
  for (std::size_t k = 1; k < r3.rows.size(); ++k) EXPECT_EQ(r3.rows[k].total, 0);
}

TEST(GeneratorSet, Validation) {
  EXPECT_THROW(GeneratorSet(RingSpec(3, 1), {{"x", 2}, {"x", 1}}), InvalidInput);
  EXPECT_THROW(GeneratorSet(RingSpec(3, 1), {{"x", 0}}), InvalidInput);
  EXPECT_THROW(GeneratorSet(RingSpec(3, 1), {}), InvalidInput);
  EXPECT_THROW(standard_pair(RingSpec(3, 1), 3), InvalidInput);
  EXPECT_EQ(standard_pair(RingSpec(3, 1), 2), kXY);
}
