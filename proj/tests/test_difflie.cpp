#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zpalg/difflie/cycles.hpp"
#include "zpalg/difflie/homology.hpp"
#include "zpalg/difflie/weights.hpp"
#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"
#include "zpalg/freelie/lie.hpp"

using namespace zpalg;
using namespace zpalg::difflie;
using freelie::RingSpec;
using freelie::Word;

using oracle::oracle_component;
using oracle::oracle_homology;
using oracle::total;

namespace {

BracketTree L(int g) { return BracketTree::leaf(g); }
BracketTree N(const BracketTree& a, const BracketTree& b) { return BracketTree::node(a, b); }
FreeNAElement E(std::int64_t q, const BracketTree& t, std::int64_t c = 1) {
  return FreeNAElement(q, t, c);
}

BracketTree random_tree(int weight, int n_gens, std::mt19937& rng) {
  if (weight == 1) return L(std::uniform_int_distribution<int>(0, n_gens - 1)(rng));
  const int a = std::uniform_int_distribution<int>(1, weight - 1)(rng);
  return N(random_tree(a, n_gens, rng), random_tree(weight - a, n_gens, rng));
}

// A differential with odd and even sources: x(2)->y(1), a(3)->2b(2) over Z/9.
DifferentialSpec mixed_spec() {
  const GeneratorSet v(RingSpec(3, 2), {{"x", 2}, {"y", 1}, {"a", 3}, {"b", 2}});
  return DifferentialSpec(v, {E(9, L(1)), FreeNAElement(9), E(9, L(3), 2), FreeNAElement(9)});
}

}  // namespace

TEST(Differentiate, Examples) {
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  EXPECT_EQ(differentiate(N(L(0), L(1)), d), E(3, N(L(1), L(1))));
  EXPECT_TRUE(differentiate(L(1), d).is_zero());
  EXPECT_EQ(differentiate(L(0), d), E(3, L(1)));
  // d[y,x] = [dy,x] - [y,dx] = -[y,y]
  EXPECT_EQ(differentiate(N(L(1), L(0)), d), E(3, N(L(1), L(1)), 2));
}

TEST(Differentiate, SpecValidation) {
  const GeneratorSet v(RingSpec(3, 1), {{"x", 2}, {"y", 1}});
  EXPECT_THROW(DifferentialSpec(v, {E(3, L(1))}), InvalidInput);
  EXPECT_THROW(DifferentialSpec(v, {E(3, L(0)), FreeNAElement(3)}), InvalidInput);  // wrong degree
  EXPECT_THROW(DifferentialSpec(v, {E(3, N(L(1), L(1))), FreeNAElement(3)}), InvalidInput);
  EXPECT_THROW(DifferentialSpec(v, {E(9, L(1)), FreeNAElement(9)}), InvalidInput);
  // d y = ... of degree 0 cannot exist; d(d x) != 0 needs a chain x -> y -> z
  const GeneratorSet w(RingSpec(3, 1), {{"x", 3}, {"y", 2}, {"z", 1}});
  EXPECT_THROW(DifferentialSpec(w, {E(3, L(1)), E(3, L(2)), FreeNAElement(3)}), InvalidInput);
  EXPECT_NO_THROW(DifferentialSpec(w, {E(3, L(1)), FreeNAElement(3), FreeNAElement(3)}));
}

TEST(Differentiate, SquareZeroAndCommutesWithEmbedOnRandomTrees) {
  std::mt19937 rng(11);
  for (const auto& d : {DifferentialSpec::standard(RingSpec(3, 1), 2),
                        DifferentialSpec::standard(RingSpec(5, 2), 4), mixed_spec()}) {
    const auto& v = d.generators();
    for (int trial = 0; trial < 300; ++trial) {
      const int w = std::uniform_int_distribution<int>(1, 8)(rng);
      const BracketTree t = random_tree(w, static_cast<int>(v.size()), rng);
      const FreeNAElement dt = differentiate(t, d);
      EXPECT_TRUE(differentiate(dt, d).is_zero()) << t.str(v);
      if (!dt.is_zero()) {
        EXPECT_EQ(dt.weight(), w);
        EXPECT_EQ(dt.degree(v), t.degree(v) - 1);
      }
      const TensorElement lhs = freelie::embed_tensor(dt, v);
      const TensorElement rhs = differentiate(freelie::embed_tensor(t, v, d.modulus()), d);
      EXPECT_EQ(lhs, rhs) << t.str(v);
    }
  }
}

TEST(Differentiate, ModulusChecks) {
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  EXPECT_THROW(differentiate(E(9, L(0)), d), InvalidInput);
  EXPECT_THROW(differentiate(TensorElement(9, Word{0}), d), InvalidInput);
  const auto d9 = DifferentialSpec::standard(RingSpec(3, 2), 2);
  EXPECT_EQ(differentiate(TensorElement(3, Word{0, 0}), d9),
            TensorElement(3, Word{1, 0}) + TensorElement(3, Word{0, 1}));
}

TEST(Cycles, TauExamples) {
  const auto d3 = DifferentialSpec::standard(RingSpec(3, 1), 2);
  const FreeNAElement x = E(3, L(0));
  const auto t1 = tau(x, 1, d3);
  EXPECT_EQ(t1, E(3, N(L(0), N(L(0), L(1)))));
  EXPECT_EQ(t1.degree(d3.generators()), 5);
  EXPECT_EQ(t1.weight(), 3);

  const auto d5 = DifferentialSpec::standard(RingSpec(5, 1), 2);
  const auto t5 = tau(E(5, L(0)), 1, d5);
  EXPECT_EQ(t5, E(5, N(L(0), N(L(0), N(L(0), N(L(0), L(1)))))));
  EXPECT_EQ(t5.weight(), 5);
  EXPECT_EQ(t5.degree(d5.generators()), 9);

  const auto t2 = tau(x, 2, d3);
  EXPECT_EQ(t2.weight(), 9);
  EXPECT_EQ(t2.degree(d3.generators()), 17);
}

TEST(Cycles, SigmaOverF3EmbedsToYXY) {
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  const auto& v = d.generators();
  const auto s1 = sigma(E(3, L(0)), 1, d);
  // coefficients C(3,1)/3 = C(3,2)/3 = 1, times 1/2 = 2 mod 3
  FreeNAElement expect(3);
  expect.add(N(L(1), N(L(0), L(1))), 2);
  expect.add(N(N(L(0), L(1)), L(1)), 2);
  EXPECT_EQ(s1, expect);
  EXPECT_EQ(s1.degree(v), 4);
  EXPECT_EQ(freelie::embed_tensor(s1, v), freelie::embed_tensor(N(L(1), N(L(0), L(1))), v, 3));
}

TEST(Cycles, SigmaCoefficientsAreIntegerBinomialsReduced) {
  // p = 5: C(5,j)/5 = 1,2,2,1; times 1/2 = 3 mod 5 gives 3,1,1,3
  const auto d = DifferentialSpec::standard(RingSpec(5, 1), 2);
  const auto s = sigma(E(5, L(0)), 1, d);
  std::vector<FreeNAElement> ad{E(5, L(1))};
  for (int i = 1; i < 4; ++i) ad.push_back(freelie::bracket(E(5, L(0)), ad.back()));
  FreeNAElement expect(5);
  const std::int64_t c[] = {3, 1, 1, 3};
  for (int j = 1; j <= 4; ++j) expect += freelie::bracket(ad[j - 1], ad[4 - j]).scaled(c[j - 1]);
  EXPECT_EQ(s, expect);
  EXPECT_EQ(s.weight(), 5);
  EXPECT_EQ(s.degree(d.generators()), 8);
}

TEST(Cycles, AreCyclesModP) {
  const auto d3 = DifferentialSpec::standard(RingSpec(3, 1), 2);
  for (int k = 1; k <= 2; ++k) {
    EXPECT_TRUE(is_cycle_mod_p(tau(E(3, L(0)), k, d3), d3)) << k;
    EXPECT_TRUE(is_cycle_mod_p(sigma(E(3, L(0)), k, d3), d3)) << k;
  }
  const auto d5 = DifferentialSpec::standard(RingSpec(5, 1), 2);
  EXPECT_TRUE(is_cycle_mod_p(tau(E(5, L(0)), 1, d5), d5));
  EXPECT_TRUE(is_cycle_mod_p(sigma(E(5, L(0)), 1, d5), d5));
  // the same elements over Z/9 are cycles mod 3 but not integrally
  const auto d9 = DifferentialSpec::standard(RingSpec(3, 2), 2);
  const auto t9 = tau(E(9, L(0)), 1, d9);
  EXPECT_TRUE(is_cycle_mod_p(t9, d9));
  EXPECT_FALSE(freelie::embed_tensor(differentiate(t9, d9), d9.generators()).is_zero());
  // [x,y] is not a cycle
  EXPECT_FALSE(is_cycle_mod_p(E(3, N(L(0), L(1))), d3));
}

TEST(Cycles, Errors) {
  const auto d3 = DifferentialSpec::standard(RingSpec(3, 1), 2);
  EXPECT_THROW(tau(E(3, L(1)), 1, d3), InvalidInput);
  EXPECT_THROW(sigma(E(3, L(1)), 1, d3), InvalidInput);
  EXPECT_THROW(tau(FreeNAElement(3), 1, d3), InvalidInput);
  EXPECT_THROW(tau(E(3, L(0)), 0, d3), InvalidInput);
  EXPECT_THROW(tau(E(3, L(0)), 3, d3), ResourceLimit);
  EXPECT_THROW(tau(E(3, N(L(0), L(0))), 2, d3), ResourceLimit);
  const auto d2 = DifferentialSpec::standard(RingSpec(2, 1), 2);
  EXPECT_THROW(sigma(E(2, L(0)), 1, d2), Unsupported);
  EXPECT_NO_THROW(tau(E(2, L(0)), 1, d2));
  EXPECT_EQ(default_cycle_limit(3), 12);
  EXPECT_EQ(default_cycle_limit(5), 5);
  EXPECT_EQ(default_cycle_limit(7), 7);
}

TEST(Homology, MatchesRankOracleOverF3AndF5) {
  for (std::int64_t p : {3, 5}) {
    const int K = p == 3 ? 8 : 5;
    const auto d = DifferentialSpec::standard(RingSpec(p, 1), 2);
    const auto reps = homology_upto(d, K, 1);
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(K));
    for (const auto& r : reps) {
      const auto comp = oracle_component(p, r.weight);
      const auto h = oracle_homology(p, r.weight);
      std::int64_t dim = 0;
      for (const auto& [deg, s] : comp) dim += static_cast<std::int64_t>(s.dim);
      EXPECT_EQ(r.dim_L(), dim) << p << " " << r.weight;
      EXPECT_EQ(r.dim_H(), total(h)) << p << " " << r.weight;
      for (const auto& [deg, spot] : r.spots) {
        EXPECT_EQ(static_cast<std::int64_t>(spot.H.size()), h.at(deg));
        EXPECT_EQ(spot.L.size(), comp.at(deg).dim);
        EXPECT_EQ(spot.L.size(), spot.Z.size() + comp.at(deg).rank_d);
      }
    }
  }
}

TEST(Homology, SupportPattern) {
  const auto d3 = DifferentialSpec::standard(RingSpec(3, 1), 2);
  const auto r3 = homology_upto(d3, 8, 1);
  for (int w : {2, 4, 5, 7, 8}) EXPECT_EQ(r3[static_cast<std::size_t>(w - 1)].dim_H(), 0) << w;
  EXPECT_EQ(r3[2].dim_H(), 2);
  EXPECT_EQ(r3[2].spots.at(4).H.size(), 1u);
  EXPECT_EQ(r3[2].spots.at(5).H.size(), 1u);
  EXPECT_EQ(r3[0].dim_H(), 0);
  EXPECT_EQ(r3[1].dim_L(), 2);
  EXPECT_EQ(r3[1].dim_B(), 1);

  const auto d5 = DifferentialSpec::standard(RingSpec(5, 1), 2);
  const auto r5 = homology_upto(d5, 5, 1);
  for (int w : {2, 3, 4}) EXPECT_EQ(r5[static_cast<std::size_t>(w - 1)].dim_H(), 0) << w;
  EXPECT_EQ(r5[4].dim_H(), 2);
}

TEST(Homology, OverZ9ReportsTorsionSummands) {
  // d tau_1 = 3[y,[x,y]] integrally, so weight 3 has Z/3 in degrees 4 and 5.
  const auto d = DifferentialSpec::standard(RingSpec(3, 2), 2);
  const auto r = homology(d, 3, 2);
  EXPECT_EQ(r.spots.at(5).L, Exponents({2}));
  EXPECT_EQ(r.spots.at(5).Z, Exponents({1}));
  EXPECT_EQ(r.spots.at(5).H, Exponents({1}));
  EXPECT_EQ(r.spots.at(4).B, Exponents({1}));
  EXPECT_EQ(r.spots.at(4).H, Exponents({1}));
  // weight 2 is still exact: d[x,y] = [y,y] and 2 is a unit
  EXPECT_EQ(homology(d, 2, 2).dim_H(), 0);
}

TEST(Homology, IndependentClasses) {
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  const FreeNAElement x = E(3, L(0));
  const auto t = tau(x, 1, d), s = sigma(x, 1, d);
  EXPECT_EQ(independent_classes(d, {t, s}), 2u);
  EXPECT_EQ(independent_classes(d, {t, t.scaled(2), s}), 2u);
  // [y,y] = d[x,y] is a boundary
  EXPECT_EQ(independent_classes(d, {E(3, N(L(1), L(1)))}), 0u);
  EXPECT_THROW(independent_classes(d, {E(3, N(L(0), L(1)))}), InvalidInput);
}

TEST(AcyclicBasis, WeightTwoPairsXYWithYY) {
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  const auto c = build_lie_complex(d, {2});
  EXPECT_EQ(c.ranks.at({3, 2}), 1u);
  EXPECT_EQ(c.ranks.at({2, 2}), 1u);
  const auto b = acyclic_basis(c);
  EXPECT_TRUE(b.even.empty());
  ASSERT_EQ(b.odd.size(), 1u);
  EXPECT_EQ(b.odd[0].spot, Spot(3, 2));
  const auto& m = c.d.at({3, 2});
  EXPECT_EQ(oracle::md(m(0, 0) * b.odd[0].x[0], 3), b.odd[0].y[0]);
  EXPECT_NE(b.odd[0].y[0], 0);
}

TEST(AcyclicBasis, PairsAreExactAndSpanEverything) {
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  const std::vector<int> weights{1, 2, 4, 5, 7};
  const auto c = build_lie_complex(d, weights);
  const auto b = acyclic_basis(c);
  std::size_t total_rank = 0;
  for (const auto& [s, r] : c.ranks) total_rank += r;
  EXPECT_EQ(2 * (b.even.size() + b.odd.size()), total_rank);
  std::map<Spot, std::vector<std::vector<std::int64_t>>> xs, ys;
  for (const auto* list : {&b.even, &b.odd})
    for (const auto& pr : *list) {
      EXPECT_EQ(pr.spot.first % 2 == 0, list == &b.even);
      const auto& m = c.d.at(pr.spot);
      EXPECT_EQ(zpmod::multiply(m, zpmod::Matrix::from_columns({pr.x}, m.cols()), 3).column(0),
                pr.y);
      xs[pr.spot].push_back(pr.x);
      ys[{pr.spot.first - 1, pr.spot.second}].push_back(pr.y);
    }
  // x's and y's together form a basis of each spot
  for (const auto& [s, r] : c.ranks) {
    std::vector<std::vector<std::int64_t>> rows = xs[s];
    rows.insert(rows.end(), ys[s].begin(), ys[s].end());
    EXPECT_EQ(rows.size(), r);
    EXPECT_EQ(oracle::rank_fp(rows, 3), r);
  }
}

TEST(AcyclicBasis, ZeroAndNonExactComplexes) {
  EXPECT_TRUE(acyclic_basis(BigradedComplex{3, {}, {}}).even.empty());
  BigradedComplex c{3, {{{4, 1}, 1}}, {}};
  try {
    acyclic_basis(c);
    FAIL() << "expected NotAcyclic";
  } catch (const NotAcyclic& e) {
    EXPECT_EQ(e.degree(), 4);
    EXPECT_EQ(e.weight(), 1);
  }
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  try {
    acyclic_basis(build_lie_complex(d, {3}));
    FAIL() << "expected NotAcyclic";
  } catch (const NotAcyclic& e) {
    EXPECT_EQ(e.weight(), 3);
    EXPECT_EQ(e.degree(), 4);
  }
  BigradedComplex bad{3, {{{2, 1}, 1}, {{1, 1}, 1}}, {{{2, 1}, zpmod::Matrix(2, 1)}}};
  EXPECT_THROW(bad.validate(), InvalidInput);
}

TEST(Weights, WeightedDim) {
  EXPECT_EQ(weighted_dim({{1, 2}, {2, 2}}, 2), Rational(3));
  EXPECT_EQ(weighted_dim({{1, 2}, {2, 2}}, 1), Rational(2));
  EXPECT_EQ(weighted_dim({}, 4), Rational(0));
  EXPECT_EQ(weighted_dim({{1, 2}, {3, 2}}, 3), Rational(8, 3));
  EXPECT_EQ(weighted_dim({{1, 1}, {2, 3}}, 2) + weighted_dim({{2, 1}}, 2),
            weighted_dim({{1, 1}, {2, 4}}, 2));
  EXPECT_THROW(weighted_dim({}, 0), InvalidInput);
}

TEST(Weights, InequalitiesHoldAndMatchOracle) {
  for (std::int64_t p : {3, 5}) {
    const int K = p == 3 ? 6 : 5;
    const auto rows = check_weight_inequalities(DifferentialSpec::standard(RingSpec(p, 1), 2), K);
    ASSERT_EQ(rows.size(), static_cast<std::size_t>(K));
    std::map<int, std::int64_t> L, H, B;
    for (int w = 1; w <= K; ++w) {
      const auto comp = oracle_component(p, w);
      for (const auto& [deg, s] : comp) {
        L[w] += static_cast<std::int64_t>(s.dim);
        B[w] += static_cast<std::int64_t>(s.rank_d);
      }
      H[w] = total(oracle_homology(p, w));
    }
    for (const auto& r : rows) {
      EXPECT_TRUE(r.homology_bound) << p << " " << r.k;
      EXPECT_TRUE(r.boundary_bound) << p << " " << r.k;
      EXPECT_EQ(r.dim_L, weighted_dim(L, r.k));
      EXPECT_EQ(r.dim_HL, weighted_dim(H, r.k));
      EXPECT_EQ(r.dim_BL, weighted_dim(B, r.k));
    }
  }
  const auto one = check_weight_inequalities(DifferentialSpec::standard(RingSpec(3, 1), 2), 1);
  EXPECT_EQ(one[0].dim_HL, Rational(0));
  EXPECT_EQ(one[0].dim_L, Rational(2));
}

TEST(Weights, NonAcyclicGeneratorsRejected) {
  const GeneratorSet v(RingSpec(3, 1), {{"x", 2}, {"y", 1}});
  const DifferentialSpec zero(v, {FreeNAElement(3), FreeNAElement(3)});
  EXPECT_THROW(check_weight_inequalities(zero, 3), NotAcyclic);
  EXPECT_THROW(boundary_growth(zero, 2), NotAcyclic);
}

TEST(BoundaryGrowth, ValuesAndBound) {
  const auto d = DifferentialSpec::standard(RingSpec(3, 1), 2);
  const auto rep = boundary_growth(d, 5);
  EXPECT_EQ(rep.top_degree, 2);
  EXPECT_EQ(rep.rank, 2u);
  ASSERT_EQ(rep.cumulative.size(), 10u);
  // boundaries by degree from the oracle, over every weight reaching degree 10
  std::map<int, std::int64_t> by_deg;
  for (int w = 1; w <= 10; ++w)
    for (const auto& [deg, s] : oracle_component(3, w))
      if (deg - 1 <= 10) by_deg[deg - 1] += static_cast<std::int64_t>(s.rank_d);
  std::int64_t run = 0;
  for (int j = 1; j <= 10; ++j) {
    run += by_deg[j];
    EXPECT_EQ(rep.cumulative.points()[static_cast<std::size_t>(j - 1)].a, BigInt(run)) << j;
  }
  ASSERT_EQ(rep.rows.size(), 5u);
  EXPECT_GE(rep.rows[1].lhs, 1);
  EXPECT_EQ(rep.rows[1].rhs, Rational(1, 6));
  for (const auto& r : rep.rows) {
    EXPECT_TRUE(r.holds) << r.k;
    EXPECT_EQ(r.rhs, Rational(2, 6 * r.k) * Rational(freelie::witt(2, r.k)));
  }
}

TEST(BoundaryGrowth, NeedsTwoGenerators) {
  const GeneratorSet v(RingSpec(3, 1), {{"x", 2}});
  EXPECT_THROW(boundary_growth(DifferentialSpec(v, {FreeNAElement(3)}), 2), InvalidInput);
  EXPECT_THROW(boundary_growth(DifferentialSpec::standard(RingSpec(3, 1), 2), 0), InvalidInput);
}
