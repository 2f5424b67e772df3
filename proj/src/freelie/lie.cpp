#include "zpalg/freelie/lie.hpp"

#include <algorithm>

#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"

namespace zpalg::freelie {

using zpmod::Exponents;
using zpmod::Matrix;

std::int64_t tensor_dim(const GeneratorSet& v, int k) {
  if (k < 1) throw InvalidInput("tensor_dim: weight must be at least 1 (reduced tensor algebra)");
  return checked_pow(static_cast<std::int64_t>(v.size()), k);
}

void check_word_guard(std::size_t n_gens, int k, bool unsafe) {
  if (unsafe) return;
  std::int64_t words = 1;
  for (int i = 0; i < k; ++i) {
    words *= static_cast<std::int64_t>(n_gens);
    if (words > kWordLimit)
      throw ResourceLimit("weight " + std::to_string(k) + " on " + std::to_string(n_gens) +
                          " generators exceeds the word limit 2^20 (use --unsafe-limits)");
  }
}

std::map<int, std::vector<Word>> words_by_degree(const GeneratorSet& v, int k) {
  std::map<int, std::vector<Word>> out;
  const int n = static_cast<int>(v.size());
  Word w(static_cast<std::size_t>(k), 0);
  while (true) {
    out[word_degree(w, v)].push_back(w);
    int i = k - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;  // lexicographic enumeration keeps each list sorted
}

std::vector<TensorElement> LieComponent::basis() const {
  std::vector<TensorElement> out;
  for (const auto& [deg, b] : blocks)
    for (std::size_t c = 0; c < b.basis.cols(); ++c) {
      TensorElement e(ring.modulus());
      for (std::size_t r = 0; r < b.words.size(); ++r) e.add(b.words[r], b.basis(r, c));
      out.push_back(std::move(e));
    }
  return out;
}

namespace {

// Replaces the spanning columns of one degree by an SNF-derived basis.
LieBlock reduce_block(int degree, std::vector<Word> words, const Matrix& span,
                      const zpmod::RingSpec& ring) {
  LieBlock b{degree, std::move(words), Matrix(), {}};
  if (span.cols() == 0) {
    b.basis = Matrix(b.words.size(), 0);
    return b;
  }
  const zpmod::SNFResult snf = zpmod::smith_normal_form(span, ring);
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    const int v = snf.diagonal[i];
    if (v >= ring.s()) continue;
    std::vector<std::int64_t> c = snf.U.inverse.column(i);
    for (auto& x : c) x = mul_mod(x, ring.pow_p(v), ring.modulus());
    cols.push_back(std::move(c));
    b.exponents.push_back(ring.s() - v);
  }
  b.basis = Matrix::from_columns(cols, b.words.size());
  return b;
}

}  // namespace

std::vector<LieComponent> lie_components(const GeneratorSet& v, int K, int u, bool unsafe) {
  if (K < 1) throw InvalidInput("lie_component: weight must be at least 1");
  if (u < 1 || u > v.ring().s())
    throw InvalidInput("lie_component: coefficient exponent " + std::to_string(u) +
                       " outside [1, " + std::to_string(v.ring().s()) + "]");
  check_word_guard(v.size(), K, unsafe);
  const zpmod::RingSpec ring = v.ring().with_exponent(u);
  const std::int64_t q = ring.modulus();

  std::vector<LieComponent> out;
  for (int k = 1; k <= K; ++k) {
    const auto words = words_by_degree(v, k);
    std::map<int, std::vector<TensorElement>> spanning;
    if (k == 1) {
      for (int g = 0; g < static_cast<int>(v.size()); ++g)
        spanning[v.degree(g)].emplace_back(q, Word{g});
    } else {
      for (const TensorElement& b : out.back().basis()) {
        const int db = word_degree(b.terms().begin()->first, v);
        for (int g = 0; g < static_cast<int>(v.size()); ++g) {
          const TensorElement x(q, Word{g});
          const int sign = (v.degree(g) * db) % 2 == 0 ? 1 : -1;
          TensorElement c = multiply(x, b) - multiply(b, x).scaled(sign);
          if (!c.is_zero()) spanning[v.degree(g) + db].push_back(std::move(c));
        }
      }
    }
    LieComponent comp{k, ring, zpmod::GradedModule(ring), {}};
    std::map<int, Exponents> dims;
    for (auto& [deg, elems] : spanning) {
      const std::vector<Word>& ws = words.at(deg);
      std::map<Word, std::size_t> index;
      for (std::size_t i = 0; i < ws.size(); ++i) index.emplace(ws[i], i);
      Matrix span(ws.size(), elems.size());
      for (std::size_t c = 0; c < elems.size(); ++c)
        for (const auto& [w, a] : elems[c].terms()) span(index.at(w), c) = a;
      LieBlock blk = reduce_block(deg, ws, span, ring);
      if (blk.exponents.empty()) continue;
      dims[deg] = blk.exponents;
      comp.blocks.emplace(deg, std::move(blk));
    }
    comp.dims = zpmod::GradedModule(ring, std::move(dims));
    out.push_back(std::move(comp));
  }
  return out;
}

LieComponent lie_component(const GeneratorSet& v, int k, int u, bool unsafe) {
  return std::move(lie_components(v, k, u, unsafe).back());
}

PbwReport pbw_series_diagnostic(const GeneratorSet& v, int K, bool unsafe) {
  const auto comps = lie_components(v, K, 1, unsafe);
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  PbwReport rep;
  std::vector<BigInt> series(static_cast<std::size_t>(K) + 1, 0);
  series[0] = 1;
  auto mul_by = [&](int k, const std::vector<BigInt>& factor) {
    // factor holds coefficients of t^{k j}
    std::vector<BigInt> next(series.size(), 0);
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series[i] == 0) continue;
      for (std::size_t j = 0; j < factor.size(); ++j) {
        const std::size_t e = i + j * static_cast<std::size_t>(k);
        if (e >= series.size()) break;
        next[e] += series[i] * factor[j];
      }
    }
    series = std::move(next);
  };
  for (const auto& c : comps) {
    PbwRow row;
    row.weight = c.weight;
    for (const auto& [deg, exps] : c.dims.components()) {
      const auto d = static_cast<std::int64_t>(exps.size());
      row.total += d;
      (deg % 2 == 0 ? row.even : row.odd) += d;
    }
    row.witt = witt(n, c.weight);
    row.matches_witt = BigInt(row.total) == row.witt;
    rep.rows.push_back(row);

    const std::size_t terms = static_cast<std::size_t>(K / c.weight) + 1;
    std::vector<BigInt> ext(terms), sym(terms);
    for (std::size_t j = 0; j < terms; ++j) {
      ext[j] = binomial(static_cast<unsigned>(row.odd), static_cast<unsigned>(j));
      sym[j] = row.even == 0 ? BigInt(j == 0 ? 1 : 0)
                             : binomial(static_cast<unsigned>(row.even + j - 1),
                                        static_cast<unsigned>(j));
    }
    mul_by(c.weight, ext);
    mul_by(c.weight, sym);
  }
  rep.product_series = series;
  for (int i = 0; i <= K; ++i) rep.expected_series.push_back(big_pow(n, static_cast<unsigned>(i)));
  rep.series_matches = rep.product_series == rep.expected_series;
  return rep;
}

}  // namespace zpalg::freelie
