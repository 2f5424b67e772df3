#pragma once

// Brute-force reference computations used to cross-check the library.
// Nothing here calls into the SNF code.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Elem = std::vector<std::int64_t>;

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::int64_t md(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

// Every element of Z/p^{t_0} + Z/p^{t_1} + ...
inline std::vector<Elem> elements(std::int64_t p, const std::vector<int>& exps) {
  std::vector<Elem> out{Elem{}};
  for (int t : exps) {
    std::vector<Elem> next;
    const std::int64_t q = ipow(p, t);
    for (const auto& e : out)
      for (std::int64_t a = 0; a < q; ++a) {
        Elem f = e;
        f.push_back(a);
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

inline Elem eval(const std::vector<std::vector<std::int64_t>>& rows, const std::vector<int>& dst,
                 std::int64_t p, const Elem& x) {
  Elem y(dst.size(), 0);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const std::int64_t q = ipow(p, dst[i]);
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc = md(acc + rows[i][j] * x[j], q);
    y[i] = acc;
  }
  return y;
}

// Summand exponents (descending) of a subgroup given as an explicit element
// set, read off from |p^k G| / |p^{k+1} G|.
inline std::vector<int> group_exponents(const std::set<Elem>& g, std::int64_t p,
                                        const std::vector<int>& ambient) {
  std::vector<std::size_t> sizes;
  std::set<Elem> cur = g;
  while (true) {
    sizes.push_back(cur.size());
    if (cur.size() == 1) break;
    std::set<Elem> next;
    for (const auto& e : cur) {
      Elem f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = md(f[i] * p, ipow(p, ambient[i]));
      next.insert(f);
    }
    cur = std::move(next);
  }
  // sizes[k] / sizes[k+1] = p^{#summands of exponent > k}
  std::vector<int> above;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    std::size_t r = sizes[k] / sizes[k + 1];
    int c = 0;
    while (r > 1) {
      r /= static_cast<std::size_t>(p);
      ++c;
    }
    above.push_back(c);
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < above.size(); ++k) {
    const int next = k + 1 < above.size() ? above[k + 1] : 0;
    for (int i = 0; i < above[k] - next; ++i) out.push_back(static_cast<int>(k) + 1);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::set<Elem> image_set(const std::vector<std::vector<std::int64_t>>& rows,
                                const std::vector<int>& src, const std::vector<int>& dst,
                                std::int64_t p) {
  std::set<Elem> out;
  for (const auto& x : elements(p, src)) out.insert(eval(rows, dst, p, x));
  return out;
}

inline std::set<Elem> kernel_set(const std::vector<std::vector<std::int64_t>>& rows,
                                 const std::vector<int>& src, const std::vector<int>& dst,
                                 std::int64_t p) {
  std::set<Elem> out;
  const Elem zero(dst.size(), 0);
  for (const auto& x : elements(p, src))
    if (eval(rows, dst, p, x) == zero) out.insert(x);
  return out;
}

// |Tor_1^{Z/p^s}(Z/p^t, Z/p^u)| from the periodic resolution
// ... -> Z/p^s --p^{s-t}--> Z/p^s --p^t--> Z/p^s -> Z/p^t,
// as ker(p^t on Z/p^u) / im(p^{s-t} on Z/p^u). Returns the exponent.
inline int tor_by_resolution(std::int64_t p, int s, int t, int u) {
  const std::int64_t q = ipow(p, u);
  std::size_t ker = 0;
  std::set<std::int64_t> im;
  for (std::int64_t a = 0; a < q; ++a) {
    if (md(a * ipow(p, t), q) == 0) ++ker;
    im.insert(md(a * ipow(p, s - t), q));
  }
  std::size_t r = ker / im.size();
  int e = 0;
  while (r > 1) {
    r /= static_cast<std::size_t>(p);
    ++e;
  }
  return e;
}

// Rank over F_p by elimination on a copy (row lists).
inline std::size_t rank_fp(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& v : row) v = md(v, p);
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::int64_t inv = 1;
    while (md(inv * m[rank][c], p) != 1) ++inv;
    for (auto& v : m[rank]) v = md(v * inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = md(m[i][j] - f * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

// Number of primitive necklaces (Lyndon words) of length k over n letters,
// counted by brute force over all words.
inline std::int64_t lyndon_count(int n, int k) {
  std::int64_t total = 0;
  std::vector<int> w(static_cast<std::size_t>(k), 0);
  while (true) {
    bool lyndon = true;
    for (int r = 1; r < k && lyndon; ++r) {
      // rotation by r must be strictly greater
      for (int i = 0; i < k; ++i) {
        const int a = w[static_cast<std::size_t>((i + r) % k)];
        const int b = w[static_cast<std::size_t>(i)];
        if (a != b) {
          if (a < b) lyndon = false;
          break;
        }
        if (i == k - 1) lyndon = false;  // periodic
      }
    }
    if (lyndon) ++total;
    int i = k - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return total;
}

// Integer polynomials as coefficient maps (exponent -> coefficient).
using Poly = std::map<int, std::int64_t>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) c[i + j] += x * y;
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

using Word = std::vector<int>;

// Degree/weight data of the standard pair x (deg 2) -> y (deg 1), worked out
// directly on words: L^{(w)} is spanned by right-normed brackets in T(V), and
// d replaces an x by y with sign (-1)^{degree of the prefix}.
struct OracleSpot {
  std::size_t dim = 0;     // dim L at this degree
  std::size_t rank_d = 0;  // rank of d out of it
};

using Vec = std::map<Word, std::int64_t>;

inline Vec bracket_words(const Vec& a, int deg_a, const Vec& b, int deg_b, std::int64_t p) {
  Vec out;
  const std::int64_t sign = (deg_a * deg_b) % 2 == 0 ? 1 : -1;
  for (const auto& [u, c] : a)
    for (const auto& [w, e] : b) {
      Word uw = u, wu = w;
      uw.insert(uw.end(), w.begin(), w.end());
      wu.insert(wu.end(), u.begin(), u.end());
      out[uw] = md(out[uw] + c * e, p);
      out[wu] = md(out[wu] - sign * c * e, p);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Vec d_words(const Vec& a, std::int64_t p) {
  Vec out;
  for (const auto& [w, c] : a) {
    int prefix = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) {
        Word nw = w;
        nw[i] = 1;
        out[nw] = md(out[nw] + (prefix % 2 == 0 ? c : -c), p);
      }
      prefix += w[i] == 0 ? 2 : 1;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::size_t rank_of(const std::vector<Vec>& vs, std::int64_t p) {
  std::map<Word, std::size_t> idx;
  for (const auto& v : vs)
    for (const auto& [w, c] : v) idx.emplace(w, idx.size());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& v : vs) {
    std::vector<std::int64_t> r(idx.size(), 0);
    for (const auto& [w, c] : v) r[idx.at(w)] = c;
    rows.push_back(std::move(r));
  }
  return idx.empty() ? 0 : rank_fp(rows, p);
}

inline std::map<int, OracleSpot> oracle_component(std::int64_t p, int weight) {
  std::map<int, std::vector<Vec>> span;  // degree -> right-normed elements
  std::vector<int> letters(static_cast<std::size_t>(weight), 0);
  while (true) {
    Vec cur{{Word{letters.back()}, 1}};
    int deg = letters.back() == 0 ? 2 : 1;
    for (int i = weight - 2; i >= 0; --i) {
      const int g = letters[static_cast<std::size_t>(i)];
      const int dg = g == 0 ? 2 : 1;
      cur = bracket_words({{Word{g}, 1}}, dg, cur, deg, p);
      deg += dg;
    }
    if (!cur.empty()) span[deg].push_back(cur);
    int i = weight - 1;
    while (i >= 0 && letters[static_cast<std::size_t>(i)] == 1) letters[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    letters[static_cast<std::size_t>(i)] = 1;
  }
  std::map<int, OracleSpot> out;
  for (const auto& [deg, vs] : span) {
    std::vector<Vec> dvs;
    for (const auto& v : vs) dvs.push_back(d_words(v, p));
    OracleSpot s{rank_of(vs, p), rank_of(dvs, p)};
    if (s.dim > 0) out[deg] = s;
  }
  return out;
}

// dim HL at each degree of the given weight.
inline std::map<int, std::int64_t> oracle_homology(std::int64_t p, int weight) {
  const auto c = oracle_component(p, weight);
  std::map<int, std::int64_t> out;
  for (const auto& [deg, s] : c) {
    std::int64_t h = static_cast<std::int64_t>(s.dim - s.rank_d);
    if (auto it = c.find(deg + 1); it != c.end()) h -= static_cast<std::int64_t>(it->second.rank_d);
    out[deg] = h;
  }
  return out;
}

inline std::int64_t total(const std::map<int, std::int64_t>& m) {
  std::int64_t n = 0;
  for (const auto& [k, v] : m) n += v;
  return n;
}

}  // namespace oracle
