#include "zpalg/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "zpalg/difflie/cycles.hpp"
#include "zpalg/difflie/differential.hpp"
#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"
#include "zpalg/freelie/tensor.hpp"
#include "zpalg/zpmod/module.hpp"

namespace zpalg::selfcheck {

namespace {

using zpmod::Exponents;
using zpmod::GradedModule;
using zpmod::Hom;
using zpmod::Matrix;
using zpmod::RingSpec;
using Elem = std::vector<std::int64_t>;
using Rng = std::mt19937_64;

// Small modules are also checked by listing their elements.
constexpr std::int64_t kBruteForceSize = 729;

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  // Runs one case; a thrown exception counts as a failure.
  void run(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    ++r_.cases;
    std::string why;
    try {
      if (body()) return;
    } catch (const std::exception& e) {
      why = std::string(" (threw: ") + e.what() + ")";
    }
    ++r_.failures;
    if (r_.first_failure.empty()) r_.first_failure = describe() + why;
  }

  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

std::string show(const Exponents& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + "]";
}

std::string show(const Hom& h) {
  std::string out = "Z/" + std::to_string(h.ring().p()) + "^" + std::to_string(h.ring().s()) +
                    " " + show(h.src()) + " -> " + show(h.dst()) + " rows";
  for (std::size_t i = 0; i < h.matrix().rows(); ++i) {
    out += " (";
    for (std::size_t j = 0; j < h.matrix().cols(); ++j)
      out += (j ? "," : "") + std::to_string(h.matrix()(i, j));
    out += ")";
  }
  return out;
}

// Descending exponent lists with entries in [1, s] and lengths in [lo, hi].
std::vector<Exponents> exponent_lists(int s, std::size_t lo, std::size_t hi) {
  std::vector<Exponents> out;
  std::function<void(Exponents&)> grow = [&](Exponents& cur) {
    if (cur.size() >= lo) out.push_back(cur);
    if (cur.size() == hi) return;
    const int top = cur.empty() ? s : cur.back();
    for (int t = top; t >= 1; --t) {
      cur.push_back(t);
      grow(cur);
      cur.pop_back();
    }
  };
  Exponents cur;
  grow(cur);
  return out;
}

Exponents random_exps(std::size_t lo, std::size_t hi, int max_exp, Rng& rng) {
  Exponents e(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
  for (int& t : e) t = std::uniform_int_distribution<int>(1, max_exp)(rng);
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

std::int64_t module_size(const RingSpec& ring, const Exponents& e) {
  std::int64_t n = 1;
  for (int t : e) {
    n *= ring.pow_p(t);
    if (n > (std::int64_t{1} << 40)) return n;
  }
  return n;
}

std::vector<Elem> elements(const RingSpec& ring, const Exponents& e) {
  std::vector<Elem> out{Elem{}};
  for (int t : e) {
    std::vector<Elem> next;
    for (const auto& x : out)
      for (std::int64_t a = 0; a < ring.pow_p(t); ++a) {
        Elem y = x;
        y.push_back(a);
        next.push_back(std::move(y));
      }
    out = std::move(next);
  }
  return out;
}

std::set<Elem> image_set(const Hom& h) {
  std::set<Elem> out;
  for (const auto& x : elements(h.ring(), h.src())) out.insert(zpmod::evaluate(h, x));
  return out;
}

bool brute_injective(const Hom& h) {
  return image_set(h).size() == static_cast<std::size_t>(module_size(h.ring(), h.src()));
}

// Summand exponents of a subgroup from the sizes of p^k G.
Exponents brute_exponents(const std::set<Elem>& g, const RingSpec& ring, const Exponents& ambient) {
  std::vector<std::size_t> sizes;
  std::set<Elem> cur = g;
  while (true) {
    sizes.push_back(cur.size());
    if (cur.size() <= 1) break;
    std::set<Elem> next;
    for (auto x : cur) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] * ring.p() % ring.pow_p(ambient[i]);
      next.insert(std::move(x));
    }
    cur = std::move(next);
  }
  Exponents out;
  std::vector<int> above;  // number of summands with exponent > k
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    std::size_t r = sizes[k] / sizes[k + 1];
    int c = 0;
    for (; r > 1; r /= static_cast<std::size_t>(ring.p())) ++c;
    above.push_back(c);
  }
  for (std::size_t k = 0; k < above.size(); ++k) {
    const int next = k + 1 < above.size() ? above[k + 1] : 0;
    for (int i = 0; i < above[k] - next; ++i) out.push_back(static_cast<int>(k) + 1);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Column j of a map out of Z/p^{src_j} into Z/p^{dst_i} must be divisible by
// p^{dst_i - src_j}; entries are indexed by multiples of that step.
std::int64_t entry_step(const RingSpec& ring, int dst_t, int src_t) {
  return ring.pow_p(std::max(0, dst_t - src_t));
}

Hom random_hom(const RingSpec& ring, const Exponents& src, const Exponents& dst, Rng& rng) {
  Matrix m(dst.size(), src.size());
  for (std::size_t i = 0; i < dst.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j) {
      const std::int64_t step = entry_step(ring, dst[i], src[j]);
      const std::int64_t count = ring.pow_p(dst[i]) / step;
      m(i, j) = std::uniform_int_distribution<std::int64_t>(0, count - 1)(rng) * step;
    }
  return Hom(ring, src, dst, m);
}

// Every map src -> dst, or cap random ones when there are more than cap.
void for_each_hom(const RingSpec& ring, const Exponents& src, const Exponents& dst,
                  std::uint64_t cap, Rng& rng, const std::function<void(const Hom&)>& fn) {
  std::vector<std::int64_t> counts, steps;
  double total = 1;
  for (std::size_t i = 0; i < dst.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j) {
      steps.push_back(entry_step(ring, dst[i], src[j]));
      counts.push_back(ring.pow_p(dst[i]) / steps.back());
      total *= static_cast<double>(counts.back());
    }
  if (total > static_cast<double>(cap)) {
    for (std::uint64_t n = 0; n < cap; ++n) fn(random_hom(ring, src, dst, rng));
    return;
  }
  std::vector<std::int64_t> digit(counts.size(), 0);
  while (true) {
    Matrix m(dst.size(), src.size());
    for (std::size_t k = 0; k < digit.size(); ++k) m(k / src.size(), k % src.size()) = digit[k] * steps[k];
    fn(Hom(ring, src, dst, m));
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == counts[k]) digit[k++] = 0;
    if (k == digit.size()) break;
  }
}

// Elementary basis changes of a module with the given exponents: scale e_i
// by a unit, or replace e_k by e_k + mu e_j when t_j <= t_k.
std::vector<Matrix> maneuvers(const RingSpec& ring, const Exponents& e) {
  std::vector<Matrix> out;
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::int64_t c = 1; c < ring.pow_p(e[i]); ++c) {
      if (c % ring.p() == 0) continue;
      Matrix m = Matrix::identity(n);
      m(i, i) = c;
      out.push_back(std::move(m));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k || e[j] > e[k]) continue;
      for (std::int64_t mu = 1; mu < ring.pow_p(e[j]); ++mu) {
        Matrix m = Matrix::identity(n);
        m(j, k) = mu;
        out.push_back(std::move(m));
      }
    }
  return out;
}

Matrix random_maneuver(const RingSpec& ring, const Exponents& e, Rng& rng) {
  const std::size_t n = e.size();
  Matrix m = Matrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t j = pick(rng), k = pick(rng);
  if (j == k || e[j] > e[k]) {
    std::uniform_int_distribution<std::int64_t> unit(1, ring.pow_p(e[j]) - 1);
    std::int64_t c = unit(rng);
    while (c % ring.p() == 0) c = unit(rng);
    m(j, j) = c;
  } else {
    m(j, k) = std::uniform_int_distribution<std::int64_t>(0, ring.pow_p(e[j]) - 1)(rng);
  }
  return m;
}

// A random automorphism of the module as a product of maneuvers.
Hom random_automorphism(const RingSpec& ring, const Exponents& e, Rng& rng) {
  Matrix m = Matrix::identity(e.size());
  for (int i = 0; i < 4; ++i) m = zpmod::multiply(random_maneuver(ring, e, rng), m, ring.modulus());
  return Hom(ring, e, e, m);
}

bool all_below(const Exponents& e, int bound) {
  return std::all_of(e.begin(), e.end(), [&](int t) { return t <= bound; });
}

std::int64_t count_at_least(const Exponents& e, int t) {
  return std::count_if(e.begin(), e.end(), [&](int x) { return x >= t; });
}

std::int64_t count_exact(const Exponents& e, int t) { return std::count(e.begin(), e.end(), t); }

// -- module suites ------------------------------------------------------------

bool maneuver_case(const RingSpec& ring, const Exponents& e, const Matrix& m) {
  const Hom h(ring, e, e, m);
  if (!zpmod::is_injective(h) || !zpmod::is_surjective(h)) return false;
  Exponents img = zpmod::image_exponents(h);
  std::sort(img.begin(), img.end(), std::greater<>());
  if (img != e) return false;
  if (module_size(ring, e) <= kBruteForceSize)
    return image_set(h).size() == static_cast<std::size_t>(module_size(ring, e));
  return true;
}

bool split_case(const Hom& h) {
  const RingSpec& ring = h.ring();
  const bool injective = zpmod::is_injective(h);
  if (module_size(ring, h.src()) <= kBruteForceSize && brute_injective(h) != injective) return false;
  try {
    const zpmod::BasisChange bc = zpmod::split_injection_normalize(h);
    if (!injective || !bc.consistent(ring.modulus())) return false;
    const auto& dst = h.dst();
    for (std::size_t j = 0; j < h.src().size(); ++j)
      for (std::size_t i = 0; i < dst.size(); ++i)
        if ((bc.matrix(i, j) - h.matrix()(i, j)) % ring.pow_p(dst[i]) != 0) return false;
    // the new basis is a basis: the change of basis is an automorphism
    const Hom p(ring, dst, dst, bc.matrix);
    if (!zpmod::is_injective(p) || !zpmod::is_surjective(p)) return false;
    return count_exact(dst, ring.s()) >= static_cast<std::int64_t>(h.src().size());
  } catch (const NotInjective& e) {
    if (injective) return false;
    const Elem w(e.witness().begin(), e.witness().end());
    const bool nonzero = std::any_of(w.begin(), w.end(), [&](std::int64_t a) { return a % ring.modulus() != 0; });
    return nonzero && zpmod::evaluate(h, w) == Elem(h.dst().size(), 0);
  }
}

bool factor_case(const Hom& f, const Hom& g, const Exponents& a, const Exponents& b) {
  const RingSpec& ring = f.ring();
  if (!zpmod::is_injective(zpmod::compose(g, f))) return true;  // hypothesis fails; nothing to check
  // g . i_A . pi_A . f built by zeroing the B rows of f
  Matrix fa = f.matrix();
  for (std::size_t i = a.size(); i < a.size() + b.size(); ++i)
    for (std::size_t j = 0; j < fa.cols(); ++j) fa(i, j) = 0;
  const Hom composite = zpmod::compose(g, Hom(ring, f.src(), f.dst(), fa));
  const bool injective = module_size(ring, f.src()) <= kBruteForceSize ? brute_injective(composite)
                                                                        : zpmod::is_injective(composite);
  return injective && zpmod::factor_tensor_check(f, g, a, b);
}

bool surjection_case(const Hom& h, std::uint64_t* surjective_seen) {
  const RingSpec& ring = h.ring();
  const bool surjective = zpmod::is_surjective(h);
  if (module_size(ring, h.src()) <= kBruteForceSize &&
      (image_set(h).size() == static_cast<std::size_t>(module_size(ring, h.dst()))) != surjective)
    return false;
  if (!surjective) return true;
  ++*surjective_seen;
  return count_exact(h.src(), ring.s()) >= count_exact(h.dst(), ring.s());
}

bool image_case(const Hom& h) {
  const RingSpec& ring = h.ring();
  const Exponents img = zpmod::image_exponents(h);
  if (module_size(ring, h.src()) <= kBruteForceSize) {
    Exponents sorted = img;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != brute_exponents(image_set(h), ring, h.dst())) return false;
  }
  return count_exact(img, ring.s()) ==
         static_cast<std::int64_t>(zpmod::rank_mod_p(h.matrix(), ring.p()));
}

// Over Z/p^r: a surjection M' -> N with p^s N = 0 forces
// sum_{t >= s} dim_t(M') >= dim_s(N).
bool sandwich_case(const Hom& g, int s) {
  if (!zpmod::is_surjective(g)) return true;
  return count_at_least(g.src(), s) >= count_exact(g.dst(), s);
}

// A generated by the columns of gens; A + pN = N must force A = N.
bool saturation_case(const RingSpec& ring, const Exponents& n, const Matrix& gens) {
  const Exponents free_src(gens.cols(), ring.s());
  const Hom a(ring, free_src, n, gens);
  Matrix with_pn = zpmod::hconcat(gens, Matrix(n.size(), n.size()));
  for (std::size_t i = 0; i < n.size(); ++i) with_pn(i, gens.cols() + i) = ring.p() % ring.pow_p(n[i]);
  const Hom apn(ring, Exponents(with_pn.cols(), ring.s()), n, with_pn);
  const bool sat = zpmod::is_surjective(apn), full = zpmod::is_surjective(a);
  if (module_size(ring, n) <= kBruteForceSize) {
    const auto size = static_cast<std::size_t>(module_size(ring, n));
    std::set<Elem> span{Elem(n.size(), 0)};
    for (std::size_t c = 0; c < gens.cols(); ++c) {
      std::set<Elem> next;
      const Elem col = gens.column(c);
      for (const auto& x : span)
        for (std::int64_t k = 0; k < ring.modulus(); ++k) {
          Elem y = x;
          for (std::size_t i = 0; i < n.size(); ++i) y[i] = (y[i] + k * col[i]) % ring.pow_p(n[i]);
          next.insert(std::move(y));
        }
      span = std::move(next);
    }
    if ((span.size() == size) != full) return false;
  }
  return !sat || full;
}

int tor_by_resolution(const RingSpec& ring, int t, int u) {
  // ker(p^t on Z/p^u) / im(p^{s-t} on Z/p^u) from the 2-periodic resolution
  const std::int64_t q = ring.pow_p(u);
  std::int64_t ker = 0;
  std::set<std::int64_t> im;
  for (std::int64_t a = 0; a < q; ++a) {
    if (a * ring.pow_p(t) % q == 0) ++ker;
    im.insert(a * ring.pow_p(ring.s() - t) % q);
  }
  int e = 0;
  for (std::int64_t r = ker / static_cast<std::int64_t>(im.size()); r > 1; r /= ring.p()) ++e;
  return e;
}

bool tor_case(const RingSpec& ring, const Exponents& m, const Exponents& n) {
  const auto gm = GradedModule::concentrated(ring, 0, m), gn = GradedModule::concentrated(ring, 0, n);
  const GradedModule t = zpmod::tor(gm, gn);
  if (t != zpmod::tor(gn, gm)) return false;
  if (!all_below(t.at(0), ring.s() - 1)) return false;  // p^{s-1} Tor = 0
  if ((gm.is_free() || gn.is_free()) && !t.is_zero()) return false;
  for (int a : m)
    for (int b : n)
      if (zpmod::tor_exponent(ring.s(), a, b) != tor_by_resolution(ring, a, b)) return false;
  return true;
}

bool persistence_case(const Hom& h) {
  if (!zpmod::is_injective(h)) return true;
  for (int t = 1; t < h.ring().s(); ++t) {
    const Hom r = zpmod::tensor_reduce(h, t);
    const bool inj = module_size(r.ring(), r.src()) <= kBruteForceSize ? brute_injective(r)
                                                                       : zpmod::is_injective(r);
    if (!inj) return false;
  }
  return true;
}

SuiteResult suite_maneuvers(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.3-basis-maneuvers");
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (const auto& e : exponent_lists(s, 1, 3))
      for (const auto& m : maneuvers(ring, e))
        tally.run([&] { return maneuver_case(ring, e, m); }, [&] { return "module " + show(e); });
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const Exponents e = random_exps(1, 4, ring.s(), rng);
    Matrix m = Matrix::identity(e.size());
    for (int k = 0; k < 3; ++k) m = zpmod::multiply(random_maneuver(ring, e, rng), m, ring.modulus());
    tally.run([&] { return maneuver_case(ring, e, m); }, [&] { return "random module " + show(e); });
  }
  return tally.result();
}

SuiteResult suite_split(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.4-split-injections");
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (std::size_t rank = 1; rank <= 2; ++rank)
      for (const auto& dst : exponent_lists(s, 1, 3))
        for_each_hom(ring, Exponents(rank, s), dst, cfg.enumeration_cap, rng, [&](const Hom& h) {
          tally.run([&] { return split_case(h); }, [&] { return show(h); });
        });
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const Exponents dst = random_exps(1, 4, ring.s(), rng);
    const Hom h = random_hom(ring, Exponents(std::uniform_int_distribution<std::size_t>(1, 3)(rng), ring.s()), dst, rng);
    tally.run([&] { return split_case(h); }, [&] { return show(h); });
  }
  return tally.result();
}

SuiteResult suite_factor(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.6-factor-tensor");
  auto one = [&](const RingSpec& ring, std::size_t x_rank, const Exponents& a, const Exponents& b,
                 const Exponents& y) {
    Exponents mid = a;
    mid.insert(mid.end(), b.begin(), b.end());
    const Hom f = random_hom(ring, Exponents(x_rank, ring.s()), mid, rng);
    const bool square = std::bernoulli_distribution(0.5)(rng);
    const Hom g = square ? random_automorphism(ring, mid, rng) : random_hom(ring, mid, y, rng);
    tally.run([&] { return factor_case(f, g, a, b); },
              [&] { return "f = " + show(f) + ", g = " + show(g); });
  };
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (std::size_t x = 1; x <= 2; ++x)
      for (const auto& a : exponent_lists(s, 1, 2))
        for (const auto& b : exponent_lists(s - 1, 0, 2))
          for (const auto& y : exponent_lists(s, 1, 3))
            for (int rep = 0; rep < 3; ++rep) one(ring, x, a, b, y);
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i)
    one(ring, std::uniform_int_distribution<std::size_t>(1, 2)(rng), random_exps(1, 2, ring.s(), rng),
        random_exps(0, 2, ring.s() - 1, rng), random_exps(1, 3, ring.s(), rng));
  return tally.result();
}

SuiteResult suite_surjection(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.7-surjection-monotonicity");
  std::uint64_t seen = 0;
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (const auto& m : exponent_lists(s, 1, 3))
      for (const auto& n : exponent_lists(s, 1, 2))
        for_each_hom(ring, m, n, cfg.enumeration_cap, rng, [&](const Hom& h) {
          tally.run([&] { return surjection_case(h, &seen); }, [&] { return show(h); });
        });
  }
  // surjective by construction: hit every generator of N, then twist
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const Exponents n = random_exps(1, 3, ring.s(), rng);
    Exponents m = n;
    for (int& t : m) t = std::uniform_int_distribution<int>(t, ring.s())(rng);
    const Exponents extra = random_exps(0, 2, ring.s(), rng);
    m.insert(m.end(), extra.begin(), extra.end());
    Matrix base = random_hom(ring, m, n, rng).matrix();
    for (std::size_t k = 0; k < n.size(); ++k)
      for (std::size_t r = 0; r < n.size(); ++r) base(r, k) = r == k ? 1 : 0;
    const Hom h = zpmod::compose(random_automorphism(ring, n, rng), Hom(ring, m, n, base));
    tally.run([&] { return zpmod::is_surjective(h) && surjection_case(h, &seen); },
              [&] { return show(h); });
  }
  if (seen == 0) tally.run([] { return false; }, [] { return std::string("no surjections generated"); });
  return tally.result();
}

SuiteResult suite_image(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.8-image-dims");
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (const auto& m : exponent_lists(s, 1, 3))
      for (std::size_t f = 1; f <= 2; ++f)
        for_each_hom(ring, m, Exponents(f, s), cfg.enumeration_cap, rng, [&](const Hom& h) {
          tally.run([&] { return image_case(h); }, [&] { return show(h); });
        });
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const Hom h = random_hom(ring, random_exps(1, 4, ring.s(), rng),
                             Exponents(std::uniform_int_distribution<std::size_t>(1, 3)(rng), ring.s()), rng);
    tally.run([&] { return image_case(h); }, [&] { return show(h); });
  }
  return tally.result();
}

SuiteResult suite_sandwich(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.9-sandwich");
  auto with_cover = [&](const Hom& g, int s) {
    tally.run([&] { return sandwich_case(g, s); }, [&] { return show(g) + ", s = " + std::to_string(s); });
    // M -> M' -> N from a free M
    const Hom f = random_hom(g.ring(), Exponents(std::uniform_int_distribution<std::size_t>(1, 3)(rng), g.ring().s()),
                             g.src(), rng);
    const Hom composite = zpmod::compose(g, f);
    tally.run([&] { return !zpmod::is_surjective(composite) || sandwich_case(g, s); },
              [&] { return "composite through " + show(g); });
  };
  for (int r = 1; r <= cfg.max_s; ++r) {
    const RingSpec ring(cfg.p, r);
    for (int s = 1; s <= r; ++s)
      for (const auto& mp : exponent_lists(r, 1, 2))
        for (const auto& n : exponent_lists(s, 1, 2))
          for_each_hom(ring, mp, n, cfg.enumeration_cap / 8, rng, [&](const Hom& g) { with_cover(g, s); });
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const int s = std::uniform_int_distribution<int>(1, ring.s())(rng);
    const Exponents n = random_exps(1, 3, s, rng);
    Exponents mp = n;
    for (int& t : mp) t = std::uniform_int_distribution<int>(t, ring.s())(rng);
    Matrix base = random_hom(ring, mp, n, rng).matrix();
    for (std::size_t k = 0; k < n.size(); ++k)
      for (std::size_t row = 0; row < n.size(); ++row) base(row, k) = row == k ? 1 : 0;
    with_cover(Hom(ring, mp, n, base), s);
    with_cover(random_hom(ring, random_exps(1, 3, ring.s(), rng), n, rng), s);
  }
  return tally.result();
}

SuiteResult suite_saturation(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.10-saturation");
  auto one = [&](const RingSpec& ring, const Exponents& n, const Matrix& gens) {
    tally.run([&] { return saturation_case(ring, n, gens); },
              [&] { return "N = " + show(n) + " over Z/" + std::to_string(ring.modulus()); });
  };
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (const auto& n : exponent_lists(s, 1, 2)) {
      const auto elems = elements(ring, n);
      const auto size = elems.size();
      if (size * size <= cfg.enumeration_cap * 16) {
        for (const auto& x : elems) one(ring, n, Matrix::from_columns({x}, n.size()));
        for (const auto& x : elems)
          for (const auto& y : elems) one(ring, n, Matrix::from_columns({x, y}, n.size()));
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, size - 1);
        for (std::uint64_t k = 0; k < cfg.enumeration_cap; ++k)
          one(ring, n, Matrix::from_columns({elems[pick(rng)], elems[pick(rng)]}, n.size()));
      }
    }
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const Exponents n = random_exps(1, 3, ring.s(), rng);
    one(ring, n, random_hom(ring, Exponents(std::uniform_int_distribution<std::size_t>(1, 3)(rng), ring.s()), n, rng).matrix());
  }
  return tally.result();
}

SuiteResult suite_tor(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.12-tor");
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    const auto lists = exponent_lists(s, 0, 3);
    for (const auto& m : lists)
      for (const auto& n : lists)
        tally.run([&] { return tor_case(ring, m, n); }, [&] { return show(m) + " " + show(n); });
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const Exponents m = random_exps(0, 4, ring.s(), rng), n = random_exps(0, 4, ring.s(), rng);
    tally.run([&] { return tor_case(ring, m, n); }, [&] { return show(m) + " " + show(n); });
  }
  return tally.result();
}

SuiteResult suite_persistence(const Config& cfg, Rng& rng) {
  Tally tally("lemma-7.13-injection-persistence");
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (std::size_t rank = 1; rank <= 2; ++rank)
      for (const auto& dst : exponent_lists(s, 1, 3))
        for_each_hom(ring, Exponents(rank, s), dst, cfg.enumeration_cap, rng, [&](const Hom& h) {
          tally.run([&] { return persistence_case(h); }, [&] { return show(h); });
        });
  }
  const RingSpec ring(cfg.p, cfg.random_s);
  for (int i = 0; i < cfg.seeds; ++i) {
    const Hom h = random_hom(ring, Exponents(std::uniform_int_distribution<std::size_t>(1, 3)(rng), ring.s()),
                             random_exps(1, 4, ring.s(), rng), rng);
    tally.run([&] { return persistence_case(h); }, [&] { return show(h); });
  }
  return tally.result();
}

// -- tensor suites ------------------------------------------------------------

using freelie::TensorElement;
using freelie::Word;

TensorElement random_factor(std::int64_t q, int n_gens, int max_len, Rng& rng) {
  TensorElement e(q);
  while (e.is_zero()) {
    const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < terms; ++i) {
      Word w(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, max_len)(rng)));
      for (int& g : w) g = std::uniform_int_distribution<int>(0, n_gens - 1)(rng);
      e.add(w, std::uniform_int_distribution<std::int64_t>(1, q - 1)(rng));
    }
  }
  return e;
}

bool trims_case(const std::vector<TensorElement>& factors) {
  const std::int64_t q = factors.front().modulus();
  TensorElement prod = factors.front(), lead = freelie::zeta(factors.front(), 1);
  for (std::size_t j = 1; j < factors.size(); ++j) {
    prod = freelie::multiply(prod, factors[j]);
    lead = freelie::multiply(lead, freelie::zeta(factors[j], 1));
  }
  const int k = static_cast<int>(factors.size());
  for (int i = 1; i < k; ++i)
    if (!freelie::zeta(prod, i).is_zero()) return false;
  return freelie::zeta(prod, k) == lead && lead.modulus() == q;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// A map from the truncated tensor algebra on a free module of rank a to the
// one on rank b (lengths 1..K), with injective diagonal blocks, arbitrary
// blocks into longer tensors, and blocks into shorter tensors divisible by p.
Hom leading_terms_map(const RingSpec& ring, int a, int b, int K, Rng& rng) {
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (int k = 1; k <= K; ++k) {
    row_off.push_back(row_off.back() + static_cast<std::size_t>(ipow(b, k)));
    col_off.push_back(col_off.back() + static_cast<std::size_t>(ipow(a, k)));
  }
  Matrix m(row_off.back(), col_off.back());
  std::uniform_int_distribution<std::int64_t> coeff(0, ring.modulus() - 1);
  for (int k = 1; k <= K; ++k) {
    const std::size_t cols = col_off[k] - col_off[k - 1];
    for (int j = 1; j <= K; ++j) {
      const std::size_t rows = row_off[j] - row_off[j - 1];
      Matrix blk(rows, cols);
      if (j == k) {
        const Exponents src(cols, ring.s()), dst(rows, ring.s());
        do {
          for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) blk(r, c) = coeff(rng);
        } while (!zpmod::is_injective(Hom(ring, src, dst, blk)));
      } else {
        const std::int64_t scale = j < k ? ring.p() : 1;
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < cols; ++c) blk(r, c) = coeff(rng) * scale % ring.modulus();
      }
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(row_off[j - 1] + r, col_off[k - 1] + c) = blk(r, c);
    }
  }
  return Hom(ring, Exponents(m.cols(), ring.s()), Exponents(m.rows(), ring.s()), m);
}

bool leading_terms_case(const Hom& f) {
  if (module_size(f.ring(), f.src()) <= kBruteForceSize) return brute_injective(f);
  return zpmod::is_injective(f);
}

SuiteResult suite_trims(const Config& cfg, Rng& rng) {
  Tally tally("lemma-10.9-leading-trims");
  const int per_s = std::max(1, cfg.seeds / cfg.max_s);
  for (int s = 1; s <= cfg.max_s; ++s) {
    const std::int64_t q = ipow(cfg.p, s);
    for (int i = 0; i < per_s; ++i) {
      const int k = std::uniform_int_distribution<int>(1, 4)(rng);
      const int n = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<TensorElement> factors;
      for (int j = 0; j < k; ++j) factors.push_back(random_factor(q, n, 3, rng));
      tally.run([&] { return trims_case(factors); },
                [&] { return "k = " + std::to_string(k) + " over Z/" + std::to_string(q); });
    }
  }
  return tally.result();
}

SuiteResult suite_leading_terms(const Config& cfg, Rng& rng) {
  Tally tally("lemma-10.10-leading-terms");
  const int per_s = std::max(1, cfg.seeds / cfg.max_s);
  for (int s = 1; s <= cfg.max_s; ++s) {
    const RingSpec ring(cfg.p, s);
    for (int i = 0; i < per_s; ++i) {
      const int a = std::uniform_int_distribution<int>(1, 2)(rng);
      const int b = std::uniform_int_distribution<int>(a, 2)(rng);
      const int K = std::uniform_int_distribution<int>(1, 4)(rng);
      const Hom f = leading_terms_map(ring, a, b, K, rng);
      tally.run([&] { return leading_terms_case(f); },
                [&] { return "a = " + std::to_string(a) + ", b = " + std::to_string(b) + ", K = " +
                             std::to_string(K) + ", " + ring.str(); });
    }
  }
  return tally.result();
}

// -- algebra suites -----------------------------------------------------------

using freelie::BracketTree;
using freelie::FreeNAElement;
using freelie::GeneratorSet;

BracketTree random_tree(int weight, int n_gens, Rng& rng) {
  if (weight == 1) return BracketTree::leaf(std::uniform_int_distribution<int>(0, n_gens - 1)(rng));
  const int a = std::uniform_int_distribution<int>(1, weight - 1)(rng);
  return BracketTree::node(random_tree(a, n_gens, rng), random_tree(weight - a, n_gens, rng));
}

SuiteResult suite_witt(const Config&) {
  Tally tally("freelie-witt-basic-products");
  for (int n : {2, 3})
    for (int k = 1; k <= (n == 2 ? 10 : 6); ++k)
      tally.run([&] { return BigInt(freelie::basic_products(n, k).size()) == freelie::witt(n, k); },
                [&] { return "n = " + std::to_string(n) + ", k = " + std::to_string(k); });
  return tally.result();
}

SuiteResult suite_lie_identities(const Config& cfg, Rng& rng) {
  Tally tally("freelie-antisymmetry-jacobi");
  const GeneratorSet v(RingSpec(cfg.p, 2), {{"x", 2}, {"y", 1}, {"z", 3}});
  const std::int64_t q = v.ring().modulus();
  auto sign = [](int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; };
  for (int i = 0; i < cfg.seeds; ++i) {
    std::uniform_int_distribution<int> w(1, 3);
    const BracketTree a = random_tree(w(rng), 3, rng), b = random_tree(w(rng), 3, rng),
                      c = random_tree(w(rng), 3, rng);
    const int da = a.degree(v), db = b.degree(v), dc = c.degree(v);
    auto emb = [&](const BracketTree& t) { return freelie::embed_tensor(t, v, q); };
    auto br = [](const BracketTree& x, const BracketTree& y) { return BracketTree::node(x, y); };
    tally.run(
        [&] {
          const TensorElement anti = emb(br(a, b)) + emb(br(b, a)).scaled(sign(da, db));
          const TensorElement jac = emb(br(a, br(b, c))).scaled(sign(da, dc)) +
                                    emb(br(b, br(c, a))).scaled(sign(db, da)) +
                                    emb(br(c, br(a, b))).scaled(sign(dc, db));
          return anti.is_zero() && jac.is_zero();
        },
        [&] { return a.str(v) + ", " + b.str(v) + ", " + c.str(v); });
  }
  return tally.result();
}

SuiteResult suite_differential(const Config& cfg, Rng& rng) {
  Tally tally("difflie-d-squared-and-embedding");
  const RingSpec ring(cfg.p, 2);
  const std::int64_t q = ring.modulus();
  const GeneratorSet mixed(ring, {{"x", 2}, {"y", 1}, {"a", 3}, {"b", 2}});
  const std::vector<difflie::DifferentialSpec> specs{
      difflie::DifferentialSpec::standard(ring, 2),
      difflie::DifferentialSpec(mixed, {FreeNAElement(q, BracketTree::leaf(1)), FreeNAElement(q),
                                        FreeNAElement(q, BracketTree::leaf(3), 2), FreeNAElement(q)})};
  for (const auto& d : specs) {
    const auto& v = d.generators();
    for (int i = 0; i < cfg.seeds; ++i) {
      const BracketTree t = random_tree(std::uniform_int_distribution<int>(1, 8)(rng),
                                        static_cast<int>(v.size()), rng);
      tally.run(
          [&] {
            const FreeNAElement dt = difflie::differentiate(t, d);
            if (!difflie::differentiate(dt, d).is_zero()) return false;
            return freelie::embed_tensor(dt, v) ==
                   difflie::differentiate(freelie::embed_tensor(t, v, q), d);
          },
          [&] { return t.str(v); });
    }
  }
  return tally.result();
}

SuiteResult suite_cycles(const Config&) {
  Tally tally("difflie-tau-sigma-cycles");
  for (auto [p, k] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    const auto d = difflie::DifferentialSpec::standard(RingSpec(p, 1), 2);
    const FreeNAElement x(p, BracketTree::leaf(0));
    const std::string at = "p = " + std::to_string(p) + ", k = " + std::to_string(k);
    tally.run([&] { return difflie::is_cycle_mod_p(difflie::tau(x, k, d), d); },
              [&] { return "tau at " + at; });
    tally.run([&] { return difflie::is_cycle_mod_p(difflie::sigma(x, k, d), d); },
              [&] { return "sigma at " + at; });
  }
  return tally.result();
}

}  // namespace

std::vector<SuiteResult> module_suites(const Config& cfg) {
  Rng rng(cfg.seed);
  return {suite_maneuvers(cfg, rng),  suite_split(cfg, rng),      suite_factor(cfg, rng),
          suite_surjection(cfg, rng), suite_image(cfg, rng),      suite_sandwich(cfg, rng),
          suite_saturation(cfg, rng), suite_tor(cfg, rng),        suite_persistence(cfg, rng)};
}

std::vector<SuiteResult> tensor_suites(const Config& cfg) {
  Rng rng(cfg.seed + 1);
  return {suite_trims(cfg, rng), suite_leading_terms(cfg, rng)};
}

std::vector<SuiteResult> algebra_suites(const Config& cfg) {
  Rng rng(cfg.seed + 2);
  return {suite_witt(cfg), suite_lie_identities(cfg, rng), suite_differential(cfg, rng),
          suite_cycles(cfg)};
}

std::vector<SuiteResult> run_all(const Config& cfg) {
  std::vector<SuiteResult> out = module_suites(cfg);
  for (auto* part : {&tensor_suites, &algebra_suites}) {
    auto more = (*part)(cfg);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

}  // namespace zpalg::selfcheck
