#include "zpalg/zpmod/module.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::zpmod {

namespace {

void check_exponents(const RingSpec& ring, const Exponents& exps, const char* what) {
  for (int t : exps)
    if (t < 1 || t > ring.s())
      throw InvalidInput(std::string(what) + ": exponent " + std::to_string(t) +
                         " outside [1, " + std::to_string(ring.s()) + "]");
}

bool all_free(const RingSpec& ring, const Exponents& exps) {
  return std::all_of(exps.begin(), exps.end(), [&](int t) { return t == ring.s(); });
}

// Columns p^{dst[i]} e_i for the non-free rows of the target.
Matrix relation_columns(const RingSpec& ring, const Exponents& dst) {
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (dst[i] >= ring.s()) continue;
    std::vector<std::int64_t> c(dst.size(), 0);
    c[i] = ring.pow_p(dst[i]);
    cols.push_back(std::move(c));
  }
  return Matrix::from_columns(cols, dst.size());
}

}  // namespace

// ---------------------------------------------------------------------------

GradedModule::GradedModule(RingSpec ring, std::map<int, Exponents> components) : ring_(ring) {
  for (auto& [deg, exps] : components) {
    check_exponents(ring_, exps, "graded module");
    if (exps.empty()) continue;
    std::sort(exps.begin(), exps.end(), std::greater<>());
    components_.emplace(deg, std::move(exps));
  }
}

GradedModule GradedModule::concentrated(RingSpec ring, int degree, Exponents exps) {
  return GradedModule(ring, {{degree, std::move(exps)}});
}

const Exponents& GradedModule::at(int degree) const {
  static const Exponents kEmpty;
  auto it = components_.find(degree);
  return it == components_.end() ? kEmpty : it->second;
}

bool GradedModule::is_free() const {
  return std::all_of(components_.begin(), components_.end(),
                     [&](const auto& kv) { return all_free(ring_, kv.second); });
}

Hom::Hom(RingSpec ring, Exponents src, Exponents dst, Matrix matrix)
    : ring_(ring), src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(matrix)) {
  check_exponents(ring_, src_, "hom source");
  check_exponents(ring_, dst_, "hom target");
  if (matrix_.rows() != dst_.size() || matrix_.cols() != src_.size()) {
    // A 0 x n or m x 0 map may arrive as an empty matrix.
    if (!(matrix_.empty() && (src_.empty() || dst_.empty())))
      throw InvalidInput("hom: matrix shape " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " does not match " +
                         std::to_string(dst_.size()) + "x" + std::to_string(src_.size()));
    matrix_ = Matrix(dst_.size(), src_.size());
  }
  for (std::size_t i = 0; i < dst_.size(); ++i) {
    const std::int64_t qi = ring_.pow_p(dst_[i]);
    for (std::size_t j = 0; j < src_.size(); ++j) {
      std::int64_t& a = matrix_(i, j);
      a = mod_norm(a, qi);
      if (dst_[i] > src_[j] && a % ring_.pow_p(dst_[i] - src_[j]) != 0)
        throw InvalidInput("hom: entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") = " + std::to_string(a) + " is not divisible by p^" +
                           std::to_string(dst_[i] - src_[j]) + "; map is not well defined");
    }
  }
}

ModuleMorphism::ModuleMorphism(GradedModule domain, GradedModule codomain, int shift,
                               std::map<int, Matrix> blocks)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), shift_(shift) {
  if (!(domain_.ring() == codomain_.ring()))
    throw InvalidInput("morphism: domain and codomain rings differ");
  for (const auto& [deg, m] : blocks) {
    if (domain_.at(deg).empty() || codomain_.at(deg + shift_).empty())
      throw InvalidInput("morphism: block at degree " + std::to_string(deg) +
                         " where one side is zero");
  }
  for (const auto& [deg, src] : domain_.components()) {
    const Exponents& dst = codomain_.at(deg + shift_);
    if (dst.empty()) continue;
    auto it = blocks.find(deg);
    Matrix m = it == blocks.end() ? Matrix(dst.size(), src.size()) : it->second;
    Hom h(domain_.ring(), src, dst, std::move(m));  // validates
    blocks_.emplace(deg, h.matrix());
  }
}

Hom ModuleMorphism::block(int domain_degree) const {
  const Exponents& src = domain_.at(domain_degree);
  const Exponents& dst = codomain_.at(domain_degree + shift_);
  auto it = blocks_.find(domain_degree);
  return Hom(domain_.ring(), src, dst,
             it == blocks_.end() ? Matrix(dst.size(), src.size()) : it->second);
}

// ---------------------------------------------------------------------------

std::int64_t dim_of(const GradedModule& m, int t, DegreeRange range) {
  if (t < 1 || t > m.ring().s())
    throw InvalidInput("dim_of: invalid exponent " + std::to_string(t));
  std::int64_t n = 0;
  for (auto it = m.components().lower_bound(range.lo);
       it != m.components().end() && it->first <= range.hi; ++it)
    n += std::count(it->second.begin(), it->second.end(), t);
  return n;
}

std::int64_t dim_of(const GradedModule& m, int t) {
  if (m.is_zero()) return dim_of(m, t, {0, -1});
  return dim_of(m, t, {m.components().begin()->first, m.components().rbegin()->first});
}

GradedModule tensor_reduce(const GradedModule& m, int u) {
  if (u < 1 || u > m.ring().s())
    throw InvalidInput("tensor_reduce: exponent " + std::to_string(u) + " outside [1, s]");
  std::map<int, Exponents> comps;
  for (const auto& [deg, exps] : m.components()) {
    Exponents e;
    for (int t : exps) e.push_back(std::min(t, u));
    comps.emplace(deg, std::move(e));
  }
  return GradedModule(m.ring().with_exponent(u), std::move(comps));
}

int tor_exponent(int s, int t, int u) { return std::min({t, u, s - t, s - u}); }

GradedModule tor(const GradedModule& m, const GradedModule& n) {
  if (!(m.ring() == n.ring())) throw InvalidInput("tor: ring mismatch");
  std::map<int, Exponents> comps;
  for (const auto& [i, mi] : m.components())
    for (const auto& [j, nj] : n.components())
      for (int t : mi)
        for (int u : nj)
          if (int e = tor_exponent(m.ring().s(), t, u); e > 0) comps[i + j].push_back(e);
  return GradedModule(m.ring(), std::move(comps));
}

// ---------------------------------------------------------------------------

Matrix free_kernel(const Hom& phi) {
  const std::size_t n = phi.src().size();
  if (n == 0) return Matrix(0, 0);
  const Matrix rel = relation_columns(phi.ring(), phi.dst());
  const Matrix full = hconcat(phi.matrix(), rel);
  const Matrix k = kernel_generators(full, phi.ring());
  return k.row_block(0, n);
}

Exponents image_exponents(const Hom& phi) {
  const std::size_t n = phi.src().size();
  if (n == 0 || phi.dst().empty()) return {};
  return cokernel_exponents(free_kernel(phi), n, phi.ring());
}

Exponents kernel_exponents(const Hom& phi) {
  const Matrix k = free_kernel(phi);
  if (k.cols() == 0) return {};
  Hom incl(phi.ring(), Exponents(k.cols(), phi.ring().s()), phi.src(), k);
  return image_exponents(incl);
}

Exponents cokernel_exponents(const Hom& phi) {
  const std::size_t m = phi.dst().size();
  if (m == 0) return {};
  const Matrix full = hconcat(phi.src().empty() ? Matrix(m, 0) : phi.matrix(),
                              relation_columns(phi.ring(), phi.dst()));
  return cokernel_exponents(full, m, phi.ring());
}

std::optional<std::vector<std::int64_t>> kernel_witness(const Hom& phi) {
  const Matrix k = free_kernel(phi);
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<std::int64_t> x(phi.src().size());
    bool nonzero = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = mod_norm(k(j, c), phi.ring().pow_p(phi.src()[j]));
      nonzero = nonzero || x[j] != 0;
    }
    if (nonzero) return x;
  }
  return std::nullopt;
}

bool is_injective(const Hom& phi) { return !kernel_witness(phi).has_value(); }

bool is_surjective(const Hom& phi) {
  const Exponents img = image_exponents(phi);
  return std::accumulate(img.begin(), img.end(), 0) ==
         std::accumulate(phi.dst().begin(), phi.dst().end(), 0);
}

Hom compose(const Hom& g, const Hom& f) {
  if (!(g.ring() == f.ring())) throw InvalidInput("compose: ring mismatch");
  if (g.src() != f.dst()) throw InvalidInput("compose: intermediate modules differ");
  const std::int64_t q = f.ring().modulus();
  Matrix m = (f.src().empty() || g.dst().empty())
                 ? Matrix(g.dst().size(), f.src().size())
                 : (f.dst().empty() ? Matrix(g.dst().size(), f.src().size())
                                    : multiply(g.matrix(), f.matrix(), q));
  return Hom(f.ring(), f.src(), g.dst(), std::move(m));
}

Hom tensor_reduce(const Hom& phi, int u) {
  if (u < 1 || u > phi.ring().s())
    throw InvalidInput("tensor_reduce: exponent " + std::to_string(u) + " outside [1, s]");
  auto cap = [u](Exponents e) {
    for (int& t : e) t = std::min(t, u);
    return e;
  };
  return Hom(phi.ring().with_exponent(u), cap(phi.src()), cap(phi.dst()), phi.matrix());
}

std::vector<std::int64_t> evaluate(const Hom& phi, std::span<const std::int64_t> x) {
  if (x.size() != phi.src().size()) throw InvalidInput("evaluate: element length mismatch");
  if (phi.dst().empty()) return {};
  if (phi.src().empty()) return std::vector<std::int64_t>(phi.dst().size(), 0);
  std::vector<std::int64_t> y = apply(phi.matrix(), x, phi.ring().modulus());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod_norm(y[i], phi.ring().pow_p(phi.dst()[i]));
  return y;
}

Exponents subquotient_exponents(const RingSpec& ring, const Exponents& ambient,
                                const Matrix& z_gens, const Matrix& b_gens) {
  const std::size_t a = z_gens.cols();
  if (a == 0) return {};
  Matrix full = z_gens;
  if (b_gens.cols() > 0) full = hconcat(full, b_gens);
  full = hconcat(full, relation_columns(ring, ambient));
  const Matrix k = kernel_generators(full, ring);
  return cokernel_exponents(k.cols() == 0 ? Matrix(a, 0) : k.row_block(0, a), a, ring);
}

SNFResult smith_normal_form(const Hom& phi) {
  if (!all_free(phi.ring(), phi.src()) || !all_free(phi.ring(), phi.dst()))
    throw Unsupported("smith_normal_form: domain and codomain must be free; lift to a free cover");
  return smith_normal_form(phi.matrix(), phi.ring());
}

std::map<int, SNFResult> smith_normal_form(const ModuleMorphism& phi) {
  std::map<int, SNFResult> out;
  for (const auto& [deg, m] : phi.blocks()) out.emplace(deg, smith_normal_form(phi.block(deg)));
  return out;
}

GradedModule image_dims(const ModuleMorphism& phi) {
  for (const auto& [deg, exps] : phi.codomain().components())
    if (!all_free(phi.codomain().ring(), exps))
      throw Unsupported("image_dims: codomain must be free");
  std::map<int, Exponents> comps;
  for (const auto& [deg, m] : phi.blocks()) {
    const Hom h = phi.block(deg);
    SNFResult snf = smith_normal_form(h.matrix(), h.ring());
    Exponents e;
    for (int v : snf.diagonal)
      if (v < h.ring().s()) e.push_back(h.ring().s() - v);
    comps[deg + phi.shift()] = std::move(e);
  }
  return GradedModule(phi.codomain().ring(), std::move(comps));
}

BasisChange split_injection_normalize(const Hom& phi) {
  const RingSpec& ring = phi.ring();
  const std::int64_t q = ring.modulus();
  if (!all_free(ring, phi.src()))
    throw Unsupported("split_injection_normalize: domain must be free");
  if (!std::is_sorted(phi.dst().begin(), phi.dst().end(), std::greater<>()))
    throw Unsupported("split_injection_normalize: codomain exponents must be sorted descending");
  const std::size_t m = phi.src().size(), n = phi.dst().size();
  const std::size_t n_free =
      static_cast<std::size_t>(std::count(phi.dst().begin(), phi.dst().end(), ring.s()));

  BasisChange bc{Matrix::identity(n), Matrix::identity(n)};
  Matrix& basis = bc.matrix;
  Matrix& coords = bc.inverse;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::int64_t> y = apply(coords, phi.matrix().column(j), q);
    for (std::size_t i = 0; i < n; ++i) y[i] = mod_norm(y[i], ring.pow_p(phi.dst()[i]));

    std::size_t pivot = n;
    for (std::size_t i = j; i < n_free; ++i)
      if (y[i] % ring.p() != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // p^{s-1} (x_j - sum_{i<j} y_i x_i) is a nonzero kernel element.
      std::vector<long long> w(m, 0);
      const std::int64_t top = ring.pow_p(ring.s() - 1);
      w[j] = top;
      for (std::size_t i = 0; i < j; ++i) w[i] = mod_norm(-mul_mod(top, y[i], q), q);
      throw NotInjective(0, std::move(w),
                         "split_injection_normalize: map is not injective (generator " +
                             std::to_string(j) + ")");
    }
    basis.swap_cols(j, pivot);
    coords.swap_rows(j, pivot);
    std::swap(y[j], y[pivot]);

    // New basis vector j is phi(x_j) = sum_i y_i e_i.
    const std::vector<std::int64_t> col = apply(basis, y, q);
    for (std::size_t r = 0; r < n; ++r) basis(r, j) = col[r];
    const std::int64_t yj_inv = inv_mod(y[j], q);
    for (auto& v : coords.row(j)) v = mul_mod(v, yj_inv, q);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || y[i] == 0) continue;
      const std::int64_t f = y[i];
      for (std::size_t c = 0; c < n; ++c)
        coords(i, c) = mod_norm(coords(i, c) - mul_mod(f, coords(j, c), q), q);
    }
  }
  return bc;
}

std::map<int, BasisChange> split_injection_normalize(const ModuleMorphism& phi) {
  std::map<int, BasisChange> out;
  for (const auto& [deg, exps] : phi.codomain().components())
    out.emplace(deg, BasisChange{Matrix::identity(exps.size()), Matrix::identity(exps.size())});
  for (const auto& [deg, src] : phi.domain().components()) {
    const Exponents& dst = phi.codomain().at(deg + phi.shift());
    if (dst.empty()) {
      std::vector<long long> w(src.size(), 0);
      w[0] = 1;
      throw NotInjective(deg, std::move(w),
                         "split_injection_normalize: degree " + std::to_string(deg) +
                             " maps to zero");
    }
    try {
      out[deg + phi.shift()] = split_injection_normalize(phi.block(deg));
    } catch (const NotInjective& e) {
      throw NotInjective(deg, e.witness(), e.what());
    }
  }
  return out;
}

bool factor_tensor_check(const Hom& f, const Hom& g, const Exponents& a_exps,
                         const Exponents& b_exps) {
  const RingSpec& ring = f.ring();
  Exponents mid = a_exps;
  mid.insert(mid.end(), b_exps.begin(), b_exps.end());
  if (!(g.ring() == ring) || f.dst() != mid || g.src() != mid)
    throw PreconditionViolation("shape", "factor_tensor_check: f, g do not factor through A + B");
  if (!all_free(ring, f.src()))
    throw PreconditionViolation("domain-not-free", "factor_tensor_check: domain of f must be free");
  for (int t : b_exps)
    if (t >= ring.s())
      throw PreconditionViolation("b-not-annihilated",
                                  "factor_tensor_check: p^{s-1} B != 0");
  if (!is_injective(compose(g, f)))
    throw PreconditionViolation("composite-not-injective",
                                "factor_tensor_check: g . f is not injective");
  Matrix proj(mid.size(), mid.size());
  for (std::size_t i = 0; i < a_exps.size(); ++i) proj(i, i) = 1;
  const Hom split(ring, mid, mid, std::move(proj));
  return is_injective(compose(g, compose(split, f)));
}

}  // namespace zpalg::zpmod
