#include "zpalg/moore/moore.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"

namespace zpalg::moore {

namespace {

constexpr std::size_t kBasicProductLimit = std::size_t{1} << 18;
constexpr int kCertificateWeightLimit = 256;

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max())
    throw ResourceLimit(std::string(what) + ": multiplicity exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

void require_smashable(std::int64_t p, int r) {
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
  if (r < 1) throw InvalidInput("r must be at least 1");
  if (p == 2 && r == 1) throw Unsupported("smash of Moore spaces needs p^r != 2");
}

// The common (p, r) of both wedges; empty when both are empty.
std::optional<std::pair<std::int64_t, int>> common_coefficients(const MooreWedge& a,
                                                                const MooreWedge& b) {
  std::optional<std::pair<std::int64_t, int>> pr;
  for (const auto* w : {&a, &b})
    for (const auto& [s, mult] : w->entries()) {
      if (pr && *pr != std::pair{s.p, s.r})
        throw Unsupported("smash needs every summand over the same p^r");
      pr = std::pair{s.p, s.r};
    }
  return pr;
}

}  // namespace

void MooreSummand::validate() const {
  if (dim < 2) throw InvalidInput("Moore space dimension must be at least 2");
  if (!is_prime(p)) throw InvalidInput("Moore space prime must be prime, got " + std::to_string(p));
  if (r < 1) throw InvalidInput("Moore space exponent must be at least 1");
}

MooreWedge::MooreWedge(std::initializer_list<std::pair<MooreSummand, std::int64_t>> entries) {
  for (const auto& [s, mult] : entries) add(s, mult);
}

void MooreWedge::add(const MooreSummand& s, std::int64_t mult) {
  s.validate();
  if (mult < 0) throw InvalidInput("wedge multiplicity must be non-negative");
  if (mult > 0) entries_[s] += mult;
}

std::int64_t MooreWedge::count() const {
  std::int64_t n = 0;
  for (const auto& [s, mult] : entries_) n += mult;
  return n;
}

MooreWedge wedge(const MooreWedge& a, const MooreWedge& b) {
  MooreWedge out = a;
  for (const auto& [s, mult] : b.entries()) out.add(s, mult);
  return out;
}

MooreWedge crt_split(int n, std::int64_t ell) {
  if (n < 3) throw InvalidInput("crt_split needs n >= 3, got " + std::to_string(n));
  if (ell <= 1)
    throw InvalidInput("crt_split: P^n(" + std::to_string(ell) + ") is degenerate (need l >= 2)");
  MooreWedge out;
  for (const auto& [p, e] : factorize(ell)) out.add({n, p, e});
  return out;
}

Poly homology_poincare(const MooreWedge& w, std::int64_t p, int s) {
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
  if (s < 1) throw InvalidInput("coefficient exponent s must be at least 1");
  Poly out;
  for (const auto& [sm, mult] : w.entries()) {
    if (sm.p != p) continue;
    if (s > sm.r)
      throw InvalidInput("coefficients Z/" + std::to_string(p) + "^" + std::to_string(s) +
                         " exceed the torsion of P^" + std::to_string(sm.dim) + "(" +
                         std::to_string(p) + "^" + std::to_string(sm.r) + ")");
    out[sm.dim] += mult;
    out[sm.dim - 1] += mult;
  }
  return out;
}

MooreWedge smash(const MooreWedge& a, const MooreWedge& b) {
  const auto pr = common_coefficients(a, b);
  MooreWedge out;
  if (!pr) return out;
  require_smashable(pr->first, pr->second);
  for (const auto& [x, mx] : a.entries())
    for (const auto& [y, my] : b.entries()) {
      out.add({x.dim + y.dim, x.p, x.r}, mx * my);
      out.add({x.dim + y.dim - 1, x.p, x.r}, mx * my);
    }
  return out;
}

MooreWedge smash_power_binomial(int n, int m, int k1, int k2, std::int64_t p, int r) {
  require_smashable(p, r);
  if (n < 2 || m < 2) throw InvalidInput("smash_power_binomial needs n, m >= 2");
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1)
    throw InvalidInput("smash_power_binomial needs k1, k2 >= 0 and k1 + k2 >= 1");
  const int k = k1 + k2;
  MooreWedge out;
  for (int i = 0; i < k; ++i)
    out.add({k1 * n + k2 * m - i, p, r},
            to_i64(binomial(static_cast<unsigned>(k - 1), static_cast<unsigned>(i)),
                   "smash_power_binomial"));
  return out;
}

std::vector<HMFactor> hilton_milnor_expansion(int n, int m, std::int64_t p, int r, int K,
                                              bool unsafe) {
  require_smashable(p, r);
  if (n < 2 || m < 2) throw InvalidInput("hilton_milnor_expansion needs n, m >= 2");
  if (K < 1) throw InvalidInput("hilton_milnor_expansion needs K >= 1");
  if (!unsafe) {
    BigInt total = 0;
    for (int k = 1; k <= K; ++k) total += freelie::witt(2, k);
    if (total > kBasicProductLimit)
      throw ResourceLimit("hilton_milnor_expansion: " + to_string(total) +
                          " basic products exceed the limit (use --unsafe-limits)");
  }
  const auto products = freelie::basic_products_upto(2, K);
  std::vector<HMFactor> out;
  for (int k = 1; k <= K; ++k) {
    std::map<int, std::int64_t, std::greater<>> by_k1;
    for (const auto& b : products[static_cast<std::size_t>(k)]) ++by_k1[b.count(0)];
    for (const auto& [k1, cnt] : by_k1) {
      const int k2 = k - k1;
      HMFactor f{k1, k2, {}, cnt};
      // Omega Sigma of the smash power: one more suspension on every summand
      const MooreWedge power = smash_power_binomial(n, m, k1, k2, p, r);
      for (const auto& [s, mult] : power.entries())
        f.wedge.add({s.dim + 1, s.p, s.r}, mult);
      out.push_back(std::move(f));
    }
  }
  return out;
}

void GrowthParams::validate() const {
  if (n < 2 || m < 2) throw InvalidInput("growth params need n, m >= 2");
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
  if (r < 1) throw InvalidInput("r must be at least 1");
  if (s < 1 || s > r) throw InvalidInput("s must satisfy 1 <= s <= r");
  if (j < 0) throw InvalidInput("j must be non-negative");
  if (K < 1) throw InvalidInput("K must be at least 1");
  if (p == 2 && r == 1) throw Unsupported("growth certificate needs p^r != 2");
}

Certificate growth_certificate(const GrowthParams& params, bool unsafe) {
  params.validate();
  if (!unsafe && params.K > kCertificateWeightLimit)
    throw ResourceLimit("growth_certificate: K exceeds " + std::to_string(kCertificateWeightLimit) +
                        " (use --unsafe-limits)");
  const int lo = std::min(params.n, params.m), hi = std::max(params.n, params.m);
  Certificate cert;
  cert.params = params;
  BigInt running = 0;
  for (int k = 1; k <= params.K; ++k) {
    if (static_cast<std::int64_t>(k) * (lo - 1) <= params.j + 1) continue;
    Contribution c;
    c.k = k;
    c.count = big_pow(2, static_cast<unsigned>(k - 1)) * freelie::witt(2, k);
    c.maxdim = static_cast<std::int64_t>(k) * hi + 1 + params.j;
    c.comparison = Rational(big_pow(4, static_cast<unsigned>(k)), BigInt(2 * k));
    running += c.count;
    cert.cumulative.push_back(c.maxdim, running);
    cert.contributions.push_back(std::move(c));
  }
  return cert;
}

}  // namespace zpalg::moore
