#include "zpalg/difflie/cycles.hpp"

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::difflie {

std::int64_t default_cycle_limit(std::int64_t p) { return p == 3 ? 12 : p; }

namespace {

// ad(x)^i(dx) for i = 0..count-1, after validating x and the size guard.
std::vector<FreeNAElement> ad_powers(const FreeNAElement& x, int k, const DifferentialSpec& d,
                                     bool unsafe) {
  const GeneratorSet& v = d.generators();
  const std::int64_t p = v.ring().p();
  if (x.is_zero()) throw InvalidInput("tau/sigma: x must be nonzero");
  if (!x.is_homogeneous(v)) throw InvalidInput("tau/sigma: x must be homogeneous");
  if (x.degree(v) % 2 != 0)
    throw InvalidInput("tau/sigma: x must have even degree, got " + std::to_string(x.degree(v)));
  if (k < 1) throw InvalidInput("tau/sigma: k must be at least 1");
  const std::int64_t pk = checked_pow(p, k);
  if (!unsafe && pk * x.weight() > default_cycle_limit(p))
    throw ResourceLimit("tau/sigma: p^k * weight = " + std::to_string(pk * x.weight()) +
                        " exceeds the limit " + std::to_string(default_cycle_limit(p)) +
                        " (use --unsafe-limits)");
  std::vector<FreeNAElement> out{differentiate(x, d)};
  for (std::int64_t i = 1; i + 1 < pk; ++i) out.push_back(freelie::bracket(x, out.back()));
  return out;
}

}  // namespace

FreeNAElement tau(const FreeNAElement& x, int k, const DifferentialSpec& d, bool unsafe) {
  auto powers = ad_powers(x, k, d, unsafe);
  return freelie::bracket(x, powers.back());
}

FreeNAElement sigma(const FreeNAElement& x, int k, const DifferentialSpec& d, bool unsafe) {
  const std::int64_t p = d.generators().ring().p();
  if (p == 2) throw Unsupported("sigma: p = 2 is not supported (1/2 does not exist)");
  const auto powers = ad_powers(x, k, d, unsafe);
  const std::int64_t pk = checked_pow(p, k);
  const std::int64_t half = inv_mod(2, p);
  FreeNAElement out(d.modulus());
  for (std::int64_t j = 1; j < pk; ++j) {
    const BigInt c = binomial(static_cast<unsigned>(pk), static_cast<unsigned>(j));
    if (c % p != 0) throw std::logic_error("sigma: binomial not divisible by p");
    const auto cp = static_cast<std::int64_t>(BigInt((c / p) % p));
    const std::int64_t coeff = mul_mod(cp, half, p);
    if (coeff == 0) continue;
    out += freelie::bracket(powers[static_cast<std::size_t>(j - 1)],
                            powers[static_cast<std::size_t>(pk - 1 - j)])
               .scaled(coeff);
  }
  return out;
}

bool is_cycle_mod_p(const FreeNAElement& xi, const DifferentialSpec& d) {
  const std::int64_t p = d.generators().ring().p();
  const TensorElement t = freelie::embed_tensor(xi, d.generators()).reduced(p);
  return differentiate(t, d).is_zero();
}

}  // namespace zpalg::difflie
