#include "zpalg/zpmod/ring.hpp"

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::zpmod {

RingSpec::RingSpec(std::int64_t p, int s) : p_(p), s_(s), q_(1) {
  if (!is_prime(p)) throw InvalidInput("ring: p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw InvalidInput("ring: exponent s must be >= 1, got " + std::to_string(s));
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  for (int i = 0; i < s; ++i) {
    if (q_ > kLimit / p) throw InvalidInput("ring: p^s exceeds 2^62");
    q_ *= p;
  }
}

std::int64_t RingSpec::pow_p(int e) const {
  if (e < 0 || e > s_) throw InvalidInput("pow_p: exponent out of [0, s]");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

int RingSpec::valuation(std::int64_t a) const {
  a = norm(a);
  if (a == 0) return s_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

std::int64_t RingSpec::norm(std::int64_t a) const { return mod_norm(a, q_); }

std::string RingSpec::str() const {
  return "Z/" + std::to_string(p_) + "^" + std::to_string(s_);
}

}  // namespace zpalg::zpmod
