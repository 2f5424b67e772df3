#include "zpalg/numeric.hpp"

#include <limits>
#include <tuple>

#include "zpalg/errors.hpp"

namespace zpalg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InvalidInput("factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw InvalidInput("checked_pow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
      throw InvalidInput("integer overflow computing " + std::to_string(base) + "^" +
                         std::to_string(exp));
    r *= base;
  }
  return r;
}

BigInt big_pow(std::int64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t q) {
  std::int64_t old_r = mod_norm(a, q), r = q;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1) throw InvalidInput("inv_mod: " + std::to_string(a) + " is not a unit mod " +
                                     std::to_string(q));
  return mod_norm(old_s, q);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace zpalg
