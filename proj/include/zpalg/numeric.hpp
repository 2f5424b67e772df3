#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zpalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Exact integer power; throws InvalidInput on int64 overflow.
std::int64_t checked_pow(std::int64_t base, int exp);

BigInt big_pow(std::int64_t base, unsigned exp);
BigInt binomial(unsigned n, unsigned k);

inline std::int64_t mod_norm(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t q) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % q);
}

/// Inverse of a unit modulo q. Throws InvalidInput if gcd(a, q) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t q);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace zpalg
