#pragma once

#include <cstdint>
#include <string>

namespace zpalg::zpmod {

/// The coefficient ring Z/p^s.
class RingSpec {
 public:
  /// Validates p prime (trial division), s >= 1 and p^s < 2^62.
  RingSpec(std::int64_t p, int s);

  std::int64_t p() const noexcept { return p_; }
  int s() const noexcept { return s_; }
  std::int64_t modulus() const noexcept { return q_; }

  /// p^e for 0 <= e <= s.
  std::int64_t pow_p(int e) const;

  /// p-adic valuation of a residue; 0 maps to s.
  int valuation(std::int64_t a) const;

  std::int64_t norm(std::int64_t a) const;

  /// The ring Z/p^u for u <= s (same prime).
  RingSpec with_exponent(int u) const { return RingSpec(p_, u); }

  std::string str() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::int64_t p_;
  int s_;
  std::int64_t q_;
};

}  // namespace zpalg::zpmod
