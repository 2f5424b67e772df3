#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zpalg::selfcheck {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when nothing failed

  bool ok() const noexcept { return failures == 0 && cases > 0; }
};

struct Config {
  std::int64_t p = 3;
  int max_s = 3;         // exhaustive runs cover s = 1..max_s
  int random_s = 4;      // randomized runs use this exponent
  int seeds = 1000;      // randomized cases per suite
  std::uint64_t seed = 1;
  /// Exhaustive enumerations larger than this are sampled instead.
  std::uint64_t enumeration_cap = 4096;
};

/// Module-theory suites: basis maneuvers, split injections, factor_tensor,
/// surjection monotonicity, image dims, the sandwich inequality,
/// saturation (A + pN = N), Tor, and injection persistence.
std::vector<SuiteResult> module_suites(const Config& cfg);

/// Leading-term identities in the tensor algebra: zeta_i of a product of
/// k factors, and injectivity of block maps with injective leading terms.
std::vector<SuiteResult> tensor_suites(const Config& cfg);

/// Free Lie identities (Witt counts, antisymmetry, Jacobi) and differential
/// checks (d^2 = 0, commuting with the embedding, tau/sigma cycles).
std::vector<SuiteResult> algebra_suites(const Config& cfg);

std::vector<SuiteResult> run_all(const Config& cfg);

}  // namespace zpalg::selfcheck
