#pragma once

#include <cstdint>

#include "zpalg/difflie/differential.hpp"

namespace zpalg::difflie {

/// Largest p^k * wt(x) allowed for tau/sigma without --unsafe-limits:
/// 12 at p = 3, otherwise p (a single power).
std::int64_t default_cycle_limit(std::int64_t p);

/// tau_k(x) = ad(x)^{p^k - 1}(dx), with p the characteristic of the differential's
/// ring. x must be homogeneous of even degree.
FreeNAElement tau(const FreeNAElement& x, int k, const DifferentialSpec& d, bool unsafe = false);

/// sigma_k(x) = 1/2 sum_{j=1}^{p^k-1} (C(p^k, j)/p) [ad^{j-1}(x)(dx), ad^{p^k-1-j}(x)(dx)]
/// with each coefficient C(p^k, j)/p * 1/2 reduced mod p. Unsupported at p = 2.
FreeNAElement sigma(const FreeNAElement& x, int k, const DifferentialSpec& d, bool unsafe = false);

/// d(xi) vanishes in T(V) (x) F_p.
bool is_cycle_mod_p(const FreeNAElement& xi, const DifferentialSpec& d);

}  // namespace zpalg::difflie
