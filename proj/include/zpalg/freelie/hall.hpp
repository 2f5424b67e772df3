#pragma once

#include <vector>

#include "zpalg/freelie/bracket.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::freelie {

int mobius(std::int64_t s);

/// W_n(k) = (1/k) sum_{d | k} mu(d) n^{k/d}.
BigInt witt(std::int64_t n, int k);

/// Basic products of weight k on generators 0..n-1, sorted. A bracket
/// [u, v] is basic when u < v are basic and, for v = [v1, v2], v1 <= u.
std::vector<BracketTree> basic_products(int n_gens, int k);

/// Basic products of every weight 1..k, indexed by weight (entry 0 empty).
std::vector<std::vector<BracketTree>> basic_products_upto(int n_gens, int k);

}  // namespace zpalg::freelie
