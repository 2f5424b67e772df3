#include "zpalg/freelie/hall.hpp"

#include <algorithm>

#include "zpalg/errors.hpp"

namespace zpalg::freelie {

int mobius(std::int64_t s) {
  if (s < 1) throw InvalidInput("mobius: argument must be positive, got " + std::to_string(s));
  int sign = 1;
  for (const auto& [prime, e] : factorize(s)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

BigInt witt(std::int64_t n, int k) {
  if (n < 1 || k < 1) throw InvalidInput("witt: n and k must be positive");
  BigInt sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const int mu = mobius(d);
    if (mu != 0) sum += mu * big_pow(n, static_cast<unsigned>(k / d));
  }
  if (sum % k != 0) throw std::logic_error("witt: sum not divisible by k");
  return sum / k;
}

std::vector<std::vector<BracketTree>> basic_products_upto(int n_gens, int k) {
  if (n_gens < 1) throw InvalidInput("basic_products: need at least one generator");
  if (k < 1) throw InvalidInput("basic_products: weight must be positive");
  std::vector<std::vector<BracketTree>> by_weight(static_cast<std::size_t>(k) + 1);
  for (int g = 0; g < n_gens; ++g) by_weight[1].push_back(BracketTree::leaf(g));
  for (int w = 2; w <= k; ++w) {
    auto& out = by_weight[static_cast<std::size_t>(w)];
    for (int a = 1; 2 * a <= w; ++a) {
      for (const auto& u : by_weight[static_cast<std::size_t>(a)])
        for (const auto& v : by_weight[static_cast<std::size_t>(w - a)]) {
          if (!(u < v)) continue;
          if (!v.is_leaf() && u < v.left()) continue;
          out.push_back(BracketTree::node(u, v));
        }
    }
    std::sort(out.begin(), out.end());
  }
  return by_weight;
}

std::vector<BracketTree> basic_products(int n_gens, int k) {
  return std::move(basic_products_upto(n_gens, k)[static_cast<std::size_t>(k)]);
}

}  // namespace zpalg::freelie
