#include "zpalg/growth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"

namespace zpalg::growth {

GrowthSequence::GrowthSequence(std::vector<GrowthPoint> points) {
  for (auto& p : points) push_back(p.m, std::move(p.a));
}

void GrowthSequence::push_back(std::int64_t m, BigInt a) {
  if (a < 0) throw InvalidInput("growth sequence values must be non-negative");
  if (!points_.empty() && m <= points_.back().m)
    throw InvalidInput("growth sequence indices must be strictly increasing");
  points_.push_back({m, std::move(a)});
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exponential:
      return "exponential";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::subexponential:
      return "subexponential";
  }
  return "inconclusive";
}

double log_big(const BigInt& a) {
  if (a <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned top = boost::multiprecision::msb(a);
  if (top < 53) return std::log(a.convert_to<double>());
  const unsigned shift = top - 52;
  const BigInt head = a >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

GrowthReport analyze(const GrowthSequence& seq, GrowthConfig cfg) {
  if (seq.size() < 2) throw InvalidInput("growth analysis needs at least 2 points");
  if (!(cfg.window > 0 && cfg.window <= 1)) throw InvalidInput("window fraction must be in (0, 1]");
  if (!(cfg.epsilon >= 0)) throw InvalidInput("epsilon must be non-negative");
  GrowthReport rep;
  rep.config = cfg;
  for (const auto& p : seq.points()) {
    if (p.m <= 0) throw InvalidInput("growth sequence indices must be positive");
    rep.ratios.emplace_back(p.m, log_big(p.a) / static_cast<double>(p.m));
  }
  const std::size_t len = rep.ratios.size();
  const auto w = static_cast<std::size_t>(std::ceil(cfg.window * static_cast<double>(len)));
  rep.window_points = std::clamp<std::size_t>(w, 1, len);
  double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = len - rep.window_points; i < len; ++i) inf = std::min(inf, rep.ratios[i].second);
  rep.tail_inf = inf;
  rep.base = std::exp(inf);
  if (std::isinf(inf) && inf < 0)
    rep.verdict = Verdict::subexponential;
  else if (inf > cfg.epsilon)
    rep.verdict = Verdict::exponential;
  else if (rep.window_points < 3)
    rep.verdict = Verdict::inconclusive;
  else
    rep.verdict = Verdict::subexponential;
  return rep;
}

std::vector<WittRatio> witt_asymptotic(std::int64_t n, int K) {
  if (n < 2) throw InvalidInput("witt_asymptotic: n must be at least 2");
  if (K < 1) throw InvalidInput("witt_asymptotic: K must be at least 1");
  std::vector<WittRatio> out;
  for (int k = 1; k <= K; ++k) {
    const Rational r(freelie::witt(n, k) * k, big_pow(n, static_cast<unsigned>(k)));
    out.push_back({k, r, r.convert_to<double>()});
  }
  return out;
}

}  // namespace zpalg::growth
