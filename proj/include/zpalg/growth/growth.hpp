#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zpalg/numeric.hpp"

namespace zpalg::growth {

struct GrowthPoint {
  std::int64_t m;
  BigInt a;
  friend bool operator==(const GrowthPoint&, const GrowthPoint&) = default;
};

/// Points (m, a_m) with strictly increasing m and a_m >= 0.
class GrowthSequence {
 public:
  GrowthSequence() = default;
  explicit GrowthSequence(std::vector<GrowthPoint> points);

  void push_back(std::int64_t m, BigInt a);
  const std::vector<GrowthPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  friend bool operator==(const GrowthSequence&, const GrowthSequence&) = default;

 private:
  std::vector<GrowthPoint> points_;
};

struct GrowthConfig {
  double epsilon = 0.05;
  double window = 0.5;  // fraction of points in the tail window
};

enum class Verdict { exponential, inconclusive, subexponential };
std::string to_string(Verdict v);

struct GrowthReport {
  std::vector<std::pair<std::int64_t, double>> ratios;  // ln(a_m)/m, -inf when a_m = 0
  double tail_inf = 0;
  double base = 0;  // exp(tail_inf)
  Verdict verdict = Verdict::inconclusive;
  GrowthConfig config;
  std::size_t window_points = 0;
};

/// Natural log of a positive integer; exact to double rounding for large
/// values by shifting out low bits.
double log_big(const BigInt& a);

/// Tail window = last ceil(window * len) points. A zero in the window gives
/// "subexponential"; otherwise "exponential" iff the window infimum of
/// ln(a_m)/m exceeds epsilon, "inconclusive" when it does not and the
/// window has fewer than 3 points, else "subexponential".
GrowthReport analyze(const GrowthSequence& seq, GrowthConfig cfg = {});

struct WittRatio {
  int k;
  Rational exact;  // k W_n(k) / n^k
  double value;
};

std::vector<WittRatio> witt_asymptotic(std::int64_t n, int K);

}  // namespace zpalg::growth
