#include "infogeom/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <iterator>

namespace infogeom::numeric {

double log_sum_exp(std::span<const double> x) {
  assert(!x.empty());
  const auto top = std::max_element(x.begin(), x.end());
  const double shift = *top;
  if (std::isinf(shift)) return shift;
  double rest = 0.0;
  for (auto it = x.begin(); it != x.end(); ++it) {
    if (it != top) rest += std::exp(*it - shift);
  }
  return shift + std::log1p(rest);
}

double log_binomial(int n, int k) {
  assert(n >= 0 && k >= 0 && k <= n);
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double lse_second_difference(std::span<const double> intercept, std::span<const double> slope,
                             double theta, double step) {
  assert(intercept.size() == slope.size() && !intercept.empty());
  const std::size_t n = intercept.size();
  std::size_t top = 0;
  double best = intercept[0] + theta * slope[0];
  for (std::size_t k = 1; k < n; ++k) {
    const double v = intercept[k] + theta * slope[k];
    if (v > best) {
      best = v;
      top = k;
    }
  }
  // Terms sharing the dominant slope sum to A exp(theta * b_top), which is
  // affine in log and has zero second difference; only log1p(rest / A) is
  // differenced. It is carried in long double because the difference is a tiny
  // fraction of its value when the slopes are close together.
  long double same_slope = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    if (slope[k] == slope[top]) same_slope += std::exp(static_cast<long double>(intercept[k]) + theta * static_cast<long double>(slope[k]) - best);
  }
  auto remainder = [&](long double offset) {
    long double rest = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
      if (slope[k] == slope[top]) continue;
      const long double shifted = (static_cast<long double>(intercept[k]) + theta * static_cast<long double>(slope[k])) - best;
      rest += std::exp(shifted + offset * (static_cast<long double>(slope[k]) - slope[top]));
    }
    return std::log1p(rest / same_slope);
  };
  const long double s = step;
  return static_cast<double>((remainder(s) - 2.0L * remainder(0.0L) + remainder(-s)) / (s * s));
}

}  // namespace infogeom::numeric
