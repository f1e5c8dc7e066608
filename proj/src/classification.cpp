#include "infogeom/classification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "infogeom/errors.hpp"
#include "infogeom/numeric.hpp"

namespace infogeom {

FiniteExpFamily ReducedFamily::as_family() const { return FiniteExpFamily(log_weights, levels); }

ReducedFamily reduce(const FiniteExpFamily& fam, double level_tol) {
  if (!(level_tol >= 0.0) || !std::isfinite(level_tol)) {
    throw InvalidInput("level tolerance must be finite and non-negative");
  }
  const auto c = fam.c();
  const auto f = fam.f();
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return f[i] < f[j]; });

  const double spread = f[order.back()] - f[order.front()];
  const double join = level_tol * spread;

  ReducedFamily out;
  std::vector<double> group_c;
  for (std::size_t pos = 0; pos < order.size();) {
    group_c.clear();
    double sum_f = 0.0;
    double prev = f[order[pos]];
    while (pos < order.size() && f[order[pos]] - prev <= join) {
      prev = f[order[pos]];
      sum_f += prev;
      group_c.push_back(c[order[pos]]);
      ++pos;
    }
    out.levels.push_back(sum_f / static_cast<double>(group_c.size()));
    out.log_weights.push_back(numeric::log_sum_exp(group_c));
  }
  if (out.levels.size() < 2) {
    throw InvalidInput("F collapses to a single level under tolerance " + std::to_string(level_tol));
  }
  out.p = static_cast<int>(out.levels.size()) - 1;
  return out;
}

ClassificationResult classify_constant_curvature(const FiniteExpFamily& fam, double tol,
                                                 double level_tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("tolerance must be positive");
  const auto red = reduce(fam, level_tol);
  const int p = red.p;
  const auto& alpha = red.levels;
  const auto& omega = red.log_weights;

  const double s = omega.front() / p;
  const double r = omega.back() / p;
  const double span = alpha.back() - alpha.front();

  double residual = 0.0;
  for (int k = 0; k <= p; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double spacing = std::abs(alpha[i] - alpha.front() - (k * span) / p) / span;
    const double weight = std::abs(omega[i] - r * k - s * (p - k) - numeric::log_binomial(p, k));
    residual = std::max({residual, spacing, weight});
  }

  ClassificationResult out;
  out.p = p;
  out.residual = residual;
  out.is_constant = residual <= tol;
  if (out.is_constant) {
    out.lambda = 2.0 / p;
    out.r = r;
    out.s = s;
  }
  return out;
}

FiniteExpFamily make_constant_curvature_family(int p, double alpha0, double alphap, double r,
                                               double s) {
  if (p < 1) throw InvalidInput("p must be at least 1");
  if (!std::isfinite(alpha0) || !std::isfinite(alphap) || !(alpha0 < alphap)) {
    throw InvalidInput("need finite alpha0 < alphap");
  }
  if (!std::isfinite(r) || !std::isfinite(s)) throw InvalidInput("r and s must be finite");
  std::vector<double> c(static_cast<std::size_t>(p) + 1);
  std::vector<double> f(c.size());
  const double span = alphap - alpha0;
  for (int k = 0; k <= p; ++k) {
    const auto i = static_cast<std::size_t>(k);
    f[i] = alpha0 + (k * span) / p;
    c[i] = r * k + s * (p - k) + numeric::log_binomial(p, k);
  }
  return FiniteExpFamily(std::move(c), std::move(f));
}

FiniteExpFamily binomial_family(int n) {
  if (n < 1) throw InvalidInput("binomial family needs n >= 1");
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  std::vector<double> f(c.size());
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = numeric::log_binomial(n, k);
    f[static_cast<std::size_t>(k)] = k;
  }
  return FiniteExpFamily(std::move(c), std::move(f));
}

std::set<double> admissible_lambdas(int m) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  std::set<double> out;
  for (int k = 1; k <= m; ++k) out.insert(2.0 / k);
  return out;
}

}  // namespace infogeom
