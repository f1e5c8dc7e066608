#include "infogeom/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "infogeom/errors.hpp"
#include "infogeom/numeric.hpp"

namespace infogeom {

namespace {

void require_finite_theta(double theta) {
  if (!std::isfinite(theta)) throw InvalidInput("theta must be finite");
}

void require_finite(const std::vector<double>& v, const char* key) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k])) {
      throw InvalidInput(std::string(key) + "[" + std::to_string(k) + "] is not finite");
    }
  }
}

std::vector<double> exponents(const FiniteExpFamily& fam, double theta) {
  const auto c = fam.c();
  const auto f = fam.f();
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k] + theta * f[k];
  return out;
}

// Densities plus the F value of the most probable point. Deviations from that
// reference stay exact at the point carrying almost all of the mass.
struct Weighted {
  std::vector<double> p;
  double f_ref;
};

Weighted weighted(const FiniteExpFamily& fam, double theta) {
  auto lp = log_density(fam, theta);
  const auto top = std::max_element(lp.begin(), lp.end()) - lp.begin();
  for (auto& v : lp) v = std::exp(v);
  return {std::move(lp), fam.f()[static_cast<std::size_t>(top)]};
}

// F_k - eta for each k, with eta never formed explicitly.
std::vector<double> deviations(const FiniteExpFamily& fam, const Weighted& w) {
  const auto f = fam.f();
  double shift = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) shift += w.p[k] * (f[k] - w.f_ref);
  std::vector<double> d(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) d[k] = (f[k] - w.f_ref) - shift;
  return d;
}

}  // namespace

FiniteExpFamily::FiniteExpFamily(std::vector<double> c, std::vector<double> f)
    : c_(std::move(c)), f_(std::move(f)) {
  if (c_.size() != f_.size()) {
    throw InvalidInput("C and F must have equal length (got " + std::to_string(c_.size()) +
                       " and " + std::to_string(f_.size()) + ")");
  }
  if (f_.size() < 2) throw InvalidInput("a family needs at least two sample points");
  require_finite(c_, "C");
  require_finite(f_, "F");
  const auto [lo, hi] = std::minmax_element(f_.begin(), f_.end());
  if (!(*hi - *lo > 0.0)) throw InvalidInput("F must be non-constant");
}

double log_partition(const FiniteExpFamily& fam, double theta) {
  require_finite_theta(theta);
  const auto x = exponents(fam, theta);
  return numeric::log_sum_exp(x);
}

std::vector<double> log_density(const FiniteExpFamily& fam, double theta) {
  require_finite_theta(theta);
  auto x = exponents(fam, theta);
  const double psi = numeric::log_sum_exp(x);
  for (auto& v : x) v -= psi;
  return x;
}

std::vector<double> density(const FiniteExpFamily& fam, double theta) {
  auto p = log_density(fam, theta);
  for (auto& v : p) v = std::exp(v);
  return p;
}

double expectation_parameter(const FiniteExpFamily& fam, double theta) {
  const auto w = weighted(fam, theta);
  const auto f = fam.f();
  double shift = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) shift += w.p[k] * (f[k] - w.f_ref);
  return w.f_ref + shift;
}

double fisher_metric(const FiniteExpFamily& fam, double theta) {
  return central_moments(fam, theta).kappa2;
}

MomentSet central_moments(const FiniteExpFamily& fam, double theta) {
  const auto w = weighted(fam, theta);
  const auto d = deviations(fam, w);
  const auto f = fam.f();
  MomentSet m;
  double shift = 0.0;
  double mu4 = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double d2 = d[k] * d[k];
    shift += w.p[k] * (f[k] - w.f_ref);
    m.kappa2 += w.p[k] * d2;
    m.kappa3 += w.p[k] * d2 * d[k];
    mu4 += w.p[k] * d2 * d2;
  }
  m.eta = w.f_ref + shift;
  m.kappa4 = mu4 - 3.0 * m.kappa2 * m.kappa2;
  return m;
}

FRange f_range(const FiniteExpFamily& fam) {
  const auto f = fam.f();
  FRange out;
  out.f_min = *std::min_element(f.begin(), f.end());
  out.f_max = *std::max_element(f.begin(), f.end());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == out.f_min) out.i_min.push_back(k);
    if (f[k] == out.f_max) out.i_max.push_back(k);
  }
  return out;
}

double min_level_gap(const FiniteExpFamily& fam) {
  std::vector<double> sorted(fam.f().begin(), fam.f().end());
  std::sort(sorted.begin(), sorted.end());
  double gap = sorted.back() - sorted.front();
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    const double g = sorted[k] - sorted[k - 1];
    if (g > 0.0) gap = std::min(gap, g);
  }
  return gap;
}

}  // namespace infogeom
