#include "infogeom/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "infogeom/errors.hpp"

namespace infogeom {

namespace {

constexpr double kSignEps = 1e-12;

double dot(std::span<const double> x, std::span<const double> y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

// Orthogonal projection onto the complement of (1, ..., 1).
std::vector<double> centered(std::span<const double> v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  std::vector<double> out(v.begin(), v.end());
  for (auto& x : out) x -= mean;
  return out;
}

}  // namespace

GroupElement::GroupElement(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw InvalidInput("group element entries must be finite");
  }
  if (a == 0.0) throw InvalidInput("group element needs a != 0");
}

FiniteExpFamily act(const GroupElement& g, const FiniteExpFamily& fam) {
  const auto c = fam.c();
  const auto f = fam.f();
  std::vector<double> c_out(c.size());
  std::vector<double> f_out(f.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c_out[k] = c[k] + g.b() * f[k] + g.d();
    f_out[k] = g.a() * f[k] + g.c();
  }
  return FiniteExpFamily(std::move(c_out), std::move(f_out));
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  return {g1.a() * g2.a(), g2.b() + g1.b() * g2.a(), g1.a() * g2.c() + g1.c(),
          g2.d() + g1.b() * g2.c() + g1.d()};
}

GroupElement inverse(const GroupElement& g) {
  return {1.0 / g.a(), -g.b() / g.a(), -g.c() / g.a(), g.b() * g.c() / g.a() - g.d()};
}

std::optional<GroupElement> are_equivalent(const FiniteExpFamily& fam1, const FiniteExpFamily& fam2,
                                           double tol) {
  if (fam1.num_points() != fam2.num_points()) {
    throw IncompatibleFamilies("families have " + std::to_string(fam1.num_points()) + " and " +
                               std::to_string(fam2.num_points()) + " points");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("tolerance must be positive");
  const auto c1 = fam1.c();
  const auto f1 = fam1.f();
  const auto c2 = fam2.c();
  const auto f2 = fam2.f();
  const std::size_t n = f1.size();

  // F1 = a F2 + c, fixed by the most separated pair of F2.
  const auto [lo_it, hi_it] = std::minmax_element(f2.begin(), f2.end());
  const auto lo = static_cast<std::size_t>(lo_it - f2.begin());
  const auto hi = static_cast<std::size_t>(hi_it - f2.begin());
  const double a = (f1[hi] - f1[lo]) / (f2[hi] - f2[lo]);
  if (a == 0.0 || !std::isfinite(a)) return std::nullopt;
  const double c = f1[lo] - a * f2[lo];

  // C1 - C2 = b F2 + d in the least-squares sense.
  const double f2_mean = std::accumulate(f2.begin(), f2.end(), 0.0) / static_cast<double>(n);
  double y_mean = 0.0;
  for (std::size_t k = 0; k < n; ++k) y_mean += c1[k] - c2[k];
  y_mean /= static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = f2[k] - f2_mean;
    sxy += x * ((c1[k] - c2[k]) - y_mean);
    sxx += x * x;
  }
  const double b = sxy / sxx;
  const double d = y_mean - b * f2_mean;

  const GroupElement g(a, b, c, d);
  const auto image = act(g, fam2);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(std::abs(image.c()[k] - c1[k]) <= tol) || !(std::abs(image.f()[k] - f1[k]) <= tol)) {
      return std::nullopt;
    }
  }
  return g;
}

CanonicalClass canonical_representative(const FiniteExpFamily& fam) {
  auto dir = centered(fam.f());
  const double norm = std::sqrt(dot(dir, dir));
  if (!(norm >= 1e-12)) throw InvalidInput("F is numerically constant");
  for (auto& x : dir) x /= norm;
  const auto lead = std::find_if(dir.begin(), dir.end(), [](double x) { return std::abs(x) > kSignEps; });
  if (lead != dir.end() && *lead < 0.0) {
    for (auto& x : dir) x = -x;
  }

  auto base = centered(fam.c());
  const double along = dot(base, dir);
  for (std::size_t k = 0; k < base.size(); ++k) base[k] -= along * dir[k];
  return {std::move(base), std::move(dir)};
}

bool same_class(const CanonicalClass& x, const CanonicalClass& y, double tol) {
  if (x.base.size() != y.base.size()) return false;
  for (std::size_t k = 0; k < x.base.size(); ++k) {
    if (!(std::abs(x.base[k] - y.base[k]) <= tol)) return false;
    if (!(std::abs(x.direction[k] - y.direction[k]) <= tol)) return false;
  }
  return true;
}

bool reduced_equivalent_to_binomial(const FiniteExpFamily& fam, double tol, double level_tol) {
  const auto red = reduce(fam, level_tol);
  return are_equivalent(red.as_family(), binomial_family(red.p), tol).has_value();
}

}  // namespace infogeom
