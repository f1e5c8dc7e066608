#include "infogeom/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "infogeom/errors.hpp"
#include "infogeom/kernels.hpp"
#include "infogeom/numeric.hpp"

namespace infogeom {

GridSpec default_grid(const FiniteExpFamily& fam) {
  const auto range = f_range(fam);
  const double half = kDefaultGridHalfWidth / (range.f_max - range.f_min);
  return {-half, half, kDefaultGridPoints, kDefaultConstancyTol};
}

double hessian_scalar_curvature(const FiniteExpFamily& fam, double theta) {
  if (!std::isfinite(theta)) throw InvalidInput("theta must be finite");
  return kernels::scalar_curvature(kernels::LevelWeights(fam), theta);
}

double finite_difference_scal(const FiniteExpFamily& fam, double theta, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidInput("step must be positive");
  if (!std::isfinite(theta)) throw InvalidInput("theta must be finite");
  const auto c = fam.c();
  const auto f = fam.f();

  std::vector<double> pair_intercept;
  std::vector<double> pair_slope;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] == f[j]) continue;
      pair_intercept.push_back(c[i] + c[j] + 2.0 * std::log(std::abs(f[i] - f[j])));
      pair_slope.push_back(f[i] + f[j]);
    }
  }
  const double d2_pairs = numeric::lse_second_difference(pair_intercept, pair_slope, theta, step);
  const double d2_psi = numeric::lse_second_difference(c, f, theta, step);
  const double d2_log_h = d2_pairs - 2.0 * d2_psi;
  return -d2_log_h / fisher_metric(fam, theta);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n_points) {
  std::vector<double> grid(n_points);
  const double span = hi - lo;
  const double denom = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) grid[i] = lo + span * (static_cast<double>(i) / denom);
  grid.back() = hi;
  return grid;
}

CurvatureReport curvature_profile(const FiniteExpFamily& fam, double theta_lo, double theta_hi,
                                  std::size_t n_points, double tol) {
  if (!std::isfinite(theta_lo) || !std::isfinite(theta_hi) || !(theta_lo < theta_hi)) {
    throw InvalidInput("grid bounds must be finite with lo < hi");
  }
  if (n_points < 3) throw InvalidInput("grid needs at least 3 points");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("tolerance must be positive");

  CurvatureReport report;
  report.thetas = uniform_grid(theta_lo, theta_hi, n_points);
  report.values.resize(n_points);
  report.tolerance = tol;

  const kernels::LevelWeights lw(fam);
  kernels::scal_grid_omp(lw, report.thetas, report.values);

  const double mean =
      std::accumulate(report.values.begin(), report.values.end(), 0.0) / static_cast<double>(n_points);
  for (double v : report.values) report.max_deviation = std::max(report.max_deviation, std::abs(v - mean));
  report.is_constant = report.max_deviation <= tol;
  if (report.is_constant) report.lambda = mean;
  return report;
}

CurvatureReport curvature_profile(const FiniteExpFamily& fam, const GridSpec& grid) {
  return curvature_profile(fam, grid.lo, grid.hi, grid.n_points, grid.tol);
}

CurvatureReport curvature_profile(const FiniteExpFamily& fam) {
  return curvature_profile(fam, default_grid(fam));
}

}  // namespace infogeom
