#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "infogeom/family.hpp"

namespace infogeom {

inline constexpr double kDefaultFdStep = 1e-4;
inline constexpr double kDefaultConstancyTol = 1e-8;
inline constexpr std::size_t kDefaultGridPoints = 601;
inline constexpr double kDefaultGridHalfWidth = 30.0;

/// S sampled on a uniform theta grid, with the constancy verdict.
struct CurvatureReport {
  std::vector<double> thetas;
  std::vector<double> values;
  bool is_constant = false;
  std::optional<double> lambda;  // mean of values, set iff is_constant
  double max_deviation = 0.0;    // max |S(theta_i) - mean|
  double tolerance = 0.0;
};

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n_points = kDefaultGridPoints;
  double tol = kDefaultConstancyTol;
};

/// [-30/spread, 30/spread] with spread = F_max - F_min, 601 points, tol 1e-8.
GridSpec default_grid(const FiniteExpFamily& fam);

/// S(theta) = -(ln h_F)'' / h_F, the function through which the scalar
/// curvature of the tangent bundle factors.
double hessian_scalar_curvature(const FiniteExpFamily& fam, double theta);

/// The same quantity from a central second difference of ln h_F. Kept as an
/// independent check on the analytic path.
///
/// ln h_F is written as L2(theta) - 2 psi(theta), where
/// L2 = ln sum_{i<j} exp(C_i + C_j + 2 ln|F_i - F_j| + theta (F_i + F_j));
/// both pieces are log-sums of affine functions and are differenced with a
/// common shift.
double finite_difference_scal(const FiniteExpFamily& fam, double theta,
                              double step = kDefaultFdStep);

/// n_points values from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n_points);

CurvatureReport curvature_profile(const FiniteExpFamily& fam, double theta_lo, double theta_hi,
                                  std::size_t n_points, double tol);
CurvatureReport curvature_profile(const FiniteExpFamily& fam, const GridSpec& grid);
CurvatureReport curvature_profile(const FiniteExpFamily& fam);

}  // namespace infogeom
