#pragma once

#include <optional>
#include <set>
#include <vector>

#include "infogeom/family.hpp"

namespace infogeom {

inline constexpr double kDefaultLevelTol = 1e-9;
inline constexpr double kDefaultClassifyTol = 1e-9;

/// Distinct values alpha_0 < ... < alpha_p of F with log-weights
/// omega_i = ln sum_{F_k = alpha_i} exp(C_k).
struct ReducedFamily {
  std::vector<double> levels;
  std::vector<double> log_weights;
  int p = 0;

  /// The reduced family viewed as a family over {0, ..., p}.
  FiniteExpFamily as_family() const;
};

/// Outcome of the exact constant-curvature test on the reduced family:
///
///   alpha_k = alpha_0 + (k/p)(alpha_p - alpha_0)
///   omega_k = r k + s (p - k) + ln C(p, k)        for k = 0..p.
struct ClassificationResult {
  bool is_constant = false;
  int p = 0;
  std::optional<double> lambda;  // 2/p
  std::optional<double> r;
  std::optional<double> s;
  double residual = 0.0;  // worst violation of the two conditions
};

/// Groups F values whose sorted neighbours lie within
/// level_tol * (F_max - F_min) of each other (single linkage). A group's level
/// is the mean of its F values. Throws InvalidInput if everything collapses
/// into one level.
ReducedFamily reduce(const FiniteExpFamily& fam, double level_tol = kDefaultLevelTol);

/// r and s come from the k = p and k = 0 equations (ln C(p,0) = ln C(p,p) = 0);
/// the interior equations are then checked. The alpha check is relative to
/// alpha_p - alpha_0, the omega check is absolute.
ClassificationResult classify_constant_curvature(const FiniteExpFamily& fam,
                                                 double tol = kDefaultClassifyTol,
                                                 double level_tol = kDefaultLevelTol);

/// F_k = alpha0 + k (alphap - alpha0) / p, C_k = r k + s (p - k) + ln C(p, k).
/// Its scalar curvature is identically 2/p.
FiniteExpFamily make_constant_curvature_family(int p, double alpha0, double alphap, double r,
                                               double s);

/// B(n): C_k = ln C(n, k), F_k = k over {0, ..., n}.
FiniteExpFamily binomial_family(int n);

/// {2/k : k = 1..m}, the only values a constant curvature can take over m + 1 points.
std::set<double> admissible_lambdas(int m);

}  // namespace infogeom
