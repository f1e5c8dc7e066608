#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace infogeom {

/// A one-parameter exponential family over the finite set {x_0, ..., x_m}:
///
///   p(x_k; theta) = exp(C_k + theta * F_k - psi(theta)).
///
/// Only the vectors C and F are stored. Construction enforces equal lengths,
/// at least two points, finite entries and a non-constant F.
class FiniteExpFamily {
 public:
  FiniteExpFamily(std::vector<double> c, std::vector<double> f);

  /// m, so the sample space has m + 1 points.
  std::size_t size_m() const { return f_.size() - 1; }
  std::size_t num_points() const { return f_.size(); }

  std::span<const double> c() const { return c_; }
  std::span<const double> f() const { return f_; }

  friend bool operator==(const FiniteExpFamily&, const FiniteExpFamily&) = default;

 private:
  std::vector<double> c_;
  std::vector<double> f_;
};

/// Mean and cumulants of F under p_theta; these are psi', psi'', psi''', psi''''.
struct MomentSet {
  double eta = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  double kappa4 = 0.0;
};

struct FRange {
  double f_min = 0.0;
  double f_max = 0.0;
  std::vector<std::size_t> i_min;
  std::vector<std::size_t> i_max;
};

/// psi(theta) = ln sum_k exp(C_k + theta F_k). Throws InvalidInput for non-finite theta.
double log_partition(const FiniteExpFamily& fam, double theta);

/// ln p(x_k; theta) for every k.
std::vector<double> log_density(const FiniteExpFamily& fam, double theta);

/// p(x_k; theta), obtained by exponentiating the log-densities.
std::vector<double> density(const FiniteExpFamily& fam, double theta);

/// eta(theta) = E[F] = psi'(theta).
double expectation_parameter(const FiniteExpFamily& fam, double theta);

/// h_F(theta) = Var[F] = psi''(theta).
double fisher_metric(const FiniteExpFamily& fam, double theta);

MomentSet central_moments(const FiniteExpFamily& fam, double theta);

FRange f_range(const FiniteExpFamily& fam);

/// Smallest positive difference between two values of F.
double min_level_gap(const FiniteExpFamily& fam);

}  // namespace infogeom
