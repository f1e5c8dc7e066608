#pragma once

#include <span>

namespace infogeom::numeric {

/// ln(sum_k exp(x_k)), shifted by the largest argument. The dominant term is
/// pulled out so the remainder goes through log1p, which keeps full relative
/// precision when one term dominates.
double log_sum_exp(std::span<const double> x);

/// ln C(n, k) through lgamma. Exact zero at k = 0 and k = n.
double log_binomial(int n, int k);

/// Second central difference of theta -> ln(sum_k exp(intercept_k + theta * slope_k)).
///
/// All three evaluations share one shift (the term dominating at theta), so the
/// rounding in the shifted intercepts is common to them and cancels in the
/// difference instead of being amplified by 1/step^2.
double lse_second_difference(std::span<const double> intercept, std::span<const double> slope,
                             double theta, double step);

}  // namespace infogeom::numeric
