#include "infogeom/kahler.hpp"

#include <algorithm>
#include <cmath>

#include "infogeom/classification.hpp"
#include "infogeom/curvature.hpp"
#include "infogeom/errors.hpp"

namespace infogeom {

namespace {

void require_finite(TangentPoint pt) {
  if (!std::isfinite(pt.q) || !std::isfinite(pt.r)) throw InvalidInput("tangent point must be finite");
}

}  // namespace

TensorFrame dombrowski_frame(const FiniteExpFamily& fam, TangentPoint pt) {
  require_finite(pt);
  const double h = fisher_metric(fam, pt.q);
  // -(1/2)(ln h)'' = (S/2) h in one dimension.
  const double beta = 0.5 * hessian_scalar_curvature(fam, pt.q) * h;
  TensorFrame frame;
  frame.metric = {{{h, 0.0}, {0.0, h}}};
  frame.complex_structure = {{{0.0, -1.0}, {1.0, 0.0}}};
  frame.form = {{{0.0, h}, {-h, 0.0}}};
  frame.ricci = {{{beta, 0.0}, {0.0, beta}}};
  return frame;
}

double scal_tangent(const FiniteExpFamily& fam, TangentPoint pt) {
  require_finite(pt);
  return hessian_scalar_curvature(fam, pt.q);
}

std::array<double, 3> binomial_sphere_map(int n, TangentPoint pt) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  require_finite(pt);
  const double ch = std::cosh(pt.q / 2.0);
  return {std::tanh(pt.q / 2.0), std::cos(pt.r / 2.0) / ch, std::sin(pt.r / 2.0) / ch};
}

double sphere_isometry_defect(int n, TangentPoint pt, double h_step) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (!(h_step > 0.0) || !std::isfinite(h_step)) throw InvalidInput("step must be positive");
  require_finite(pt);

  std::array<std::array<double, 3>, 2> jac{};
  const std::array<TangentPoint, 2> dirs{TangentPoint{1.0, 0.0}, TangentPoint{0.0, 1.0}};
  for (std::size_t col = 0; col < 2; ++col) {
    const TangentPoint plus{pt.q + h_step * dirs[col].q, pt.r + h_step * dirs[col].r};
    const TangentPoint minus{pt.q - h_step * dirs[col].q, pt.r - h_step * dirs[col].r};
    const auto up = binomial_sphere_map(n, plus);
    const auto down = binomial_sphere_map(n, minus);
    for (std::size_t i = 0; i < 3; ++i) jac[col][i] = (up[i] - down[i]) / (2.0 * h_step);
  }

  const auto target = dombrowski_frame(binomial_family(n), pt).metric;
  double defect = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      double pulled = 0.0;
      for (std::size_t k = 0; k < 3; ++k) pulled += jac[i][k] * jac[j][k];
      defect = std::max(defect, std::abs(n * pulled - target[i][j]));
    }
  }
  return defect;
}

}  // namespace infogeom
