#pragma once

#include <array>

#include "infogeom/family.hpp"

namespace infogeom {

/// A point of the tangent bundle in the coordinates (q, r) induced by the
/// natural parameter: q is the base point theta, r the fibre coordinate.
struct TangentPoint {
  double q = 0.0;
  double r = 0.0;
};

using Mat2 = std::array<std::array<double, 2>, 2>;

/// Kähler structure of the tangent bundle at one point, in (q, r) coordinates.
struct TensorFrame {
  Mat2 metric{};             // diag(h, h)
  Mat2 complex_structure{};  // [[0, -1], [1, 0]]
  Mat2 form{};               // [[0, h], [-h, 0]] = J^T g
  Mat2 ricci{};              // diag(beta, beta), beta = -(1/2) (ln h)''
};

TensorFrame dombrowski_frame(const FiniteExpFamily& fam, TangentPoint pt);

/// Scalar curvature of the tangent bundle. It only depends on q.
double scal_tangent(const FiniteExpFamily& fam, TangentPoint pt);

/// (tanh(q/2), cos(r/2)/cosh(q/2), sin(r/2)/cosh(q/2)) on the unit sphere.
/// Covers the sphere minus the two poles (+-1, 0, 0); period 4 pi in r.
std::array<double, 3> binomial_sphere_map(int n, TangentPoint pt);

/// Max-abs entry of pullback(n * round metric) - metric of B(n), the Jacobian
/// of the sphere map taken by central differences with step h_step.
double sphere_isometry_defect(int n, TangentPoint pt, double h_step = 1e-5);

}  // namespace infogeom
