#pragma once

#include <span>
#include <vector>

#include "infogeom/family.hpp"

// Inner loops of the curvature sweep. The serial versions are the reference;
// the OpenMP versions must reproduce them bit for bit.
namespace infogeom::kernels {

/// The family with exactly equal F values merged: distinct levels and the
/// log of the summed weights exp(C) on each. Curvature only depends on these.
struct LevelWeights {
  std::vector<double> levels;
  std::vector<double> log_weights;

  explicit LevelWeights(const FiniteExpFamily& fam);
};

/// Hessian scalar curvature at theta.
///
/// With unnormalised weights w_i = exp(omega_i + theta alpha_i - max), W = sum w,
///
///   T2 = sum_{i<j}   w_i w_j (a_i - a_j)^2                      = W^2 mu2
///   T3 = sum_{i<j<k} w_i w_j w_k [(a_i-a_j)(a_j-a_k)(a_k-a_i)]^2 = W^3 H3
///
/// where H3 = mu2 mu4 - mu3^2 - mu2^3 is the 3x3 Hankel moment determinant.
/// Then S = (k3^2 - k4 k2) / k2^3 = 2 - H3 / mu2^3 = 2 - T3 W^3 / T2^3.
/// Every term is non-negative, so nothing cancels even deep in the tails
/// where one level carries almost all of the mass.
///
/// Throws DegenerateFamily if the variance underflows below 1e-300.
double scalar_curvature(const LevelWeights& lw, double theta);

void scal_grid_serial(const LevelWeights& lw, std::span<const double> thetas, std::span<double> out);
void scal_grid_omp(const LevelWeights& lw, std::span<const double> thetas, std::span<double> out);

/// True when the library was compiled with OpenMP.
bool openmp_enabled();

}  // namespace infogeom::kernels
