#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "infogeom/errors.hpp"
#include "infogeom/kernels.hpp"
#include "infogeom/numeric.hpp"

namespace infogeom::kernels {

LevelWeights::LevelWeights(const FiniteExpFamily& fam) {
  const auto c = fam.c();
  const auto f = fam.f();
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return f[i] < f[j]; });

  std::vector<double> group;
  for (std::size_t pos = 0; pos < order.size();) {
    const double level = f[order[pos]];
    group.clear();
    for (; pos < order.size() && f[order[pos]] == level; ++pos) group.push_back(c[order[pos]]);
    levels.push_back(level);
    log_weights.push_back(numeric::log_sum_exp(group));
  }
}

double scalar_curvature(const LevelWeights& lw, double theta) {
  const std::size_t n = lw.levels.size();
  const auto& a = lw.levels;
  std::vector<double> w(n);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = lw.log_weights[i] + theta * a[i];
    top = std::max(top, w[i]);
  }
  double total = 0.0;
  for (auto& v : w) {
    v = std::exp(v - top);
    total += v;
  }

  double t2 = 0.0;
  double t3 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = a[i] - a[j];
      const double wij = w[i] * w[j];
      t2 += wij * dij * dij;
      for (std::size_t k = j + 1; k < n; ++k) {
        const double v = dij * (a[j] - a[k]) * (a[k] - a[i]);
        t3 += wij * w[k] * v * v;
      }
    }
  }
  if (!(t2 / (total * total) >= 1e-300)) {
    throw DegenerateFamily("Fisher metric underflows at theta = " + std::to_string(theta));
  }
  // Divide step by step so the cube of t2 is never formed.
  double ratio = t3 / t2;
  ratio *= total / t2;
  ratio *= total / t2;
  ratio *= total;
  return 2.0 - ratio;
}

void scal_grid_serial(const LevelWeights& lw, std::span<const double> thetas, std::span<double> out) {
  assert(thetas.size() == out.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) out[i] = scalar_curvature(lw, thetas[i]);
}

void scal_grid_omp(const LevelWeights& lw, std::span<const double> thetas, std::span<double> out) {
  assert(thetas.size() == out.size());
  const auto n = static_cast<std::ptrdiff_t>(thetas.size());
  // Exceptions cannot leave a parallel region; keep the one from the lowest
  // index so the error reported matches the serial sweep.
  std::ptrdiff_t first_bad = n;
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = scalar_curvature(lw, thetas[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(infogeom_scal_grid_error)
      if (i < first_bad) {
        first_bad = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace infogeom::kernels
