#pragma once

#include <cstddef>
#include <vector>

#include "ks/series.hpp"

namespace ks {

// Serial kernels are the reference; the parallel variants must produce
// bit-identical output (each point is computed independently, reductions are
// done in point order afterwards).
enum class Exec { serial, parallel };

// Points r_i e^{2 pi i j / angles}, radius-major.
struct PolarGrid {
  std::vector<double> radii;
  int angles = 720;

  std::size_t size() const noexcept { return radii.size() * static_cast<std::size_t>(angles); }
  Complex point(std::size_t index) const;
};

struct GridSamples {
  std::vector<Complex> values;  // one per grid point, grid order
  std::vector<double> tails;    // one per radius
};

// Evaluates a truncated series at every grid point. Radii must not exceed
// kMaxEvalRadius.
GridSamples sample_series(const PowerSeries& s, const PolarGrid& grid, Exec exec = Exec::parallel);

// Index-parallel loop over [0, n); the body must only write slot i.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  const long long count = static_cast<long long>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }
}

int worker_threads();

}  // namespace ks
