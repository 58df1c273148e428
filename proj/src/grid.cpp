#include "ks/grid.hpp"

#include <numbers>

#include "ks/error.hpp"

#ifdef KS_HAVE_OPENMP
#include <omp.h>
#endif

namespace ks {

Complex PolarGrid::point(std::size_t index) const {
  const std::size_t per = static_cast<std::size_t>(angles);
  const double r = radii[index / per];
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(index % per) / angles;
  return std::polar(r, theta);
}

GridSamples sample_series(const PowerSeries& s, const PolarGrid& grid, Exec exec) {
  if (grid.angles < 1) throw InputError("grid: need at least one angle");
  GridSamples out;
  out.tails.reserve(grid.radii.size());
  for (double r : grid.radii) {
    if (!(r > 0.0 && r <= kMaxEvalRadius)) throw InputError("grid: radius outside (0, 0.95]");
    out.tails.push_back(tail_estimate(s, r));
  }
  out.values.resize(grid.size());
  const auto c = s.coeffs();
  const int n = s.order();
  for_each_index(grid.size(), exec, [&](std::size_t i) {
    const Complex z = grid.point(i);
    Complex v{};
    for (int k = n; k >= 0; --k) v = v * z + c[k];
    out.values[i] = v;
  });
  return out;
}

int worker_threads() {
#ifdef KS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ks
