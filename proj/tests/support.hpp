#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "ks/rng.hpp"
#include "ks/series.hpp"

namespace ks::test {

inline void check_coeffs(const PowerSeries& s, const std::vector<Complex>& expected, double tol) {
  for (std::size_t k = 0; k < expected.size(); ++k) {
    INFO("coefficient " << k << ": got " << s.coeff(static_cast<int>(k)) << ", want " << expected[k]);
    CHECK(std::abs(s.coeff(static_cast<int>(k)) - expected[k]) <= tol);
  }
}

inline Complex random_disk(rng::Stream& rng, double radius) {
  return std::polar(radius * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
}

// c_0 = 0, c_1 = 1, |c_k| <= scale(k) for k >= 2.
template <typename Scale>
PowerSeries random_normalized(rng::Stream& rng, int order, Scale scale) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[1] = 1.0;
  for (int k = 2; k <= order; ++k) c[k] = random_disk(rng, scale(k));
  return PowerSeries(std::move(c));
}

inline PowerSeries random_series(rng::Stream& rng, int order, double radius = 1.0) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = random_disk(rng, radius);
  return PowerSeries(std::move(c));
}

}  // namespace ks::test
