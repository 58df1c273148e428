#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace ks::quad {

inline constexpr int kPanelPoints = 15;

// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
// iteration on P_15.
struct GaussLegendre {
  std::array<double, kPanelPoints> nodes;
  std::array<double, kPanelPoints> weights;
};
const GaussLegendre& gauss_legendre_15();

template <typename T>
struct Result {
  T value{};
  double error = 0.0;  // sum of accepted panel error estimates
  int panels = 0;
  bool converged = true;
};

// 15-point Gauss-Legendre on [a, b].
template <typename T, typename F>
T gauss15(F&& f, double a, double b) {
  const auto& gl = gauss_legendre_15();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  T s{};
  for (int i = 0; i < kPanelPoints; ++i) s += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return s * half;
}

// Adaptive composite Gauss-Legendre. A panel is accepted when its value and
// the sum over its two halves agree to abs_tol scaled by the panel's share of
// [a, b]; otherwise it is bisected. Stops early (converged = false) once
// max_panels panels have been accepted or queued.
template <typename T, typename F>
Result<T> integrate(F&& f, double a, double b, double abs_tol = 1e-12, int max_panels = 10000) {
  Result<T> out;
  if (a == b) return out;
  const double total = std::abs(b - a);
  struct Panel {
    double lo, hi;
    T whole;
  };
  std::vector<Panel> stack;
  stack.push_back({a, b, gauss15<T>(f, a, b)});
  int live = 1;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const T left = gauss15<T>(f, p.lo, mid);
    const T right = gauss15<T>(f, mid, p.hi);
    const double err = std::abs(left + right - p.whole);
    const double local_tol = abs_tol * std::abs(p.hi - p.lo) / total;
    if (err <= local_tol || live >= max_panels) {
      if (err > local_tol) out.converged = false;
      out.value += left + right;
      out.error += err;
      ++out.panels;
      continue;
    }
    ++live;
    // Right half first so the left half is processed next (left-to-right sum).
    stack.push_back({mid, p.hi, right});
    stack.push_back({p.lo, mid, left});
  }
  return out;
}

}  // namespace ks::quad
