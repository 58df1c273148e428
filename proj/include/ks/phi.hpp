#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ks/series.hpp"

namespace ks {

enum class PhiKind { halfplane, order_gamma, polynomial };

// Target function phi(z) = 1 + B_1 z + B_2 z^2 + ... with positive real part
// and B_1 > 0.
//
// halfplane:   (1 + z) / (1 - z)
// order_gamma: (1 + (1 - 2 gamma) z) / (1 - z), 0 <= gamma < 1
// polynomial:  1 + B_1 z + ... + B_d z^d, caller-supplied. The Ma-Minda
//              hypotheses cannot be verified from coefficients; the caller
//              may attest them, and the grid positivity of Re phi is recorded.
class MaMindaFunction {
 public:
  static MaMindaFunction halfplane(int order = kDefaultOrder);
  static MaMindaFunction order_gamma(double gamma, int order = kDefaultOrder);
  // b lists B_1, B_2, ...; B_1 must be real and positive.
  static MaMindaFunction polynomial(std::vector<Complex> b, bool attested, int order = kDefaultOrder);

  PhiKind kind() const noexcept { return kind_; }
  double gamma() const noexcept { return gamma_; }
  int order() const noexcept { return order_; }
  bool builtin() const noexcept { return kind_ != PhiKind::polynomial; }
  bool attested() const noexcept { return attested_; }
  // Re phi > 0 on 1440 angles at each of the radii 0.5, 0.9, 0.95.
  bool grid_positive() const noexcept { return grid_positive_; }
  const std::vector<Complex>& poly_coeffs() const noexcept { return b_; }

  MaMindaFunction with_order(int order) const;

  // Taylor coefficient B_n (B_0 = 1).
  Complex B(int n) const;
  double B1() const { return B(1).real(); }

  PowerSeries series() const { return series(order_); }
  PowerSeries series(int order) const;

  // phi(w(z)) for a series w vanishing at 0. Builtin kinds use the closed form
  // (numerator times the reciprocal of 1 - w), which costs O(N^2).
  PowerSeries compose(const PowerSeries& w) const;

  // Closed-form value for |z| < 1.
  Complex operator()(Complex z) const;

 private:
  MaMindaFunction() = default;
  void check_grid();

  PhiKind kind_ = PhiKind::halfplane;
  double gamma_ = 0.0;
  std::vector<Complex> b_;
  bool attested_ = false;
  bool grid_positive_ = true;
  int order_ = kDefaultOrder;
};

// (phi(-r), phi(r)) = (min, max) of |phi| on |z| = r. Builtin kinds, or a
// polynomial the caller attested as Ma-Minda.
std::pair<double, double> phi_minmax(const MaMindaFunction& phi, double r);

// phi(t) for real t in [-1, 1); t = -1 is the boundary limit used by the
// covering radius. Builtin kinds only.
double phi_eval_real(const MaMindaFunction& phi, double t);

}  // namespace ks
