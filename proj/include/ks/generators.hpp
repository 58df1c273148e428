#pragma once

#include <vector>

#include "ks/phi.hpp"
#include "ks/rng.hpp"
#include "ks/series.hpp"

namespace ks {

// Point mass of the Herglotz measure: unimodular x with weight lambda > 0.
struct Atom {
  Complex x;
  double weight;
};

// g(z) = z * prod_k (1 - x_k z)^{-lambda_k} with sum lambda_k = 1.
// Then z g'/g = sum_k lambda_k / (1 - x_k z) has real part > 1/2 on the disk,
// so g is starlike of order 1/2 by construction.
class StarlikeAtomic {
 public:
  StarlikeAtomic(std::vector<Atom> atoms, int order = kDefaultOrder);

  // z / (1 - z)
  static StarlikeAtomic koebe_half(int order = kDefaultOrder);
  // z / sqrt(1 + z^2)
  static StarlikeAtomic odd_root(int order = kDefaultOrder);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const PowerSeries& series() const noexcept { return series_; }
  int order() const noexcept { return series_.order(); }
  StarlikeAtomic with_order(int order) const { return StarlikeAtomic(atoms_, order); }

  Complex operator()(Complex z) const;
  // z g'(z) / g(z)
  Complex starlike_ratio(Complex z) const;
  // G(z)/z = -g(z) g(-z) / z^2 = prod_k (1 - x_k z)^{-lambda_k} (1 + x_k z)^{-lambda_k}
  Complex odd_quotient(Complex z) const;

 private:
  std::vector<Atom> atoms_;
  PowerSeries series_;
};

enum class SchwarzKind { monomial, scaled, blaschke };

// Self-map of the disk fixing 0:
//   monomial: e^{i theta} z^k
//   scaled:   rho e^{i theta} z, 0 <= rho < 1
//   blaschke: z prod_j (z - a_j) / (1 - conj(a_j) z), |a_j| < 1
class SchwarzMap {
 public:
  static SchwarzMap monomial(int power, double theta, int order = kDefaultOrder);
  static SchwarzMap scaled(double rho, double theta, int order = kDefaultOrder);
  static SchwarzMap blaschke(std::vector<Complex> zeros, int order = kDefaultOrder);

  SchwarzKind kind() const noexcept { return kind_; }
  int power() const noexcept { return power_; }
  double rho() const noexcept { return rho_; }
  double theta() const noexcept { return theta_; }
  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  const PowerSeries& series() const noexcept { return series_; }
  int order() const noexcept { return series_.order(); }
  SchwarzMap with_order(int order) const;

  Complex operator()(Complex z) const;

 private:
  SchwarzMap(SchwarzKind kind, int power, double rho, double theta, std::vector<Complex> zeros,
             int order);

  SchwarzKind kind_;
  int power_ = 1;
  double rho_ = 1.0;
  double theta_ = 0.0;
  std::vector<Complex> zeros_;
  PowerSeries series_;
};

// G(z) = -g(z) g(-z) / z, an odd starlike function.
PowerSeries G_from_g(const StarlikeAtomic& g);

// Residuals of the coefficient relations a member must satisfy.
struct MemberResiduals {
  double a2 = 0.0;        // |2 a_2 - B_1 w_1|
  double a3 = 0.0;        // |3 a_3 - (2 g_3 - g_2^2 + B_1 w_2 + B_2 w_1^2)|
  double defining = 0.0;  // max coefficient gap of -z^2 f'/(g(z) g(-z)) vs phi(w(z))
};

// f in K_s(phi) built from its data: -z^2 f'(z) / (g(z) g(-z)) = phi(w(z)).
struct ClassMember {
  PowerSeries f;
  StarlikeAtomic g;
  SchwarzMap w;
  MaMindaFunction phi;
  MemberResiduals residuals;

  Complex a(int k) const { return f.coeff(k); }
  // f'(z) = (G(z)/z) phi(w(z)), exact for |z| < 1.
  Complex derivative_at(Complex z) const;
  // f(z) by quadrature of f' along the segment [0, z].
  Complex value_at(Complex z) const;
};

// Orders of g and w must match; phi is taken at the same order.
ClassMember member_from(const StarlikeAtomic& g, const SchwarzMap& w, const MaMindaFunction& phi);

enum class ExtremalKind { fs_max, fs_odd, dist_min };

// fs_max:   g = z/(1-z),          w = z
// fs_odd:   g = z/(1-z),          w = z^2
// dist_min: g = z/sqrt(1+z^2),    w = z
// Built at phi.order().
ClassMember extremal(ExtremalKind kind, const MaMindaFunction& phi);

// 1-4 atoms, x uniform on the circle, weights from a flat Dirichlet draw.
StarlikeAtomic random_starlike(rng::Stream& rng, int order);
// Uniform over: monomial (k <= 3, random phase), scaled (rho <= 0.9, random
// phase), one-factor Blaschke with |a| <= 0.8.
SchwarzMap random_schwarz(rng::Stream& rng, int order);

}  // namespace ks
