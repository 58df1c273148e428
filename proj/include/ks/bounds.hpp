#pragma once

#include "ks/generators.hpp"
#include "ks/phi.hpp"

namespace ks {

// Sharp Fekete-Szego bound: 1/3 + max(B_1/3, |B_2/3 - mu B_1^2/4|).
double fs_bound(const MaMindaFunction& phi, Complex mu);

// |a_3 - mu a_2^2| of a member.
double fs_value(const ClassMember& f, Complex mu);

// A member attaining fs_bound(phi, mu). With c = B_2/3 - mu B_1^2/4:
// if B_1/3 > |c|, the odd extremal (w = z^2); otherwise g = z/(1-z) with the
// rotation w = e^{i theta} z, theta = -arg(c)/2, which aligns w_1^2 c with the
// positive real axis.
ClassMember fs_witness(const MaMindaFunction& phi, Complex mu);

struct CoefficientBounds {
  double a2;  // B_1 / 2
  double a3;  // 1/3 + (B_1/3) max(1, |B_2|/B_1)
};
CoefficientBounds coefficient_bounds(const MaMindaFunction& phi);

// Bound on |d_3 - mu d_2^2| for the inverse function: fs_bound(phi, 2 - mu).
double inverse_fs_bound(const MaMindaFunction& phi, Complex mu);

// |d_3 - mu d_2^2| with d_k the coefficients of functional_inverse(f).
double inverse_fs_value(const ClassMember& f, Complex mu);

struct Interval {
  double lower;
  double upper;
};

// phi(-r)/(1+r^2) <= |f'(z)| <= phi(r)/(1-r^2) on |z| = r.
Interval distortion_bounds(const MaMindaFunction& phi, double r);

struct GrowthBounds {
  double lower;
  double upper;
  double error;  // combined quadrature error estimate
  bool converged;
};

// Integrals of phi(-t)/(1+t^2) and phi(t)/(1-t^2) over [0, r], r <= 0.99,
// by adaptive Gauss-Legendre to 1e-12.
GrowthBounds growth_bounds(const MaMindaFunction& phi, double r);

// k = integral of phi(-t)/(1+t^2) over [0, 1]; |w| <= k lies in every f(D).
double covering_radius(const MaMindaFunction& phi);

struct KowalczykForms {
  double fprime_lo;
  double fprime_hi;
  double f_lo;
  double f_hi;
};

// Closed forms of the distortion and growth bounds for
// phi = (1 + (1-2 gamma) z)/(1 - z).
KowalczykForms kowalczyk_forms(double gamma, double r);

// max(1, |t|): bound on |w_2 - t w_1^2| over Schwarz maps.
double schwarz_functional_bound(Complex t);

}  // namespace ks
