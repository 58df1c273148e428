#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ks {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 24;

// Largest |z| at which a truncated series may be evaluated; beyond this the
// tail estimate stops being informative.
inline constexpr double kMaxEvalRadius = 0.95;

// Truncated Taylor expansion c_0 + c_1 z + ... + c_N z^N about the origin.
//
// Values are immutable: every operation below returns a fresh series. Binary
// operations require both operands to share the same truncation order N.
class PowerSeries {
 public:
  // Zero series of order N.
  explicit PowerSeries(int order);
  // Order is coeffs.size() - 1. Rejects an empty list or non-finite entries.
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries constant(int order, Complex c);
  static PowerSeries monomial(int order, int degree, Complex c = 1.0);
  static PowerSeries identity(int order) { return monomial(order, 1); }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Complex operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  // Zero above the truncation order.
  Complex coeff(int k) const noexcept;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  // Truncate or zero-pad to a new order.
  PowerSeries resized(int order) const;
  // Divide by z^k. The dropped leading coefficients must vanish (|c| <= 1e-12);
  // the order shrinks by k.
  PowerSeries shifted_down(int k) const;
  // Multiply by z^k, keeping the order.
  PowerSeries shifted_up(int k) const;

  // Degree of the single nonzero coefficient, or -1 if there is not exactly one.
  int monomial_degree() const noexcept;

 private:
  std::vector<Complex> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(Complex s, const PowerSeries& a);

// Cauchy product truncated at the common order.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

// 1/a; throws SingularSeries when c_0 = 0.
PowerSeries reciprocal(const PowerSeries& a);

// outer(inner(z)); inner must vanish at the origin.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// Term-by-term derivative. Order N input gives order N-1 output (order 0 stays 0).
PowerSeries derivative(const PowerSeries& a);

// Integral from 0 to z. Order N input gives order N+1 output, so that
// derivative(antiderivative(a)) == a exactly.
PowerSeries antiderivative(const PowerSeries& a);

// Compositional inverse of a normalized series (c_0 = 0, c_1 = 1), computed by
// Lagrange inversion: n b_n = [z^{n-1}] (z / a(z))^n.
PowerSeries functional_inverse(const PowerSeries& a);

// The series w with w(0) = 0 and outer(w(z)) = target(z), solved coefficient by
// coefficient. Requires outer c_1 != 0 and target c_0 == outer c_0.
//
// Same result as compose(inverse(outer), target) in exact arithmetic, but the
// error only grows like 1/outer'(w), so it stays accurate when the inverse
// series of `outer` has a small radius of convergence.
PowerSeries solve_composition(const PowerSeries& outer, const PowerSeries& target);

// c_k -> (-1)^k c_k, i.e. a(-z).
PowerSeries reflect(const PowerSeries& a);

struct Evaluation {
  Complex value;
  double tail;  // estimated |sum_{k>N} c_k z^k|
};

// Horner partial sum at |z| <= kMaxEvalRadius, with a tail estimate.
Evaluation evaluate(const PowerSeries& a, Complex z);

// Tail estimate used by evaluate(): assumes |c_k| <= C k beyond the truncation
// with C = max |c_k| / k over the upper half of the stored coefficients.
double tail_estimate(const PowerSeries& a, double radius);

double max_abs_diff(const PowerSeries& a, const PowerSeries& b);

}  // namespace ks
