#include "ks/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ks/error.hpp"
#include "ks/quadrature.hpp"

namespace ks {

namespace {

constexpr double kQuadTol = 1e-12;

Complex fs_rotating_term(const MaMindaFunction& phi, Complex mu) {
  const Complex b1 = phi.B(1);
  return phi.B(2) / 3.0 - mu * b1 * b1 / 4.0;
}

void require_radius(double r, double max_r, const char* op) {
  if (!(r > 0.0 && r <= max_r && r < 1.0)) {
    throw InputError(std::string(op) + ": r outside (0, " + std::to_string(max_r) + "]");
  }
}

}  // namespace

double fs_bound(const MaMindaFunction& phi, Complex mu) {
  return 1.0 / 3.0 + std::max(phi.B1() / 3.0, std::abs(fs_rotating_term(phi, mu)));
}

double fs_value(const ClassMember& f, Complex mu) {
  const Complex a2 = f.a(2);
  return std::abs(f.a(3) - mu * a2 * a2);
}

ClassMember fs_witness(const MaMindaFunction& phi, Complex mu) {
  const Complex c = fs_rotating_term(phi, mu);
  const int n = phi.order();
  if (phi.B1() / 3.0 > std::abs(c)) return extremal(ExtremalKind::fs_odd, phi);
  const double theta = c == Complex{} ? 0.0 : -std::arg(c) / 2.0;
  return member_from(StarlikeAtomic::koebe_half(n), SchwarzMap::monomial(1, theta, n), phi);
}

CoefficientBounds coefficient_bounds(const MaMindaFunction& phi) {
  const double b1 = phi.B1();
  return {b1 / 2.0, 1.0 / 3.0 + (b1 / 3.0) * std::max(1.0, std::abs(phi.B(2)) / b1)};
}

double inverse_fs_bound(const MaMindaFunction& phi, Complex mu) { return fs_bound(phi, 2.0 - mu); }

double inverse_fs_value(const ClassMember& f, Complex mu) {
  const PowerSeries inv = functional_inverse(f.f);
  const Complex d2 = inv[2];
  return std::abs(inv[3] - mu * d2 * d2);
}

Interval distortion_bounds(const MaMindaFunction& phi, double r) {
  require_radius(r, 1.0, "distortion_bounds");
  const auto [lo, hi] = phi_minmax(phi, r);
  return {lo / (1.0 + r * r), hi / (1.0 - r * r)};
}

GrowthBounds growth_bounds(const MaMindaFunction& phi, double r) {
  require_radius(r, 0.99, "growth_bounds");
  if (!phi.builtin()) throw InputError("growth_bounds: builtin phi only");
  auto lower = [&](double t) { return phi_eval_real(phi, -t) / (1.0 + t * t); };
  auto upper = [&](double t) { return phi_eval_real(phi, t) / (1.0 - t * t); };
  const auto lo = quad::integrate<double>(lower, 0.0, r, kQuadTol);
  const auto hi = quad::integrate<double>(upper, 0.0, r, kQuadTol);
  return {lo.value, hi.value, lo.error + hi.error, lo.converged && hi.converged};
}

double covering_radius(const MaMindaFunction& phi) {
  if (!phi.builtin()) throw InputError("covering_radius: builtin phi only");
  auto lower = [&](double t) { return phi_eval_real(phi, -t) / (1.0 + t * t); };
  return quad::integrate<double>(lower, 0.0, 1.0, kQuadTol).value;
}

KowalczykForms kowalczyk_forms(double gamma, double r) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw InputError("kowalczyk_forms: gamma outside [0, 1)");
  require_radius(r, 1.0, "kowalczyk_forms");
  const double a = 1.0 - 2.0 * gamma;
  KowalczykForms k;
  k.fprime_lo = (1.0 - a * r) / ((1.0 + r) * (1.0 + r * r));
  k.fprime_hi = (1.0 + a * r) / ((1.0 - r) * (1.0 - r * r));
  k.f_lo = (1.0 - gamma) * std::log((1.0 + r) / std::sqrt(1.0 + r * r)) + gamma * std::atan(r);
  k.f_hi = 0.5 * gamma * std::log((1.0 + r) / (1.0 - r)) + (1.0 - gamma) * r / (1.0 - r);
  return k;
}

double schwarz_functional_bound(Complex t) { return std::max(1.0, std::abs(t)); }

}  // namespace ks
