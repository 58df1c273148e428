#include "ks/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ks/error.hpp"
#include "ks/quadrature.hpp"

namespace ks {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kGridRadii[] = {0.5, 0.9, 0.95};
constexpr int kGridAngles = 360;

Complex grid_point(int radius_index, int j) {
  return std::polar(kGridRadii[radius_index], 2.0 * std::numbers::pi * j / kGridAngles);
}

// Coefficients of (1 - x z)^{-lambda} up to order n:
// c_k = c_{k-1} x (lambda + k - 1) / k.
PowerSeries binomial_factor(Complex x, double lambda, int n) {
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  for (int k = 1; k <= n; ++k) c[k] = c[k - 1] * x * ((lambda + k - 1) / k);
  return PowerSeries(std::move(c));
}

std::vector<Atom> validated(std::vector<Atom> atoms) {
  if (atoms.empty()) throw InputError("starlike: at least one atom required");
  double total = 0.0;
  for (auto& a : atoms) {
    if (!(std::abs(std::abs(a.x) - 1.0) <= kUnitTol)) {
      throw InputError("starlike: atom location must be unimodular");
    }
    if (!(a.weight > 0.0)) throw InputError("starlike: atom weights must be positive");
    total += a.weight;
  }
  if (!(std::abs(total - 1.0) <= kUnitTol)) throw InputError("starlike: weights must sum to 1");
  return atoms;
}

PowerSeries starlike_series(const std::vector<Atom>& atoms, int order) {
  if (order < 1) throw InputError("starlike: order must be at least 1");
  PowerSeries p = PowerSeries::constant(order - 1, 1.0);
  for (const auto& a : atoms) p = mul(p, binomial_factor(a.x, a.weight, order - 1));
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k < order; ++k) c[k + 1] = p[k];
  return PowerSeries(std::move(c));
}

}  // namespace

StarlikeAtomic::StarlikeAtomic(std::vector<Atom> atoms, int order)
    : atoms_(validated(std::move(atoms))), series_(starlike_series(atoms_, order)) {
  for (int ri = 0; ri < 3; ++ri) {
    for (int j = 0; j < kGridAngles; ++j) {
      if (!(starlike_ratio(grid_point(ri, j)).real() > 0.5 - kUnitTol)) {
        throw InputError("starlike: Re(z g'/g) <= 1/2 on the sample grid");
      }
    }
  }
}

StarlikeAtomic StarlikeAtomic::koebe_half(int order) { return StarlikeAtomic({{1.0, 1.0}}, order); }

StarlikeAtomic StarlikeAtomic::odd_root(int order) {
  return StarlikeAtomic({{Complex(0.0, 1.0), 0.5}, {Complex(0.0, -1.0), 0.5}}, order);
}

Complex StarlikeAtomic::operator()(Complex z) const {
  Complex v = z;
  for (const auto& a : atoms_) v *= std::pow(1.0 - a.x * z, -a.weight);
  return v;
}

Complex StarlikeAtomic::starlike_ratio(Complex z) const {
  Complex s{};
  for (const auto& a : atoms_) s += a.weight / (1.0 - a.x * z);
  return s;
}

Complex StarlikeAtomic::odd_quotient(Complex z) const {
  Complex v = 1.0;
  for (const auto& a : atoms_) {
    v *= std::pow(1.0 - a.x * z, -a.weight) * std::pow(1.0 + a.x * z, -a.weight);
  }
  return v;
}

SchwarzMap::SchwarzMap(SchwarzKind kind, int power, double rho, double theta,
                       std::vector<Complex> zeros, int order)
    : kind_(kind), power_(power), rho_(rho), theta_(theta), zeros_(std::move(zeros)),
      series_(order) {
  if (order < 1) throw InputError("schwarz: order must be at least 1");
  switch (kind_) {
    case SchwarzKind::monomial:
      if (power_ < 1) throw InputError("schwarz monomial: power must be at least 1");
      series_ = PowerSeries::monomial(order, power_, std::polar(1.0, theta_));
      break;
    case SchwarzKind::scaled:
      if (!(rho_ >= 0.0 && rho_ < 1.0)) throw InputError("schwarz scaled: rho must lie in [0, 1)");
      series_ = PowerSeries::monomial(order, 1, std::polar(rho_, theta_));
      break;
    case SchwarzKind::blaschke: {
      PowerSeries p = PowerSeries::constant(order - 1, 1.0);
      for (const Complex a : zeros_) {
        if (!(std::abs(a) < 1.0)) throw InputError("schwarz blaschke: zeros must lie in the disk");
        // (z - a) / (1 - conj(a) z) = -a + sum_{n>=1} conj(a)^{n-1} (1 - |a|^2) z^n
        std::vector<Complex> c(static_cast<std::size_t>(order));
        c[0] = -a;
        Complex ap = 1.0;
        for (int n = 1; n < order; ++n, ap *= std::conj(a)) c[n] = ap * (1.0 - std::norm(a));
        p = mul(p, PowerSeries(std::move(c)));
      }
      std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
      for (int k = 0; k < order; ++k) c[k + 1] = p[k];
      series_ = PowerSeries(std::move(c));
      break;
    }
  }
  for (double r : kGridRadii) {
    for (int j = 0; j < kGridAngles; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / kGridAngles);
      if (std::abs((*this)(z)) > r + kUnitTol) throw InputError("schwarz: |w(z)| > |z| on grid");
    }
  }
}

SchwarzMap SchwarzMap::monomial(int power, double theta, int order) {
  return SchwarzMap(SchwarzKind::monomial, power, 1.0, theta, {}, order);
}

SchwarzMap SchwarzMap::scaled(double rho, double theta, int order) {
  return SchwarzMap(SchwarzKind::scaled, 1, rho, theta, {}, order);
}

SchwarzMap SchwarzMap::blaschke(std::vector<Complex> zeros, int order) {
  return SchwarzMap(SchwarzKind::blaschke, 1, 1.0, 0.0, std::move(zeros), order);
}

SchwarzMap SchwarzMap::with_order(int order) const {
  return SchwarzMap(kind_, power_, rho_, theta_, zeros_, order);
}

Complex SchwarzMap::operator()(Complex z) const {
  switch (kind_) {
    case SchwarzKind::monomial:
      return std::polar(1.0, theta_) * std::pow(z, power_);
    case SchwarzKind::scaled:
      return std::polar(rho_, theta_) * z;
    case SchwarzKind::blaschke: {
      Complex v = z;
      for (const Complex a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
      return v;
    }
  }
  return {};
}

PowerSeries G_from_g(const StarlikeAtomic& g) {
  // g_0 = 0, so the z^{N+1} coefficient of g(z) g(-z) only involves g_1..g_N
  // and the product is exact at order N+1.
  const int n = g.order();
  const PowerSeries gp = g.series().resized(n + 1);
  return (-1.0 * mul(gp, reflect(gp))).shifted_down(1);
}

Complex ClassMember::derivative_at(Complex z) const { return g.odd_quotient(z) * phi(w(z)); }

Complex ClassMember::value_at(Complex z) const {
  auto integrand = [&](double s) { return derivative_at(s * z) * z; };
  return quad::integrate<Complex>(integrand, 0.0, 1.0, 1e-13).value;
}

ClassMember member_from(const StarlikeAtomic& g, const SchwarzMap& w, const MaMindaFunction& phi) {
  const int n = g.order();
  if (w.order() != n) {
    throw InputError("member_from: g and w orders differ (" + std::to_string(n) + " vs " +
                     std::to_string(w.order()) + ")");
  }
  if (n < 3) throw InputError("member_from: order must be at least 3");
  const MaMindaFunction phi_n = phi.with_order(n);

  // -z^2 f'/(g(z) g(-z)) = z f'/G = f' / (G/z); the z is cancelled by shifting.
  const PowerSeries g_over_z = G_from_g(g).shifted_down(1);
  const PowerSeries target = phi_n.compose(w.series().resized(n - 1));
  const PowerSeries fprime = mul(g_over_z, target);
  PowerSeries f = antiderivative(fprime);

  const auto& gs = g.series();
  const auto& ws = w.series();
  const Complex b1 = phi_n.B(1), b2 = phi_n.B(2);
  const Complex w1 = ws[1], w2 = ws[2];
  MemberResiduals res;
  res.a2 = std::abs(2.0 * f[2] - b1 * w1);
  res.a3 = std::abs(3.0 * f[3] - (2.0 * gs[3] - gs[2] * gs[2] + b1 * w2 + b2 * w1 * w1));
  res.defining = max_abs_diff(mul(derivative(f), reciprocal(g_over_z)), target);

  return ClassMember{std::move(f), g, w, phi_n, res};
}

ClassMember extremal(ExtremalKind kind, const MaMindaFunction& phi) {
  const int n = phi.order();
  switch (kind) {
    case ExtremalKind::fs_max:
      return member_from(StarlikeAtomic::koebe_half(n), SchwarzMap::monomial(1, 0.0, n), phi);
    case ExtremalKind::fs_odd:
      return member_from(StarlikeAtomic::koebe_half(n), SchwarzMap::monomial(2, 0.0, n), phi);
    case ExtremalKind::dist_min:
      return member_from(StarlikeAtomic::odd_root(n), SchwarzMap::monomial(1, 0.0, n), phi);
  }
  throw InputError("extremal: unknown kind");
}

StarlikeAtomic random_starlike(rng::Stream& rng, int order) {
  const int count = 1 + rng.below(4);
  std::vector<Atom> atoms(static_cast<std::size_t>(count));
  double total = 0.0;
  for (auto& a : atoms) {
    a.x = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    a.weight = -std::log(rng.uniform_pos());
    if (a.weight <= 0.0) a.weight = 0x1.0p-53;
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  return StarlikeAtomic(std::move(atoms), order);
}

SchwarzMap random_schwarz(rng::Stream& rng, int order) {
  switch (rng.below(3)) {
    case 0: {
      const int power = 1 + rng.below(3);
      return SchwarzMap::monomial(power, 2.0 * std::numbers::pi * rng.uniform(), order);
    }
    case 1: {
      const double rho = 0.9 * rng.uniform();
      return SchwarzMap::scaled(rho, 2.0 * std::numbers::pi * rng.uniform(), order);
    }
    default: {
      const double radius = 0.8 * std::sqrt(rng.uniform());
      return SchwarzMap::blaschke({std::polar(radius, 2.0 * std::numbers::pi * rng.uniform())},
                                  order);
    }
  }
}

}  // namespace ks
