#include "ks/phi.hpp"

#include <cmath>
#include <numbers>

#include "ks/error.hpp"

namespace ks {

namespace {

constexpr double kGridRadii[] = {0.5, 0.9, 0.95};
constexpr int kGridAngles = 1440;

}  // namespace

MaMindaFunction MaMindaFunction::halfplane(int order) {
  MaMindaFunction phi;
  phi.kind_ = PhiKind::halfplane;
  phi.order_ = order;
  phi.check_grid();
  return phi;
}

MaMindaFunction MaMindaFunction::order_gamma(double gamma, int order) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw InputError("order_gamma: gamma must lie in [0, 1)");
  MaMindaFunction phi;
  phi.kind_ = PhiKind::order_gamma;
  phi.gamma_ = gamma;
  phi.order_ = order;
  phi.check_grid();
  return phi;
}

MaMindaFunction MaMindaFunction::polynomial(std::vector<Complex> b, bool attested, int order) {
  if (b.empty() || b[0].imag() != 0.0 || !(b[0].real() > 0.0)) {
    throw InputError("polynomial phi: B_1 must be real and positive");
  }
  for (const auto& c : b) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InputError("polynomial phi: non-finite coefficient");
    }
  }
  MaMindaFunction phi;
  phi.kind_ = PhiKind::polynomial;
  phi.b_ = std::move(b);
  phi.attested_ = attested;
  phi.order_ = order;
  phi.check_grid();
  return phi;
}

MaMindaFunction MaMindaFunction::with_order(int order) const {
  MaMindaFunction copy = *this;
  copy.order_ = order;
  return copy;
}

void MaMindaFunction::check_grid() {
  if (order_ < 1) throw InputError("phi: order must be at least 1");
  grid_positive_ = true;
  for (double r : kGridRadii) {
    for (int j = 0; j < kGridAngles; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / kGridAngles);
      if (!((*this)(z).real() > 0.0)) grid_positive_ = false;
    }
  }
  if (builtin() && !grid_positive_) throw InputError("phi: Re phi <= 0 on the sample grid");
}

Complex MaMindaFunction::B(int n) const {
  if (n < 0) return {};
  if (n == 0) return 1.0;
  switch (kind_) {
    case PhiKind::halfplane:
      return 2.0;
    case PhiKind::order_gamma:
      return 2.0 * (1.0 - gamma_);
    case PhiKind::polynomial:
      return n <= static_cast<int>(b_.size()) ? b_[static_cast<std::size_t>(n - 1)] : Complex{};
  }
  return {};
}

PowerSeries MaMindaFunction::series(int order) const {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) c[k] = B(k);
  return PowerSeries(std::move(c));
}

PowerSeries MaMindaFunction::compose(const PowerSeries& w) const {
  const int n = w.order();
  if (std::abs(w[0]) > 1e-12) throw InputError("phi compose: w(0) must vanish");
  if (kind_ == PhiKind::polynomial) return ks::compose(series(n), w);
  const double a = (kind_ == PhiKind::halfplane) ? 1.0 : 1.0 - 2.0 * gamma_;
  const PowerSeries one = PowerSeries::constant(n, 1.0);
  return mul(one + a * w, reciprocal(one - w));
}

Complex MaMindaFunction::operator()(Complex z) const {
  switch (kind_) {
    case PhiKind::halfplane:
      return (1.0 + z) / (1.0 - z);
    case PhiKind::order_gamma:
      return (1.0 + (1.0 - 2.0 * gamma_) * z) / (1.0 - z);
    case PhiKind::polynomial: {
      Complex v{};
      for (auto it = b_.rbegin(); it != b_.rend(); ++it) v = (v + *it) * z;
      return 1.0 + v;
    }
  }
  return {};
}

std::pair<double, double> phi_minmax(const MaMindaFunction& phi, double r) {
  if (!(r > 0.0 && r < 1.0)) throw InputError("phi_minmax: r must lie in (0, 1)");
  if (!phi.builtin() && !phi.attested()) {
    throw InputError("phi_minmax: polynomial phi is not attested as Ma-Minda");
  }
  if (phi.builtin()) return {phi_eval_real(phi, -r), phi_eval_real(phi, r)};
  return {std::abs(phi(-r)), std::abs(phi(r))};
}

double phi_eval_real(const MaMindaFunction& phi, double t) {
  if (!phi.builtin()) throw InputError("phi_eval_real: builtin kinds only");
  if (!(t >= -1.0 && t < 1.0)) throw InputError("phi_eval_real: t must lie in [-1, 1)");
  const double a = (phi.kind() == PhiKind::halfplane) ? 1.0 : 1.0 - 2.0 * phi.gamma();
  return (1.0 + a * t) / (1.0 - t);
}

}  // namespace ks
