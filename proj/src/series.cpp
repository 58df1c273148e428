#include "ks/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ks/error.hpp"

namespace ks {

namespace {

constexpr double kZeroTol = 1e-12;

void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw InputError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw InputError("PowerSeries: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("PowerSeries: empty coefficient list");
  for (const auto& c : coeffs_) {
    if (!finite(c)) throw InputError("PowerSeries: non-finite coefficient");
  }
}

PowerSeries PowerSeries::constant(int order, Complex c) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(int order, int degree, Complex c) {
  if (degree < 0) throw InputError("monomial: negative degree");
  PowerSeries s(order);
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
  return s;
}

Complex PowerSeries::coeff(int k) const noexcept {
  return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)] : Complex{};
}

PowerSeries PowerSeries::resized(int new_order) const {
  if (new_order < 0) throw InputError("resized: negative order");
  std::vector<Complex> c(static_cast<std::size_t>(new_order) + 1);
  for (int k = 0; k <= std::min(new_order, order()); ++k) c[k] = coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shifted_down(int k) const {
  if (k < 0 || k > order()) throw InputError("shifted_down: shift outside order");
  for (int j = 0; j < k; ++j) {
    if (std::abs(coeffs_[j]) > kZeroTol) {
      throw InputError("shifted_down: coefficient " + std::to_string(j) + " does not vanish");
    }
  }
  return PowerSeries(std::vector<Complex>(coeffs_.begin() + k, coeffs_.end()));
}

PowerSeries PowerSeries::shifted_up(int k) const {
  if (k < 0) throw InputError("shifted_up: negative shift");
  PowerSeries s(order());
  for (int j = 0; j + k <= order(); ++j) s.coeffs_[j + k] = coeffs_[j];
  return s;
}

int PowerSeries::monomial_degree() const noexcept {
  int degree = -1;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k] != Complex{}) {
      if (degree >= 0) return -1;
      degree = k;
    }
  }
  return degree;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "add");
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (int k = 0; k <= a.order(); ++k) c[k] += b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "sub");
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (int k = 0; k <= a.order(); ++k) c[k] -= b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(Complex s, const PowerSeries& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "mul");
  const int n = a.order();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (ac[i] == Complex{}) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += ac[i] * bc[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries reciprocal(const PowerSeries& a) {
  const Complex c0 = a[0];
  if (c0 == Complex{}) throw SingularSeries("reciprocal: zero constant term");
  const int n = a.order();
  const auto ac = a.coeffs();
  std::vector<Complex> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1.0 / c0;
  for (int k = 1; k <= n; ++k) {
    Complex s{};
    for (int j = 1; j <= k; ++j) s += ac[j] * r[k - j];
    r[k] = -s / c0;
  }
  return PowerSeries(std::move(r));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  require_same_order(outer, inner, "compose");
  if (std::abs(inner[0]) > kZeroTol) {
    throw InputError("compose: inner series must vanish at the origin");
  }
  const int n = outer.order();

  // c z^m: direct substitution.
  if (const int m = inner.monomial_degree(); m >= 1) {
    const Complex c = inner[m];
    std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
    Complex cp = 1.0;
    for (int k = 0; k * m <= n; ++k, cp *= c) out[k * m] = outer[k] * cp;
    return PowerSeries(std::move(out));
  }

  // Horner in the series ring. inner has no constant term, so each pass only
  // needs the product truncated at N.
  PowerSeries acc = PowerSeries::constant(n, outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    acc = mul(acc, inner) + PowerSeries::constant(n, outer[k]);
  }
  return acc;
}

PowerSeries derivative(const PowerSeries& a) {
  const int n = a.order();
  if (n == 0) return PowerSeries(0);
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[k] = static_cast<double>(k + 1) * a[k + 1];
  return PowerSeries(std::move(c));
}

PowerSeries antiderivative(const PowerSeries& a) {
  const int n = a.order();
  std::vector<Complex> c(static_cast<std::size_t>(n) + 2);
  for (int k = 1; k <= n + 1; ++k) c[k] = a[k - 1] / static_cast<double>(k);
  return PowerSeries(std::move(c));
}

PowerSeries functional_inverse(const PowerSeries& a) {
  const int n = a.order();
  if (n < 1 || std::abs(a[0]) > kZeroTol || std::abs(a[1] - 1.0) > kZeroTol) {
    throw InputError("functional_inverse: series must be normalized (c0 = 0, c1 = 1)");
  }
  // h = z / a(z), of order N-1; the n-th inverse coefficient is [z^{n-1}] h^n / n.
  const PowerSeries h = reciprocal(a.shifted_down(1));
  std::vector<Complex> b(static_cast<std::size_t>(n) + 1);
  PowerSeries hp = h;
  for (int k = 1; k <= n; ++k) {
    b[k] = hp[k - 1] / static_cast<double>(k);
    if (k < n) hp = mul(hp, h);
  }
  return PowerSeries(std::move(b));
}

PowerSeries solve_composition(const PowerSeries& outer, const PowerSeries& target) {
  require_same_order(outer, target, "solve_composition");
  const int n = outer.order();
  const Complex lead = outer.coeff(1);
  if (lead == Complex{}) throw SingularSeries("solve_composition: outer'(0) = 0");
  if (std::abs(target[0] - outer[0]) > kZeroTol * std::max(1.0, std::abs(outer[0]))) {
    throw InputError("solve_composition: target(0) differs from outer(0)");
  }

  // pw[k][m] = [z^m] w^k. For k >= 2 it depends only on w_1..w_{m-1}, so each
  // w_m follows from matching the z^m coefficient of outer(w) to the target.
  std::vector<std::vector<Complex>> pw(static_cast<std::size_t>(n) + 1,
                                       std::vector<Complex>(static_cast<std::size_t>(n) + 1));
  std::vector<Complex> w(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    Complex acc{};
    for (int k = 2; k <= m; ++k) {
      Complex s{};
      for (int j = 1; j <= m - k + 1; ++j) s += w[j] * pw[k - 1][m - j];
      pw[k][m] = s;
      acc += outer[k] * s;
    }
    w[m] = (target[m] - acc) / lead;
    pw[1][m] = w[m];
  }
  return PowerSeries(std::move(w));
}

PowerSeries reflect(const PowerSeries& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return PowerSeries(std::move(c));
}

double tail_estimate(const PowerSeries& a, double radius) {
  const int n = a.order();
  if (n == 0 || radius == 0.0) return 0.0;
  double c = 0.0;
  for (int k = std::max(1, (n + 1) / 2); k <= n; ++k) {
    c = std::max(c, std::abs(a[k]) / static_cast<double>(k));
  }
  // sum_{k>N} k x^k = x^{N+1} ((N+1) - N x) / (1-x)^2
  const double x = radius;
  return c * std::pow(x, n + 1) * ((n + 1) - n * x) / ((1.0 - x) * (1.0 - x));
}

Evaluation evaluate(const PowerSeries& a, Complex z) {
  const double r = std::abs(z);
  if (!(r <= kMaxEvalRadius)) {
    throw InputError("evaluate: |z| exceeds " + std::to_string(kMaxEvalRadius));
  }
  Complex v{};
  for (int k = a.order(); k >= 0; --k) v = v * z + a[k];
  return {v, tail_estimate(a, r)};
}

double max_abs_diff(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::max(a.order(), b.order());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
  return d;
}

}  // namespace ks
