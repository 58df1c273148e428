#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ks/error.hpp"
#include "ks/series.hpp"
#include "support.hpp"

using ks::Complex;
using ks::PowerSeries;
using ks::test::check_coeffs;

namespace {

PowerSeries poly(std::vector<Complex> c, int order) { return PowerSeries(std::move(c)).resized(order); }

PowerSeries geometric(int order, Complex ratio = 1.0) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  Complex p = 1.0;
  for (auto& x : c) {
    x = p;
    p *= ratio;
  }
  return PowerSeries(std::move(c));
}

// outer(inner) by summing explicit powers of inner; independent of Horner.
PowerSeries compose_by_powers(const PowerSeries& outer, const PowerSeries& inner) {
  const int n = outer.order();
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
  std::vector<Complex> power(static_cast<std::size_t>(n) + 1);
  power[0] = 1.0;
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; m <= n; ++m) out[m] += outer[k] * power[m];
    std::vector<Complex> next(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) next[i + j] += power[i] * inner[j];
    }
    power = next;
  }
  return PowerSeries(std::move(out));
}

}  // namespace

TEST_CASE("mul: Cauchy product") {
  check_coeffs(ks::mul(poly({1, 1}, 4), poly({1, 1}, 4)), {1, 2, 1, 0, 0}, 0.0);
  // z^4 coefficient -1 = g2^2 - 2 g3 with g2 = g3 = 1.
  check_coeffs(ks::mul(poly({0, 1, 1, 1}, 6), poly({0, -1, 1, -1}, 6)), {0, 0, -1, 0, -1}, 0.0);
  const auto a = poly({0.3, Complex(1, 2), -4}, 5);
  CHECK(ks::max_abs_diff(ks::mul(a, PowerSeries::constant(5, 1.0)), a) == 0.0);
  CHECK_THROWS_AS(ks::mul(PowerSeries(3), PowerSeries(4)), ks::InputError);
}

TEST_CASE("reciprocal") {
  check_coeffs(ks::reciprocal(poly({1, -1}, 6)), {1, 1, 1, 1, 1, 1, 1}, 0.0);
  check_coeffs(ks::reciprocal(poly({1, 0, 1}, 6)), {1, 0, -1, 0, 1, 0, -1}, 0.0);
  CHECK_THROWS_AS(ks::reciprocal(poly({0, 1, 3}, 6)), ks::SingularSeries);
}

TEST_CASE("compose") {
  SUBCASE("phi(w) structure: B1 w1 and B1 w2 + B2 w1^2") {
    check_coeffs(ks::compose(poly({1, 2, 2}, 2), poly({0, 0.5, 0.25}, 2)), {1, 1, 1}, 1e-15);
  }
  SUBCASE("identity inner") {
    const auto f = poly({0, 1, 0.3, Complex(0.1, -0.2)}, 8);
    CHECK(ks::max_abs_diff(ks::compose(f, PowerSeries::identity(8)), f) == 0.0);
  }
  SUBCASE("z^2 into the geometric series") {
    check_coeffs(ks::compose(geometric(8), PowerSeries::monomial(8, 2)), {1, 0, 1, 0, 1, 0, 1, 0, 1}, 0.0);
  }
  SUBCASE("inner must vanish at 0") {
    CHECK_THROWS_AS(ks::compose(geometric(4), poly({0.1, 1}, 4)), ks::InputError);
  }
  SUBCASE("Horner agrees with explicit powers") {
    ks::rng::Stream rng(7, 0);
    for (int trial = 0; trial < 20; ++trial) {
      const auto outer = ks::test::random_series(rng, 12);
      auto inner = ks::test::random_series(rng, 12, 0.8).shifted_down(0);
      inner = inner - PowerSeries::constant(12, inner[0]);
      CHECK(ks::max_abs_diff(ks::compose(outer, inner), compose_by_powers(outer, inner)) < 1e-12);
    }
  }
}

TEST_CASE("derivative and antiderivative") {
  check_coeffs(ks::derivative(poly({0, 1, 1, 1}, 3)), {1, 2, 3}, 0.0);
  CHECK(ks::derivative(poly({0, 1, 1, 1}, 3)).order() == 2);
  check_coeffs(ks::derivative(PowerSeries::constant(4, 1.0)), {0, 0, 0, 0}, 0.0);
  check_coeffs(ks::derivative(poly({0, 1, 0.3, 0.1}, 3)), {1, 0.6, 0.3}, 1e-16);

  check_coeffs(ks::antiderivative(poly({1, 2, 3}, 2)), {0, 1, 1, 1}, 0.0);
  check_coeffs(ks::antiderivative(PowerSeries(3)), {0, 0, 0, 0, 0}, 0.0);
  // f_0 = z + (B1/2) z^2 + (1/3 + B2/3) z^3 with B1 = B2 = 2.
  check_coeffs(ks::antiderivative(poly({1, 2, 3}, 2)), {0, 1, 1, 1}, 0.0);

  ks::rng::Stream rng(11, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = ks::test::random_series(rng, 10);
    CHECK(ks::max_abs_diff(ks::derivative(ks::antiderivative(a)), a) < 1e-15);
    const auto back = ks::antiderivative(ks::derivative(a));
    CHECK(back[0] == Complex{});
    CHECK(ks::max_abs_diff(back - PowerSeries::constant(10, back[0]),
                           a - PowerSeries::constant(10, a[0])) < 1e-15);
  }
}

TEST_CASE("functional_inverse") {
  CHECK(ks::max_abs_diff(ks::functional_inverse(PowerSeries::identity(6)), PowerSeries::identity(6)) == 0.0);

  // z/(1-z) inverts to w/(1+w).
  const auto koebe_half = geometric(8).shifted_up(1);
  check_coeffs(ks::functional_inverse(koebe_half), {0, 1, -1, 1, -1, 1, -1, 1, -1}, 1e-14);

  const Complex a2(0.3, -0.2), a3(-0.1, 0.4);
  const auto inv = ks::functional_inverse(poly({0, 1, a2, a3}, 6));
  CHECK(std::abs(inv[2] + a2) < 1e-15);
  CHECK(std::abs(inv[3] - (2.0 * a2 * a2 - a3)) < 1e-15);

  CHECK_THROWS_AS(ks::functional_inverse(poly({0, 2, 1}, 4)), ks::InputError);
  CHECK_THROWS_AS(ks::functional_inverse(poly({0.5, 1, 1}, 4)), ks::InputError);
}

namespace {

double max_abs(const PowerSeries& s) {
  double m = 0.0;
  for (const auto& c : s.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

void check_round_trip(int order, double (*scale)(int), double tol, bool relative) {
  ks::rng::Stream rng(3, static_cast<std::uint64_t>(order));
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = ks::test::random_normalized(rng, order, scale);
    const auto inv = ks::functional_inverse(a);
    const double size = relative ? max_abs(inv) : 1.0;
    CHECK(ks::max_abs_diff(ks::compose(a, inv), PowerSeries::identity(order)) <= tol * size);
    // Coefficient matching of a(w) = z, a different algorithm from Lagrange inversion.
    const auto solved = ks::solve_composition(a, PowerSeries::identity(order));
    CHECK(ks::max_abs_diff(inv, solved) <= 1e-12 * max_abs(inv));
  }
}

}  // namespace

TEST_CASE("functional_inverse: round trip") {
  SUBCASE("|c_k| <= 1, order 8") { check_round_trip(8, [](int) { return 1.0; }, 1e-12, false); }
  SUBCASE("|c_k| <= 1/k^2, order 24") {
    check_round_trip(ks::kDefaultOrder, [](int k) { return 1.0 / (k * k); }, 1e-12, false);
  }
  // Inverse coefficients of a generic |c_k| <= 1 series reach ~1e14 by degree
  // 24, so the identity only holds relative to their size.
  SUBCASE("|c_k| <= 1, order 24, relative") {
    check_round_trip(ks::kDefaultOrder, [](int) { return 1.0; }, 1e-13, true);
  }
}

TEST_CASE("solve_composition") {
  const auto f = geometric(10).shifted_up(1);  // z/(1-z)
  const auto w = poly({0, 0.5, 0.25, Complex(0, 0.1)}, 10);
  const auto solved = ks::solve_composition(f, ks::compose(f, w));
  CHECK(ks::max_abs_diff(solved, w) < 1e-15);
  CHECK_THROWS_AS(ks::solve_composition(poly({0, 0, 1}, 4), poly({0, 1}, 4)), ks::SingularSeries);
  CHECK_THROWS_AS(ks::solve_composition(f, poly({1, 1}, 10)), ks::InputError);
}

TEST_CASE("evaluate") {
  CHECK(ks::evaluate(PowerSeries::identity(5), 0.5).value == Complex(0.5));
  const auto g = geometric(40);
  const auto e = ks::evaluate(g, 0.5);
  CHECK(std::abs(e.value - 2.0) < 1e-12);
  CHECK(e.tail > 0.0);
  const auto a = poly({Complex(0.3, 0.1), 1, 2}, 5);
  CHECK(ks::evaluate(a, 0.0).value == a[0]);
  CHECK_THROWS_AS(ks::evaluate(a, 0.96), ks::InputError);
  CHECK_NOTHROW(ks::evaluate(a, Complex(0, 0.95)));
}

TEST_CASE("tail estimate bounds the truncation error for k-growth coefficients") {
  // 1/(1-z)^2 = sum (k+1) z^k
  std::vector<Complex> c(33);
  for (int k = 0; k <= 32; ++k) c[k] = k + 1.0;
  const PowerSeries s(c);
  for (double r : {0.3, 0.6, 0.9}) {
    const auto e = ks::evaluate(s, r);
    const double exact = 1.0 / ((1 - r) * (1 - r));
    CHECK(std::abs(e.value - exact) <= e.tail + 1e-14);
  }
}

TEST_CASE("reflect") {
  check_coeffs(ks::reflect(poly({0, 1, 1, 1}, 3)), {0, -1, 1, -1}, 0.0);
  const auto even = poly({1, 0, 2, 0, 3}, 4);
  CHECK(ks::max_abs_diff(ks::reflect(even), even) == 0.0);
  check_coeffs(ks::reflect(poly({0, 1, 0, -0.5}, 3)), {0, -1, 0, 0.5}, 0.0);
}

TEST_CASE("shifts") {
  const auto s = poly({0, 0, 3, 4}, 3);
  check_coeffs(s.shifted_down(2), {3, 4}, 0.0);
  CHECK(s.shifted_down(2).order() == 1);
  CHECK_THROWS_AS(s.shifted_down(3), ks::InputError);
  check_coeffs(s.shifted_up(1), {0, 0, 0, 3}, 0.0);
}

TEST_CASE("construction rejects non-finite coefficients") {
  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{1.0, Complex(NAN, 0)}), ks::InputError);
  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), ks::InputError);
}

TEST_CASE("ring properties on random series") {
  ks::rng::Stream rng(5, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = ks::test::random_series(rng, 16);
    const auto b = ks::test::random_series(rng, 16);
    const auto c = ks::test::random_series(rng, 16);
    CHECK(ks::max_abs_diff(ks::mul(a, b), ks::mul(b, a)) < 1e-13);
    CHECK(ks::max_abs_diff(ks::mul(ks::mul(a, b), c), ks::mul(a, ks::mul(b, c))) < 1e-13);
    // c_0 bounded away from 0 so the reciprocal's coefficients stay O(1).
    const auto u = PowerSeries::constant(16, 2.0) + 0.5 * a;
    const auto one = PowerSeries::constant(16, 1.0);
    CHECK(ks::max_abs_diff(ks::mul(u, ks::reciprocal(u)), one) < 1e-13);
    CHECK(ks::max_abs_diff(ks::mul(ks::reciprocal(u), u), one) < 1e-13);
  }
}

TEST_CASE("degree-3 coefficient of -g(z)g(-z)/z is 2 g3 - g2^2") {
  ks::rng::Stream rng(9, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = ks::test::random_normalized(rng, 8, [](int) { return 1.0; });
    const auto G = (-1.0 * ks::mul(g, ks::reflect(g))).shifted_down(1);
    // Brute force: [z^4] g(z) g(-z) = sum_j g_j (-1)^{4-j} g_{4-j}.
    Complex c4{};
    for (int j = 0; j <= 4; ++j) c4 += g[j] * g[4 - j] * ((4 - j) % 2 ? -1.0 : 1.0);
    CHECK(std::abs(G[3] + c4) < 1e-14);
    CHECK(std::abs(G[3] - (2.0 * g[3] - g[2] * g[2])) < 1e-14);
  }
}
