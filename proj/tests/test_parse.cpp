#include <cmath>
#include <sstream>

#include "doctest.h"
#include "ks/error.hpp"
#include "ks/parse.hpp"
#include "support.hpp"

using ks::Complex;

TEST_CASE("parse_complex") {
  CHECK(ks::parse_complex("2") == Complex(2, 0));
  CHECK(ks::parse_complex("-0.5") == Complex(-0.5, 0));
  CHECK(ks::parse_complex("i") == Complex(0, 1));
  CHECK(ks::parse_complex("-i") == Complex(0, -1));
  CHECK(ks::parse_complex("0.4+0.1i") == Complex(0.4, 0.1));
  CHECK(ks::parse_complex("1+0i") == Complex(1, 0));
  CHECK(ks::parse_complex("3e-1-2i") == Complex(0.3, -2));
  CHECK(ks::parse_complex("2.5i") == Complex(0, 2.5));
  CHECK(ks::parse_complex(" 1-i ") == Complex(1, -1));
  CHECK(ks::format_complex(Complex(2, 0)) == "2");
  CHECK(ks::format_complex(Complex(2, -0.5)) == "2-0.5i");
  CHECK(ks::parse_complex("1e+2+1e-3i") == Complex(100, 0.001));
  for (const char* bad : {"", "abc", "1+", "1+2", "ii", "1 2", "nan", "inf", "1+2j"}) {
    INFO(bad);
    CHECK_THROWS_AS(ks::parse_complex(bad), ks::InputError);
  }
}

TEST_CASE("parse_real_list") {
  CHECK(ks::parse_real_list("0.3,0.6,0.9") == std::vector<double>{0.3, 0.6, 0.9});
  CHECK_THROWS_AS(ks::parse_real_list("0.3,,0.9"), ks::InputError);
  CHECK_THROWS_AS(ks::parse_real_list(""), ks::InputError);
}

TEST_CASE("parse_phi") {
  CHECK(ks::parse_phi("halfplane").kind() == ks::PhiKind::halfplane);
  const auto g = ks::parse_phi("gamma:0.25", 10);
  CHECK(g.kind() == ks::PhiKind::order_gamma);
  CHECK(g.gamma() == 0.25);
  CHECK(g.order() == 10);
  const auto p = ks::parse_phi("poly:1,0.5", 10, true);
  CHECK(p.kind() == ks::PhiKind::polynomial);
  CHECK(p.attested());
  CHECK(p.B(2) == Complex(0.5));
  for (const char* bad : {"", "halfplane:1", "gamma:", "gamma:1", "gamma:-0.5", "poly:", "poly:-1", "disk"}) {
    INFO(bad);
    CHECK_THROWS_AS(ks::parse_phi(bad), ks::InputError);
  }
}

TEST_CASE("parse_starlike and parse_schwarz") {
  const auto g = ks::parse_starlike("atoms:1@0.5,-1@0.5", 8);
  REQUIRE(g.atoms().size() == 2);
  CHECK(g.atoms()[1].x == Complex(-1));
  ks::test::check_coeffs(g.series(), {0, 1, 0, 0.5, 0, 0.375}, 1e-15);  // z/sqrt(1-z^2)
  CHECK_THROWS_AS(ks::parse_starlike("atoms:1@0.7"), ks::InputError);
  CHECK_THROWS_AS(ks::parse_starlike("atoms:1"), ks::InputError);
  CHECK_THROWS_AS(ks::parse_starlike("1@1"), ks::InputError);

  CHECK(ks::parse_schwarz("mono:2").power() == 2);
  CHECK(ks::parse_schwarz("mono:1,0.5").theta() == 0.5);
  CHECK(ks::parse_schwarz("rot:0.5,1").rho() == 0.5);
  CHECK(ks::parse_schwarz("blaschke:0.1+0.2i,-0.3").zeros().size() == 2);
  for (const char* bad : {"mono:0", "rot:1,0", "rot:0.5", "blaschke:", "blaschke:1", "spin:1"}) {
    INFO(bad);
    CHECK_THROWS_AS(ks::parse_schwarz(bad), ks::InputError);
  }
}

TEST_CASE("canonical specs round-trip exactly") {
  ks::rng::Stream rng(71, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = ks::random_starlike(rng, 12);
    const auto w = ks::random_schwarz(rng, 12);
    const auto g2 = ks::parse_starlike(ks::to_spec(g), 12);
    const auto w2 = ks::parse_schwarz(ks::to_spec(w), 12);
    CHECK(ks::to_spec(g2) == ks::to_spec(g));
    CHECK(ks::max_abs_diff(g2.series(), g.series()) == 0.0);
    CHECK(ks::max_abs_diff(w2.series(), w.series()) == 0.0);
  }
  for (const char* spec : {"halfplane", "gamma:0.25", "poly:1,0.5+0.25i"}) {
    CHECK(ks::to_spec(ks::parse_phi(spec)) == spec);
  }
  const double x = 0.1 + 0.2;
  CHECK(ks::parse_complex(ks::format_real(x)).real() == x);
  const Complex z(-1.0 / 3.0, 2.0 / 7.0);
  CHECK(ks::parse_complex(ks::format_complex(z)) == z);
}

TEST_CASE("coefficient files") {
  std::istringstream in("# f\n0 0\n1 0\n\n0.5 -0.25\n");
  const auto s = ks::read_coefficients(in);
  REQUIRE(s.order() == 2);
  CHECK(s[2] == Complex(0.5, -0.25));

  ks::rng::Stream rng(72, 0);
  const auto r = ks::test::random_series(rng, 20);
  std::stringstream io;
  ks::write_coefficients(io, r);
  CHECK(ks::max_abs_diff(ks::read_coefficients(io), r) == 0.0);

  for (const char* bad : {"", "1\n", "1 2 3\n", "a b\n", "1 nan\n"}) {
    std::istringstream b(bad);
    INFO(bad);
    CHECK_THROWS_AS(ks::read_coefficients(b), ks::InputError);
  }
  CHECK_THROWS_AS(ks::read_coefficients_file("/nonexistent/coeffs.txt"), ks::InputError);
}
