#include <doctest.h>

#include <cmath>

#include "carengel/jet.hpp"

using namespace carengel;

TEST_CASE("monomial basis sizes") {
  CHECK(monomial_count(0) == 1);
  CHECK(monomial_count(1) == 5);
  CHECK(monomial_count(2) == 15);
  CHECK(monomial_count(3) == 35);
  CHECK(monomial_count(4) == 70);
}

TEST_CASE("monomial index round-trips") {
  for (int i = 0; i < monomial_count(4); ++i)
    CHECK(monomial_index(monomial_exponents(i)) == i);
  CHECK(monomial_index({5, 0, 0, 0}) == -1);
}

TEST_CASE("variable jet has unit first-order coefficient") {
  Point4 base = {1.0, 2.0, 3.0, 4.0};
  Jet x2 = Jet::variable(base, 2, 2);
  CHECK(x2.value() == 3.0);
  CHECK(x2.coeff(Exponents{0, 0, 1, 0}) == 1.0);
  CHECK(x2.coeff(Exponents{0, 0, 2, 0}) == 0.0);
}

TEST_CASE("product rule on coordinates") {
  Point4 base = {0.5, -1.0, 2.0, 0.0};
  Jet u = Jet::variable(base, 3, 0);
  Jet v = Jet::variable(base, 3, 1);
  Jet w = u * v;  // f = x*y
  CHECK(w.value() == doctest::Approx(-0.5));
  CHECK(w.partial({1, 0, 0, 0}) == doctest::Approx(-1.0));  // d/dx = y
  CHECK(w.partial({0, 1, 0, 0}) == doctest::Approx(0.5));   // d/dy = x
  CHECK(w.partial({1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(w.partial({2, 0, 0, 0}) == doctest::Approx(0.0));
}

TEST_CASE("trig jets match analytic derivatives") {
  Point4 base = {0.3, 0.0, 0.0, 0.0};
  Jet x = Jet::variable(base, 4, 0);
  Jet s = sin(x);
  CHECK(s.value() == doctest::Approx(std::sin(0.3)));
  CHECK(s.partial({1, 0, 0, 0}) == doctest::Approx(std::cos(0.3)));
  CHECK(s.partial({2, 0, 0, 0}) == doctest::Approx(-std::sin(0.3)));
  CHECK(s.partial({3, 0, 0, 0}) == doctest::Approx(-std::cos(0.3)));
  CHECK(s.partial({4, 0, 0, 0}) == doctest::Approx(std::sin(0.3)));

  Jet t = tan(x);
  double tv = std::tan(0.3), sec2 = 1.0 + tv * tv;
  CHECK(t.value() == doctest::Approx(tv));
  CHECK(t.partial({1, 0, 0, 0}) == doctest::Approx(sec2));
  CHECK(t.partial({2, 0, 0, 0}) == doctest::Approx(2.0 * tv * sec2));

  Jet c = sec(x);
  CHECK(c.value() == doctest::Approx(1.0 / std::cos(0.3)));
  CHECK(c.partial({1, 0, 0, 0}) ==
        doctest::Approx(std::tan(0.3) / std::cos(0.3)));
}

TEST_CASE("composition of jets: sin(x*y)") {
  Point4 base = {0.4, 0.7, 0.0, 0.0};
  Jet xy = Jet::variable(base, 3, 0) * Jet::variable(base, 3, 1);
  Jet s = sin(xy);
  double u = 0.4 * 0.7;
  CHECK(s.value() == doctest::Approx(std::sin(u)));
  // d/dx sin(xy) = y cos(xy)
  CHECK(s.partial({1, 0, 0, 0}) == doctest::Approx(0.7 * std::cos(u)));
  // d2/dxdy = cos(xy) - xy sin(xy)
  CHECK(s.partial({1, 1, 0, 0}) ==
        doctest::Approx(std::cos(u) - u * std::sin(u)));
}

TEST_CASE("reciprocal and division") {
  Point4 base = {2.0, 0.0, 0.0, 0.0};
  Jet x = Jet::variable(base, 3, 0);
  Jet r = x.reciprocal();
  CHECK(r.value() == doctest::Approx(0.5));
  CHECK(r.partial({1, 0, 0, 0}) == doctest::Approx(-0.25));
  CHECK(r.partial({2, 0, 0, 0}) == doctest::Approx(0.25));

  Jet zero = Jet::constant(base, 3, 0.0);
  CHECK_THROWS_AS((void)zero.reciprocal(), PoleError);
}

TEST_CASE("sqrt jet and domain guard") {
  Point4 base = {4.0, 0.0, 0.0, 0.0};
  Jet x = Jet::variable(base, 2, 0);
  Jet s = sqrt(x);
  CHECK(s.value() == doctest::Approx(2.0));
  CHECK(s.partial({1, 0, 0, 0}) == doctest::Approx(0.25));
  CHECK(s.partial({2, 0, 0, 0}) == doctest::Approx(-1.0 / 32.0));

  Point4 neg = {-1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS((void)sqrt(Jet::variable(neg, 2, 0)), PoleError);
}

TEST_CASE("pow_int") {
  Point4 base = {1.5, 0.0, 0.0, 0.0};
  Jet x = Jet::variable(base, 3, 0);
  Jet p = x.pow_int(3);
  CHECK(p.value() == doctest::Approx(3.375));
  CHECK(p.partial({1, 0, 0, 0}) == doctest::Approx(3.0 * 2.25));
  CHECK(p.partial({2, 0, 0, 0}) == doctest::Approx(6.0 * 1.5));
  CHECK(x.pow_int(0).value() == 1.0);
  CHECK(x.pow_int(-2).value() == doctest::Approx(std::pow(1.5, -2)));
}

TEST_CASE("derivative drops one order") {
  Point4 base = {0.2, 0.3, 0.0, 0.0};
  Jet f = Jet::variable(base, 3, 0) * Jet::variable(base, 3, 0) *
          Jet::variable(base, 3, 1);
  Jet fx = f.derivative(0);  // 2xy
  CHECK(fx.order() == 2);
  CHECK(fx.value() == doctest::Approx(2.0 * 0.2 * 0.3));
  CHECK(fx.partial({1, 0, 0, 0}) == doctest::Approx(2.0 * 0.3));
}
