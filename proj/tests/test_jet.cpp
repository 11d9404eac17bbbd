#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ssg/analytic.hpp"
#include "ssg/jet.hpp"

using namespace ssg;

namespace {

bool jet_close(const Jet& a, const Jet& b, double tol = 1e-14) {
  return max_abs(a - b) < tol;
}

}  // namespace

TEST_CASE("jet product follows the Leibniz rule") {
  const Jet a(2.0, 1.0, 0.0, 0.0);
  const Jet b(3.0, 0.0, 1.0, 0.0);
  CHECK(jet_close(a * b, Jet(6.0, 3.0, 2.0, 1.0)));

  const Jet c(0.5, -1.0, 2.0, 0.25);
  CHECK(jet_close(c * Jet(Complex(1.0)), c));
  CHECK(jet_close(c * Jet(), Jet()));
}

TEST_CASE("jet product is commutative and distributive") {
  const Jet a(0.3, -0.7, 1.1, 0.2);
  const Jet b(-1.2, 0.4, 0.9, -0.5);
  const Jet c(2.0, 1.0, -0.3, 0.8);
  CHECK(jet_close(a * b, b * a));
  CHECK(jet_close(a * (b + c), a * b + a * c, 1e-13));
}

TEST_CASE("composition with exp propagates all four slots") {
  CHECK(jet_close(jet_apply(kExp, Jet(0.0, 1.0, 1.0, 0.0)),
                  Jet(1.0, 1.0, 1.0, 1.0)));
}

TEST_CASE("composition with sinh at zero keeps first derivatives only") {
  CHECK(jet_close(jet_apply(kSinh, Jet(0.0, 2.0, 0.0, 0.0)),
                  Jet(0.0, 2.0, 0.0, 0.0)));
}

TEST_CASE("composition of a constant jet is a constant jet") {
  const Jet g(0.7, 0.0, 0.0, 0.0);
  CHECK(jet_close(jet_apply(kCosh, g), Jet(std::cosh(0.7), 0.0, 0.0, 0.0)));
}

TEST_CASE("composition against hand-computed tanh values") {
  // g encodes u with u_x = 0.7, u_t = -0.4, u_xt = 0.2 at u = 0.3
  const Jet g(0.3, 0.7, -0.4, 0.2);
  const double u = 0.3;
  const double th = std::tanh(u);
  const double sech2 = 1.0 - th * th;
  const double d2 = -2.0 * th * sech2;  // (tanh)''
  const Jet expect(th, sech2 * 0.7, sech2 * (-0.4),
                   d2 * 0.7 * (-0.4) + sech2 * 0.2);
  CHECK(jet_close(jet_apply(kTanh, g), expect, 1e-15));
}

TEST_CASE("reciprocal and division invert multiplication") {
  const Jet a(1.7, -0.3, 0.8, 0.45);
  CHECK(jet_close(a * jet_reciprocal(a), Jet(Complex(1.0)), 1e-15));
  const Jet b(0.9, 0.2, -1.1, 0.6);
  CHECK(jet_close(jet_div(a, b) * b, a, 1e-15));
}

TEST_CASE("derivative towers are self-consistent under finite differences") {
  const AnalyticFunction* fns[] = {&kExp,  &kSinh,    &kCosh,      &kTanh,
                                   &kSech, &kArctanh, &kReciprocal};
  const double h = 1e-5;
  for (const AnalyticFunction* f : fns) {
    for (double z : {0.37, -0.52}) {
      for (int k = 0; k + 1 <= 6; ++k) {
        const Complex fd =
            (f->deriv(k, z + h) - f->deriv(k, z - h)) / (2.0 * h);
        const Complex ex = f->deriv(k + 1, z);
        CHECK(std::abs(fd - ex) <
              1e-7 * std::max(1.0, std::abs(ex)));
      }
    }
  }
}

TEST_CASE("arctanh tower matches its closed form") {
  const double z = 0.5;
  // third derivative: 1/(1-z)^3 + 1/(1+z)^3
  const Complex expect = 1.0 / std::pow(1.0 - z, 3) + 1.0 / std::pow(1.0 + z, 3);
  CHECK(std::abs(kArctanh.deriv(3, z) - expect) < 1e-13);
  CHECK(std::abs(kArctanh.deriv(0, 0.5) - std::atanh(0.5)) < 1e-15);
}

TEST_CASE("domain guards reject their singular points") {
  CHECK_THROWS_AS(jet_apply(kLog, Jet(Complex(0.0))), SingularPoint);
  CHECK_THROWS_AS(jet_apply(kSqrt, Jet(Complex(0.0))), SingularPoint);
  CHECK_THROWS_AS(jet_apply(kReciprocal, Jet(Complex(0.0))), SingularPoint);
  CHECK_THROWS_AS(jet_apply(kArctanh, Jet(Complex(1.0))), SingularPoint);
  CHECK_THROWS_AS(jet_apply(kArctanh, Jet(Complex(-1.0))), SingularPoint);
  // real branch cut beyond the branch points
  CHECK_THROWS_AS(jet_apply(kArctanh, Jet(Complex(2.0))), SingularPoint);
  // pole of tanh/sech at i pi/2
  const Complex pole(0.0, std::acos(-1.0) / 2.0);
  CHECK_THROWS_AS(jet_apply(kTanh, Jet(pole)), SingularPoint);
  CHECK_THROWS_AS(jet_apply(kSech, Jet(pole)), SingularPoint);
  CHECK_NOTHROW(jet_apply(kArctanh, Jet(Complex(0.9))));
}

TEST_CASE("singular point report carries the location") {
  try {
    jet_apply(kArctanh, Jet(Complex(1.0)));
    CHECK(false);
  } catch (const SingularPoint& s) {
    CHECK(std::abs(s.where() - Complex(1.0)) < 1e-15);
  }
}
