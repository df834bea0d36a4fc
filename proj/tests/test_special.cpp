#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mockrad/special.hpp"

using namespace mockrad;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Positive-term reference series in extended precision.
long double i52_reference(long double x) {
  long double t = std::pow(x / 2.0L, 2.5L) / std::tgammal(3.5L);
  long double s = t;
  for (int m = 0; m < 400; ++m) {
    t *= (x * x / 4.0L) / ((m + 1.0L) * (m + 3.5L));
    s += t;
    if (t < 1e-25L * s) break;
  }
  return s;
}

long double j52_reference(long double x) {
  long double t = std::pow(x / 2.0L, 2.5L) / std::tgammal(3.5L);
  long double s = t;
  for (int m = 0; m < 400; ++m) {
    t *= -(x * x / 4.0L) / ((m + 1.0L) * (m + 3.5L));
    s += t;
    if (std::abs(t) < 1e-25L * std::abs(s) && m > 8) break;
  }
  return s;
}

long double G_reference(long double c, long double x) {
  const long double u = 2.0L * kPi * x / 3.0L;
  return x * x * std::sinh(u) / (std::cosh(u) - std::cos(2.0L * kPi * c));
}

long double G0_reference(long double x) {
  const long double u = kPi * x / 3.0L;
  return x * x * std::cosh(u) / std::sinh(u);
}

}  // namespace

TEST_CASE("half-integer bessel functions") {
  CHECK(bessel_i52(0.0) == 0.0);
  CHECK_THROWS_AS(bessel_i52(-1.0), std::domain_error);
  CHECK(bessel_i52(1.0) == doctest::Approx(5.7098909203048e-02).epsilon(1e-10));
  CHECK(bessel_i52(2.5) ==
        doctest::Approx(8.0515947159157564e-01).epsilon(1e-10));
  CHECK(bessel_i52(10.0) ==
        doctest::Approx(2.0285127573919356e+03).epsilon(1e-10));
  for (double x = 1e-3; x <= 30.0; x *= 1.7) {
    const double ref = static_cast<double>(i52_reference(x));
    CHECK(std::abs(bessel_i52(x) - ref) <= 1e-12 * std::abs(ref));
  }
  // scaled form: exact relation in the overlap, finite far beyond overflow
  for (double x : {0.5, 2.0, 20.0, 300.0}) {
    const double rel =
        std::abs(std::exp(x) * bessel_i52_scaled(x) - bessel_i52(x));
    CHECK(rel <= 1e-12 * bessel_i52(x));
  }
  CHECK(std::isfinite(bessel_i52_scaled(700.0)));
  CHECK(bessel_i52_scaled(700.0) > 0.0);

  CHECK(bessel_j52(1.0) ==
        doctest::Approx(4.9496810228477829e-02).epsilon(1e-10));
  for (double x = 1e-3; x <= 20.0; x *= 1.9) {
    const double ref = static_cast<double>(j52_reference(x));
    CHECK(std::abs(bessel_j52(x) - ref) <= 1e-10 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("scalar kernels") {
  CHECK(xcoth(0.0) == 1.0);
  CHECK(xcoth(0.3) == doctest::Approx(1.0298215290965225).epsilon(1e-14));
  CHECK(std::abs(xcoth(9e-5) - xcoth(1.1e-4)) < 1e-8);  // branch continuity

  CHECK(g_kernel(0.25, 1.0) ==
        doctest::Approx(9.7012382116593066e-01).epsilon(1e-13));
  CHECK(f_kernel(0.25, 0.3) ==
        doctest::Approx(8.3058403833070860e-01).epsilon(1e-13));
  CHECK(f_kernel(0.25, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  // parity
  CHECK(g_kernel(0.3, -0.7) == doctest::Approx(-g_kernel(0.3, 0.7)).epsilon(1e-14));
  CHECK(f_kernel(0.3, -0.7) == doctest::Approx(f_kernel(0.3, 0.7)).epsilon(1e-14));
  // true pole only at integral c and w = 0
  CHECK_THROWS_AS(g_kernel(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(g_kernel(1.0, 0.0), std::domain_error);
  CHECK(std::isfinite(g_kernel(0.5, 0.0)));

  CHECK(g0_sub(0.05) ==
        doctest::Approx(1.7450103406449813e-02).epsilon(1e-12));
  CHECK(g0_sub(0.0) == 0.0);
  // both branches match an extended-precision direct evaluation at the
  // switch (u = pi w / 3 crosses 0.08)
  for (double w : {0.076, 0.077}) {
    const long double u = static_cast<long double>(kPi) * w / 3.0L;
    const long double ref = 1.0L / std::tanh(u) - 1.0L / u;
    CHECK(std::abs(g0_sub(w) - static_cast<double>(ref)) < 1e-13);
  }
}

TEST_CASE("difference quotients take the analytic limit") {
  CHECK(G0_kernel(0.4) ==
        doctest::Approx(4.0405504895053129e-01).epsilon(1e-12));
  CHECK(G_kernel(1.0 / 3.0, 0.7) ==
        doctest::Approx(3.6125500857944959e-01).epsilon(1e-12));

  // direct branch reproduces the literal quotient
  const double direct = (G_kernel(0.25, 0.3) - G_kernel(0.25, 0.5)) / 0.2;
  CHECK(g_diffquot(0.25, 0.3, 0.2) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(g_diffquot(0.25, 0.3, 0.2) ==
        doctest::Approx(-7.2529105609398981e-01).epsilon(1e-12));

  // Taylor branch against an extended-precision literal quotient
  {
    const long double d = 1e-5L;
    const long double ref =
        (G_reference(0.25L, 0.3L) - G_reference(0.25L, 0.3L + d)) / d;
    CHECK(std::abs(g_diffquot(0.25, 0.3, 1e-5) - static_cast<double>(ref)) <
          1e-9);
  }
  {
    const long double d = 1e-5L;
    const long double ref =
        (G0_reference(0.4L) - G0_reference(0.4L + d)) / d;
    CHECK(std::abs(g0_diffquot(0.4, 1e-5) - static_cast<double>(ref)) < 1e-9);
  }
  // both branches match the extended-precision quotient at the switch
  {
    const long double dl = 0.95e-4L, dh = 1.05e-4L;
    const long double refl =
        (G_reference(0.25L, 0.3L) - G_reference(0.25L, 0.3L + dl)) / dl;
    const long double refh =
        (G_reference(0.25L, 0.3L) - G_reference(0.25L, 0.3L + dh)) / dh;
    CHECK(std::abs(g_diffquot(0.25, 0.3, 0.95e-4) -
                   static_cast<double>(refl)) < 2e-7);
    CHECK(std::abs(g_diffquot(0.25, 0.3, 1.05e-4) -
                   static_cast<double>(refh)) < 1e-9);
    const long double r0l = (G0_reference(0.4L) - G0_reference(0.4L + dl)) / dl;
    const long double r0h = (G0_reference(0.4L) - G0_reference(0.4L + dh)) / dh;
    CHECK(std::abs(g0_diffquot(0.4, 0.95e-4) - static_cast<double>(r0l)) < 2e-7);
    CHECK(std::abs(g0_diffquot(0.4, 1.05e-4) - static_cast<double>(r0h)) < 1e-9);
  }
}

TEST_CASE("two-dimensional kernel: values, symmetry, periodicity") {
  CHECK(g2d(1, 0, 0, 0.2, 0.3) ==
        doctest::Approx(2.8514712817632204).epsilon(1e-11));
  CHECK(g2d(1, 1, 2, 0.2, 0.3) ==
        doctest::Approx(1.4199815124575887e-01).epsilon(1e-11));
  CHECK(g2d(2, 3, 1, 0.4, 0.1) ==
        doctest::Approx(1.4138319519313216e-02).epsilon(1e-10));

  std::mt19937 rng(31u);
  std::uniform_real_distribution<double> uw(-0.9, 0.9);
  for (int t = 0; t < 100; ++t) {
    const long k = 1 + static_cast<long>(rng() % 4);
    const long r1 = static_cast<long>(rng() % (3 * k));
    const long r2 = static_cast<long>(rng() % (3 * k));
    double w1 = uw(rng), w2 = uw(rng);
    if (w1 == 0.0) w1 = 0.1;
    if (w2 == 0.0) w2 = 0.2;
    const double a = g2d(k, r1, r2, w1, w2);
    const double b = g2d(k, r2, r1, w2, w1);
    CHECK(std::abs(a - b) <= 1e-11 * (1.0 + std::abs(a)));
    const double c = g2d(k, r1 + 3 * k, r2, w1, w2);
    CHECK(std::abs(a - c) <= 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("weighted boundary kernels") {
  CHECK(gstar_1d(1, 0, 0.0) ==
        doctest::Approx(2.0 * std::sqrt(2.0) / kPi).epsilon(1e-13));
  CHECK(gstar_1d(1, 1, 0.5) ==
        doctest::Approx(2.1639653750893820e-01).epsilon(1e-11));
  CHECK(gstar_1d(2, 3, 0.25) ==
        doctest::Approx(3.1815658093966977e-02).epsilon(1e-11));
  CHECK(gstar_1d(1, 0, 1.0) == 0.0);
  CHECK(gstar_1d(1, 2, -1.0) == 0.0);

  CHECK(gstar_2d(1, 0, 0, 0.0, 0.0) ==
        doctest::Approx(27.0 / (kPi * kPi)).epsilon(1e-9));
  CHECK(std::abs(gstar_2d(1, 1, 2, 0.0, 0.0)) < 1e-15);
  CHECK(gstar_2d(1, 1, 2, 0.3, 0.2) ==
        doctest::Approx(1.2463951830898201e-01).epsilon(1e-10));
  // vanishing on the boundary Q = 1 and outside
  CHECK(gstar_2d(1, 0, 0, 1.0, 0.0) == 0.0);
  CHECK(gstar_2d(1, 0, 0, 0.9, 0.9) == 0.0);
}
