#include "mockrad/special.hpp"

#include <cmath>
#include <stdexcept>

namespace mockrad {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Power series sum_m s^m (x/2)^{2m+5/2} / (m! Gamma(m+7/2)); s = +1 gives the
// I-Bessel, s = -1 the J-Bessel. Used below x = 1 where the closed forms lose
// most of their precision to cancellation.
double bessel52_series(double x, double s) {
  if (x == 0.0) return 0.0;
  const double gamma72 = 15.0 * std::sqrt(kPi) / 8.0;
  const double h = 0.5 * x;
  double term = std::pow(h, 2.5) / gamma72;
  double sum = term;
  for (int m = 0; m < 64; ++m) {
    term *= s * h * h / ((m + 1) * (m + 3.5));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double bessel_i52(double x) {
  if (x < 0.0) throw std::domain_error("Bessel argument must be >= 0");
  if (x < 1.0) return bessel52_series(x, 1.0);
  const double ix = 1.0 / x;
  return std::sqrt(2.0 / (kPi * x)) *
         ((1.0 + 3.0 * ix * ix) * std::sinh(x) - 3.0 * ix * std::cosh(x));
}

double bessel_i52_scaled(double x) {
  if (x < 0.0) throw std::domain_error("Bessel argument must be >= 0");
  if (x < 1.0) return std::exp(-x) * bessel52_series(x, 1.0);
  // e^{-x} sinh x = (1 - e^{-2x})/2, e^{-x} cosh x = (1 + e^{-2x})/2.
  const double ix = 1.0 / x;
  const double em = std::exp(-2.0 * x);
  return std::sqrt(2.0 / (kPi * x)) *
         0.5 * ((1.0 + 3.0 * ix * ix) * (1.0 - em) - 3.0 * ix * (1.0 + em));
}

double bessel_j52(double x) {
  if (x < 0.0) throw std::domain_error("Bessel argument must be >= 0");
  if (x < 1.0) return bessel52_series(x, -1.0);
  const double ix = 1.0 / x;
  return std::sqrt(2.0 / (kPi * x)) *
         ((3.0 * ix * ix - 1.0) * std::sin(x) - 3.0 * ix * std::cos(x));
}

double xcoth(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 3.0 - x2 * x2 / 45.0;
  }
  return x / std::tanh(x);
}

double g_kernel(double c, double w) {
  const double denom = std::cosh(2.0 * kPi * w / 3.0) - std::cos(2.0 * kPi * c);
  if (denom == 0.0) throw std::domain_error("kernel pole: integral c and w = 0");
  return std::sinh(2.0 * kPi * w / 3.0) / denom;
}

double f_kernel(double c, double w) {
  const double denom = std::cosh(2.0 * kPi * w / 3.0) - std::cos(2.0 * kPi * c);
  if (denom == 0.0) throw std::domain_error("kernel pole: integral c and w = 0");
  return std::sin(2.0 * kPi * c) / denom;
}

double g0_sub(double w) {
  const double u = kPi * w / 3.0;
  if (std::abs(u) < 0.08) {
    const double u2 = u * u;
    return u * (1.0 / 3.0 + u2 * (-1.0 / 45.0 + u2 * (2.0 / 945.0 - u2 / 4725.0)));
  }
  return 1.0 / std::tanh(u) - 1.0 / u;
}

double G_kernel(double c, double x) { return x * x * g_kernel(c, x); }

double G0_kernel(double x) { return x * (3.0 / kPi) * xcoth(kPi * x / 3.0); }

namespace {

// u coth u and its first two derivatives; series branch keeps the 1/u
// cancellations out of the direct formulas.
void xcoth_derivs(double u, double& xc, double& xc1, double& xc2) {
  if (std::abs(u) < 0.1) {
    const double u2 = u * u;
    xc = 1.0 + u2 / 3.0 - u2 * u2 / 45.0 + 2.0 * u2 * u2 * u2 / 945.0;
    xc1 = u * (2.0 / 3.0 + u2 * (-4.0 / 45.0 + u2 * (4.0 / 315.0)));
    xc2 = 2.0 / 3.0 - u2 * (4.0 / 15.0) + u2 * u2 * (4.0 / 63.0);
    return;
  }
  const double coth = 1.0 / std::tanh(u);
  const double s = std::sinh(u);
  xc = u * coth;
  xc1 = coth - u / (s * s);
  xc2 = 2.0 * (u * coth - 1.0) / (s * s);
}

}  // namespace

double g_diffquot(double c, double x, double delta) {
  if (std::abs(delta) >= 1e-4)
    return (G_kernel(c, x) - G_kernel(c, x + delta)) / delta;
  // (G(x) - G(x+d))/d -> -G'(x) - G''(x) d/2 as d -> 0.
  const double lam = 2.0 * kPi / 3.0;
  const double s = lam * x;
  const double gam = std::cos(2.0 * kPi * c);
  const double D = std::cosh(s) - gam;
  const double g = std::sinh(s) / D;
  const double g1 = lam * (1.0 - gam * std::cosh(s)) / (D * D);
  const double g2 =
      lam * lam * std::sinh(s) * (gam * std::cosh(s) + gam * gam - 2.0) / (D * D * D);
  const double G1 = 2.0 * x * g + x * x * g1;
  const double G2 = 2.0 * g + 4.0 * x * g1 + x * x * g2;
  return -G1 - 0.5 * G2 * delta;
}

double g0_diffquot(double x, double delta) {
  if (std::abs(delta) >= 1e-4)
    return (G0_kernel(x) - G0_kernel(x + delta)) / delta;
  const double lam0 = kPi / 3.0;
  double xc, xc1, xc2;
  xcoth_derivs(lam0 * x, xc, xc1, xc2);
  // G0(x) = x xc(u)/lam0, u = lam0 x.
  const double G1 = (xc + lam0 * x * xc1) / lam0;
  const double G2 = 2.0 * xc1 + lam0 * x * xc2;
  return -G1 - 0.5 * G2 * delta;
}

namespace {

long floor_mod(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

double g2d(long k, long r1, long r2, double w1, double w2) {
  const long m = 3 * k;
  const bool z1 = floor_mod(r1, m) == 0;
  const bool z2 = floor_mod(r2, m) == 0;
  if (!z1 && !z2) {
    const double c1 = static_cast<double>(floor_mod(r1, m)) / m;
    const double c2 = static_cast<double>(floor_mod(r2, m)) / m;
    const double P = w1 * w1 + w2 * w2 + 4.0 * w1 * w2;
    return P * (g_kernel(c1, w1 / k) * g_kernel(c2, w2 / k) -
                f_kernel(c1, w1 / k) * f_kernel(c2, w2 / k));
  }
  if (z1 && !z2) {
    const double c2 = static_cast<double>(floor_mod(r2, m)) / m;
    const double t1 = (w1 + 4.0 * w2) * (3.0 * k / kPi) *
                      xcoth(kPi * w1 / (3.0 * k)) * g_kernel(c2, w2 / k);
    const double t2 = w2 * w2 * g0_sub(w1 / k) * g_kernel(c2, w2 / k);
    const double t3 = (3.0 * k * k / (2.0 * kPi)) *
                      g_diffquot(c2, w2 / k, w1 / (2.0 * k));
    return t1 + t2 + t3;
  }
  if (z2 && !z1) return g2d(k, r2, r1, w2, w1);
  const double t1 = 4.0 * (3.0 * k / kPi) * (3.0 * k / kPi) *
                    xcoth(kPi * w1 / (3.0 * k)) * xcoth(kPi * w2 / (3.0 * k));
  const double t2 = k * k * G0_kernel(w2 / k) * g0_sub(w1 / k) +
                    (3.0 * k * k / (2.0 * kPi)) * g0_diffquot(w2 / k, w1 / (2.0 * k));
  const double t3 = k * k * G0_kernel(w1 / k) * g0_sub(w2 / k) +
                    (3.0 * k * k / (2.0 * kPi)) * g0_diffquot(w1 / k, w2 / (2.0 * k));
  return t1 + t2 + t3;
}

double gstar_1d(long k, long r, double w) {
  const double clipped = 1.0 - w * w;
  const double pref = clipped <= 0.0 ? 0.0 : std::pow(clipped, 1.25);
  if (pref == 0.0) return 0.0;
  const double root8 = 2.0 * std::sqrt(2.0);
  if (floor_mod(r, 3 * k) == 0)
    return (root8 * k / kPi) * xcoth(kPi * w / (root8 * k)) * pref;
  const double c = static_cast<double>(floor_mod(r, 3 * k)) / (3 * k);
  return w * g_kernel(c, 3.0 * w / (root8 * k)) * pref;
}

double gstar_2d(long k, long r1, long r2, double w1, double w2) {
  const double Q = w1 * w1 + w2 * w2 + w1 * w2;
  const double clipped = 1.0 - Q;
  const double pref = clipped <= 0.0 ? 0.0 : std::pow(clipped, 1.25);
  if (pref == 0.0) return 0.0;
  const double s = 3.0 / (2.0 * std::sqrt(2.0));
  return g2d(k, r1, r2, s * w1, s * w2) * pref;
}

}  // namespace mockrad
