#include "mockrad/multipliers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mockrad {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int sgn(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// i^e for any integer e.
Complex ipow(long long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

UnimodularMatrix::UnimodularMatrix(long a_, long b_, long c_, long d_)
    : a(a_), b(b_), c(c_), d(d_) {
  if (a * d - b * c != 1)
    throw std::invalid_argument("matrix determinant must be 1");
  if (c == 0 && d <= 0)
    throw std::invalid_argument("matrices with c = 0 must have d > 0");
}

UnimodularMatrix UnimodularMatrix::sharp() const {
  return UnimodularMatrix(a, -b, -c, d);
}

UnimodularMatrix mat_S() { return UnimodularMatrix(0, -1, 1, 0); }
UnimodularMatrix mat_T() { return UnimodularMatrix(1, 1, 0, 1); }

int kronecker_symbol(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int res = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) res = -res;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const long long a8 = ((a % 8) + 8) % 8;
    if (a8 == 3 || a8 == 5) res = -res;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) res = -res;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) res = -res;
    a %= n;
  }
  return n == 1 ? res : 0;
}

Complex unit_root(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("unit root with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const double angle = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

Complex psi2(const UnimodularMatrix& M, int alpha, int beta) {
  const long long a = M.a, b = M.b, c = M.c, d = M.d;
  if (c == 0) {
    if (((alpha - beta) % 2 + 2) % 2 != 0) return {0.0, 0.0};
    // d > 0 is a matrix invariant, so the sign factor is trivial here.
    return ipow(a * b * alpha * alpha);
  }
  Complex s{0.0, 0.0};
  for (long long j = 0; j < std::abs(c); ++j) {
    const long long t = 2 * j + alpha;
    s += unit_root(a * t * t - 2 * beta * t + d * beta * beta, 4 * c);
  }
  const double phase = -kPi * sgn(c) / 4.0;
  return Complex{std::cos(phase), std::sin(phase)} / std::sqrt(2.0 * std::abs(c)) * s;
}

Complex psi3(const UnimodularMatrix& M, int mu, int nu) {
  const long long a = M.a, b = M.b, c = M.c, d = M.d;
  if (c == 0) {
    if (((mu - nu) % 3 + 3) % 3 != 0) return {0.0, 0.0};
    return unit_root(a * b * mu * mu, 3) * ipow(sgn(d) - 1);
  }
  Complex s{0.0, 0.0};
  for (long long j1 = 0; j1 < std::abs(c); ++j1) {
    for (long long j2 = 0; j2 < std::abs(c); ++j2) {
      const long long e = a * mu * mu + d * nu * nu - 2LL * mu * nu +
                          3 * a * (j1 * j1 - j1 * j2 + j2 * j2) +
                          3 * j1 * (a * mu - nu);
      s += unit_root(e, 3 * c);
    }
  }
  return ipow(-sgn(c)) / (std::sqrt(3.0) * std::abs(c)) * s;
}

Complex eta_multiplier(const UnimodularMatrix& M) {
  // e^{i pi e / 12} = unit_root(e, 24): reduction mod 24 keeps the phase
  // argument small, so the value stays exact for large matrix entries.
  const long long a = M.a, b = M.b, c = M.c, d = M.d;
  if (c == 0) return unit_root(b, 24);
  if (c % 2 != 0)
    return static_cast<double>(kronecker_symbol(d, std::abs(c))) *
           unit_root((a + d) * c - b * d * (c * c - 1) - 3 * c + 3, 24);
  return static_cast<double>(kronecker_symbol(c, d)) *
         unit_root(a * c * (1 - d * d) + d * (b - c + 3), 24);
}

Complex chi(const UnimodularMatrix& M, int mu, int nu) {
  const Complex psi = eta_multiplier(M);
  Complex psi9 = 1.0;
  for (int i = 0; i < 9; ++i) psi9 *= psi;
  return Complex{0.0, 1.0} * psi9 * psi3(M, mu, nu);
}

}  // namespace mockrad
