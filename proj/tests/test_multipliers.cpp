#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "mockrad/kloosterman.hpp"
#include "mockrad/multipliers.hpp"
#include "mockrad/qseries.hpp"
#include "mockrad/verify.hpp"

using namespace mockrad;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI{0.0, 1.0};
}  // namespace

TEST_CASE("matrix construction and generators") {
  const UnimodularMatrix S = mat_S(), T = mat_T();
  CHECK(S.a == 0);
  CHECK(S.b == -1);
  CHECK(S.c == 1);
  CHECK(S.d == 0);
  CHECK(T.a == 1);
  CHECK(T.b == 1);
  CHECK(T.c == 0);
  CHECK(T.d == 1);
  const UnimodularMatrix M(2, 1, 3, 2);
  const UnimodularMatrix Ms = M.sharp();
  CHECK(Ms.a == 2);
  CHECK(Ms.b == -1);
  CHECK(Ms.c == -3);
  CHECK(Ms.d == 2);
  CHECK_THROWS_AS(UnimodularMatrix(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(UnimodularMatrix(1, 0, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(UnimodularMatrix(-1, 5, 0, -1), std::invalid_argument);
}

TEST_CASE("unit roots and kronecker symbols") {
  CHECK(std::abs(unit_root(1, 24) - std::exp(kI * kPi / 12.0)) < 1e-15);
  CHECK(std::abs(unit_root(-25, 24) - unit_root(-1, 24)) < 1e-15);
  CHECK(std::abs(unit_root(1, -3) - unit_root(-1, 3)) < 1e-15);
  CHECK(std::abs(unit_root(30, 12) + 1.0) < 1e-15);

  CHECK(kronecker_symbol(2, 15) == 1);
  CHECK(kronecker_symbol(-1, 5) == 1);
  CHECK(kronecker_symbol(-1, 3) == -1);
  CHECK(kronecker_symbol(2, 3) == -1);
  CHECK(kronecker_symbol(6, 35) == -1);
  CHECK(kronecker_symbol(3, 2) == -1);
  CHECK(kronecker_symbol(7, 2) == 1);
  CHECK(kronecker_symbol(4, 2) == 0);
  CHECK(kronecker_symbol(1, 0) == 1);
  CHECK(kronecker_symbol(5, 0) == 0);
}

TEST_CASE("weil multipliers: generator closed forms and periodicity") {
  const UnimodularMatrix S = mat_S(), T = mat_T(), I(1, 0, 0, 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Complex want_T = (a == b) ? std::pow(kI, a * a) : Complex{0, 0};
      CHECK(std::abs(psi2(T, a, b) - want_T) < 1e-12);
      const Complex want_S =
          std::exp(-kI * kPi / 4.0) * ((a * b) % 2 ? -1.0 : 1.0) / std::sqrt(2.0);
      CHECK(std::abs(psi2(S, a, b) - want_S) < 1e-12);
      CHECK(std::abs(psi2(I, a, b) - Complex(a == b ? 1.0 : 0.0, 0.0)) < 1e-12);
    }
  for (int m = 0; m < 3; ++m)
    for (int v = 0; v < 3; ++v) {
      const Complex want_T =
          (m == v) ? unit_root(m * m, 3) : Complex{0, 0};
      CHECK(std::abs(psi3(T, m, v) - want_T) < 1e-12);
      CHECK(std::abs(psi3(I, m, v) - Complex(m == v ? 1.0 : 0.0, 0.0)) < 1e-12);
    }

  const UnimodularMatrix M(2, 1, 3, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(std::abs(psi2(M, a, b) - psi2(M, a + 2, b)) < 1e-13);
      CHECK(std::abs(psi2(M, a, b) - psi2(M, a, b - 2)) < 1e-13);
    }
  for (int m = 0; m < 3; ++m)
    for (int v = 0; v < 3; ++v) {
      CHECK(std::abs(psi3(M, m, v) - psi3(M, m + 3, v)) < 1e-13);
      CHECK(std::abs(psi3(M, m, v) - psi3(M, m, v - 3)) < 1e-13);
    }
}

// Normalized against the branch sqrt(-i (c tau + d)), so the S value is 1.
TEST_CASE("eta multiplier: generators, modulus, functional equation") {
  CHECK(std::abs(eta_multiplier(mat_T()) - std::exp(kI * kPi / 12.0)) < 1e-14);
  CHECK(std::abs(eta_multiplier(mat_S()) - 1.0) < 1e-14);

  const RationalQSeries eta = eta_power_series(1, 120);
  const Complex tau{0.23, 0.9};
  const long mats[6][4] = {{0, -1, 1, 0}, {1, 0, 1, 1},  {2, 1, 3, 2},
                           {1, -1, 2, -1}, {3, 1, 2, 1}, {-1, 0, 3, -1}};
  for (const auto& e : mats) {
    const UnimodularMatrix M(e[0], e[1], e[2], e[3]);
    CHECK(std::abs(std::abs(eta_multiplier(M)) - 1.0) < 1e-14);
    const Complex ctd = static_cast<double>(M.c) * tau + static_cast<double>(M.d);
    const Complex mt =
        (static_cast<double>(M.a) * tau + static_cast<double>(M.b)) / ctd;
    const Complex lhs = eta.eval(mt);
    const Complex rhs = eta_multiplier(M) * std::sqrt(-kI * ctd) * eta.eval(tau);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("chi at S and the k=1 class sums") {
  const UnimodularMatrix S = mat_S();
  for (int v = 0; v < 3; ++v)
    for (int m = 0; m < 3; ++m) {
      const Complex want = unit_root(-2 * v * m, 3) / std::sqrt(3.0);
      CHECK(std::abs(chi(S, v, m) - want) < 1e-12);
    }
  for (int mu = -1; mu <= 1; ++mu)
    for (int nu = 0; nu < 3; ++nu) {
      const Complex got =
          kloosterman(KloostermanKey(1, mu, nu, FluxClass(mu).n_mu(5), 0, 0));
      const Complex want = unit_root(-2 * mu * nu, 3) / std::sqrt(3.0);
      CHECK(std::abs(got - want) < 1e-12);
    }
}

TEST_CASE("kloosterman keys and shift invariance") {
  const Rational nm = FluxClass(0).n_mu(5);  // 37/8 -> 24 n = 111
  const KloostermanKey key(2, 0, 1, nm, 7, -1);
  CHECK(key.n24 == 111);
  CHECK(key.r1 == 1);
  CHECK(key.r2 == 5);
  CHECK_THROWS_AS(KloostermanKey(2, 0, 0, Rational(1, 5), 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(KloostermanKey(0, 0, 0, nm, 0, 0), std::invalid_argument);

  // reduced and raw residues give the same sum
  const Complex a = kloosterman(KloostermanKey(3, 1, 2, FluxClass(1).n_mu(4), 2, 4));
  const Complex b = kloosterman(KloostermanKey(3, 1, 2, FluxClass(1).n_mu(4), 2 + 9, 4 - 9));
  CHECK(std::abs(a - b) < 1e-14);
}

TEST_CASE("randomized multiplier suite passes") {
  for (const VerifyRecord& r : verify_multipliers()) {
    INFO(r.identity, " residual=", r.residual);
    CHECK(r.pass);
  }
}
