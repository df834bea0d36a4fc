#pragma once

#include <complex>

namespace mockrad {

using Complex = std::complex<double>;

/// Integer matrix (a b; c d) with ad - bc = 1; if c = 0 then d > 0 is required.
struct UnimodularMatrix {
  long a, b, c, d;

  UnimodularMatrix(long a_, long b_, long c_, long d_);

  /// (a -b; -c d); carries the entrywise conjugate of both multiplier systems.
  UnimodularMatrix sharp() const;
};

UnimodularMatrix mat_S();  // (0 -1; 1 0)
UnimodularMatrix mat_T();  // (1 1; 0 1)

/// Kronecker-Jacobi symbol (a/n), full extension: n = 0, negative and even n.
int kronecker_symbol(long long a, long long n);

/// e^{2 pi i num/den} with exact reduction of num mod den before evaluation.
Complex unit_root(long long num, long long den);

/// Rank-one Weil multiplier, indices alpha, beta mod 2.
Complex psi2(const UnimodularMatrix& M, int alpha, int beta);

/// Rank-two Weil multiplier, indices mu, nu mod 3; O(c^2) double sum for c != 0.
Complex psi3(const UnimodularMatrix& M, int mu, int nu);

/// Dedekind eta multiplier psi(M): eta(M tau) = psi(M) (-i(c tau+d))^{1/2} eta(tau).
Complex eta_multiplier(const UnimodularMatrix& M);

/// chi_M(mu,nu) = i psi(M)^9 psi3_M(mu,nu); weight-3/2 multiplier of the f-series.
Complex chi(const UnimodularMatrix& M, int mu, int nu);

}  // namespace mockrad
