#pragma once

#include <complex>

#include "mockrad/config.hpp"
#include "mockrad/multipliers.hpp"

namespace mockrad {

/// theta_ell(scale * tau) = sum_{n in ell+Z} e^{2 pi i (scale tau) n^2};
/// depends on ell only mod 1 and is even in ell. Truncated so the dropped tail
/// is below 1e-16. Throws std::domain_error when Im(scale*tau) <= 0.
Complex theta(double ell, int scale, Complex tau);

/// Evaluation point tau = hprime/k + i z of the theta integrals, with the
/// integration endpoint at -hprime/k. Re(z) > 0 always; the bounds of the
/// principal-part comparison additionally need Re(z) >= 1. b is the
/// principal-part cutoff.
struct EichlerPoint {
  long hprime = 0;
  long k = 1;
  Complex z{1.0, 0.0};
  double b = 0.375;
};

/// One-theta integral, real parametrization:
/// i int_0^inf theta_{j/6}(3(it - h'/k)) (t+z)^{-3/2} dt,
/// with the constant theta term (j = 0 mod 6) integrated in closed form on the
/// tail.
Complex E1_direct(int j, const EichlerPoint& pt, const QuadConfig& cfg = {});

/// Same integral as a Gaussian line integral:
/// (pi i/(3 sqrt6 k)) sum_{r mod 6k, r = j mod 6} zeta_{12k}^{-h' r^2}
///   int_R w g_{r/6k}(w/2k) e^{-pi z w^2/6} dw.
Complex E1_mordell(int j, const EichlerPoint& pt, const QuadConfig& cfg = {});

/// Gaussian line integral restricted to |w| <= 2 sqrt(3b), prefactor e^{2 pi b z}.
Complex E1_principal(int j, const EichlerPoint& pt, const QuadConfig& cfg = {});

/// Iterated two-theta integral, real parametrization:
/// -int_0^inf (t1+z)^{-3/2} sum_alpha theta_{(2nu+3alpha)/6}(3(it1-h'/k))
///    int_{t1}^inf (t2+z)^{-3/2} theta_{alpha/2}(it2-h'/k) dt2 dt1,
/// constant terms handled by closed-form tails.
Complex E2_direct(int nu, const EichlerPoint& pt, const QuadConfig& cfg = {});

/// Same integral as a plane Gaussian integral:
/// -(2 pi^2/(27 sqrt3 k^2)) sum_{r1,r2 mod 3k, r1 = r2+nu mod 3}
///   zeta_{3k}^{-h' Q(r)} int_{R^2} g_{k,r}(w) e^{-2 pi z Q(w)/3} dw.
Complex E2_mordell(int nu, const EichlerPoint& pt, const QuadConfig& cfg = {});

/// Plane integral restricted to Q(w) <= 3b, prefactor e^{2 pi b z}.
Complex E2_principal(int nu, const EichlerPoint& pt, const QuadConfig& cfg = {});

/// hhat_alpha(tau): the weight-3/2 series plus its nonholomorphic completion
/// -(i/(4 sqrt2 pi)) i int_0^inf theta_{alpha/2}(-conj(tau)+it) (t+2 Im tau)^{-3/2} dt.
Complex h2_completion(int alpha, Complex tau, int n_max = 60,
                      const QuadConfig& cfg = {});

}  // namespace mockrad
