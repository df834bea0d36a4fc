#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "mockrad/rational.hpp"

namespace mockrad {

/// Requested index lies beyond the reliable coefficient data of a series.
struct HorizonError : std::runtime_error {
  int horizon;
  HorizonError(const std::string& what, int horizon_)
      : std::runtime_error(what), horizon(horizon_) {}
};

/// Power series sum_{n=0}^{n_max} coeffs[n] q^{offset+n} with exact coefficients.
struct RationalQSeries {
  Rational offset{0};
  std::vector<Rational> coeffs;  // index n holds the coefficient of q^{offset+n}

  int n_max() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& coeff(int n) const;

  /// Product truncated to min(n_max); offsets add. Truncation is never extended.
  RationalQSeries mul(const RationalQSeries& other) const;

  /// Numerical evaluation at tau (q = e^{2 pi i tau}), Im(tau) > 0.
  std::complex<double> eval(std::complex<double> tau) const;

  /// Magnitude of the last retained term at tau; crude truncation indicator.
  double tail_estimate(std::complex<double> tau) const;

  nlohmann::json to_json() const;
  static RationalQSeries from_json(const nlohmann::json& j);
};

/// 't Hooft flux sector; fixes the exponent shift delta and n_mu(n) = n - delta.
struct FluxClass {
  int mu;  // in {-1, 0, 1}

  explicit FluxClass(int mu_);
  Rational delta() const;          // 3/8 for mu=0, -31/24 for mu=+-1
  Rational n_mu(long n) const;     // n - delta
};

/// Hurwitz class number H(N). H(0) = -1/12, H(N) = 0 for N = 1,2 mod 4,
/// otherwise the weighted count of reduced forms of discriminant -N.
Rational hurwitz_class_number(long N);

/// sum_{n<=n_max} H(4n+3*alpha) q^{n+3*alpha/4}, alpha in {0,1}.
RationalQSeries h2_series(int alpha, int n_max);

/// Expansion of eta^e = q^{e/24} prod (1-q^n)^e via the divisor-sum recurrence.
RationalQSeries eta_power_series(int exponent, int n_max);

/// Tabulated weight-three series for the flux sector; coefficients beyond the
/// stored horizon (10 for mu=0, 6 for mu=+-1) raise HorizonError.
RationalQSeries h3_series(const FluxClass& mu, int n_max);
int h3_horizon(const FluxClass& mu);

/// alpha_{3,mu}(n): coefficient of q^{n - delta_mu} in h3 * eta^{-9}, exact.
Rational oracle_alpha3(const FluxClass& mu, long n);

}  // namespace mockrad
