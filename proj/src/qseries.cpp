#include "mockrad/qseries.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <json.hpp>

#include "mockrad/rational.hpp"

namespace mockrad {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

const Rational& RationalQSeries::coeff(int n) const {
  if (n < 0 || n > n_max())
    throw std::out_of_range("series coefficient index " + std::to_string(n) +
                            " outside [0, " + std::to_string(n_max()) + "]");
  return coeffs[static_cast<std::size_t>(n)];
}

RationalQSeries RationalQSeries::mul(const RationalQSeries& other) const {
  const int n = std::min(n_max(), other.n_max());
  if (n < 0) throw std::invalid_argument("product of empty series");
  RationalQSeries out;
  out.offset = offset + other.offset;
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int j = 0; j <= n; ++j) {
    Rational acc(0);
    for (int m = 0; m <= j; ++m) acc += coeffs[m] * other.coeffs[j - m];
    out.coeffs[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

std::complex<double> RationalQSeries::eval(std::complex<double> tau) const {
  if (tau.imag() <= 0.0)
    throw std::domain_error("series evaluation needs Im(tau) > 0");
  const std::complex<double> two_pi_i(0.0, 2.0 * M_PI);
  const std::complex<double> q = std::exp(two_pi_i * tau);
  std::complex<double> p = std::exp(two_pi_i * tau * offset.get_d());
  std::complex<double> s{0.0, 0.0};
  for (const Rational& c : coeffs) {
    s += c.get_d() * p;
    p *= q;
  }
  return s;
}

double RationalQSeries::tail_estimate(std::complex<double> tau) const {
  if (coeffs.empty()) return 0.0;
  const double absq = std::exp(-2.0 * M_PI * tau.imag());
  return std::abs(coeffs.back().get_d()) *
         std::pow(absq, offset.get_d() + n_max());
}

nlohmann::json RationalQSeries::to_json() const {
  nlohmann::json j;
  j["offset"] = to_string(offset);
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& c : coeffs) arr.push_back(to_string(c));
  j["coeffs"] = std::move(arr);
  return j;
}

RationalQSeries RationalQSeries::from_json(const nlohmann::json& j) {
  RationalQSeries out;
  out.offset = parse_rational(j.at("offset").get<std::string>());
  for (const auto& c : j.at("coeffs"))
    out.coeffs.push_back(parse_rational(c.get<std::string>()));
  return out;
}

FluxClass::FluxClass(int mu_) : mu(mu_) {
  if (mu < -1 || mu > 1)
    throw std::invalid_argument("flux class must be in {-1, 0, 1}");
}

Rational FluxClass::delta() const {
  return mu == 0 ? Rational(3, 8) : Rational(-31, 24);
}

Rational FluxClass::n_mu(long n) const { return Rational(n) - delta(); }

Rational hurwitz_class_number(long N) {
  if (N < 0) throw std::invalid_argument("class number index must be >= 0");
  if (N == 0) return Rational(-1, 12);
  if (N % 4 == 1 || N % 4 == 2) return Rational(0);
  // Reduced forms ax^2+bxy+cy^2, b^2-4ac = -N: |b| <= a <= c with b >= 0
  // whenever |b| = a or a = c; enumerate b >= 0 and weight the generic case 2.
  Rational total(0);
  for (long b = N % 2; b * b <= N; b += 2) {
    const long m = (b * b + N) / 4;
    for (long a = std::max(b, 1L); a * a <= m; ++a) {
      if (m % a != 0) continue;
      const long c = m / a;
      if (a == b && b == c)
        total += Rational(1, 3);
      else if (b == 0 && a == c)
        total += Rational(1, 2);
      else if (b == 0 || a == b || a == c)
        total += 1;
      else
        total += 2;
    }
  }
  return total;
}

RationalQSeries h2_series(int alpha, int n_max) {
  if (alpha != 0 && alpha != 1)
    throw std::invalid_argument("theta index must be 0 or 1");
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  RationalQSeries out;
  out.offset = Rational(3 * alpha, 4);
  out.offset.canonicalize();
  out.coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n)
    out.coeffs.push_back(hurwitz_class_number(4 * n + 3 * alpha));
  return out;
}

namespace {

long divisor_sum(long n) {
  long s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

}  // namespace

RationalQSeries eta_power_series(int exponent, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  // prod (1-q^m)^e = sum a_n q^n with n a_n = -e sum_{m<=n} sigma_1(m) a_{n-m}.
  RationalQSeries out;
  out.offset = Rational(exponent, 24);
  out.offset.canonicalize();
  out.coeffs.assign(static_cast<std::size_t>(n_max) + 1, Rational(0));
  out.coeffs[0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (long m = 1; m <= n; ++m)
      acc += Rational(divisor_sum(m)) * out.coeffs[n - m];
    Rational step(-exponent, n);
    step.canonicalize();
    out.coeffs[static_cast<std::size_t>(n)] = step * acc;
  }
  return out;
}

namespace {

const Rational kH30[] = {Rational(1, 9), -1, 3,   17,  41, 78,
                         120,            193, 240, 359, 414};
const Rational kH31[] = {3, 15, 36, 69, 114, 165, 246};

}  // namespace

int h3_horizon(const FluxClass& mu) { return mu.mu == 0 ? 10 : 6; }

RationalQSeries h3_series(const FluxClass& mu, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const int horizon = h3_horizon(mu);
  if (n_max > horizon)
    throw HorizonError("weight-three series horizon is " +
                           std::to_string(horizon) + "; requested index " +
                           std::to_string(n_max),
                       horizon);
  RationalQSeries out;
  if (mu.mu == 0) {
    out.offset = Rational(0);
    out.coeffs.assign(kH30, kH30 + n_max + 1);
  } else {
    out.offset = Rational(5, 3);
    out.coeffs.assign(kH31, kH31 + n_max + 1);
  }
  return out;
}

Rational oracle_alpha3(const FluxClass& mu, long n) {
  if (n < 0) throw std::invalid_argument("coefficient index must be >= 0");
  const int horizon = h3_horizon(mu);
  if (n > horizon)
    throw HorizonError("coefficient horizon is " + std::to_string(horizon) +
                           "; requested n = " + std::to_string(n),
                       horizon);
  const RationalQSeries h = h3_series(mu, static_cast<int>(n));
  const RationalQSeries b = eta_power_series(-9, static_cast<int>(n));
  Rational acc(0);
  for (long m = 0; m <= n; ++m) acc += h.coeffs[m] * b.coeffs[n - m];
  return acc;
}

}  // namespace mockrad
