#include "mockrad/rademacher.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <json.hpp>

#include "mockrad/special.hpp"

namespace mockrad {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double require_real(Complex v, double tol, const char* family, long k) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericalError(std::string(family) + " term at k = " +
                         std::to_string(k) + " is not finite");
  if (std::abs(v.imag()) > tol * (1.0 + std::abs(v.real())))
    throw NumericalError(std::string(family) + " term at k = " +
                         std::to_string(k) + " has imaginary residue " +
                         std::to_string(v.imag()));
  return v.real();
}

// I_{5/2} resp. its oscillatory continuation at pi sqrt(6 |nm| q)/k; the
// scaled product form keeps the k = 1 leading term finite for large n.
double bessel_factor(double nm, double q, long k) {
  const double x = kPi * std::sqrt(6.0 * std::abs(nm) * q) / k;
  if (nm > 0.0)
    return x > 600.0 ? std::exp(x) * bessel_i52_scaled(x) : bessel_i52(x);
  return bessel_j52(x);
}

}  // namespace

double term_A1(const FluxClass& flux, long n, long k, const RademacherConfig& cfg) {
  const Rational nm = flux.n_mu(n);
  const double nmd = nm.get_d();
  const Complex K = kloosterman(KloostermanKey(k, flux.mu, 0, nm, 0, 0), cfg.memo);
  const double pref = std::pow(6.0 / std::abs(nmd), 1.25);
  const Complex t = (kPi / 144.0) * pref * bessel_factor(nmd, 1.0, k) / k * K;
  return require_real(t, cfg.realness_tol, "A1", k);
}

double term_A2(const FluxClass& flux, long n, long k, const RademacherConfig& cfg) {
  const Rational nm = flux.n_mu(n);
  const double nmd = nm.get_d();
  const QuadratureRule gl = gauss_legendre(cfg.quad.interval_order);
  const std::size_t m = gl.size();
  std::vector<double> bes(m);
  for (std::size_t i = 0; i < m; ++i)
    bes[i] = bessel_factor(nmd, 1.0 - gl.x[i] * gl.x[i], k);

  const long classes = 3 * k;
  std::vector<Complex> buf(classes);
  std::exception_ptr err;
  const bool par = cfg.policy == ExecPolicy::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (long r = 0; r < classes; ++r) {
    try {
      const Complex K = kloosterman(
          KloostermanKey(k, flux.mu, static_cast<int>(r % 3), nm, r, 0), cfg.memo);
      NeumaierSum J;
      for (std::size_t i = 0; i < m; ++i)
        J.add(gl.w[i] * gstar_1d(k, r, gl.x[i]) * bes[i]);
      buf[r] = K * J.value();
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  (void)par;
  if (err) std::rethrow_exception(err);

  NeumaierSum re, im;
  for (long r = 0; r < classes; ++r) {
    re.add(buf[r].real());
    im.add(buf[r].imag());
  }
  const double pref = std::pow(6.0 / std::abs(nmd), 1.25);
  const Complex t = -(9.0 * kPi / 512.0) * pref *
                    Complex{re.value(), im.value()} /
                    static_cast<double>(k * k);
  return require_real(t, cfg.realness_tol, "A2", k);
}

double term_A3(const FluxClass& flux, long n, long k, const RademacherConfig& cfg) {
  const Rational nm = flux.n_mu(n);
  const double nmd = nm.get_d();
  const QuadratureRule rule =
      elliptic_region_rule(cfg.quad.radial_order, cfg.quad.angular_order);
  const std::size_t m = rule.size();
  std::vector<double> bes(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double Q = rule.x[i] * rule.x[i] + rule.y[i] * rule.y[i] +
                     rule.x[i] * rule.y[i];
    bes[i] = bessel_factor(nmd, 1.0 - Q, k);
  }

  const long side = 3 * k;
  const long classes = side * side;
  std::vector<Complex> buf(classes);
  std::exception_ptr err;
  const bool par = cfg.policy == ExecPolicy::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (long idx = 0; idx < classes; ++idx) {
    try {
      const long r1 = idx / side, r2 = idx % side;
      const int nu = static_cast<int>(((r1 - r2) % 3 + 3) % 3);
      const Complex K =
          kloosterman(KloostermanKey(k, flux.mu, nu, nm, r1, r2), cfg.memo);
      NeumaierSum J;
      for (std::size_t i = 0; i < m; ++i)
        J.add(rule.w[i] * gstar_2d(k, r1, r2, rule.x[i], rule.y[i]) * bes[i]);
      buf[idx] = K * J.value();
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  (void)par;
  if (err) std::rethrow_exception(err);

  NeumaierSum re, im;
  for (long idx = 0; idx < classes; ++idx) {
    re.add(buf[idx].real());
    im.add(buf[idx].imag());
  }
  const double pref = std::pow(6.0 / std::abs(nmd), 1.25);
  const Complex t = (3.0 * kPi / 1024.0) * pref *
                    Complex{re.value(), im.value()} /
                    static_cast<double>(k * k * k);
  return require_real(t, cfg.realness_tol, "A3", k);
}

SeriesBreakdown alpha3_rademacher(const FluxClass& flux, long n, long n_terms,
                                  const RademacherConfig& cfg) {
  if (n_terms < 1)
    throw std::invalid_argument("series length must be at least 1");
  SeriesBreakdown out;
  out.mu = flux.mu;
  out.n = n;
  out.n_terms = n_terms;
  out.a1.resize(n_terms);
  out.a2.resize(n_terms);
  out.a3.resize(n_terms);

  std::exception_ptr err;
  const bool par = cfg.policy == ExecPolicy::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (par && n_terms > 1)
#endif
  for (long k = 1; k <= n_terms; ++k) {
    try {
      out.a1[k - 1] = term_A1(flux, n, k, cfg);
      out.a2[k - 1] = term_A2(flux, n, k, cfg);
      out.a3[k - 1] = term_A3(flux, n, k, cfg);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  (void)par;
  if (err) std::rethrow_exception(err);

  out.a1_cum.resize(n_terms);
  out.a2_cum.resize(n_terms);
  out.a3_cum.resize(n_terms);
  for (long i = 0; i < n_terms; ++i) {
    out.a1_cum[i] = (i ? out.a1_cum[i - 1] : 0.0) + out.a1[i];
    out.a2_cum[i] = (i ? out.a2_cum[i - 1] : 0.0) + out.a2[i];
    out.a3_cum[i] = (i ? out.a3_cum[i - 1] : 0.0) + out.a3[i];
  }
  out.total = out.a1_cum.back() + out.a2_cum.back() + out.a3_cum.back();
  const double lg = std::log(static_cast<double>(n_terms + 1));
  out.error_estimate =
      0.562 * std::pow(static_cast<double>(n_terms), -1.5) * lg * lg;
  return out;
}

std::string SeriesBreakdown::to_tsv() const {
  std::string s = "k\tA1_k\tA2_k\tA3_k\tA1_cum\tA2_cum\tA3_cum\ttotal\n";
  char line[512];
  for (long i = 0; i < n_terms; ++i) {
    const double row_total = a1_cum[i] + a2_cum[i] + a3_cum[i];
    std::snprintf(line, sizeof line,
                  "%ld\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\n",
                  i + 1, a1[i], a2[i], a3[i], a1_cum[i], a2_cum[i], a3_cum[i],
                  row_total);
    s += line;
  }
  return s;
}

nlohmann::json SeriesBreakdown::to_json() const {
  std::vector<double> row_total(n_terms);
  for (long i = 0; i < n_terms; ++i)
    row_total[i] = a1_cum[i] + a2_cum[i] + a3_cum[i];
  return nlohmann::json{{"mu", mu},
                        {"n", n},
                        {"n_terms", n_terms},
                        {"a1", a1},
                        {"a2", a2},
                        {"a3", a3},
                        {"a1_cum", a1_cum},
                        {"a2_cum", a2_cum},
                        {"a3_cum", a3_cum},
                        {"total_cum", row_total},
                        {"total", total},
                        {"error_estimate", error_estimate}};
}

std::pair<double, int> term_A1_log(const FluxClass& flux, long n) {
  const double nmd = flux.n_mu(n).get_d();
  if (nmd <= 0.0)
    throw std::domain_error("log-space leading term needs n_mu > 0");
  const double x = kPi * std::sqrt(6.0 * nmd);
  // At k = 1 the class sum collapses to 1/sqrt(3) > 0, so the sign is +1.
  const double lv = std::log(kPi / 144.0) + 1.25 * std::log(6.0 / nmd) -
                    0.5 * std::log(3.0) + x + std::log(bessel_i52_scaled(x));
  return {lv, +1};
}

double leading_monomial_log(const Rational& n_mu) {
  const double t = n_mu.get_d();
  if (t <= 0.0) throw std::domain_error("growth monomial needs n_mu > 0");
  return kPi * std::sqrt(6.0 * t) - std::log(4.0) - 1.5 * std::log(6.0 * t);
}

double asymptotic_bracket(long n) {
  if (n < 1) throw std::invalid_argument("asymptotic expansion needs n >= 1");
  const double s = std::sqrt(std::sqrt(6.0 * n));
  return 1.0 - 81.0 / (8.0 * kPi * s) +
         (243.0 * std::sqrt(3.0) / (16.0 * kPi * kPi) - 3.0 / kPi) / (s * s);
}

double alpha3_asymptotic(long n) {
  const double br = asymptotic_bracket(n);
  const double L = leading_monomial_log(Rational(static_cast<long>(n)));
  if (br == 0.0) return 0.0;
  return (br > 0.0 ? 1.0 : -1.0) * std::exp(L + std::log(std::abs(br)));
}

}  // namespace mockrad
