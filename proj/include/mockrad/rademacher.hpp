#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mockrad/config.hpp"
#include "mockrad/kloosterman.hpp"
#include "mockrad/qseries.hpp"
#include "mockrad/quadrature.hpp"

namespace mockrad {

/// Raised when a computed quantity violates a structural guarantee (e.g. a
/// term that must be real carries a large imaginary part).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RademacherConfig {
  QuadConfig quad;
  ExecPolicy policy = ExecPolicy::Parallel;
  KloostermanMemo* memo = nullptr;
  /// Relative imaginary contamination above which a per-k term is rejected.
  double realness_tol = 1e-10;
};

/// Per-k contributions of the three exact-formula families and their running
/// sums. total = a1_cum.back() + a2_cum.back() + a3_cum.back().
struct SeriesBreakdown {
  int mu = 0;
  long n = 0;
  long n_terms = 0;
  std::vector<double> a1, a2, a3;
  std::vector<double> a1_cum, a2_cum, a3_cum;
  double total = 0.0;
  double error_estimate = 0.0;

  std::string to_tsv() const;
  nlohmann::json to_json() const;
};

/// Leading family: Kloosterman sum at r = 0 times a Bessel factor. For
/// nonpositive spectral parameter the Bessel factor continues through the
/// oscillatory branch.
double term_A1(const FluxClass& flux, long n, long k, const RademacherConfig& cfg = {});

/// Second family: sum over residues r mod 3k of Kloosterman sums against the
/// one-dimensional boundary-kernel integral over [-1, 1].
double term_A2(const FluxClass& flux, long n, long k, const RademacherConfig& cfg = {});

/// Third family: sum over residue pairs (r1, r2) mod 3k of Kloosterman sums
/// against the two-dimensional kernel integral over the elliptic region.
double term_A3(const FluxClass& flux, long n, long k, const RademacherConfig& cfg = {});

/// Exact-formula partial sum over k = 1..N with per-k breakdown. Throws
/// NumericalError when a per-k term fails the realness check and
/// std::invalid_argument for N < 1.
SeriesBreakdown alpha3_rademacher(const FluxClass& flux, long n, long n_terms,
                                  const RademacherConfig& cfg = {});

/// log |A1(k=1)| and its sign, computed with the scaled Bessel factor so the
/// value stays finite when the unscaled term overflows.
std::pair<double, int> term_A1_log(const FluxClass& flux, long n);

/// log of the leading growth monomial (1/(4 (6 t)^{3/2})) e^{pi sqrt(6 t)} at
/// spectral parameter t = n_mu > 0.
double leading_monomial_log(const Rational& n_mu);

/// Three-term large-n expansion, evaluated in log space and independent of the
/// flux sector: monomial times asymptotic_bracket(n). Signed: the bracket is
/// negative at small n where the expansion has not set in yet.
double alpha3_asymptotic(long n);

/// 1 - 81/(8 pi (6n)^{1/4}) + (243 sqrt3/(16 pi^2) - 3/pi)(6n)^{-1/2}.
double asymptotic_bracket(long n);

}  // namespace mockrad
