#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "mockrad/qseries.hpp"
#include "mockrad/rademacher.hpp"

using namespace mockrad;

static_assert(std::is_base_of_v<std::runtime_error, NumericalError>);

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<double> tsv_numbers(const std::string& tsv) {
  std::vector<double> out;
  std::size_t pos = tsv.find('\n') + 1;  // skip header
  while (pos < tsv.size()) {
    char* end = nullptr;
    const double v = std::strtod(tsv.c_str() + pos, &end);
    if (end == tsv.c_str() + pos) {
      ++pos;
      continue;
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(end - tsv.c_str());
  }
  return out;
}

}  // namespace

TEST_CASE("leading terms reproduce the reference sums at k = 1") {
  const FluxClass f0(0), f1(1);
  CHECK(std::abs(term_A1(f0, 5, 1) - 21840.0401) < 5e-3);
  CHECK(std::abs(term_A2(f0, 5, 1) - -32806.5410) < 5e-3);
  CHECK(std::abs(term_A3(f0, 5, 1) - 12478.4547) < 5e-3);
  CHECK(std::abs(term_A1(f1, 5, 1) - 221918.638) < 5e-3);
  CHECK(std::abs(term_A2(f1, 5, 1) - -255562.432) < 5e-3);
  CHECK(std::abs(term_A3(f1, 5, 1) - 74525.064) < 5e-3);
}

TEST_CASE("three-term partial sums land on the coefficients") {
  const SeriesBreakdown b0 = alpha3_rademacher(FluxClass(0), 5, 3);
  CHECK(std::abs(b0.total - 1512.0008) < 5e-3);
  const SeriesBreakdown b1 = alpha3_rademacher(FluxClass(1), 5, 3);
  CHECK(std::abs(b1.total - 40880.998) < 5e-3);

  // breakdown bookkeeping: cumulative columns integrate the per-k columns
  for (long i = 0; i < b0.n_terms; ++i) {
    const double prev = i ? b0.a1_cum[i - 1] : 0.0;
    CHECK(b0.a1_cum[i] == prev + b0.a1[i]);
  }
  CHECK(b0.total == b0.a1_cum.back() + b0.a2_cum.back() + b0.a3_cum.back());

  const double lg = std::log(4.0);
  CHECK(b0.error_estimate ==
        doctest::Approx(0.562 * std::pow(3.0, -1.5) * lg * lg).epsilon(1e-14));

  CHECK_THROWS_AS(alpha3_rademacher(FluxClass(0), 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(alpha3_rademacher(FluxClass(0), 5, -2), std::invalid_argument);
}

TEST_CASE("partial sums approach the exact rational coefficients") {
  struct Point {
    int mu;
    long n;
  };
  for (const Point p : {Point{0, 0}, Point{0, 3}, Point{1, 2}, Point{0, 7}}) {
    const FluxClass f(p.mu);
    const double exact = oracle_alpha3(f, p.n).get_d();
    const SeriesBreakdown bd = alpha3_rademacher(f, p.n, 3);
    INFO("mu=", p.mu, " n=", p.n, " exact=", exact, " got=", bd.total);
    CHECK(std::abs(bd.total - exact) < 0.01);
  }
}

TEST_CASE("conjugate flux sectors give equal terms") {
  const SeriesBreakdown bp = alpha3_rademacher(FluxClass(1), 4, 2);
  const SeriesBreakdown bm = alpha3_rademacher(FluxClass(-1), 4, 2);
  for (long i = 0; i < 2; ++i) {
    CHECK(bp.a1[i] == doctest::Approx(bm.a1[i]).epsilon(1e-9));
    CHECK(bp.a2[i] == doctest::Approx(bm.a2[i]).epsilon(1e-9));
    CHECK(bp.a3[i] == doctest::Approx(bm.a3[i]).epsilon(1e-9));
  }
  CHECK(bp.total == doctest::Approx(bm.total).epsilon(1e-9));
}

TEST_CASE("serializations carry the exact computed values") {
  const SeriesBreakdown bd = alpha3_rademacher(FluxClass(0), 2, 2);

  const std::vector<double> cells = tsv_numbers(bd.to_tsv());
  REQUIRE(cells.size() == 16);  // 2 rows x 8 columns
  for (long i = 0; i < 2; ++i) {
    const double* row = cells.data() + 8 * i;
    CHECK(row[0] == double(i + 1));
    CHECK(row[1] == bd.a1[i]);  // %.17g round-trips doubles exactly
    CHECK(row[2] == bd.a2[i]);
    CHECK(row[3] == bd.a3[i]);
    CHECK(row[4] == bd.a1_cum[i]);
    CHECK(row[5] == bd.a2_cum[i]);
    CHECK(row[6] == bd.a3_cum[i]);
    CHECK(row[7] == bd.a1_cum[i] + bd.a2_cum[i] + bd.a3_cum[i]);
  }

  const nlohmann::json j = bd.to_json();
  CHECK(j["mu"].get<int>() == bd.mu);
  CHECK(j["n"].get<long>() == bd.n);
  CHECK(j["n_terms"].get<long>() == bd.n_terms);
  for (long i = 0; i < 2; ++i) {
    CHECK(j["a1"][i].get<double>() == bd.a1[i]);
    CHECK(j["a2"][i].get<double>() == bd.a2[i]);
    CHECK(j["a3"][i].get<double>() == bd.a3[i]);
    CHECK(j["a1_cum"][i].get<double>() == bd.a1_cum[i]);
    CHECK(j["total_cum"][i].get<double>() ==
          bd.a1_cum[i] + bd.a2_cum[i] + bd.a3_cum[i]);
  }
  CHECK(j["total"].get<double>() == bd.total);
  CHECK(j["error_estimate"].get<double>() == bd.error_estimate);
}

TEST_CASE("log-space leading term matches the direct evaluation") {
  const FluxClass f0(0);
  const auto [lv, sign] = term_A1_log(f0, 50);
  CHECK(sign == 1);
  const double direct = term_A1(f0, 50, 1);
  REQUIRE(direct > 0.0);
  CHECK(lv == doctest::Approx(std::log(direct)).epsilon(1e-9));

  // stays finite far beyond double overflow of the unscaled term
  const auto [lv_big, sign_big] = term_A1_log(f0, 200000);
  CHECK(sign_big == 1);
  CHECK(std::isfinite(lv_big));
  CHECK(lv_big > 700.0);

  CHECK_THROWS_AS(term_A1_log(f0, 0), std::domain_error);  // n_mu < 0
}

TEST_CASE("growth monomial captures the k = 1 term") {
  const FluxClass f0(0);
  const auto [lv, sign] = term_A1_log(f0, 1000);
  (void)sign;
  const double lmono = leading_monomial_log(f0.n_mu(1000));
  const double x = kPi * std::sqrt(6.0 * f0.n_mu(1000).get_d());
  const double dev = std::abs(std::exp(lv - lmono) - 1.0);
  // the subleading correction is -3/x + O(1/x^2)
  CHECK(std::abs(dev - 3.0 / x) <= 0.3 * (3.0 / x));

  CHECK_THROWS_AS(leading_monomial_log(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(leading_monomial_log(Rational(-3, 8)), std::domain_error);
}

TEST_CASE("large-n expansion: bracket growth and shrinking deviation") {
  CHECK_THROWS_AS(asymptotic_bracket(0), std::invalid_argument);
  const double b3 = asymptotic_bracket(1000);
  const double b4 = asymptotic_bracket(10000);
  const double b5 = asymptotic_bracket(100000);
  CHECK(b3 > 0.0);
  CHECK(b3 < b4);
  CHECK(b4 < b5);
  CHECK(b5 < 1.0);

  // negative bracket regime at small n: the expansion overshoots downward
  const double a5 = alpha3_asymptotic(5);
  CHECK(a5 < -2800.0);
  CHECK(a5 > -3050.0);

  const double exact[] = {1512.0, 36612.0, 1770498.0};
  const long ns[] = {5, 7, 10};
  double prev = 1e300;
  for (int i = 0; i < 3; ++i) {
    const double dev = std::abs(alpha3_asymptotic(ns[i]) - exact[i]) / exact[i];
    CHECK(dev < prev);
    prev = dev;
  }
  CHECK(prev < 0.5);
}
