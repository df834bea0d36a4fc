#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mockrad/config.hpp"
#include "mockrad/kloosterman.hpp"
#include "mockrad/qseries.hpp"
#include "mockrad/rademacher.hpp"
#include "mockrad/verify.hpp"

namespace {

using namespace mockrad;
using nlohmann::json;

int run_compute(int mu, long n, long N, const QuadConfig& quad, double tol,
                const std::string& cache, const std::string& format) {
  RademacherConfig cfg;
  cfg.quad = quad;
  cfg.realness_tol = tol;
  std::unique_ptr<KloostermanMemo> memo;
  if (!cache.empty()) {
    memo = std::make_unique<KloostermanMemo>(cache);
    cfg.memo = memo.get();
  }
  const SeriesBreakdown bd = alpha3_rademacher(FluxClass(mu), n, N, cfg);
  if (memo) memo->save();
  if (format == "json") {
    std::cout << bd.to_json().dump(1) << "\n";
  } else {
    std::cout << bd.to_tsv();
    std::printf("total = %.4f\n", bd.total);
    std::printf("error_estimate = %.4g\n", bd.error_estimate);
  }
  return 0;
}

int run_oracle(int mu, long n_max, const std::string& format) {
  const FluxClass flux(mu);
  if (format == "json") {
    json arr = json::array();
    for (long n = 0; n <= n_max; ++n) {
      const Rational v = oracle_alpha3(flux, n);
      arr.push_back({{"n", n}, {"alpha", to_string(v)}, {"value", v.get_d()}});
    }
    std::cout << arr.dump(1) << "\n";
  } else {
    std::printf("n\talpha\tvalue\n");
    for (long n = 0; n <= n_max; ++n) {
      const Rational v = oracle_alpha3(flux, n);
      std::printf("%ld\t%s\t%.17g\n", n, to_string(v).c_str(), v.get_d());
    }
  }
  return 0;
}

int run_verify(const std::string& suite, const QuadConfig& quad,
               const std::string& format) {
  const std::vector<VerifyRecord> recs = run_verify_suite(suite, quad);
  bool ok = true;
  if (format == "json") {
    json arr = json::array();
    for (const VerifyRecord& r : recs) {
      arr.push_back(r.to_json());
      ok = ok && r.pass;
    }
    std::cout << arr.dump(1) << "\n";
  } else {
    for (const VerifyRecord& r : recs) {
      std::printf("%-44s residual=%10.3e tol=%8.1e %s\n", r.identity.c_str(),
                  r.residual, r.tolerance, r.pass ? "PASS" : "FAIL");
      ok = ok && r.pass;
    }
  }
  return ok ? 0 : 5;
}

struct TableDef {
  int mu;
  int decimals;
  const char* name;
  double gold[3][4];
};

// Reference values for the two summary tables at n = 5 (partial sums through
// N = 1, 2, 3; four resp. three printed decimals).
const TableDef kTables[2] = {
    {0,
     4,
     "table 1 (mu = 0, n = 5)",
     {{21840.0401, -32806.5410, 12478.4547, 1511.9538},
      {21843.2723, -32811.3140, 12480.0457, 1512.0039},
      {21843.0363, -32810.8548, 12479.8193, 1512.0008}}},
    {1,
     3,
     "table 2 (mu = 1, n = 5)",
     {{221918.638, -255562.432, 74525.064, 40881.270},
      {221910.095, -255548.451, 74519.364, 40881.008},
      {221910.095, -255548.537, 74519.440, 40880.998}}}};

int run_tables(const QuadConfig& quad, const std::string& format) {
  RademacherConfig cfg;
  cfg.quad = quad;
  bool ok = true;
  json out;
  double k3_increment = 0.0;
  for (const TableDef& def : kTables) {
    const SeriesBreakdown bd = alpha3_rademacher(FluxClass(def.mu), 5, 3, cfg);
    if (def.mu == 1) k3_increment = bd.a1[2];
    json rows = json::array();
    if (format != "json")
      std::printf("%s\nN\tA1\tA2\tA3\ttotal\n", def.name);
    for (int i = 0; i < 3; ++i) {
      const double cells[4] = {bd.a1_cum[i], bd.a2_cum[i], bd.a3_cum[i],
                               bd.a1_cum[i] + bd.a2_cum[i] + bd.a3_cum[i]};
      if (format == "json") {
        // Re-parse the fixed-precision rendering so both formats carry the
        // same numeric values.
        json row{{"N", i + 1}};
        const char* keys[4] = {"A1", "A2", "A3", "total"};
        for (int c = 0; c < 4; ++c) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.*f", def.decimals, cells[c]);
          row[keys[c]] = std::strtod(buf, nullptr);
        }
        rows.push_back(row);
      } else {
        std::printf("%d", i + 1);
        for (int c = 0; c < 4; ++c)
          std::printf("\t%.*f", def.decimals, cells[c]);
        std::printf("\n");
      }
      for (int c = 0; c < 4; ++c) {
        const double diff = std::abs(cells[c] - def.gold[i][c]);
        if (diff > 5e-3) {
          ok = false;
          std::fprintf(stderr,
                       "%s: cell (N=%d, col=%d) = %.6f differs from reference "
                       "%.6f by %.2e\n",
                       def.name, i + 1, c, cells[c], def.gold[i][c], diff);
        }
      }
    }
    if (format == "json") out[def.mu == 0 ? "table1" : "table2"] = rows;
  }
  if (format == "json") {
    out["leading_family_k3_increment"] = k3_increment;
    out["pass"] = ok;
    std::cout << out.dump(1) << "\n";
  } else {
    std::printf("table 2 leading-family k = 3 increment = %.6f\n", k3_increment);
    std::printf("%s\n", ok ? "tables PASS" : "tables FAIL");
  }
  return ok ? 0 : 5;
}

int run_bench(int mu, long n, long N, const QuadConfig& quad) {
  using clock = std::chrono::steady_clock;
  RademacherConfig scfg;
  scfg.quad = quad;
  scfg.policy = ExecPolicy::Serial;
  RademacherConfig pcfg = scfg;
  pcfg.policy = ExecPolicy::Parallel;

  const auto t0 = clock::now();
  const SeriesBreakdown s = alpha3_rademacher(FluxClass(mu), n, N, scfg);
  const auto t1 = clock::now();
  const SeriesBreakdown p = alpha3_rademacher(FluxClass(mu), n, N, pcfg);
  const auto t2 = clock::now();

  const auto secs = [](auto a, auto b) {
    return std::chrono::duration<double>(b - a).count();
  };
  const auto same = [](const std::vector<double>& a,
                       const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
  };
  const bool identical = same(s.a1, p.a1) && same(s.a2, p.a2) &&
                         same(s.a3, p.a3) &&
                         std::memcmp(&s.total, &p.total, sizeof(double)) == 0;
  const double ts = secs(t0, t1), tp = secs(t1, t2);
  std::printf("serial   %.3f s\nparallel %.3f s\nspeedup  %.2fx\n", ts, tp,
              ts / tp);
  std::printf("bitwise identical: %s\n", identical ? "yes" : "no");
  return identical ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  mockrad::apply_thread_cap();

  CLI::App app{
      "Exact-formula and q-series evaluation of the weight-three mock "
      "coefficients"};
  app.require_subcommand(1);

  int mu = 0;
  long n = 5, N = 3, n_max = 10;
  QuadConfig quad;
  double tol = 1e-10;
  std::string cache, format = "tsv", suite = "all";

  const auto add_quad = [&](CLI::App* sc) {
    sc->add_option("--quad-interval-order", quad.interval_order,
                   "Gauss order on [-1,1]");
    sc->add_option("--quad-radial-order", quad.radial_order,
                   "radial Gauss order on the elliptic region");
    sc->add_option("--quad-angular-order", quad.angular_order,
                   "angular order on the elliptic region");
    sc->add_option("--quad-mordell-order", quad.mordell_order,
                   "Gauss order per axis of the truncated Gaussian rules");
    sc->add_option("--quad-tail-eps", quad.tail_eps,
                   "Gaussian truncation target");
    sc->add_option("--quad-panel-order", quad.panel_order,
                   "Gauss order per panel in the theta integrals");
  };
  const auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
  };

  CLI::App* compute =
      app.add_subcommand("compute", "partial sums of the exact formula");
  compute->add_option("--mu", mu, "flux sector")
      ->check(CLI::IsMember({-1, 0, 1}));
  compute->add_option("--n", n, "coefficient index")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--N", N, "number of k-terms")
      ->check(CLI::PositiveNumber);
  compute->add_option("--tol", tol, "per-term realness tolerance");
  compute->add_option("--cache", cache, "Kloosterman memo path");
  add_quad(compute);
  add_format(compute);

  CLI::App* oracle =
      app.add_subcommand("oracle", "exact rational coefficients");
  oracle->add_option("--mu", mu, "flux sector")
      ->check(CLI::IsMember({-1, 0, 1}));
  oracle->add_option("--n-max", n_max, "largest coefficient index")
      ->check(CLI::NonNegativeNumber);
  add_format(oracle);

  CLI::App* verify =
      app.add_subcommand("verify", "numerical identity checks");
  verify
      ->add_option("suite", suite,
                   "multipliers | theta | mordell1 | mordell2 | principal | "
                   "mock-transform | all")
      ->check(CLI::IsMember({"multipliers", "theta", "mordell1", "mordell2",
                             "principal", "mock-transform", "all"}));
  add_quad(verify);
  add_format(verify);

  CLI::App* tables =
      app.add_subcommand("tables", "summary tables against reference values");
  add_quad(tables);
  add_format(tables);

  CLI::App* bench =
      app.add_subcommand("bench", "serial vs parallel timing and bit parity");
  bench->add_option("--mu", mu, "flux sector")
      ->check(CLI::IsMember({-1, 0, 1}));
  bench->add_option("--n", n, "coefficient index")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--N", N, "number of k-terms")->check(CLI::PositiveNumber);
  add_quad(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*compute) return run_compute(mu, n, N, quad, tol, cache, format);
    if (*oracle) return run_oracle(mu, n_max, format);
    if (*verify) return run_verify(suite, quad, format);
    if (*tables) return run_tables(quad, format);
    if (*bench) return run_bench(mu, n, N, quad);
  } catch (const mockrad::HorizonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const mockrad::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
