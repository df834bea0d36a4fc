#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mockrad/kloosterman.hpp"
#include "mockrad/qseries.hpp"
#include "mockrad/rademacher.hpp"

using namespace mockrad;

namespace {

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool bits_equal(double a, double b) {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

bool breakdown_bits_equal(const SeriesBreakdown& a, const SeriesBreakdown& b) {
  return bits_equal(a.a1, b.a1) && bits_equal(a.a2, b.a2) &&
         bits_equal(a.a3, b.a3) && bits_equal(a.a1_cum, b.a1_cum) &&
         bits_equal(a.a2_cum, b.a2_cum) && bits_equal(a.a3_cum, b.a3_cum) &&
         bits_equal(a.total, b.total) &&
         bits_equal(a.error_estimate, b.error_estimate);
}

}  // namespace

TEST_CASE("serial and parallel policies agree bit for bit") {
  RademacherConfig serial;
  serial.policy = ExecPolicy::Serial;
  RademacherConfig parallel;
  parallel.policy = ExecPolicy::Parallel;

  const FluxClass f0(0);
  const SeriesBreakdown a = alpha3_rademacher(f0, 5, 2, serial);
  const SeriesBreakdown b = alpha3_rademacher(f0, 5, 2, parallel);
  CHECK(breakdown_bits_equal(a, b));
}

#ifdef _OPENMP
TEST_CASE("result is independent of the thread count") {
  RademacherConfig cfg;
  cfg.policy = ExecPolicy::Parallel;
  const FluxClass f1(1);

  const int restore = omp_get_max_threads();
  omp_set_num_threads(1);
  const SeriesBreakdown one = alpha3_rademacher(f1, 3, 2, cfg);
  omp_set_num_threads(3);
  const SeriesBreakdown three = alpha3_rademacher(f1, 3, 2, cfg);
  omp_set_num_threads(restore);

  CHECK(breakdown_bits_equal(one, three));
}
#endif

TEST_CASE("cache round trip preserves every bit") {
  const char* path = "kloosterman_cache_test.json";
  std::filesystem::remove(path);

  const FluxClass f0(0);
  const SeriesBreakdown plain = alpha3_rademacher(f0, 4, 2);

  std::size_t stored = 0;
  {
    KloostermanMemo memo(path);
    CHECK(memo.size() == 0);
    RademacherConfig cfg;
    cfg.memo = &memo;
    const SeriesBreakdown cold = alpha3_rademacher(f0, 4, 2, cfg);
    stored = memo.size();
    CHECK(stored > 0);
    const SeriesBreakdown warm = alpha3_rademacher(f0, 4, 2, cfg);
    CHECK(memo.size() == stored);  // warm run is all hits
    CHECK(breakdown_bits_equal(plain, cold));
    CHECK(breakdown_bits_equal(plain, warm));
    memo.save();
  }

  KloostermanMemo reloaded(path);
  CHECK(reloaded.size() == stored);
  RademacherConfig cfg;
  cfg.memo = &reloaded;
  const SeriesBreakdown from_disk = alpha3_rademacher(f0, 4, 2, cfg);
  CHECK(breakdown_bits_equal(plain, from_disk));

  // single-value check: a looked-up hex-serialized entry is the fresh value
  const KloostermanKey key(5, 0, 1, f0.n_mu(3), 2, 7);
  const Complex fresh = kloosterman(key);
  KloostermanMemo single(std::string(path) + ".single");
  kloosterman(key, &single);
  single.save();
  KloostermanMemo single2(std::string(path) + ".single");
  auto hit = single2.lookup(key);
  REQUIRE(hit.has_value());
  CHECK(bits_equal(hit->real(), fresh.real()));
  CHECK(bits_equal(hit->imag(), fresh.imag()));

  std::filesystem::remove(path);
  std::filesystem::remove(std::string(path) + ".single");
}
