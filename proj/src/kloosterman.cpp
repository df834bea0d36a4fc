#include "mockrad/kloosterman.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace mockrad {

namespace {

long floor_mod(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

std::string to_hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double from_hex(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

// chi matrices for M_{h,k} = (h', -(1+hh')/k; k, -h), cached per (h, k); both
// indices of chi are periodic mod 3, so a 3x3 block covers every call.
using ChiBlock = std::array<std::array<Complex, 3>, 3>;

const ChiBlock& chi_block(long h, long k) {
  static std::map<std::pair<long, long>, ChiBlock> cache;
  static std::shared_mutex mutex;
  const std::pair<long, long> key{h, k};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const long hp = hprime_of(h, k);
  const UnimodularMatrix M(hp, -(1 + h * hp) / k, k, -h);
  ChiBlock block;
  for (int first = 0; first < 3; ++first)
    for (int second = 0; second < 3; ++second)
      block[first][second] = chi(M, first, second);
  std::unique_lock lock(mutex);
  return cache.emplace(key, block).first->second;
}

}  // namespace

KloostermanKey::KloostermanKey(long k_, int mu_, int nu_, const Rational& n_mu,
                               long r1_, long r2_)
    : k(k_), mu(mu_), nu(nu_) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const Rational t = 24 * n_mu;
  if (t.get_den() != 1)
    throw std::invalid_argument("24 n_mu must be an integer");
  n24 = static_cast<long long>(t.get_num().get_si());
  r1 = floor_mod(r1_, 3 * k);
  r2 = floor_mod(r2_, 3 * k);
}

long hprime_of(long h, long k) {
  if (k == 1) return 0;
  for (long hp = 0; hp < k; ++hp)
    if ((h * hp + 1) % k == 0) return hp;
  throw std::invalid_argument("h has no inverse mod k");
}

Complex kloosterman(const KloostermanKey& key, KloostermanMemo* memo) {
  if (memo) {
    if (auto hit = memo->lookup(key)) return *hit;
  }
  const long k = key.k;
  const long long Q = key.r1 * key.r1 + key.r2 * key.r2 + key.r1 * key.r2;
  Complex s{0.0, 0.0};
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1 && !(k == 1 && h == 0)) continue;
    const long hp = hprime_of(h, k);
    const ChiBlock& block = chi_block(h, k);
    s += unit_root(-key.n24 * h - (9 + 8 * Q) * hp, 24L * k) *
         block[floor_mod(key.nu, 3)][floor_mod(key.mu, 3)];
  }
  if (memo) memo->store(key, s);
  return s;
}

Complex kloosterman(long k, int mu, int nu, const Rational& n_mu, long r1,
                    long r2, KloostermanMemo* memo) {
  return kloosterman(KloostermanKey(k, mu, nu, n_mu, r1, r2), memo);
}

KloostermanMemo::KloostermanMemo(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json j;
  in >> j;
  for (const auto& e : j.at("entries")) {
    Rational n_mu(e.at("n24").get<long>(), 24);
    n_mu.canonicalize();
    KloostermanKey key(e.at("k").get<long>(), e.at("mu").get<int>(),
                       e.at("nu").get<int>(), n_mu, e.at("r1").get<long>(),
                       e.at("r2").get<long>());
    entries_[key] = Complex(from_hex(e.at("re").get<std::string>()),
                            from_hex(e.at("im").get<std::string>()));
  }
}

std::optional<Complex> KloostermanMemo::lookup(const KloostermanKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KloostermanMemo::store(const KloostermanKey& key, Complex value) {
  std::unique_lock lock(mutex_);
  entries_.emplace(key, value);
}

void KloostermanMemo::save() const {
  nlohmann::json arr = nlohmann::json::array();
  {
    std::shared_lock lock(mutex_);
    for (const auto& [key, value] : entries_) {
      arr.push_back({{"k", key.k},
                     {"mu", key.mu},
                     {"nu", key.nu},
                     {"n24", key.n24},
                     {"r1", key.r1},
                     {"r2", key.r2},
                     {"re", to_hex(value.real())},
                     {"im", to_hex(value.imag())}});
    }
  }
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << nlohmann::json{{"entries", std::move(arr)}}.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

std::size_t KloostermanMemo::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace mockrad
