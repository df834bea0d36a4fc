#pragma once

#include <complex>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "mockrad/multipliers.hpp"
#include "mockrad/rational.hpp"

namespace mockrad {

/// Identifies one generalized Kloosterman sum. n24 = 24 n_mu must be integral;
/// r1, r2 are stored reduced mod 3k (the sum is invariant under that shift).
struct KloostermanKey {
  long k;
  int mu, nu;        // residues mod 3
  long long n24;     // 24 * n_mu
  long r1, r2;       // reduced mod 3k

  KloostermanKey(long k_, int mu_, int nu_, const Rational& n_mu, long r1_, long r2_);
  auto operator<=>(const KloostermanKey&) const = default;
};

/// Pure file-backed memo of Kloosterman values. Values round-trip through hex
/// float strings, so cached and fresh results are bit-identical.
class KloostermanMemo {
 public:
  explicit KloostermanMemo(std::string path);
  std::optional<Complex> lookup(const KloostermanKey& key) const;
  void store(const KloostermanKey& key, Complex value);
  void save() const;
  std::size_t size() const;

 private:
  std::string path_;
  std::map<KloostermanKey, Complex> entries_;
  mutable std::shared_mutex mutex_;
};

/// Least nonnegative h' with h h' = -1 (mod k); h' = 0 for k = 1.
long hprime_of(long h, long k);

/// K_k(mu,nu; n, r1, r2) = sum over h coprime to k of
///   zeta_{24k}^{-24 n_mu h - (9+8Q(r1,r2)) h'} chi_M(nu, mu),
/// M = (h', -(1+hh')/k; k, -h). chi matrices are cached per (h,k).
Complex kloosterman(const KloostermanKey& key, KloostermanMemo* memo = nullptr);

/// Convenience wrapper; throws std::invalid_argument when 24 n_mu is not integral.
Complex kloosterman(long k, int mu, int nu, const Rational& n_mu, long r1, long r2,
                    KloostermanMemo* memo = nullptr);

}  // namespace mockrad
