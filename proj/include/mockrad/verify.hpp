#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "mockrad/config.hpp"
#include "mockrad/multipliers.hpp"

namespace mockrad {

/// One checked identity; residual = |lhs - rhs| (or a fitted statistic for the
/// bound-style checks).
struct VerifyRecord {
  std::string identity;
  nlohmann::json parameters;
  Complex lhs{}, rhs{};
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  nlohmann::json to_json() const;
};

/// Unitarity and sharp-conjugation of both Weil multipliers over 50 seeded
/// random matrices; Kloosterman invariance under the h' representative and
/// under r -> r + 3k.
std::vector<VerifyRecord> verify_multipliers();

/// Theta transformations under S and T (one- and two-variable versions) at
/// seeded random tau, plus the completed weight-3/2 transformations.
std::vector<VerifyRecord> verify_theta(const QuadConfig& cfg = {});

/// Direct vs Gaussian-line representation of the one-theta integral on a
/// 9-point (j, h', k, z) grid, tolerance 1e-8.
std::vector<VerifyRecord> verify_mordell1(const QuadConfig& cfg = {});

/// Direct vs plane representation of the two-theta integral on 4 points,
/// tolerance 1e-6.
std::vector<VerifyRecord> verify_mordell2(const QuadConfig& cfg = {});

/// Envelope fit of the principal-part discrepancies over k = 1..20 and 10
/// (h', z) samples: per sample the smallest C with discrepancy <= C log k
/// (one-theta) resp. C log^2 k (two-theta) for k >= 2; passes when the fitted
/// C values agree within a factor 2 across samples.
std::vector<VerifyRecord> verify_principal(const QuadConfig& cfg = {});

/// Full mock transformation under S at tau = i for mu in {0,1}, tolerance
/// 1e-6, plus the guard that zeroing the correction integrals leaves an O(1)
/// residual.
std::vector<VerifyRecord> verify_mock_transform(const QuadConfig& cfg = {});

/// Residual of the mock transformation at one (mu, tau); zero_corrections
/// drops the integral terms (guard mode). Only M = S is supported.
double mock_transform_residual(int mu, Complex tau, bool zero_corrections = false,
                               const QuadConfig& cfg = {});

/// Runs the named suite: multipliers | theta | mordell1 | mordell2 | principal
/// | mock-transform | all. Throws std::invalid_argument for unknown names.
std::vector<VerifyRecord> run_verify_suite(const std::string& name,
                                           const QuadConfig& cfg = {});

}  // namespace mockrad
