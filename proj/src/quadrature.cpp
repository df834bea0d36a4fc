#include "mockrad/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mockrad/config.hpp"

namespace mockrad {

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  QuadratureRule rule{RuleKind::Interval, order, {}, {}, {}};
  rule.x.resize(order);
  rule.w.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Node near the i-th Chebyshev angle; Newton converges in a few steps.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= order; ++n) {
        const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[i] = -x;  // ascending order
    rule.w[i] = w;
    rule.x[order - 1 - i] = x;
    rule.w[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.x[order / 2] = 0.0;
  return rule;
}

QuadratureRule elliptic_region_rule(int radial_order, int angular_order) {
  if (radial_order < 1 || angular_order < 1)
    throw std::invalid_argument("quadrature order must be >= 1");
  // Unit disk in (s = rho^2, theta) coordinates, then w = A^{-1} u with
  // A = (1, 1/2; 0, sqrt3/2) maps the disk onto Q(w) <= 1; Jacobian 2/sqrt3.
  const QuadratureRule gl = gauss_legendre(radial_order);
  QuadratureRule rule{RuleKind::EllipticRegion, radial_order * angular_order,
                      {}, {}, {}};
  const std::size_t n = static_cast<std::size_t>(radial_order) * angular_order;
  rule.x.reserve(n);
  rule.y.reserve(n);
  rule.w.reserve(n);
  const double sqrt3 = std::sqrt(3.0);
  const double wt_angle = 2.0 * M_PI / angular_order;
  for (int i = 0; i < radial_order; ++i) {
    const double s = 0.5 * (gl.x[i] + 1.0);
    const double ws = 0.5 * gl.w[i];
    const double rho = std::sqrt(s);
    for (int j = 0; j < angular_order; ++j) {
      // Half-offset angles keep nodes off the axes for even angular orders.
      const double th = 2.0 * M_PI * (j + 0.5) / angular_order;
      const double u1 = rho * std::cos(th);
      const double u2 = rho * std::sin(th);
      rule.x.push_back(u1 - u2 / sqrt3);
      rule.y.push_back(2.0 * u2 / sqrt3);
      rule.w.push_back(ws * wt_angle * 0.5 * (2.0 / sqrt3));
    }
  }
  return rule;
}

QuadratureRule truncated_line_rule(double half_width, int order) {
  if (half_width <= 0.0) throw std::invalid_argument("half width must be > 0");
  QuadratureRule rule = gauss_legendre(order);
  rule.kind = RuleKind::RealLine;
  for (int i = 0; i < order; ++i) {
    rule.x[i] *= half_width;
    rule.w[i] *= half_width;
  }
  return rule;
}

QuadratureRule truncated_plane_rule(double half_width, int order) {
  const QuadratureRule line = truncated_line_rule(half_width, order);
  QuadratureRule rule{RuleKind::RealPlane, order, {}, {}, {}};
  const std::size_t n = static_cast<std::size_t>(order) * order;
  rule.x.reserve(n);
  rule.y.reserve(n);
  rule.w.reserve(n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      rule.x.push_back(line.x[i]);
      rule.y.push_back(line.x[j]);
      rule.w.push_back(line.w[i] * line.w[j]);
    }
  return rule;
}

double gaussian_half_width(double decay_rate, double tail_eps) {
  if (decay_rate <= 0.0) throw std::invalid_argument("decay rate must be > 0");
  if (tail_eps <= 0.0 || tail_eps >= 1.0)
    throw std::invalid_argument("tail target must be in (0, 1)");
  return std::sqrt(-std::log(tail_eps) / decay_rate);
}

int env_thread_cap() {
  const char* raw = std::getenv("MOCKRAD_THREADS");
  if (!raw) return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1) return 0;
  return static_cast<int>(v);
}

void apply_thread_cap() {
#ifdef _OPENMP
  const int cap = env_thread_cap();
  if (cap > 0) omp_set_num_threads(cap);
#endif
}

}  // namespace mockrad
