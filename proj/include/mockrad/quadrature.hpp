#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mockrad {

enum class RuleKind { Interval, EllipticRegion, RealLine, RealPlane };

enum class ExecPolicy { Serial, Parallel };

/// Immutable node/weight set. y is empty for one-dimensional kinds. Weights
/// are strictly positive and sum to the domain measure.
struct QuadratureRule {
  RuleKind kind;
  int order;
  std::vector<double> x, y, w;

  std::size_t size() const { return w.size(); }
};

/// Gauss-Legendre on [-1,1]; exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_legendre(int order);

/// Rule for the region Q(w1,w2) <= 1, Q(w) = w1^2 + w1 w2 + w2^2: the unit
/// disk rule (Gauss-Legendre in rho^2 times a half-offset periodic trapezoid
/// in angle) pushed through the inverse of A = (1, 1/2; 0, sqrt3/2), Jacobian
/// 2/sqrt3. Offset angles keep nodes off the coordinate axes for even
/// angular_order.
QuadratureRule elliptic_region_rule(int radial_order, int angular_order);

/// Gauss-Legendre mapped to [-W, W].
QuadratureRule truncated_line_rule(double half_width, int order);

/// Tensor product of truncated_line_rule with itself on [-W, W]^2.
QuadratureRule truncated_plane_rule(double half_width, int order);

/// Smallest W with e^{-decay_rate W^2} <= tail_eps.
double gaussian_half_width(double decay_rate, double tail_eps);

/// Neumaier compensated accumulator; deterministic for a fixed add order.
struct NeumaierSum {
  double sum = 0.0, comp = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

namespace detail {

template <class F>
double eval_node(const QuadratureRule& rule, F& f, std::size_t i) {
  if constexpr (std::is_invocable_v<F&, double, double>)
    return f(rule.x[i], rule.y[i]);
  else
    return f(rule.x[i]);
}

}  // namespace detail

/// sum_i w_i f(node_i). Node values may be computed in parallel; the reduction
/// is always the serial compensated sum in node order, so the result is
/// bitwise identical across policies and thread counts.
template <class F>
double integrate(const QuadratureRule& rule, F&& f,
                 ExecPolicy policy = ExecPolicy::Serial) {
  const std::size_t n = rule.size();
  NeumaierSum acc;
  if (policy == ExecPolicy::Parallel) {
    std::vector<double> vals(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      vals[i] = detail::eval_node(rule, f, static_cast<std::size_t>(i));
    for (std::size_t i = 0; i < n; ++i) acc.add(rule.w[i] * vals[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      acc.add(rule.w[i] * detail::eval_node(rule, f, i));
  }
  return acc.value();
}

}  // namespace mockrad
