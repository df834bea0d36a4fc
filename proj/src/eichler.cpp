#include "mockrad/eichler.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mockrad/qseries.hpp"
#include "mockrad/quadrature.hpp"
#include "mockrad/special.hpp"

namespace mockrad {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI{0.0, 1.0};

// Fixed truncation heights: beyond them every non-constant theta term is below
// 1e-17 and the constant terms are integrated in closed form.
constexpr double kOuterT = 80.0;
constexpr double kInnerT = 100.0;

struct Panel {
  std::vector<double> t, w;
};

// Panels for int_0^T: a sqrt-substituted panel [0, delta] absorbing the
// t^{-1/2} endpoint behavior, then dyadically growing panels up to T.
std::vector<Panel> panel_nodes(double T, int order, double delta = 0.25) {
  const QuadratureRule gl = gauss_legendre(order);
  std::vector<Panel> out;
  Panel head;
  const double smax = std::sqrt(std::min(delta, T));
  for (int i = 0; i < order; ++i) {
    const double s = 0.5 * (gl.x[i] + 1.0) * smax;
    const double ws = 0.5 * gl.w[i] * smax;
    head.t.push_back(s * s);
    head.w.push_back(2.0 * s * ws);
  }
  out.push_back(std::move(head));
  double a = std::min(delta, T);
  while (a < T) {
    const double b = std::min(2.0 * a, T);
    Panel p;
    for (int i = 0; i < order; ++i) {
      p.t.push_back(0.5 * (gl.x[i] + 1.0) * (b - a) + a);
      p.w.push_back(0.5 * gl.w[i] * (b - a));
    }
    out.push_back(std::move(p));
    a = b;
  }
  return out;
}

std::vector<double> panel_edges(double T, double delta = 0.25) {
  std::vector<double> edges{0.0, std::min(delta, T)};
  while (edges.back() < T) edges.push_back(std::min(2.0 * edges.back(), T));
  return edges;
}

int wrap6(int j) { return ((j % 6) + 6) % 6; }

}  // namespace

Complex theta(double ell, int scale, Complex tau) {
  const Complex t = static_cast<double>(scale) * tau;
  const double y = t.imag();
  if (y <= 0.0) throw std::domain_error("theta needs Im(scale * tau) > 0");
  ell -= std::floor(ell);
  const int N = static_cast<int>(std::sqrt(40.0 / (2.0 * kPi * y))) + 3;
  const Complex two_pi_i{0.0, 2.0 * kPi};
  Complex s{0.0, 0.0};
  for (int m = -N; m <= N; ++m) {
    const double n = ell + m;
    s += std::exp(two_pi_i * t * (n * n));
  }
  return s;
}

Complex E1_direct(int j, const EichlerPoint& pt, const QuadConfig& cfg) {
  const double hk = static_cast<double>(pt.hprime) / pt.k;
  const double ell = wrap6(j) / 6.0;
  Complex acc{0.0, 0.0};
  for (const Panel& p : panel_nodes(kOuterT, cfg.panel_order)) {
    for (std::size_t i = 0; i < p.t.size(); ++i) {
      const Complex th = theta(ell, 3, Complex(-hk, p.t[i]));
      acc += p.w[i] * th * std::pow(p.t[i] + pt.z, -1.5);
    }
  }
  if (wrap6(j) == 0) acc += 2.0 * std::pow(kOuterT + pt.z, -0.5);
  return kI * acc;
}

namespace {

// sum_{r = j mod 6, 0 <= r < 6k} zeta_{12k}^{-h' r^2} int_0^a kernel_r(t)
// e^{-pi z t^2/6} dt, doubled for the even integrand.
Complex gaussian_line_sum(int j, const EichlerPoint& pt, const QuadConfig& cfg,
                          double a) {
  const long k = pt.k;
  const QuadratureRule gl = gauss_legendre(cfg.mordell_order);
  std::vector<double> t(gl.size()), wt(gl.size());
  std::vector<Complex> gauss(gl.size());
  for (std::size_t i = 0; i < gl.size(); ++i) {
    t[i] = 0.5 * (gl.x[i] + 1.0) * a;
    wt[i] = 0.5 * gl.w[i] * a;
    gauss[i] = std::exp(-kPi * pt.z * t[i] * t[i] / 6.0);
  }
  Complex s{0.0, 0.0};
  for (long r = wrap6(j); r < 6 * k; r += 6) {
    Complex inner{0.0, 0.0};
    if (r == 0) {
      for (std::size_t i = 0; i < gl.size(); ++i)
        inner += wt[i] * (6.0 * k / kPi) * xcoth(kPi * t[i] / (6.0 * k)) * gauss[i];
    } else {
      const double c = static_cast<double>(r) / (6.0 * k);
      for (std::size_t i = 0; i < gl.size(); ++i)
        inner += wt[i] * t[i] * g_kernel(c, t[i] / (2.0 * k)) * gauss[i];
    }
    s += unit_root(-pt.hprime * r * r, 12 * k) * (2.0 * inner);
  }
  return s;
}

}  // namespace

Complex E1_mordell(int j, const EichlerPoint& pt, const QuadConfig& cfg) {
  const double a = gaussian_half_width(kPi * pt.z.real() / 6.0, cfg.tail_eps);
  return kI * kPi / (3.0 * std::sqrt(6.0) * pt.k) *
         gaussian_line_sum(j, pt, cfg, a);
}

Complex E1_principal(int j, const EichlerPoint& pt, const QuadConfig& cfg) {
  if (pt.b <= 0.0) return {0.0, 0.0};
  const double a = 2.0 * std::sqrt(3.0 * pt.b);
  return std::exp(2.0 * kPi * pt.b * pt.z) * kI * kPi /
         (3.0 * std::sqrt(6.0) * pt.k) * gaussian_line_sum(j, pt, cfg, a);
}

Complex E2_direct(int nu, const EichlerPoint& pt, const QuadConfig& cfg) {
  const double hk = static_cast<double>(pt.hprime) / pt.k;
  const Complex z = pt.z;
  const int order = cfg.panel_order;
  const QuadratureRule gl = gauss_legendre(order);

  const auto B = [&](int alpha, double w2) {
    return theta(alpha * 0.5, 1, Complex(-hk, w2)) * std::pow(w2 + z, -1.5);
  };

  // Whole-panel integrals of B per alpha, then suffix sums so the inner
  // integral from any point needs only one partial panel.
  const std::vector<Panel> inner_panels = panel_nodes(kInnerT, order);
  const std::vector<double> edges = panel_edges(kInnerT);
  const std::size_t np = inner_panels.size();
  Complex suffix[2][64];
  for (int alpha = 0; alpha < 2; ++alpha) {
    suffix[alpha][np] = {0.0, 0.0};
    for (std::size_t p = np; p-- > 0;) {
      Complex v{0.0, 0.0};
      for (std::size_t i = 0; i < inner_panels[p].t.size(); ++i)
        v += inner_panels[p].w[i] * B(alpha, inner_panels[p].t[i]);
      suffix[alpha][p] = suffix[alpha][p + 1] + v;
    }
  }

  const auto inner = [&](int alpha, double t) {
    std::size_t p = 0;
    while (p + 1 < edges.size() && edges[p + 1] <= t) ++p;
    const double hi = edges[p + 1];
    Complex part{0.0, 0.0};
    if (p == 0) {
      const double s0 = std::sqrt(t), s1 = std::sqrt(hi);
      for (int i = 0; i < order; ++i) {
        const double s = 0.5 * (gl.x[i] + 1.0) * (s1 - s0) + s0;
        const double ws = 0.5 * gl.w[i] * (s1 - s0);
        part += 2.0 * s * ws * B(alpha, s * s);
      }
    } else {
      for (int i = 0; i < order; ++i) {
        const double tt = 0.5 * (gl.x[i] + 1.0) * (hi - t) + t;
        const double ws = 0.5 * gl.w[i] * (hi - t);
        part += ws * B(alpha, tt);
      }
    }
    return part + suffix[alpha][p + 1];
  };

  const Complex inner_tail = 2.0 * std::pow(kInnerT + z, -0.5);
  Complex acc{0.0, 0.0};
  for (const Panel& p : panel_nodes(kOuterT, order)) {
    for (std::size_t i = 0; i < p.t.size(); ++i) {
      const double t1 = p.t[i];
      Complex row{0.0, 0.0};
      for (int alpha = 0; alpha < 2; ++alpha) {
        const Complex th =
            theta((2.0 * nu + 3.0 * alpha) / 6.0, 3, Complex(-hk, t1));
        row += th * (inner(alpha, t1) + (alpha == 0 ? inner_tail : Complex{}));
      }
      acc += p.w[i] * std::pow(t1 + z, -1.5) * row;
    }
  }
  if (((nu % 3) + 3) % 3 == 0) acc += 2.0 * std::pow(kOuterT + z, -1.0);
  return -acc;
}

namespace {

// sum over the residue classes r1 = r2 + nu (mod 3) of zeta_{3k}^{-h' Q(r)}
// times the plane integral of g2d against exp(-2 pi z Q(w)/3) on the given
// node set (already weighted); nodes carry a shared Gaussian factor.
Complex plane_class_sum(int nu, const EichlerPoint& pt,
                        const std::vector<double>& x,
                        const std::vector<double>& y,
                        const std::vector<Complex>& weighted_gauss) {
  const long k = pt.k;
  Complex s{0.0, 0.0};
  for (long r1 = 0; r1 < 3 * k; ++r1) {
    for (long r2 = 0; r2 < 3 * k; ++r2) {
      if (((r1 - r2 - nu) % 3 + 3) % 3 != 0) continue;
      Complex inner{0.0, 0.0};
      for (std::size_t i = 0; i < x.size(); ++i)
        inner += g2d(k, r1, r2, x[i], y[i]) * weighted_gauss[i];
      s += unit_root(-pt.hprime * (r1 * r1 + r2 * r2 + r1 * r2), 3 * k) * inner;
    }
  }
  return s;
}

}  // namespace

Complex E2_mordell(int nu, const EichlerPoint& pt, const QuadConfig& cfg) {
  // Q(w) >= |w|^2/2, so each axis decays at least like exp(-pi z w^2/3).
  const double W = gaussian_half_width(kPi * pt.z.real() / 3.0, cfg.tail_eps);
  const QuadratureRule plane = truncated_plane_rule(W, cfg.mordell_order);
  std::vector<Complex> wg(plane.size());
  for (std::size_t i = 0; i < plane.size(); ++i) {
    const double Q = plane.x[i] * plane.x[i] + plane.y[i] * plane.y[i] +
                     plane.x[i] * plane.y[i];
    wg[i] = plane.w[i] * std::exp(-2.0 * kPi * pt.z * Q / 3.0);
  }
  const Complex s = plane_class_sum(nu, pt, plane.x, plane.y, wg);
  return -(2.0 * kPi * kPi / (27.0 * std::sqrt(3.0) * pt.k * pt.k)) * s;
}

Complex E2_principal(int nu, const EichlerPoint& pt, const QuadConfig& cfg) {
  if (pt.b <= 0.0) return {0.0, 0.0};
  // w = sqrt(3b) v maps Q(v) <= 1 onto Q(w) <= 3b with Jacobian 3b.
  const QuadratureRule disk =
      elliptic_region_rule(cfg.radial_order, cfg.angular_order);
  const double scale = std::sqrt(3.0 * pt.b);
  std::vector<double> x(disk.size()), y(disk.size());
  std::vector<Complex> wg(disk.size());
  for (std::size_t i = 0; i < disk.size(); ++i) {
    x[i] = scale * disk.x[i];
    y[i] = scale * disk.y[i];
    const double Qv = disk.x[i] * disk.x[i] + disk.y[i] * disk.y[i] +
                      disk.x[i] * disk.y[i];
    wg[i] = 3.0 * pt.b * disk.w[i] *
            std::exp(-2.0 * kPi * pt.z * pt.b * Qv);
  }
  const Complex s = plane_class_sum(nu, pt, x, y, wg);
  return std::exp(2.0 * kPi * pt.b * pt.z) *
         -(2.0 * kPi * kPi / (27.0 * std::sqrt(3.0) * pt.k * pt.k)) * s;
}

Complex h2_completion(int alpha, Complex tau, int n_max, const QuadConfig& cfg) {
  if (alpha != 0 && alpha != 1)
    throw std::invalid_argument("theta index must be 0 or 1");
  if (tau.imag() <= 0.0) throw std::domain_error("completion needs Im(tau) > 0");
  const Complex series = h2_series(alpha, n_max).eval(tau);
  const double y2 = 2.0 * tau.imag();
  const double T = 60.0;
  const QuadratureRule gl = gauss_legendre(cfg.panel_order);
  Complex acc{0.0, 0.0};
  std::vector<double> edges{0.0, 0.5};
  while (edges.back() < T) edges.push_back(std::min(2.0 * edges.back(), T));
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double t = 0.5 * (gl.x[i] + 1.0) * (b - a) + a;
      const double wt = 0.5 * gl.w[i] * (b - a);
      acc += wt * theta(alpha * 0.5, 1, -std::conj(tau) + kI * t) *
             std::pow(t + y2, -1.5);
    }
  }
  if (alpha == 0) acc += 2.0 / std::sqrt(T + y2);
  return series - kI / (4.0 * std::sqrt(2.0) * kPi) * (kI * acc);
}

}  // namespace mockrad
