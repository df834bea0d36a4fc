#pragma once

namespace mockrad {

/// Quadrature orders used across the evaluators; defaults carry a x2 safety
/// margin over the doubling-convergence gate.
struct QuadConfig {
  int interval_order = 200;   // quad.interval_order: [-1,1] rules
  int radial_order = 120;     // quad.radial_order: elliptic region
  int angular_order = 160;    // quad.angular_order: elliptic region
  int mordell_order = 400;    // quad.mordell_order: truncated line/plane axes
  double tail_eps = 1e-16;    // quad.tail_eps: Gaussian truncation target
  int panel_order = 32;       // Gauss order per panel in the theta integrals
};

/// MOCKRAD_THREADS (0 when unset or unparsable).
int env_thread_cap();

/// Applies the MOCKRAD_THREADS cap to the OpenMP runtime, if set.
void apply_thread_cap();

}  // namespace mockrad
