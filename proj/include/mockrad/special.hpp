#pragma once

namespace mockrad {

/// I_{5/2}(x) for x >= 0; power series below x = 1 (the closed form cancels
/// catastrophically there), closed half-integer form above. Throws
/// std::domain_error for x < 0.
double bessel_i52(double x);

/// e^{-x} I_{5/2}(x), stable for arbitrarily large x.
double bessel_i52_scaled(double x);

/// J_{5/2}(x) for x >= 0; series below x = 1. Continues the I-Bessel factor of
/// the exact-formula terms to negative n_mu.
double bessel_j52(double x);

/// x coth(x), extended by 1 at x = 0.
double xcoth(double x);

/// g_c(w) = sinh(2 pi w/3) / (cosh(2 pi w/3) - cos(2 pi c)). Pole at w = 0 when
/// c is integral (throws std::domain_error there); use g0_sub for the
/// subtracted kernel.
double g_kernel(double c, double w);

/// f_c(w) = sin(2 pi c) / (cosh(2 pi w/3) - cos(2 pi c)).
double f_kernel(double c, double w);

/// g_0(w) - 3/(pi w), bounded through w = 0 (series fallback near 0).
double g0_sub(double w);

/// G_c(x) = x^2 g_c(x), nonintegral c.
double G_kernel(double c, double x);

/// G_0(x) = x^2 g_0(x) = (3x/pi) * (pi x/3) coth(pi x/3); removable at 0.
double G0_kernel(double x);

/// (G_c(x) - G_c(x+delta))/delta with the Taylor limit -G' - G'' delta/2 taken
/// below |delta| = 1e-4 (analytic derivatives, not numerical differencing).
double g_diffquot(double c, double x, double delta);
double g0_diffquot(double x, double delta);

/// Two-dimensional kernel g_{k,(r1,r2)}(w1,w2); the four residue cases
/// (r1, r2 zero or not mod 3k) use the regularized decompositions, so every
/// axis singularity is removable and the function is total.
double g2d(long k, long r1, long r2, double w1, double w2);

/// w g_{r/3k}(3w/(2 sqrt2 k)) (1-w^2)^{5/4} on [-1,1]; the r = 0 (mod 3k)
/// branch takes the removable limit (value 2 sqrt2 k/pi at w = 0).
double gstar_1d(long k, long r, double w);

/// g_{k,(r1,r2)}(3w1/(2 sqrt2), 3w2/(2 sqrt2)) (1-Q(w))^{5/4} on Q(w) <= 1,
/// Q(w) = w1^2 + w1 w2 + w2^2.
double gstar_2d(long k, long r1, long r2, double w1, double w2);

}  // namespace mockrad
