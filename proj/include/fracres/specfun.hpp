#pragma once

// Scalar special functions: Gamma, the Riemann-Liouville kernel g_alpha,
// the two-parameter Mittag-Leffler function and the Wright (M-Wright)
// function used as a subordination density.
//
// Everything here is a pure function of its arguments.

namespace fracres::specfun {

/// Parameters of E_{alpha,beta}. alpha in (0,2], beta > 0.
struct MLParams {
  double alpha;
  double beta;
};

/// Parameter of the Wright function phi_gamma, gamma in (0,1).
struct WrightParams {
  double gamma;
};

/// Above this value of z^{1/alpha} the Mittag-Leffler function is treated as
/// overflowing (E_{alpha,beta}(z) grows like exp(z^{1/alpha})).
inline constexpr double kMittagLefflerPositiveCap = 700.0;

/// |z| at or below this value is summed by the Taylor series.
inline constexpr double kMittagLefflerTaylorRadius = 5.0;

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// Euler Gamma via a g = 7, 9-term Lanczos approximation and reflection for
/// x < 0.5. Throws std::domain_error at the poles 0, -1, -2, ...
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// 1/Gamma(x), defined to be exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

/// g_alpha(t) = t^{alpha-1} / Gamma(alpha).
///
/// alpha <= 0 is rejected (g_0 is the delta distribution). t < 0 is rejected,
/// as is t == 0 when alpha < 1 where the kernel is singular.
double g_kernel(double alpha, double t);

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
///
/// |z| <= 5: compensated Taylor summation. z > 5: Taylor summation with
/// log-space terms, std::overflow_error once z^{1/alpha} exceeds
/// `positive_cap`. z < -5: the Hankel-contour representation collapsed onto
/// the negative real axis plus the residues of the two poles of
/// s^{alpha-beta}/(s^alpha - z) (present for alpha > 1). The residue pair is
/// what the purely algebraic asymptotic series misses; for alpha = 2 it is
/// the whole answer (E_{2,1}(-x) = cos sqrt(x)).
double mittag_leffler(MLParams p, double z,
                      double positive_cap = kMittagLefflerPositiveCap);

/// k-th Taylor term z^k / Gamma(alpha k + beta).
double mittag_leffler_term(MLParams p, double z, int k);

/// phi_gamma(z) = sum_n (-z)^n / (n! Gamma(1 - gamma - gamma n)), z >= 0.
///
/// The series is used while it is well conditioned. Once its largest term
/// dwarfs the sum (the stretched-exponential tail), or it has not settled
/// within a few hundred terms (gamma near 1), the value is taken from
/// the equivalent integral over [0, pi] of the one-sided stable density,
/// which has a positive integrand.
double wright_phi(WrightParams p, double z);

/// n-th series term of phi_gamma(z). Exactly 0 where 1/Gamma hits a pole.
double wright_term(WrightParams p, double z, int n);

/// phi_gamma(z) from the series alone, without the conditioning fallback.
double wright_phi_series(WrightParams p, double z);

/// phi_gamma(z) from the integral representation alone (z > 0).
double wright_phi_integral(WrightParams p, double z);

/// t^{-gamma} phi_gamma(s t^{-gamma}); a probability density in s on [0, inf).
double subordination_density(double gamma, double t, double s);

/// A point beyond which phi_gamma(z) < exp(-log_tail) (up to an algebraic
/// prefactor), from phi_gamma(z) ~ exp(-(1-gamma) gamma^{gamma/(1-gamma)}
/// z^{1/(1-gamma)}).
double wright_tail_cutoff(double gamma, double log_tail = 50.0);

}  // namespace fracres::specfun
