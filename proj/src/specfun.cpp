#include "fracres/specfun.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace fracres::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

double lanczos_sum(double xm1) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (xm1 + static_cast<double>(i));
  }
  return a;
}

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

void check_ml_params(const MLParams& p) {
  if (!(p.alpha > 0.0 && p.alpha <= 2.0)) {
    throw std::invalid_argument("mittag_leffler: alpha must lie in (0,2], got " +
                                std::to_string(p.alpha));
  }
  if (!(p.beta > 0.0)) {
    throw std::invalid_argument("mittag_leffler: beta must be positive, got " +
                                std::to_string(p.beta));
  }
}

void check_wright_params(const WrightParams& p) {
  if (!(p.gamma > 0.0 && p.gamma < 1.0)) {
    throw std::invalid_argument("wright_phi: gamma must lie in (0,1), got " +
                                std::to_string(p.gamma));
  }
}

// log|1/Gamma(x)| and its sign; sign 0 at the poles.
struct LogRecipGamma {
  double log_abs;
  int sign;
};

LogRecipGamma log_reciprocal_gamma(double x) {
  if (is_pole(x)) return {-std::numeric_limits<double>::infinity(), 0};
  if (x >= 0.5) return {-log_gamma(x), 1};
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
  const double s = sin_pi(x);
  return {std::log(std::abs(s) / kPi) + log_gamma(1.0 - x), s > 0 ? 1 : -1};
}

double ml_taylor(const MLParams& p, double z) {
  CompensatedSum acc;
  const double log_abs_z = std::log(std::abs(z));
  const int sign_z = z < 0 ? -1 : 1;
  int small_run = 0;
  for (int k = 0; k < 100000; ++k) {
    const double arg = p.alpha * k + p.beta;
    const LogRecipGamma rg = log_reciprocal_gamma(arg);
    double term = 0.0;
    if (rg.sign != 0) {
      const double mag = std::exp(k * log_abs_z + rg.log_abs);
      term = ((k % 2 == 1 && sign_z < 0) ? -mag : mag) * rg.sign;
    }
    acc.add(term);
    // past the largest term once alpha k exceeds |z|^{1/alpha}
    const bool past_peak = std::pow(p.alpha * k + p.beta, p.alpha) > std::abs(z);
    if (past_peak && std::abs(term) <= 1e-17 * std::abs(acc.value())) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  return acc.value();
}

// E_{alpha,beta}(-x), x > 0, alpha != 1, beta < alpha + 1.
double ml_negative_axis(const MLParams& p, double x) {
  const double a = p.alpha;
  const double b = p.beta;
  const double sin_b = sin_pi(b);
  const double sin_ab = sin_pi(a - b);
  const double cos_a = std::cos(kPi * a);
  const double sin_a = sin_pi(a);

  auto integrand = [&](double r) -> double {
    if (r <= 0.0) return 0.0;
    const double ra = std::pow(r, a);
    const double re = ra * cos_a + x;
    const double im = ra * sin_a;
    const double denom = re * re + im * im;
    return std::exp(-r) * std::pow(r, a - b) * (ra * sin_b - x * sin_ab) / denom;
  };

  constexpr double tol = 1e-15;
  double branch = 0.0;
  {
    boost::math::quadrature::tanh_sinh<double> ts;
    branch += ts.integrate(integrand, 0.0, 1.0, tol);
  }
  double lower = 1.0;
  const double peak = std::pow(x, 1.0 / a);
  if (peak > 1.0 && peak < 60.0) {
    branch += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 1.0, peak, 10, tol);
    lower = peak;
  }
  {
    boost::math::quadrature::exp_sinh<double> es;
    branch += es.integrate(integrand, lower,
                           std::numeric_limits<double>::infinity(), tol);
  }
  branch /= kPi;

  double residues = 0.0;
  if (a > 1.0) {
    const std::complex<double> zeta =
        std::polar(std::pow(x, 1.0 / a), kPi / a);
    residues = 2.0 / a * std::real(std::exp(zeta) * std::pow(zeta, 1.0 - b));
  }
  return branch + residues;
}

}  // namespace

double sin_pi(double x) {
  if (x == std::floor(x)) return 0.0;
  double r = std::remainder(x, 2.0);  // in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_pole(x)) {
    throw std::domain_error("gamma_fn: pole at non-positive integer " +
                            std::to_string(x));
  }
  if (x < 0.5) {
    return kPi / (sin_pi(x) * gamma_fn(1.0 - x));
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  // t^{x-1/2} split in two factors so the power does not overflow early
  const double half = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * lanczos_sum(xm1);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    return std::log(kPi / sin_pi(x)) - log_gamma(1.0 - x);
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm1));
}

double reciprocal_gamma(double x) {
  if (is_pole(x)) return 0.0;
  if (x > 170.0) return std::exp(-log_gamma(x));
  if (x < 0.5) {
    return sin_pi(x) * gamma_fn(1.0 - x) / kPi;
  }
  return 1.0 / gamma_fn(x);
}

double g_kernel(double alpha, double t) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("g_kernel: alpha must be positive");
  }
  if (t < 0.0 || (t == 0.0 && alpha < 1.0)) {
    throw std::domain_error("g_kernel: kernel undefined at t = " +
                            std::to_string(t));
  }
  if (t == 0.0) return alpha == 1.0 ? 1.0 : 0.0;
  if (alpha == 1.0) return 1.0;
  return std::pow(t, alpha - 1.0) * reciprocal_gamma(alpha);
}

double mittag_leffler_term(MLParams p, double z, int k) {
  check_ml_params(p);
  if (k == 0) return reciprocal_gamma(p.beta);
  if (z == 0.0) return 0.0;
  const LogRecipGamma rg = log_reciprocal_gamma(p.alpha * k + p.beta);
  if (rg.sign == 0) return 0.0;
  const double mag = std::exp(k * std::log(std::abs(z)) + rg.log_abs);
  return (z < 0 && k % 2 == 1 ? -mag : mag) * rg.sign;
}

double mittag_leffler(MLParams p, double z, double positive_cap) {
  check_ml_params(p);
  if (std::isnan(z)) return z;
  if (z == 0.0) return reciprocal_gamma(p.beta);

  if (z > 0.0 && std::pow(z, 1.0 / p.alpha) > positive_cap) {
    throw std::overflow_error("mittag_leffler: z = " + std::to_string(z) +
                              " exceeds the positive cap");
  }
  if (p.alpha == 1.0 && p.beta == 1.0) return std::exp(z);
  if (z > -kMittagLefflerTaylorRadius) return ml_taylor(p, z);

  const double x = -z;
  if (p.alpha == 1.0) {
    // the pole sits on the branch cut; only the closed forms are supported
    if (p.beta == 2.0) return std::expm1(z) / z;
    throw std::domain_error(
        "mittag_leffler: alpha = 1 with beta other than 1 or 2 is unsupported "
        "for z < -5");
  }
  // E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z keeps the branch integral
  // integrable at the origin
  if (p.beta >= p.alpha + 1.0) {
    const MLParams lower{p.alpha, p.beta - p.alpha};
    return (mittag_leffler(lower, z, positive_cap) -
            reciprocal_gamma(lower.beta)) /
           z;
  }
  return ml_negative_axis(p, x);
}

double wright_term(WrightParams p, double z, int n) {
  check_wright_params(p);
  const LogRecipGamma rg = log_reciprocal_gamma(1.0 - p.gamma - p.gamma * n);
  if (rg.sign == 0) return 0.0;
  if (n == 0) return rg.sign * std::exp(rg.log_abs);
  if (z == 0.0) return 0.0;
  const double mag =
      std::exp(n * std::log(z) - log_gamma(n + 1.0) + rg.log_abs);
  return (n % 2 == 1 ? -mag : mag) * rg.sign;
}

namespace {

struct SeriesResult {
  double value;
  double max_term;
  bool converged;
};

// For gamma near 1 and z > 1 the terms keep growing for millions of indices.
constexpr int kWrightMaxTerms = 600;

SeriesResult wright_series(const WrightParams& p, double z) {
  CompensatedSum acc;
  double max_term = 0.0;
  int small_run = 0;
  double prev_mag = std::numeric_limits<double>::infinity();
  for (int n = 0; n < kWrightMaxTerms; ++n) {
    const double term = wright_term(p, z, n);
    acc.add(term);
    const double mag = std::abs(term);
    max_term = std::max(max_term, mag);
    if (z == 0.0) return {acc.value(), max_term, true};
    const bool decreasing = mag <= prev_mag || mag == 0.0;
    if (mag != 0.0) prev_mag = mag;
    if (decreasing && mag < 1e-16 * std::abs(acc.value())) {
      if (++small_run >= 3) return {acc.value(), max_term, true};
    } else {
      small_run = 0;
    }
  }
  return {acc.value(), max_term, false};
}

}  // namespace

double wright_phi_series(WrightParams p, double z) {
  check_wright_params(p);
  if (z < 0.0) throw std::invalid_argument("wright_phi: z must be >= 0");
  return wright_series(p, z).value;
}

double wright_phi_integral(WrightParams p, double z) {
  check_wright_params(p);
  if (!(z > 0.0)) throw std::invalid_argument("wright_phi_integral: z must be > 0");
  const double g = p.gamma;
  const double q = 1.0 / (1.0 - g);
  const double scale = std::pow(z, q);
  auto shape = [g, q](double phi) {
    return std::pow(std::sin(g * phi) / std::sin(phi), q) *
           std::sin((1.0 - g) * phi) / std::sin(g * phi);
  };
  auto integrand = [&](double phi) -> double {
    if (phi <= 0.0 || phi >= kPi) return 0.0;
    const double a = shape(phi);
    const double e = scale * a;
    if (!std::isfinite(a) || e > 745.0) return 0.0;
    return a * std::exp(-e);
  };
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          integrand, 0.0, kPi, 12, 1e-14);
  return std::pow(z, g * q) / ((1.0 - g) * kPi) * integral;
}

double wright_phi(WrightParams p, double z) {
  check_wright_params(p);
  if (z < 0.0) throw std::invalid_argument("wright_phi: z must be >= 0");
  const SeriesResult s = wright_series(p, z);
  // cancellation ratio 1e2 keeps the series result near 1e-13 relative
  if (s.converged && s.max_term <= 1e2 * std::abs(s.value)) return s.value;
  return wright_phi_integral(p, z);
}

double subordination_density(double gamma, double t, double s) {
  if (!(t > 0.0)) throw std::invalid_argument("subordination_density: t must be > 0");
  if (s < 0.0) throw std::invalid_argument("subordination_density: s must be >= 0");
  const double scale = std::pow(t, -gamma);
  return scale * wright_phi(WrightParams{gamma}, s * scale);
}

double wright_tail_cutoff(double gamma, double log_tail) {
  check_wright_params(WrightParams{gamma});
  const double b = (1.0 - gamma) * std::pow(gamma, gamma / (1.0 - gamma));
  return std::max(2.0, std::pow(log_tail / b, 1.0 - gamma));
}

}  // namespace fracres::specfun
