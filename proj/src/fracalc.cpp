#include "fracres/fracalc.hpp"

#include <cmath>
#include <string>

#include "fracres/specfun.hpp"

namespace fracres {

TimeGrid::TimeGrid(double horizon, std::size_t n_steps)
    : horizon_(horizon), n_steps_(n_steps) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("TimeGrid: horizon must be positive and finite");
  }
  if (n_steps == 0) {
    throw std::invalid_argument("TimeGrid: n_steps must be positive");
  }
}

double TimeGrid::node(std::size_t i) const {
  if (i == n_steps_) return horizon_;
  return static_cast<double>(i) * horizon_ / static_cast<double>(n_steps_);
}

namespace {

// For large k the power differences below cancel badly; expanding in 1/k
// keeps the weights accurate to rounding for every grid size.
constexpr std::size_t kSeriesFrom = 16;

// (k+1)^p - 2 k^p + (k-1)^p
double central_power_difference(double p, std::size_t k) {
  const double kd = static_cast<double>(k);
  if (k < kSeriesFrom) {
    return std::pow(kd + 1.0, p) - 2.0 * std::pow(kd, p) + std::pow(kd - 1.0, p);
  }
  const double x2 = 1.0 / (kd * kd);
  double binom = 1.0;  // C(p, m)
  double xpow = 1.0;
  double sum = 0.0;
  for (int m = 1; m <= 120; ++m) {
    binom *= (p - m + 1.0) / m;
    if (m % 2 == 1) continue;
    xpow *= x2;
    const double term = 2.0 * binom * xpow;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) || binom == 0.0) break;
  }
  return std::pow(kd, p) * sum;
}

// (n-1)^p - (n-p) n^{p-1}
double start_power_difference(double p, std::size_t n) {
  const double nd = static_cast<double>(n);
  if (n < kSeriesFrom) {
    return std::pow(nd - 1.0, p) - (nd - p) * std::pow(nd, p - 1.0);
  }
  const double x = -1.0 / nd;
  double binom = p;  // C(p, 1)
  double xpow = x;
  double sum = 0.0;
  for (int m = 2; m <= 120; ++m) {
    binom *= (p - m + 1.0) / m;
    xpow *= x;
    const double term = binom * xpow;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) || binom == 0.0) break;
  }
  return std::pow(nd, p) * sum;
}

}  // namespace

ProductTrapezoid::ProductTrapezoid(double alpha, const TimeGrid& grid)
    : alpha_(alpha), grid_(grid) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("ProductTrapezoid: alpha must be positive, got " +
                                std::to_string(alpha));
  }
  const double p = alpha + 1.0;
  scale_ = std::pow(grid.step(), alpha) * specfun::reciprocal_gamma(alpha + 2.0);
  const std::size_t n = grid.n_steps();
  start_.assign(n + 1, 0.0);
  interior_.assign(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    start_[k] = start_power_difference(p, k);
    interior_[k] = central_power_difference(p, k);
  }
}

namespace detail {

double laplace_moment0(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - 0.5 * x;
  return -std::expm1(-x) / x;
}

double laplace_moment1(double x) {
  if (std::abs(x) < 1e-2) {
    // sum_{k>=2} (-1)^k (k-1) x^{k-2} / k!
    double term = 0.5;  // k = 2
    double sum = term;
    double fact = 2.0;
    double xpow = 1.0;
    for (int k = 3; k < 20; ++k) {
      fact *= k;
      xpow *= -x;
      term = (k - 1) * xpow / fact;
      sum += term;
    }
    return sum;
  }
  return (-std::expm1(-x) - x * std::exp(-x)) / (x * x);
}

}  // namespace detail

}  // namespace fracres
