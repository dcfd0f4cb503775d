#include "fracres/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fracres/errors.hpp"

namespace fracres {

namespace {

constexpr double kPi = std::numbers::pi;

void check_size(const SpectralOperator& a, const SpectralField& u, const char* who) {
  if (u.size() != a.n_modes()) {
    throw std::invalid_argument(std::string(who) + ": field has " +
                                std::to_string(u.size()) + " modes, operator " +
                                std::to_string(a.n_modes()));
  }
}

double mode_square(std::size_t idx) {
  const double n = static_cast<double>(idx + 1);
  return n * n;
}

// (sin(pi beta)/pi) int_R tau^{1-beta} / (tau + n2) dy, tau = e^y.
struct ModeIntegral {
  double value;
  double error;
};

ModeIntegral balakrishnan_mode(double beta, double n2, double rel_tol) {
  const double target = std::pow(n2, -beta);
  // tails: right <= e^{-beta R}/beta, left <= e^{(1-beta)L}/((1-beta) n2)
  const double tiny = 1e-18 * target;
  const double right = -std::log(tiny * beta) / beta;
  const double left = std::log(tiny * (1.0 - beta) * n2) / (1.0 - beta);
  auto f = [&](double y) { return std::exp((1.0 - beta) * y) / (std::exp(y) + n2); };

  double h = 0.5;
  std::size_t count = static_cast<std::size_t>(std::ceil((right - left) / h));
  h = (right - left) / static_cast<double>(count);
  double sum = 0.5 * (f(left) + f(right));
  for (std::size_t i = 1; i < count; ++i) sum += f(left + static_cast<double>(i) * h);
  double estimate = sum * h;
  double error = std::numeric_limits<double>::infinity();
  for (int level = 0; level < 8; ++level) {
    double mid = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      mid += f(left + (static_cast<double>(i) + 0.5) * h);
    }
    sum += mid;
    count *= 2;
    h *= 0.5;
    const double refined = sum * h;
    error = std::abs(refined - estimate);
    estimate = refined;
    if (error <= rel_tol * std::abs(estimate)) break;
  }
  const double factor = std::sin(kPi * beta) / kPi;
  return {factor * estimate, factor * error};
}

}  // namespace

SpectralField SpectralField::unit(std::size_t n_modes, std::size_t mode) {
  if (mode < 1 || mode > n_modes) {
    throw std::out_of_range("SpectralField::unit: mode " + std::to_string(mode) +
                            " outside 1.." + std::to_string(n_modes));
  }
  SpectralField f = zero(n_modes);
  f.mode(mode) = 1.0;
  return f;
}

double SpectralField::beta_norm(double beta) const {
  double s = 0.0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    const double w = std::pow(mode_square(static_cast<std::size_t>(i)), beta) * coeffs(i);
    s += w * w;
  }
  return std::sqrt(s);
}

std::vector<double> collocation_points(std::size_t m_points) {
  std::vector<double> x(m_points);
  for (std::size_t j = 0; j < m_points; ++j) {
    x[j] = static_cast<double>(j + 1) * kPi / static_cast<double>(m_points + 1);
  }
  return x;
}

SpectralOperator::SpectralOperator(std::size_t n_modes) : n_modes_(n_modes) {
  if (n_modes == 0) throw std::invalid_argument("SpectralOperator: n_modes must be positive");
}

double SpectralOperator::eigenvalue(std::size_t n) const {
  if (n < 1 || n > n_modes_) throw std::out_of_range("SpectralOperator::eigenvalue");
  return -mode_square(n - 1);
}

SineTransform::SineTransform(std::size_t n_modes, std::size_t m_points)
    : n_modes_(n_modes), m_points_(m_points) {
  if (n_modes == 0) throw std::invalid_argument("SineTransform: n_modes must be positive");
  if (n_modes > m_points) {
    throw std::invalid_argument("SineTransform: need M >= N, got N = " +
                                std::to_string(n_modes) + ", M = " +
                                std::to_string(m_points));
  }
  const auto x = collocation_points(m_points);
  const double c = std::sqrt(2.0 / kPi);
  basis_.resize(static_cast<Eigen::Index>(m_points), static_cast<Eigen::Index>(n_modes));
  for (std::size_t j = 0; j < m_points; ++j) {
    for (std::size_t n = 0; n < n_modes; ++n) {
      basis_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(n)) =
          c * std::sin(static_cast<double>(n + 1) * x[j]);
    }
  }
}

SpectralField SineTransform::forward(const NodalField& f) const {
  if (f.size() != m_points_) {
    throw std::invalid_argument("SineTransform::forward: expected " +
                                std::to_string(m_points_) + " samples");
  }
  const double w = kPi / static_cast<double>(m_points_ + 1);
  return SpectralField(w * (basis_.transpose() * f.samples));
}

NodalField SineTransform::inverse(const SpectralField& c) const {
  if (c.size() != n_modes_) {
    throw std::invalid_argument("SineTransform::inverse: expected " +
                                std::to_string(n_modes_) + " modes");
  }
  return NodalField{basis_ * c.coeffs};
}

SpectralField sine_forward(const NodalField& f, std::size_t n_modes) {
  return SineTransform(n_modes, f.size()).forward(f);
}

NodalField sine_inverse(const SpectralField& c, std::size_t m_points) {
  return SineTransform(c.size(), m_points).inverse(c);
}

SpectralField apply_operator(const SpectralOperator& a, const SpectralField& u) {
  check_size(a, u, "apply_operator");
  SpectralField out = u;
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs(i) *= -mode_square(static_cast<std::size_t>(i));
  }
  return out;
}

SpectralField apply_fractional_power(const SpectralOperator& a, double beta,
                                     const SpectralField& u) {
  check_size(a, u, "apply_fractional_power");
  if (beta == 0.0) return u;
  SpectralField out = u;
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs(i) *= std::pow(mode_square(static_cast<std::size_t>(i)), beta);
  }
  return out;
}

SpectralField fractional_power_via_integral(const SpectralOperator& a, double beta,
                                            const SpectralField& u, double rel_tol) {
  check_size(a, u, "fractional_power_via_integral");
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("fractional_power_via_integral: beta must lie in (0,1)");
  }
  SpectralField out = u;
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) {
    const ModeIntegral m =
        balakrishnan_mode(beta, mode_square(static_cast<std::size_t>(i)), rel_tol);
    if (!(m.error <= rel_tol * std::abs(m.value))) {
      throw QuadratureError("fractional_power_via_integral: mode " +
                                std::to_string(i + 1) + " did not converge",
                            m.error);
    }
    out.coeffs(i) *= m.value;
  }
  return out;
}

SpectralField apply_resolvent(const SpectralOperator& a, double mu,
                              const SpectralField& u) {
  check_size(a, u, "apply_resolvent");
  SpectralField out = u;
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) {
    const double d = mu + mode_square(static_cast<std::size_t>(i));
    if (d == 0.0) {
      throw std::domain_error("apply_resolvent: mu = " + std::to_string(mu) +
                              " is an eigenvalue of A");
    }
    out.coeffs(i) /= d;
  }
  return out;
}

}  // namespace fracres
