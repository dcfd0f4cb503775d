#pragma once

// The Dirichlet Laplacian on (0, pi) in its eigenbasis
// e_n(x) = sqrt(2/pi) sin(n x), with eigenvalues -n^2.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace fracres {

/// Coefficients c_n = (u, e_n), n = 1..N, stored zero-based.
struct SpectralField {
  Eigen::VectorXd coeffs;

  SpectralField() = default;
  explicit SpectralField(Eigen::VectorXd c) : coeffs(std::move(c)) {}

  static SpectralField zero(std::size_t n_modes) {
    return SpectralField(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_modes)));
  }
  /// Unit coefficient on mode `mode` (1-based).
  static SpectralField unit(std::size_t n_modes, std::size_t mode);

  std::size_t size() const { return static_cast<std::size_t>(coeffs.size()); }
  /// Coefficient of mode n (1-based).
  double mode(std::size_t n) const { return coeffs(static_cast<Eigen::Index>(n - 1)); }
  double& mode(std::size_t n) { return coeffs(static_cast<Eigen::Index>(n - 1)); }

  /// L^2(0, pi) norm (Parseval).
  double norm() const { return coeffs.norm(); }
  /// ||(-A)^beta u|| = || (n^{2 beta} c_n) ||.
  double beta_norm(double beta) const;

  SpectralField& operator+=(const SpectralField& o) {
    coeffs += o.coeffs;
    return *this;
  }
  SpectralField& operator-=(const SpectralField& o) {
    coeffs -= o.coeffs;
    return *this;
  }
  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(SpectralField a, double s) {
    a.coeffs *= s;
    return a;
  }
  friend SpectralField operator*(double s, SpectralField a) { return std::move(a) * s; }
  bool operator==(const SpectralField& o) const {
    return coeffs.size() == o.coeffs.size() && coeffs == o.coeffs;
  }
};

/// Samples at the interior collocation points x_j = j pi / (M + 1), j = 1..M.
struct NodalField {
  Eigen::VectorXd samples;

  std::size_t size() const { return static_cast<std::size_t>(samples.size()); }
};

/// x_j = j pi / (M + 1), j = 1..M.
std::vector<double> collocation_points(std::size_t m_points);

/// Truncated Dirichlet Laplacian with eigenvalues -1, -4, ..., -N^2.
class SpectralOperator {
 public:
  explicit SpectralOperator(std::size_t n_modes);

  std::size_t n_modes() const { return n_modes_; }
  /// lambda_n = -n^2 (1-based).
  double eigenvalue(std::size_t n) const;

  bool operator==(const SpectralOperator&) const = default;

 private:
  std::size_t n_modes_;
};

/// Cached discrete sine analysis / synthesis between N modes and M >= N
/// collocation points.
class SineTransform {
 public:
  SineTransform(std::size_t n_modes, std::size_t m_points);

  std::size_t n_modes() const { return n_modes_; }
  std::size_t m_points() const { return m_points_; }

  SpectralField forward(const NodalField& f) const;
  NodalField inverse(const SpectralField& c) const;

 private:
  std::size_t n_modes_;
  std::size_t m_points_;
  Eigen::MatrixXd basis_;  // basis_(j, n) = sqrt(2/pi) sin((n+1) x_j)
};

/// c_n = sqrt(2/pi) (pi/(M+1)) sum_j f(x_j) sin(n x_j). Exact on the span of
/// the first M modes.
SpectralField sine_forward(const NodalField& f, std::size_t n_modes);
/// f(x_j) = sum_n c_n sqrt(2/pi) sin(n x_j).
NodalField sine_inverse(const SpectralField& c, std::size_t m_points);

/// c_n -> -n^2 c_n.
SpectralField apply_operator(const SpectralOperator& a, const SpectralField& u);
/// (-A)^beta: c_n -> n^{2 beta} c_n, any real beta.
SpectralField apply_fractional_power(const SpectralOperator& a, double beta,
                                     const SpectralField& u);
/// (-A)^{-beta} for beta in (0, 1) from the resolvent integral
///   (sin(pi beta)/pi) int_0^inf tau^{-beta} (tau I - A)^{-1} d tau,
/// evaluated modewise with tau = e^y and the trapezoidal rule on the line.
/// Throws QuadratureError when successive halvings disagree by more than
/// `rel_tol`.
SpectralField fractional_power_via_integral(const SpectralOperator& a, double beta,
                                            const SpectralField& u,
                                            double rel_tol = 1e-12);
/// (mu I - A)^{-1}: c_n -> c_n / (mu + n^2). Throws std::domain_error when mu
/// is an eigenvalue.
SpectralField apply_resolvent(const SpectralOperator& a, double mu,
                              const SpectralField& u);

}  // namespace fracres
