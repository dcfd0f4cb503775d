#pragma once

// Mild solutions of
//   ^C D^alpha u = A u + int_0^t h(t, s, u(s)) ds + f(t),  u(0) = x, u'(0) = y
// on the spectral Dirichlet Laplacian:
//   u(t) = C(t) x + S(t) y + int_0^t P(t - s) [int_0^s h(s, r, u(r)) dr + f(s)] ds,
// solved by damped Picard iteration.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracres/fracalc.hpp"
#include "fracres/spectral.hpp"

namespace fracres {

/// Time-dependent spectral field together with its time derivative.
struct Forcing {
  std::function<SpectralField(double)> value;
  std::function<SpectralField(double)> derivative;

  static Forcing zero(std::size_t n_modes);
};

/// k(t, s) = c exp(-rate (t - s)); rate = 0 gives a constant kernel.
struct MemoryKernel {
  double c = 1.0;
  double rate = 0.0;

  double operator()(double t, double s) const;
  /// dk/dt
  double dt(double t, double s) const;
};

/// h(t, s, w). The built-ins factor as k(t, s) rho(w): LinearMemory has
/// rho(w) = w, Pointwise applies rho to nodal values. Custom acts on nodal
/// values with an arbitrary (t, s) dependence.
struct NonlinearityDescriptor {
  enum class Kind { Zero, LinearMemory, Pointwise, Custom };
  enum class Pointwise { Sin, Cubic, Polynomial };
  using NodalMap = std::function<double(double t, double s, double w)>;

  Kind kind = Kind::Zero;
  Pointwise pointwise = Pointwise::Cubic;
  std::vector<double> poly;  // rho(w) = sum_k poly[k] w^k
  MemoryKernel kernel;
  NodalMap custom;     // h(t, s, w) at one point
  NodalMap custom_dt;  // dh/dt at one point

  static NonlinearityDescriptor zero() { return {}; }
  static NonlinearityDescriptor linear_memory(MemoryKernel k);
  static NonlinearityDescriptor sine(MemoryKernel k = {});
  static NonlinearityDescriptor cubic(MemoryKernel k = {});
  static NonlinearityDescriptor polynomial(std::vector<double> coeffs, MemoryKernel k = {});
  static NonlinearityDescriptor make_custom(NodalMap h, NodalMap h_dt);

  bool is_zero() const { return kind == Kind::Zero; }
  /// rho(w) for the factored kinds.
  double rho(double w) const;
};

struct ProblemSpec {
  double alpha = 1.5;
  SpectralOperator op{1};
  SpectralField x;
  SpectralField y;
  Forcing f;
  NonlinearityDescriptor h;
  double beta = 0.5;
  /// Collocation points for nodal evaluation of h; 0 means 2 N.
  std::size_t m_collocation = 0;

  std::size_t n_modes() const { return op.n_modes(); }
  std::size_t collocation_size() const {
    return m_collocation == 0 ? 2 * op.n_modes() : m_collocation;
  }
  /// Throws std::invalid_argument on inconsistent sizes or ranges.
  void validate() const;
};

/// h(t, s, w) in spectral form, via nodal evaluation where needed.
SpectralField apply_nonlinearity(const ProblemSpec& spec, const SineTransform& tr,
                                 double t, double s, const SpectralField& w);
/// h_1(t, s, w) = dh/dt.
SpectralField apply_nonlinearity_dt(const ProblemSpec& spec, const SineTransform& tr,
                                    double t, double s, const SpectralField& w);

/// H(t_i) = int_0^{t_i} h(t_i, s, u(s)) ds by the trapezoidal rule on nodes.
std::vector<SpectralField> memory_term(const ProblemSpec& spec, const TimeGrid& grid,
                                       const std::vector<SpectralField>& u);

struct SolveResult {
  TimeGrid grid;
  std::vector<SpectralField> trajectory;
  /// ||u(t_i) - (Q u)(t_i)||_beta per node.
  std::vector<double> res_fp;
  /// Defect of u = x + t y + J^alpha [A u + H + f] per node, Euclidean norm.
  std::vector<double> res_volterra;
  std::size_t iterations = 0;
  bool converged = false;
  double fixed_point_residual = 0.0;
  double volterra_residual = 0.0;
  /// max_i ||u(t_i) - x||_beta.
  double max_excursion = 0.0;
};

/// Picard iteration hit max_iter. Holds the last iterate and its residuals.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(SolveResult partial);
  const SolveResult& partial() const { return partial_; }

 private:
  SolveResult partial_;
};

/// C(t) x + S(t) y + int_0^t P(t - s) f(s) ds. Requires h = Zero.
SolveResult linear_mild_solution(const ProblemSpec& spec, const TimeGrid& grid);

struct PicardSettings {
  double tol = 1e-8;
  std::size_t max_iter = 200;
  double damping = 1.0;
};

/// u^0 = phi, u^{k+1} = (1 - theta) u^k + theta Q u^k. theta starts at
/// `damping` and halves (down to 1/16) whenever ||Q u - u|| grows. Converged
/// once max_i ||Q u^k - u^k||_beta <= tol; that u^k is returned. Throws
/// NonConvergence after max_iter evaluations of Q.
SolveResult picard_solve(const ProblemSpec& spec, const TimeGrid& grid,
                         const PicardSettings& settings = {});

/// (Q u)(t_i) per node.
std::vector<SpectralField> apply_fixed_point_map(const ProblemSpec& spec,
                                                 const TimeGrid& grid,
                                                 const std::vector<SpectralField>& u);

/// Per-node defect of u = x + t y + J^alpha [A u + H(u) + f].
std::vector<double> volterra_form_defects(const ProblemSpec& spec, const TimeGrid& grid,
                                          const std::vector<SpectralField>& u);
/// max over nodes of volterra_form_defects.
double volterra_form_residual(const ProblemSpec& spec, const TimeGrid& grid,
                              const std::vector<SpectralField>& u);

/// One summand of a closed-form trajectory: profile(t) * shape.
///   Monomial: t^power (power 0, 1 or > 1)
///   CosineFamily / SineFamily: the scalar family for eigenvalue lambda
struct TrajectoryTerm {
  enum class Profile { Monomial, CosineFamily, SineFamily, RiemannLiouvilleFamily };
  Profile profile = Profile::Monomial;
  double power = 0.0;
  double lambda = 0.0;
  SpectralField shape;
};

/// u*(t) = sum of terms, with its Caputo derivative in closed form.
struct ModalTrajectory {
  double alpha = 1.5;
  std::vector<TrajectoryTerm> terms;

  SpectralField value(double t) const;
  SpectralField initial_value() const;
  SpectralField initial_derivative() const;
  /// du*/dt
  SpectralField derivative(double t) const;
  SpectralField caputo(double t) const;
  /// d/dt of caputo(t); unbounded at t = 0 for powers below alpha + 1.
  SpectralField caputo_dt(double t) const;
  /// Throws std::invalid_argument for terms without a closed-form Caputo
  /// derivative (RL family, powers in (0,1) or negative).
  void validate(std::size_t n_modes) const;
};

/// Problem whose exact solution is u*: f = ^C D^alpha u* - A u* - int h(u*),
/// the memory integral by composite Gauss-Legendre quadrature graded toward 0.
ProblemSpec make_manufactured(double alpha, const SpectralOperator& op,
                              const ModalTrajectory& u_star,
                              const NonlinearityDescriptor& h, double beta = 0.5,
                              std::size_t m_collocation = 0);

}  // namespace fracres
