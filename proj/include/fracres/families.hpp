#pragma once

// Fractional resolvent families for alpha in (1, 2]:
//   cosine   C_alpha(t): C(t) xi solves x(t) = xi + J^alpha A x(t)
//   sine     S_alpha(t) = int_0^t C_alpha(s) ds
//   RL       P_alpha(t) = J^{alpha-1} C_alpha(t)
//
// Two independent evaluation paths exist for the spectral operator: scalar
// Mittag-Leffler symbols and the subordination integral against the
// classical cosine family. Small dense matrices use the operator power series.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "fracres/fracalc.hpp"
#include "fracres/report.hpp"
#include "fracres/spectral.hpp"

namespace fracres {

enum class FamilyKind { Cosine, Sine, RiemannLiouville };

const char* to_string(FamilyKind k);

/// A dense operator at desk scale (dimension <= 8).
using DenseOperator = Eigen::MatrixXd;

inline constexpr std::size_t kMaxDenseDimension = 8;

/// Cap on ||A|| t^alpha for the matrix power series; beyond it the series
/// cancels too badly to be trusted.
inline constexpr double kMatrixSeriesCap = 20.0;

/// Scalar family value for eigenvalue lambda <= 0:
///   Cosine -> E_{a,1}(lambda t^a), Sine -> t E_{a,2}(lambda t^a),
///   RiemannLiouville -> t^{a-1} E_{a,a}(lambda t^a).
double family_symbol(double alpha, FamilyKind kind, double lambda, double t);

/// P_alpha(t) / g_alpha(t) = Gamma(alpha) E_{a,a}(lambda t^a); equals 1 at 0.
/// The bounded factor left after splitting off the weakly singular kernel.
double rl_regular_symbol(double alpha, double lambda, double t);

/// Per-mode, per-node symbol table m(n, i) of one family on a time grid.
class FamilyEvaluation {
 public:
  static FamilyEvaluation build(double alpha, FamilyKind kind,
                                const SpectralOperator& op, const TimeGrid& grid);

  double alpha() const { return alpha_; }
  FamilyKind kind() const { return kind_; }
  const TimeGrid& grid() const { return grid_; }
  std::size_t n_modes() const { return static_cast<std::size_t>(table_.rows()); }
  /// m(n, i), n 1-based mode, i node index.
  double symbol(std::size_t n, std::size_t i) const {
    return table_(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(i));
  }
  /// All modes at node i.
  Eigen::VectorXd column(std::size_t i) const {
    return table_.col(static_cast<Eigen::Index>(i));
  }

 private:
  FamilyEvaluation(double alpha, FamilyKind kind, TimeGrid grid, Eigen::MatrixXd table)
      : alpha_(alpha), kind_(kind), grid_(grid), table_(std::move(table)) {}

  double alpha_;
  FamilyKind kind_;
  TimeGrid grid_;
  Eigen::MatrixXd table_;
};

/// c_n -> m(n, t_index) c_n.
SpectralField apply_family(const FamilyEvaluation& f, std::size_t t_index,
                           const SpectralField& u);

/// Scalar x(t) = 1 + lambda J^alpha x(t) by product-trapezoidal time stepping.
/// No Mittag-Leffler evaluation anywhere; the oracle for family_symbol.
GridFunction<double> brute_force_volterra(double alpha, double lambda,
                                          const TimeGrid& grid);

/// Matrix analogue: X(t) = I + J^alpha A X(t).
GridFunction<Eigen::MatrixXd> brute_force_volterra(double alpha, const DenseOperator& a,
                                                   const TimeGrid& grid);

/// C_alpha(t) u = int_0^inf phi_{t,alpha/2}(s) C(s) u ds with the classical
/// cosine family C(s) e_n = cos(n s) e_n, for 1 < alpha < 2 and t > 0.
/// Modewise adaptive quadrature in z = s t^{-alpha/2} on [0, z_max], with
/// z_max from the stretched-exponential tail of phi. Throws QuadratureError when a mode
/// misses `tol`.
SpectralField apply_family_subordinated(double alpha, double t, const SpectralField& u,
                                        double tol = 1e-12);

/// Scalar version for one mode n (the cosine symbol via subordination).
double subordinated_cosine_symbol(double alpha, double t, std::size_t mode,
                                  double tol = 1e-12);

/// Matrix family by the power series sum_k A^k t^{alpha k + c} /
/// Gamma(alpha k + 1 + c), c = 0, 1, alpha - 1 for Cosine, Sine, RL.
/// Throws std::domain_error when ||A|| t^alpha exceeds kMatrixSeriesCap.
Eigen::MatrixXd matrix_family(double alpha, FamilyKind kind, const DenseOperator& a,
                              double t);

/// Matrix P_alpha(t) / g_alpha(t).
Eigen::MatrixXd matrix_rl_regular(double alpha, const DenseOperator& a, double t);

struct IdentityTolerances {
  double volterra = 1e-5;        // C = I + J^alpha A C
  double sine_integral = 1e-5;   // S = int C
  double rl_family = 1e-5;       // P = J^{alpha-1} C
  double commutation = 1e-12;    // A S = S A, A C = C A
  double sine_volterra = 1e-5;   // S = t I + J^alpha S A
  double derivative = 1e-4;      // dC/dt = A P
  double duhamel = 1e-5;         // A int P(t-s) k(s) ds
  double laplace = 1e-4;         // transform characterizations
  double initial = 1e-3;         // S(h)/h -> I
};

/// Horizon and resolution of the separate long grid used for the Laplace
/// characterizations (the transforms need t -> infinity).
struct LaplaceSettings {
  double horizon = 40.0;
  std::size_t n_steps = 40000;
};

/// Residuals of the family identities on `grid` for modes `test_modes` of the
/// spectral operator (defaults to the first four). The cosine-derivative
/// identity is measured on nodes t >= T/4, away from the t^{alpha-1} layer at
/// the origin.
Report verify_family_identities(double alpha, const SpectralOperator& op,
                                const TimeGrid& grid, const IdentityTolerances& tol = {},
                                std::vector<std::size_t> test_modes = {},
                                const LaplaceSettings& laplace = {});

/// Same identities (without the Laplace rows) for a dense operator, with the
/// canonical basis as test vectors.
Report verify_family_identities(double alpha, const DenseOperator& a,
                                const TimeGrid& grid, const IdentityTolerances& tol = {});

/// Max-entry residual of
///   C(s) J^a C(t) - J^a C(s) C(t) - (J^a C(t) - J^a C(s))
/// where C is the cosine family of A and J^a C(t) = int_0^t g_a(t-r) C(r) dr
/// is computed by product integration on [0, t] and [0, s] with n_steps each.
double verify_alpha_resolvent_equation(double alpha, const DenseOperator& a, double t,
                                       double s, std::size_t n_steps);

/// Non-normal 2x2 used by default for the functional-equation check.
DenseOperator default_nonnormal_operator();

}  // namespace fracres
