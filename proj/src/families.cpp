#include "fracres/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fracres/errors.hpp"
#include "fracres/specfun.hpp"

namespace fracres {

namespace {

using specfun::MLParams;
using specfun::mittag_leffler;

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw std::invalid_argument(std::string(who) + ": alpha must lie in (1,2], got " +
                                std::to_string(alpha));
  }
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// E_{alpha,beta}(A t^alpha) by its power series.
Eigen::MatrixXd matrix_ml(double alpha, double beta, const DenseOperator& a, double t) {
  const Eigen::Index d = a.rows();
  const Eigen::MatrixXd at = a * std::pow(t, alpha);
  if (at.lpNorm<Eigen::Infinity>() == 0.0 || t == 0.0) {
    return Eigen::MatrixXd::Identity(d, d) * specfun::reciprocal_gamma(beta);
  }
  const double norm = at.operatorNorm();
  if (norm > kMatrixSeriesCap) {
    throw std::domain_error("matrix_family: ||A|| t^alpha = " + std::to_string(norm) +
                            " exceeds the series cap");
  }
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd sum = power * specfun::reciprocal_gamma(beta);
  int small_run = 0;
  for (int k = 1; k < 2000; ++k) {
    power = power * at;
    const Eigen::MatrixXd term = power * specfun::reciprocal_gamma(alpha * k + beta);
    sum += term;
    const double tn = max_abs(term);
    const bool past_peak = std::pow(alpha * k + beta, alpha) > norm;
    if (past_peak && tn < 1e-16 * std::max(1.0, max_abs(sum))) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  return sum;
}

void check_dense(const DenseOperator& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0 ||
      static_cast<std::size_t>(a.rows()) > kMaxDenseDimension) {
    throw std::invalid_argument(std::string(who) +
                                ": dense operator must be square with dimension 1..8");
  }
}

// Family samples on a grid as d x d matrices, shared by the spectral and
// dense identity checks.
struct FamilySamples {
  Eigen::MatrixXd a;
  std::vector<Eigen::MatrixXd> cosine, sine, rl, rl_regular;
};

void check_identities(Report& rep, double alpha, const TimeGrid& grid,
                      const FamilySamples& f, const IdentityTolerances& tol) {
  const std::size_t n = grid.n_steps();
  const double h = grid.step();
  const Eigen::Index d = f.a.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);

  rep.add("cosine_at_zero", max_abs(f.cosine[0] - eye), 1e-15);
  rep.add("sine_derivative_at_zero", max_abs(f.sine[1] / h - eye), tol.initial);

  // (i) C(t) = I + J^alpha A C(t)
  {
    const ProductTrapezoid w(alpha, grid);
    std::vector<Eigen::MatrixXd> ac(f.cosine.size());
    for (std::size_t i = 0; i < ac.size(); ++i) ac[i] = f.a * f.cosine[i];
    double r = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const Eigen::MatrixXd j = w.apply_at<Eigen::MatrixXd>(
          i, [&](std::size_t k) -> const Eigen::MatrixXd& { return ac[k]; });
      r = std::max(r, max_abs(f.cosine[i] - eye - j));
    }
    rep.add("solution_operator_volterra", r, tol.volterra);
  }
  // (ii) S(t) = int_0^t C
  {
    double r = 0.0;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
    r = std::max(r, max_abs(f.sine[0]));
    for (std::size_t i = 1; i <= n; ++i) {
      acc += 0.5 * h * (f.cosine[i - 1] + f.cosine[i]);
      r = std::max(r, max_abs(f.sine[i] - acc));
    }
    rep.add("sine_is_integral_of_cosine", r, tol.sine_integral);
  }
  // (iii) P(t) = J^{alpha-1} C(t)
  {
    const ProductTrapezoid w(alpha - 1.0, grid);
    double r = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const Eigen::MatrixXd j = w.apply_at<Eigen::MatrixXd>(
          i, [&](std::size_t k) -> const Eigen::MatrixXd& { return f.cosine[k]; });
      r = std::max(r, max_abs(f.rl[i] - j));
    }
    rep.add("rl_family_is_fractional_integral", r, tol.rl_family);
  }
  // (iv) A S = S A and A C = C A
  {
    double rs = 0.0;
    double rc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      rs = std::max(rs, max_abs(f.a * f.sine[i] - f.sine[i] * f.a));
      rc = std::max(rc, max_abs(f.a * f.cosine[i] - f.cosine[i] * f.a));
    }
    rep.add("cosine_commutes_with_generator", rc, tol.commutation);
    rep.add("sine_commutes_with_generator", rs, tol.commutation);
  }
  // (v) S(t) = t I + J^alpha S(t) A
  {
    const ProductTrapezoid w(alpha, grid);
    std::vector<Eigen::MatrixXd> sa(f.sine.size());
    for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = f.sine[i] * f.a;
    double r = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const Eigen::MatrixXd j = w.apply_at<Eigen::MatrixXd>(
          i, [&](std::size_t k) -> const Eigen::MatrixXd& { return sa[k]; });
      r = std::max(r, max_abs(f.sine[i] - grid.node(i) * eye - j));
    }
    rep.add("sine_volterra", r, tol.sine_volterra);
  }
  // (vi) d/dt C(t) = A P(t), centered differences on t >= T/4
  {
    double r = 0.0;
    const std::size_t first = std::max<std::size_t>(1, (n + 3) / 4);
    for (std::size_t i = first; i < n; ++i) {
      const Eigen::MatrixXd dc = (f.cosine[i + 1] - f.cosine[i - 1]) / (2.0 * h);
      r = std::max(r, max_abs(dc - f.a * f.rl[i]));
    }
    rep.add("cosine_derivative_is_A_rl", r, tol.derivative);
  }
  // (vii) k(t) = (1 + t) x:  A int_0^t P(t-s) k(s) ds = S(t) x + C(t) x - k(t)
  {
    const ProductTrapezoid w(alpha, grid);
    double r = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const Eigen::MatrixXd v = w.apply_at<Eigen::MatrixXd>(i, [&](std::size_t j) {
        return Eigen::MatrixXd(f.rl_regular[i - j] * (1.0 + grid.node(j)));
      });
      const Eigen::MatrixXd rhs = f.sine[i] + f.cosine[i] - (1.0 + grid.node(i)) * eye;
      r = std::max(r, max_abs(f.a * v - rhs));
    }
    rep.add("duhamel_identity", r, tol.duhamel);
  }
}

}  // namespace

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Cosine: return "cosine";
    case FamilyKind::Sine: return "sine";
    case FamilyKind::RiemannLiouville: return "riemann_liouville";
  }
  return "?";
}

double family_symbol(double alpha, FamilyKind kind, double lambda, double t) {
  check_alpha(alpha, "family_symbol");
  if (lambda > 0.0) throw std::invalid_argument("family_symbol: lambda must be <= 0");
  if (t < 0.0) throw std::invalid_argument("family_symbol: t must be >= 0");
  if (t == 0.0) return kind == FamilyKind::Cosine ? 1.0 : 0.0;
  const double z = lambda * std::pow(t, alpha);
  switch (kind) {
    case FamilyKind::Cosine:
      return mittag_leffler(MLParams{alpha, 1.0}, z);
    case FamilyKind::Sine:
      return t * mittag_leffler(MLParams{alpha, 2.0}, z);
    case FamilyKind::RiemannLiouville:
      return std::pow(t, alpha - 1.0) * mittag_leffler(MLParams{alpha, alpha}, z);
  }
  throw std::logic_error("family_symbol: unknown kind");
}

double rl_regular_symbol(double alpha, double lambda, double t) {
  check_alpha(alpha, "rl_regular_symbol");
  if (t == 0.0) return 1.0;
  return specfun::gamma_fn(alpha) *
         mittag_leffler(MLParams{alpha, alpha}, lambda * std::pow(t, alpha));
}

FamilyEvaluation FamilyEvaluation::build(double alpha, FamilyKind kind,
                                         const SpectralOperator& op,
                                         const TimeGrid& grid) {
  check_alpha(alpha, "FamilyEvaluation::build");
  Eigen::MatrixXd table(static_cast<Eigen::Index>(op.n_modes()),
                        static_cast<Eigen::Index>(grid.size()));
  for (std::size_t n = 1; n <= op.n_modes(); ++n) {
    const double lambda = op.eigenvalue(n);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      table(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(i)) =
          family_symbol(alpha, kind, lambda, grid.node(i));
    }
  }
  return FamilyEvaluation(alpha, kind, grid, std::move(table));
}

SpectralField apply_family(const FamilyEvaluation& f, std::size_t t_index,
                           const SpectralField& u) {
  if (u.size() != f.n_modes()) {
    throw std::invalid_argument("apply_family: field/mode count mismatch");
  }
  if (t_index >= f.grid().size()) throw std::out_of_range("apply_family: t_index");
  return SpectralField(u.coeffs.cwiseProduct(f.column(t_index)));
}

GridFunction<double> brute_force_volterra(double alpha, double lambda,
                                          const TimeGrid& grid) {
  const ProductTrapezoid w(alpha, grid);
  std::vector<double> x(grid.size(), 0.0);
  x[0] = 1.0;
  for (std::size_t n = 1; n < grid.size(); ++n) {
    double history = 0.0;
    for (std::size_t j = 0; j < n; ++j) history += w.weight(n, j) * x[j];
    x[n] = (1.0 + lambda * history) / (1.0 - lambda * w.weight(n, n));
  }
  return GridFunction<double>(grid, std::move(x));
}

GridFunction<Eigen::MatrixXd> brute_force_volterra(double alpha, const DenseOperator& a,
                                                   const TimeGrid& grid) {
  check_dense(a, "brute_force_volterra");
  const ProductTrapezoid w(alpha, grid);
  const Eigen::Index d = a.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
  std::vector<Eigen::MatrixXd> x(grid.size());
  x[0] = eye;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(eye - w.weight(1, 1) * a);
  for (std::size_t n = 1; n < grid.size(); ++n) {
    Eigen::MatrixXd history = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t j = 0; j < n; ++j) history += w.weight(n, j) * x[j];
    x[n] = lu.solve(eye + a * history);
  }
  return GridFunction<Eigen::MatrixXd>(grid, std::move(x));
}

double subordinated_cosine_symbol(double alpha, double t, std::size_t mode, double tol) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw std::invalid_argument("apply_family_subordinated: alpha must lie in (1,2)");
  }
  if (!(t > 0.0)) throw std::invalid_argument("apply_family_subordinated: t must be > 0");
  // In z = s t^{-gamma} the density becomes phi_gamma(z), independent of t.
  const double gamma = 0.5 * alpha;
  const double scale = std::pow(t, gamma);
  const double n = static_cast<double>(mode);
  auto integrand = [&](double z) {
    return specfun::wright_phi({gamma}, z) * std::cos(n * scale * z);
  };
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, specfun::wright_tail_cutoff(gamma), 15, tol, &err);
  if (!(err <= tol * std::max(1.0, std::abs(value)))) {
    throw QuadratureError("apply_family_subordinated: mode " + std::to_string(mode), err);
  }
  return value;
}

SpectralField apply_family_subordinated(double alpha, double t, const SpectralField& u,
                                        double tol) {
  SpectralField out = u;
  for (std::size_t n = 1; n <= u.size(); ++n) {
    out.mode(n) *= subordinated_cosine_symbol(alpha, t, n, tol);
  }
  return out;
}

Eigen::MatrixXd matrix_family(double alpha, FamilyKind kind, const DenseOperator& a,
                              double t) {
  check_alpha(alpha, "matrix_family");
  check_dense(a, "matrix_family");
  if (t < 0.0) throw std::invalid_argument("matrix_family: t must be >= 0");
  const Eigen::Index d = a.rows();
  if (t == 0.0) {
    if (kind == FamilyKind::Cosine) return Eigen::MatrixXd::Identity(d, d);
    return Eigen::MatrixXd::Zero(d, d);
  }
  switch (kind) {
    case FamilyKind::Cosine:
      return matrix_ml(alpha, 1.0, a, t);
    case FamilyKind::Sine:
      return t * matrix_ml(alpha, 2.0, a, t);
    case FamilyKind::RiemannLiouville:
      return std::pow(t, alpha - 1.0) * matrix_ml(alpha, alpha, a, t);
  }
  throw std::logic_error("matrix_family: unknown kind");
}

Eigen::MatrixXd matrix_rl_regular(double alpha, const DenseOperator& a, double t) {
  check_alpha(alpha, "matrix_rl_regular");
  check_dense(a, "matrix_rl_regular");
  if (t == 0.0) return Eigen::MatrixXd::Identity(a.rows(), a.cols());
  return specfun::gamma_fn(alpha) * matrix_ml(alpha, alpha, a, t);
}

Report verify_family_identities(double alpha, const SpectralOperator& op,
                                const TimeGrid& grid, const IdentityTolerances& tol,
                                std::vector<std::size_t> test_modes,
                                const LaplaceSettings& laplace) {
  check_alpha(alpha, "verify_family_identities");
  if (test_modes.empty()) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(4, op.n_modes()); ++n) {
      test_modes.push_back(n);
    }
  }
  const auto d = static_cast<Eigen::Index>(test_modes.size());
  FamilySamples f;
  f.a = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    f.a(k, k) = op.eigenvalue(test_modes[static_cast<std::size_t>(k)]);
  }
  auto diag = [&](auto&& symbol) {
    std::vector<Eigen::MatrixXd> out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
      for (Eigen::Index k = 0; k < d; ++k) m(k, k) = symbol(f.a(k, k), grid.node(i));
      out.push_back(std::move(m));
    }
    return out;
  };
  auto kind_symbol = [&](FamilyKind kind) {
    return [alpha, kind](double lambda, double t) {
      return family_symbol(alpha, kind, lambda, t);
    };
  };
  f.cosine = diag(kind_symbol(FamilyKind::Cosine));
  f.sine = diag(kind_symbol(FamilyKind::Sine));
  f.rl = diag(kind_symbol(FamilyKind::RiemannLiouville));
  f.rl_regular = diag([alpha](double lambda, double t) {
    return rl_regular_symbol(alpha, lambda, t);
  });

  Report rep;
  rep.note("operator", "spectral Dirichlet Laplacian");
  rep.note("alpha", std::to_string(alpha));
  rep.note("T", std::to_string(grid.horizon()));
  rep.note("n_steps", std::to_string(grid.n_steps()));
  check_identities(rep, alpha, grid, f, tol);

  // exponential bound with M = 1, omega = 0
  double sup_cos = 0.0;
  for (const auto& c : f.cosine) sup_cos = std::max(sup_cos, max_abs(c));
  rep.add("cosine_bounded_by_one", std::max(0.0, sup_cos - 1.0), 1e-9);

  // Laplace characterizations on the long grid, omega = 0
  const TimeGrid long_grid(laplace.horizon, laplace.n_steps);
  rep.note("laplace_T", std::to_string(laplace.horizon));
  rep.note("laplace_n_steps", std::to_string(laplace.n_steps));
  for (const FamilyKind kind :
       {FamilyKind::Cosine, FamilyKind::Sine, FamilyKind::RiemannLiouville}) {
    double worst_excess = -1.0;
    double worst_residual = 0.0;
    double worst_allowed = tol.laplace;
    for (const std::size_t mode : test_modes) {
      const double lambda = op.eigenvalue(mode);
      const auto u = sample(long_grid, [&](double t) {
        return family_symbol(alpha, kind, lambda, t);
      });
      double sup = 0.0;
      for (double v : u.values) sup = std::max(sup, std::abs(v));
      const double m = kind == FamilyKind::Cosine ? 1.0 : 2.0 * sup;
      for (const double s : {1.0, 2.0, 4.0}) {
        const auto est = numeric_laplace(u, s, m, 0.0);
        const double sa = std::pow(s, alpha);
        double exact = 1.0 / (sa - lambda);
        if (kind == FamilyKind::Cosine) exact *= std::pow(s, alpha - 1.0);
        if (kind == FamilyKind::Sine) exact *= std::pow(s, alpha - 2.0);
        const double residual = std::abs(est.value - exact);
        const double allowed = tol.laplace + est.truncation_bound;
        if (residual - allowed > worst_excess) {
          worst_excess = residual - allowed;
          worst_residual = residual;
          worst_allowed = allowed;
        }
      }
    }
    rep.add(std::string("laplace_") + to_string(kind), worst_residual, worst_allowed);
  }
  return rep;
}

Report verify_family_identities(double alpha, const DenseOperator& a,
                                const TimeGrid& grid, const IdentityTolerances& tol) {
  check_alpha(alpha, "verify_family_identities");
  check_dense(a, "verify_family_identities");
  FamilySamples f;
  f.a = a;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    f.cosine.push_back(matrix_family(alpha, FamilyKind::Cosine, a, t));
    f.sine.push_back(matrix_family(alpha, FamilyKind::Sine, a, t));
    f.rl.push_back(matrix_family(alpha, FamilyKind::RiemannLiouville, a, t));
    f.rl_regular.push_back(matrix_rl_regular(alpha, a, t));
  }
  Report rep;
  rep.note("operator", "dense " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  rep.note("alpha", std::to_string(alpha));
  rep.note("T", std::to_string(grid.horizon()));
  rep.note("n_steps", std::to_string(grid.n_steps()));
  check_identities(rep, alpha, grid, f, tol);
  return rep;
}

double verify_alpha_resolvent_equation(double alpha, const DenseOperator& a, double t,
                                       double s, std::size_t n_steps) {
  check_alpha(alpha, "verify_alpha_resolvent_equation");
  check_dense(a, "verify_alpha_resolvent_equation");
  const Eigen::Index d = a.rows();
  // J^alpha C evaluated at the right end of [0, horizon]
  auto integrated_cosine = [&](double horizon) -> Eigen::MatrixXd {
    if (horizon == 0.0) return Eigen::MatrixXd::Zero(d, d);
    const TimeGrid grid(horizon, n_steps);
    std::vector<Eigen::MatrixXd> c;
    c.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      c.push_back(matrix_family(alpha, FamilyKind::Cosine, a, grid.node(i)));
    }
    const ProductTrapezoid w(alpha, grid);
    return w.apply_at<Eigen::MatrixXd>(
        n_steps, [&](std::size_t k) -> const Eigen::MatrixXd& { return c[k]; });
  };
  const Eigen::MatrixXd ct = matrix_family(alpha, FamilyKind::Cosine, a, t);
  const Eigen::MatrixXd cs = matrix_family(alpha, FamilyKind::Cosine, a, s);
  const Eigen::MatrixXd jt = integrated_cosine(t);
  const Eigen::MatrixXd js = integrated_cosine(s);
  return max_abs(cs * jt - js * ct - (jt - js));
}

DenseOperator default_nonnormal_operator() {
  DenseOperator a(2, 2);
  a << -1.0, 2.0,
        0.0, -3.0;
  return a;
}

}  // namespace fracres
