#include "fracres/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "fracres/families.hpp"
#include "fracres/specfun.hpp"

namespace fracres {

namespace {

using Vec = Eigen::VectorXd;

double beta_distance(const SpectralField& a, const SpectralField& b, double beta) {
  return (a - b).beta_norm(beta);
}

// Per-mode symbol tables on node distances 0..n.
struct SymbolTables {
  Eigen::MatrixXd cosine, sine, rl_regular;  // N x (n+1)
};

SymbolTables build_tables(const ProblemSpec& spec, const TimeGrid& grid) {
  const auto n_modes = static_cast<Eigen::Index>(spec.n_modes());
  const auto nodes = static_cast<Eigen::Index>(grid.size());
  SymbolTables t{Eigen::MatrixXd(n_modes, nodes), Eigen::MatrixXd(n_modes, nodes),
                 Eigen::MatrixXd(n_modes, nodes)};
  for (Eigen::Index n = 0; n < n_modes; ++n) {
    const double lambda = spec.op.eigenvalue(static_cast<std::size_t>(n + 1));
    for (Eigen::Index i = 0; i < nodes; ++i) {
      const double ti = grid.node(static_cast<std::size_t>(i));
      t.cosine(n, i) = family_symbol(spec.alpha, FamilyKind::Cosine, lambda, ti);
      t.sine(n, i) = family_symbol(spec.alpha, FamilyKind::Sine, lambda, ti);
      t.rl_regular(n, i) = rl_regular_symbol(spec.alpha, lambda, ti);
    }
  }
  return t;
}

// int_0^{t_i} P(t_i - s) g(s) ds with P = g_alpha * (regular part), product
// trapezoid against g_alpha.
std::vector<SpectralField> rl_convolution(const ProductTrapezoid& w,
                                          const Eigen::MatrixXd& rl_regular,
                                          const std::vector<SpectralField>& g) {
  std::vector<SpectralField> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Vec acc = Vec::Zero(g[0].coeffs.size());
    for (std::size_t j = 0; j <= i && i > 0; ++j) {
      acc += w.weight(i, j) *
             rl_regular.col(static_cast<Eigen::Index>(i - j)).cwiseProduct(g[j].coeffs);
    }
    out.emplace_back(std::move(acc));
  }
  return out;
}

std::vector<SpectralField> sample_forcing(const ProblemSpec& spec, const TimeGrid& grid) {
  std::vector<SpectralField> f;
  f.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f.push_back(spec.f.value(grid.node(i)));
    if (f.back().size() != spec.n_modes()) {
      throw std::invalid_argument("forcing returned a field of the wrong size");
    }
  }
  return f;
}

// phi on the grid.
std::vector<SpectralField> linear_part(const ProblemSpec& spec, const TimeGrid& grid,
                                       const SymbolTables& tab, const ProductTrapezoid& w) {
  const auto conv = rl_convolution(w, tab.rl_regular, sample_forcing(spec, grid));
  std::vector<SpectralField> phi;
  phi.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto c = static_cast<Eigen::Index>(i);
    phi.emplace_back(Vec(tab.cosine.col(c).cwiseProduct(spec.x.coeffs) +
                         tab.sine.col(c).cwiseProduct(spec.y.coeffs) + conv[i].coeffs));
  }
  return phi;
}

std::vector<SpectralField> apply_q(const ProblemSpec& spec, const TimeGrid& grid,
                                   const SymbolTables& tab, const ProductTrapezoid& w,
                                   const std::vector<SpectralField>& phi,
                                   const std::vector<SpectralField>& u) {
  if (spec.h.is_zero()) return phi;
  const auto conv = rl_convolution(w, tab.rl_regular, memory_term(spec, grid, u));
  std::vector<SpectralField> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(phi[i] + conv[i]);
  return out;
}

void fill_diagnostics(const ProblemSpec& spec, const TimeGrid& grid, SolveResult& r,
                      const std::vector<SpectralField>& qu) {
  r.res_fp.assign(grid.size(), 0.0);
  r.fixed_point_residual = 0.0;
  r.max_excursion = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    r.res_fp[i] = beta_distance(r.trajectory[i], qu[i], spec.beta);
    r.fixed_point_residual = std::max(r.fixed_point_residual, r.res_fp[i]);
    r.max_excursion =
        std::max(r.max_excursion, beta_distance(r.trajectory[i], spec.x, spec.beta));
  }
  r.res_volterra = volterra_form_defects(spec, grid, r.trajectory);
  r.volterra_residual = *std::max_element(r.res_volterra.begin(), r.res_volterra.end());
}

SpectralField nodal_apply(const SineTransform& tr, const SpectralField& w,
                          const std::function<double(double)>& f) {
  NodalField nodal = tr.inverse(w);
  for (Eigen::Index j = 0; j < nodal.samples.size(); ++j) {
    nodal.samples(j) = f(nodal.samples(j));
  }
  return tr.forward(nodal);
}

// rho(u(s)) in spectral form for the factored kinds.
SpectralField rho_field(const ProblemSpec& spec, const SineTransform& tr,
                        const SpectralField& w) {
  if (spec.h.kind == NonlinearityDescriptor::Kind::LinearMemory) return w;
  return nodal_apply(tr, w, [&](double v) { return spec.h.rho(v); });
}

// Composite 20-point Gauss-Legendre on [0, t], panels graded toward 0.
template <class F>
SpectralField graded_integral(double t, std::size_t n_modes, F&& f) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  static constexpr std::array<double, 6> kBreaks = {0.0,  1.0 / 64, 1.0 / 16,
                                                    0.25, 0.5,      1.0};
  SpectralField sum = SpectralField::zero(n_modes);
  if (t == 0.0) return sum;
  const auto& x = Rule::abscissa();
  const auto& wt = Rule::weights();
  for (std::size_t p = 0; p + 1 < kBreaks.size(); ++p) {
    const double a = kBreaks[p] * t;
    const double b = kBreaks[p + 1] * t;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t k = 0; k < x.size(); ++k) {
      sum += (half * wt[k]) * f(mid + half * x[k]);
      sum += (half * wt[k]) * f(mid - half * x[k]);
    }
  }
  return sum;
}

}  // namespace

Forcing Forcing::zero(std::size_t n_modes) {
  auto z = [n_modes](double) { return SpectralField::zero(n_modes); };
  return {z, z};
}

double MemoryKernel::operator()(double t, double s) const {
  return rate == 0.0 ? c : c * std::exp(-rate * (t - s));
}

double MemoryKernel::dt(double t, double s) const {
  return rate == 0.0 ? 0.0 : -rate * (*this)(t, s);
}

NonlinearityDescriptor NonlinearityDescriptor::linear_memory(MemoryKernel k) {
  NonlinearityDescriptor d;
  d.kind = Kind::LinearMemory;
  d.kernel = k;
  return d;
}

NonlinearityDescriptor NonlinearityDescriptor::sine(MemoryKernel k) {
  NonlinearityDescriptor d;
  d.kind = Kind::Pointwise;
  d.pointwise = Pointwise::Sin;
  d.kernel = k;
  return d;
}

NonlinearityDescriptor NonlinearityDescriptor::cubic(MemoryKernel k) {
  NonlinearityDescriptor d;
  d.kind = Kind::Pointwise;
  d.pointwise = Pointwise::Cubic;
  d.kernel = k;
  return d;
}

NonlinearityDescriptor NonlinearityDescriptor::polynomial(std::vector<double> coeffs,
                                                          MemoryKernel k) {
  NonlinearityDescriptor d;
  d.kind = Kind::Pointwise;
  d.pointwise = Pointwise::Polynomial;
  d.poly = std::move(coeffs);
  d.kernel = k;
  return d;
}

NonlinearityDescriptor NonlinearityDescriptor::make_custom(NodalMap h, NodalMap h_dt) {
  if (!h || !h_dt) {
    throw std::invalid_argument("custom nonlinearity needs both h and dh/dt");
  }
  NonlinearityDescriptor d;
  d.kind = Kind::Custom;
  d.custom = std::move(h);
  d.custom_dt = std::move(h_dt);
  return d;
}

double NonlinearityDescriptor::rho(double w) const {
  switch (kind) {
    case Kind::Zero: return 0.0;
    case Kind::LinearMemory: return w;
    case Kind::Custom: throw std::logic_error("rho: custom nonlinearity does not factor");
    case Kind::Pointwise: break;
  }
  switch (pointwise) {
    case Pointwise::Sin: return std::sin(w);
    case Pointwise::Cubic: return w * w * w;
    case Pointwise::Polynomial: {
      double acc = 0.0;
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * w + *it;
      return acc;
    }
  }
  return 0.0;
}

void ProblemSpec::validate() const {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw std::invalid_argument("alpha must lie in (1,2], got " + std::to_string(alpha));
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("beta must lie in [0,1), got " + std::to_string(beta));
  }
  if (x.size() != n_modes() || y.size() != n_modes()) {
    throw std::invalid_argument("initial data must have " + std::to_string(n_modes()) +
                                " modes");
  }
  if (!f.value || !f.derivative) {
    throw std::invalid_argument("forcing needs both f and its time derivative");
  }
  if (collocation_size() < n_modes()) {
    throw std::invalid_argument("m_collocation must be >= n_modes");
  }
}

SpectralField apply_nonlinearity(const ProblemSpec& spec, const SineTransform& tr,
                                 double t, double s, const SpectralField& w) {
  using Kind = NonlinearityDescriptor::Kind;
  switch (spec.h.kind) {
    case Kind::Zero: return SpectralField::zero(w.size());
    case Kind::Custom:
      return nodal_apply(tr, w, [&](double v) { return spec.h.custom(t, s, v); });
    case Kind::LinearMemory:
    case Kind::Pointwise:
      return spec.h.kernel(t, s) * rho_field(spec, tr, w);
  }
  return SpectralField::zero(w.size());
}

SpectralField apply_nonlinearity_dt(const ProblemSpec& spec, const SineTransform& tr,
                                    double t, double s, const SpectralField& w) {
  using Kind = NonlinearityDescriptor::Kind;
  switch (spec.h.kind) {
    case Kind::Zero: return SpectralField::zero(w.size());
    case Kind::Custom:
      return nodal_apply(tr, w, [&](double v) { return spec.h.custom_dt(t, s, v); });
    case Kind::LinearMemory:
    case Kind::Pointwise:
      return spec.h.kernel.dt(t, s) * rho_field(spec, tr, w);
  }
  return SpectralField::zero(w.size());
}

std::vector<SpectralField> memory_term(const ProblemSpec& spec, const TimeGrid& grid,
                                       const std::vector<SpectralField>& u) {
  const std::size_t n_modes = spec.n_modes();
  std::vector<SpectralField> out(grid.size(), SpectralField::zero(n_modes));
  if (spec.h.is_zero()) return out;
  const SineTransform tr(n_modes, spec.collocation_size());
  const double h = grid.step();

  if (spec.h.kind == NonlinearityDescriptor::Kind::Custom) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double ti = grid.node(i);
      for (std::size_t j = 0; j <= i; ++j) {
        const double wj = (j == 0 || j == i) ? 0.5 * h : h;
        out[i] += wj * apply_nonlinearity(spec, tr, ti, grid.node(j), u[j]);
      }
    }
    return out;
  }
  std::vector<SpectralField> g;
  g.reserve(u.size());
  for (const auto& uj : u) g.push_back(rho_field(spec, tr, uj));
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double ti = grid.node(i);
    Vec acc = Vec::Zero(static_cast<Eigen::Index>(n_modes));
    for (std::size_t j = 0; j <= i; ++j) {
      const double wj = (j == 0 || j == i) ? 0.5 * h : h;
      acc += (wj * spec.h.kernel(ti, grid.node(j))) * g[j].coeffs;
    }
    out[i] = SpectralField(std::move(acc));
  }
  return out;
}

NonConvergence::NonConvergence(SolveResult partial)
    : std::runtime_error("Picard iteration did not converge after " +
                         std::to_string(partial.iterations) +
                         " iterations; fixed-point residual " +
                         std::to_string(partial.fixed_point_residual)),
      partial_(std::move(partial)) {}

SolveResult linear_mild_solution(const ProblemSpec& spec, const TimeGrid& grid) {
  spec.validate();
  if (!spec.h.is_zero()) {
    throw std::invalid_argument("linear_mild_solution: h must be Zero");
  }
  const SymbolTables tab = build_tables(spec, grid);
  const ProductTrapezoid w(spec.alpha, grid);
  SolveResult r{grid, linear_part(spec, grid, tab, w), {}, {}, 1, true, 0, 0, 0};
  fill_diagnostics(spec, grid, r, r.trajectory);
  return r;
}

std::vector<SpectralField> apply_fixed_point_map(const ProblemSpec& spec,
                                                 const TimeGrid& grid,
                                                 const std::vector<SpectralField>& u) {
  spec.validate();
  const SymbolTables tab = build_tables(spec, grid);
  const ProductTrapezoid w(spec.alpha, grid);
  return apply_q(spec, grid, tab, w, linear_part(spec, grid, tab, w), u);
}

SolveResult picard_solve(const ProblemSpec& spec, const TimeGrid& grid,
                         const PicardSettings& settings) {
  spec.validate();
  if (!(settings.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (settings.max_iter == 0) throw std::invalid_argument("max_iter must be positive");
  if (!(settings.damping > 0.0 && settings.damping <= 1.0)) {
    throw std::invalid_argument("damping must lie in (0,1]");
  }
  constexpr double kDampingFloor = 1.0 / 16.0;
  const SymbolTables tab = build_tables(spec, grid);
  const ProductTrapezoid w(spec.alpha, grid);
  const auto phi = linear_part(spec, grid, tab, w);

  SolveResult r{grid, phi, {}, {}, 0, false, 0, 0, 0};
  double theta = settings.damping;
  double previous = std::numeric_limits<double>::infinity();
  while (r.iterations < settings.max_iter) {
    const auto qu = apply_q(spec, grid, tab, w, phi, r.trajectory);
    ++r.iterations;
    double residual = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      residual = std::max(residual, beta_distance(r.trajectory[i], qu[i], spec.beta));
    }
    if (residual <= settings.tol) {
      r.converged = true;
      fill_diagnostics(spec, grid, r, qu);
      return r;
    }
    if (residual > previous) theta = std::max(0.5 * theta, kDampingFloor);
    previous = residual;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      r.trajectory[i] = theta == 1.0 ? qu[i] : (1.0 - theta) * r.trajectory[i] + theta * qu[i];
    }
  }
  fill_diagnostics(spec, grid, r, apply_q(spec, grid, tab, w, phi, r.trajectory));
  throw NonConvergence(std::move(r));
}

std::vector<double> volterra_form_defects(const ProblemSpec& spec, const TimeGrid& grid,
                                          const std::vector<SpectralField>& u) {
  spec.validate();
  if (u.size() != grid.size()) {
    throw std::invalid_argument("volterra_form_defects: trajectory/grid size mismatch");
  }
  const auto f = sample_forcing(spec, grid);
  const auto mem = memory_term(spec, grid, u);
  std::vector<Vec> rhs;
  rhs.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    rhs.push_back(apply_operator(spec.op, u[i]).coeffs + mem[i].coeffs + f[i].coeffs);
  }
  const ProductTrapezoid w(spec.alpha, grid);
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Vec j = w.apply_at<Vec>(i, [&](std::size_t k) -> const Vec& { return rhs[k]; });
    out[i] =
        (u[i].coeffs - spec.x.coeffs - grid.node(i) * spec.y.coeffs - j).norm();
  }
  return out;
}

double volterra_form_residual(const ProblemSpec& spec, const TimeGrid& grid,
                              const std::vector<SpectralField>& u) {
  const auto d = volterra_form_defects(spec, grid, u);
  return *std::max_element(d.begin(), d.end());
}

SpectralField ModalTrajectory::value(double t) const {
  SpectralField out = SpectralField::zero(terms.empty() ? 0 : terms[0].shape.size());
  for (const auto& term : terms) {
    double p = 0.0;
    switch (term.profile) {
      case TrajectoryTerm::Profile::Monomial:
        p = term.power == 0.0 ? 1.0 : std::pow(t, term.power);
        break;
      case TrajectoryTerm::Profile::CosineFamily:
        p = family_symbol(alpha, FamilyKind::Cosine, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::SineFamily:
        p = family_symbol(alpha, FamilyKind::Sine, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::RiemannLiouvilleFamily:
        p = family_symbol(alpha, FamilyKind::RiemannLiouville, term.lambda, t);
        break;
    }
    out += p * term.shape;
  }
  return out;
}

SpectralField ModalTrajectory::initial_value() const { return value(0.0); }

SpectralField ModalTrajectory::initial_derivative() const {
  SpectralField out = SpectralField::zero(terms.empty() ? 0 : terms[0].shape.size());
  for (const auto& term : terms) {
    const bool unit_slope =
        (term.profile == TrajectoryTerm::Profile::Monomial && term.power == 1.0) ||
        term.profile == TrajectoryTerm::Profile::SineFamily;
    if (unit_slope) out += term.shape;
  }
  return out;
}

SpectralField ModalTrajectory::derivative(double t) const {
  SpectralField out = SpectralField::zero(terms.empty() ? 0 : terms[0].shape.size());
  for (const auto& term : terms) {
    double p = 0.0;
    switch (term.profile) {
      case TrajectoryTerm::Profile::Monomial:
        if (term.power == 0.0) break;
        p = term.power == 1.0 ? 1.0 : term.power * std::pow(t, term.power - 1.0);
        break;
      case TrajectoryTerm::Profile::CosineFamily:
        p = term.lambda * family_symbol(alpha, FamilyKind::RiemannLiouville, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::SineFamily:
        p = family_symbol(alpha, FamilyKind::Cosine, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::RiemannLiouvilleFamily:
        throw std::invalid_argument("ModalTrajectory: RL family term is not differentiable at 0");
    }
    out += p * term.shape;
  }
  return out;
}

SpectralField ModalTrajectory::caputo(double t) const {
  SpectralField out = SpectralField::zero(terms.empty() ? 0 : terms[0].shape.size());
  for (const auto& term : terms) {
    double p = 0.0;
    switch (term.profile) {
      case TrajectoryTerm::Profile::Monomial:
        if (term.power > 1.0) {
          p = specfun::gamma_fn(term.power + 1.0) *
              specfun::reciprocal_gamma(term.power + 1.0 - alpha) *
              std::pow(t, term.power - alpha);
        }
        break;
      case TrajectoryTerm::Profile::CosineFamily:
        p = term.lambda * family_symbol(alpha, FamilyKind::Cosine, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::SineFamily:
        p = term.lambda * family_symbol(alpha, FamilyKind::Sine, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::RiemannLiouvilleFamily:
        throw std::invalid_argument("ModalTrajectory: RL family term has no Caputo form");
    }
    out += p * term.shape;
  }
  return out;
}

SpectralField ModalTrajectory::caputo_dt(double t) const {
  SpectralField out = SpectralField::zero(terms.empty() ? 0 : terms[0].shape.size());
  for (const auto& term : terms) {
    double p = 0.0;
    switch (term.profile) {
      case TrajectoryTerm::Profile::Monomial:
        if (term.power > 1.0) {
          const double rg = specfun::reciprocal_gamma(term.power - alpha);
          if (rg != 0.0) {
            p = specfun::gamma_fn(term.power + 1.0) * rg *
                std::pow(t, term.power - alpha - 1.0);
          }
        }
        break;
      case TrajectoryTerm::Profile::CosineFamily:
        p = term.lambda * term.lambda *
            family_symbol(alpha, FamilyKind::RiemannLiouville, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::SineFamily:
        p = term.lambda * family_symbol(alpha, FamilyKind::Cosine, term.lambda, t);
        break;
      case TrajectoryTerm::Profile::RiemannLiouvilleFamily:
        throw std::invalid_argument("ModalTrajectory: RL family term has no Caputo form");
    }
    out += p * term.shape;
  }
  return out;
}

void ModalTrajectory::validate(std::size_t n_modes) const {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw std::invalid_argument("alpha must lie in (1,2]");
  }
  for (const auto& term : terms) {
    if (term.shape.size() != n_modes) {
      throw std::invalid_argument("ModalTrajectory: term shape has wrong mode count");
    }
    switch (term.profile) {
      case TrajectoryTerm::Profile::Monomial:
        if (!(term.power == 0.0 || term.power == 1.0 || term.power > 1.0)) {
          throw std::invalid_argument(
              "ModalTrajectory: t^" + std::to_string(term.power) +
              " has no Caputo derivative of order in (1,2]");
        }
        break;
      case TrajectoryTerm::Profile::CosineFamily:
      case TrajectoryTerm::Profile::SineFamily:
        if (term.lambda > 0.0) {
          throw std::invalid_argument("ModalTrajectory: family lambda must be <= 0");
        }
        break;
      case TrajectoryTerm::Profile::RiemannLiouvilleFamily:
        throw std::invalid_argument(
            "ModalTrajectory: RL family term has no Caputo derivative (u'(0) unbounded)");
    }
  }
}

ProblemSpec make_manufactured(double alpha, const SpectralOperator& op,
                              const ModalTrajectory& u_star,
                              const NonlinearityDescriptor& h, double beta,
                              std::size_t m_collocation) {
  ModalTrajectory u = u_star;
  u.alpha = alpha;
  u.validate(op.n_modes());
  const std::size_t n_modes = op.n_modes();

  ProblemSpec spec;
  spec.alpha = alpha;
  spec.op = op;
  spec.x = u.terms.empty() ? SpectralField::zero(n_modes) : u.initial_value();
  spec.y = u.terms.empty() ? SpectralField::zero(n_modes) : u.initial_derivative();
  spec.h = h;
  spec.beta = beta;
  spec.m_collocation = m_collocation;
  spec.f = Forcing::zero(n_modes);
  if (u.terms.empty()) return spec;

  const auto tr = std::make_shared<SineTransform>(n_modes, spec.collocation_size());
  // spec without forcing, only used to evaluate h
  const auto hspec = std::make_shared<ProblemSpec>(spec);

  spec.f.value = [u, op, tr, hspec](double t) {
    SpectralField f = u.caputo(t) - apply_operator(op, u.value(t));
    if (!hspec->h.is_zero()) {
      f -= graded_integral(t, op.n_modes(), [&](double s) {
        return apply_nonlinearity(*hspec, *tr, t, s, u.value(s));
      });
    }
    return f;
  };
  spec.f.derivative = [u, op, tr, hspec](double t) {
    SpectralField df = u.caputo_dt(t) - apply_operator(op, u.derivative(t));
    if (!hspec->h.is_zero()) {
      df -= apply_nonlinearity(*hspec, *tr, t, t, u.value(t));
      df -= graded_integral(t, op.n_modes(), [&](double s) {
        return apply_nonlinearity_dt(*hspec, *tr, t, s, u.value(s));
      });
    }
    return df;
  };
  return spec;
}

}  // namespace fracres
