#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fracres/families.hpp"
#include "fracres/solver.hpp"
#include "fracres/specfun.hpp"

using namespace fracres;
using Term = TrajectoryTerm;

namespace {

ProblemSpec linear_problem(std::size_t n_modes, SpectralField x, SpectralField y) {
  ProblemSpec p;
  p.alpha = 1.5;
  p.op = SpectralOperator(n_modes);
  p.x = std::move(x);
  p.y = std::move(y);
  p.f = Forcing::zero(n_modes);
  return p;
}

Forcing constant_forcing(SpectralField c) {
  const std::size_t n = c.size();
  return {[c](double) { return c; }, [n](double) { return SpectralField::zero(n); }};
}

double sup_beta_error(const SolveResult& r, const ModalTrajectory& u, double beta) {
  double e = 0.0;
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    e = std::max(e, (r.trajectory[i] - u.value(r.grid.node(i))).beta_norm(beta));
  }
  return e;
}

ModalTrajectory t_squared_mode2(std::size_t n_modes) {
  return {1.5, {Term{Term::Profile::Monomial, 2.0, 0.0, SpectralField::unit(n_modes, 2)}}};
}

}  // namespace

TEST_CASE("linear_mild_solution: cosine eigenmode") {
  const TimeGrid g(1.0, 1024);
  const auto r = linear_mild_solution(
      linear_problem(8, SpectralField::unit(8, 1), SpectralField::zero(8)), g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.node(i);
    CHECK(std::abs(r.trajectory[i].mode(1) - specfun::mittag_leffler({1.5, 1.0}, -std::pow(t, 1.5))) <
          1e-12);
    CHECK(r.trajectory[i].coeffs.tail(7).isZero());
  }
}

TEST_CASE("linear_mild_solution: sine eigenmode") {
  const TimeGrid g(1.0, 256);
  const auto r = linear_mild_solution(
      linear_problem(4, SpectralField::zero(4), SpectralField::unit(4, 2)), g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.node(i);
    CHECK(std::abs(r.trajectory[i].mode(2) -
                   t * specfun::mittag_leffler({1.5, 2.0}, -4.0 * std::pow(t, 1.5))) < 1e-12);
  }
}

TEST_CASE("linear_mild_solution: constant forcing vs brute-force stepping") {
  // u = J^a(-u + c) means u = c (1 - x) with x = 1 - J^a x
  const TimeGrid g(2.0, 1024);
  auto p = linear_problem(3, SpectralField::zero(3), SpectralField::zero(3));
  p.f = constant_forcing(0.7 * SpectralField::unit(3, 1));
  const auto r = linear_mild_solution(p, g);
  const auto x = brute_force_volterra(1.5, -1.0, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(r.trajectory[i].mode(1) - 0.7 * (1.0 - x[i])) < 1e-5);
  }
  p.h = NonlinearityDescriptor::cubic();
  CHECK_THROWS_AS(linear_mild_solution(p, g), std::invalid_argument);
}

TEST_CASE("picard_solve: h = Zero equals the linear solution bit for bit in 1 iteration") {
  const TimeGrid g(1.0, 128);
  SpectralField x = SpectralField::zero(4);
  x.coeffs << 1.0, -0.5, 0.25, 0.1;
  auto p = linear_problem(4, x, SpectralField::unit(4, 3));
  p.f = constant_forcing(SpectralField::unit(4, 2));
  const auto lin = linear_mild_solution(p, g);
  const auto pic = picard_solve(p, g);
  CHECK(pic.iterations == 1);
  CHECK(pic.converged);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(pic.trajectory[i] == lin.trajectory[i]);
}

TEST_CASE("picard_solve: zero data gives the zero trajectory") {
  const TimeGrid g(1.0, 64);
  auto p = linear_problem(4, SpectralField::zero(4), SpectralField::zero(4));
  p.h = NonlinearityDescriptor::cubic();
  const auto r = picard_solve(p, g);
  for (const auto& u : r.trajectory) CHECK(u.coeffs.isZero());
  CHECK(r.volterra_residual == 0.0);
  CHECK(volterra_form_residual(p, g, r.trajectory) == 0.0);
}

TEST_CASE("picard_solve: argument checks and non-convergence") {
  const TimeGrid g(1.0, 64);
  auto p = linear_problem(4, 3.0 * SpectralField::unit(4, 1), SpectralField::zero(4));
  p.h = NonlinearityDescriptor::cubic(MemoryKernel{50.0, 0.0});
  CHECK_THROWS_AS(picard_solve(p, g, {0.0, 10, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(picard_solve(p, g, {1e-8, 10, 1.5}), std::invalid_argument);
  try {
    picard_solve(p, g, {1e-12, 1, 1.0});
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.partial().iterations == 1);
    CHECK_FALSE(e.partial().converged);
    CHECK(e.partial().fixed_point_residual > 1e-12);
    CHECK(e.partial().trajectory.size() == g.size());
  }
}

TEST_CASE("volterra_form_residual examples") {
  const TimeGrid g(1.0, 1024);
  const auto p = linear_problem(8, SpectralField::unit(8, 1), SpectralField::zero(8));
  std::vector<SpectralField> exact;
  for (std::size_t i = 0; i < g.size(); ++i) {
    exact.push_back(family_symbol(1.5, FamilyKind::Cosine, -1.0, g.node(i)) *
                    SpectralField::unit(8, 1));
  }
  CHECK(volterra_form_residual(p, g, exact) <= 1e-4);

  auto bumped = exact;
  bumped[512].mode(1) += 0.1;
  CHECK(volterra_form_residual(p, g, bumped) >= 0.05);

  const auto z = linear_problem(8, SpectralField::zero(8), SpectralField::zero(8));
  CHECK(volterra_form_residual(z, g, std::vector<SpectralField>(g.size(), SpectralField::zero(8))) ==
        0.0);
  CHECK_THROWS_AS(volterra_form_residual(p, g, std::vector<SpectralField>(3, SpectralField::zero(8))),
                  std::invalid_argument);
}

TEST_CASE("make_manufactured: monomial forcing formula") {
  const double a = 1.5;
  const ModalTrajectory u{a,
                          {Term{Term::Profile::Monomial, 0.0, 0.0, SpectralField::unit(3, 1)},
                           Term{Term::Profile::Monomial, 2.0, 0.0, SpectralField::unit(3, 1)}}};
  const auto p = make_manufactured(a, SpectralOperator(3), u, NonlinearityDescriptor::zero());
  for (const double t : {0.1, 0.5, 1.0, 2.0}) {
    const double want = 2.0 * std::pow(t, 2.0 - a) / specfun::gamma_fn(3.0 - a) + (1.0 + t * t);
    CHECK(p.f.value(t).mode(1) == doctest::Approx(want).epsilon(1e-13));
    CHECK(std::abs(p.f.value(t).mode(2)) < 1e-15);
    const double dwant = 2.0 * (2.0 - a) * std::pow(t, 1.0 - a) / specfun::gamma_fn(3.0 - a) + 2 * t;
    CHECK(p.f.derivative(t).mode(1) == doctest::Approx(dwant).epsilon(1e-12));
  }
  CHECK(p.x == SpectralField::unit(3, 1));
  CHECK(p.y.coeffs.isZero());
}

TEST_CASE("make_manufactured: zero trajectory gives zero forcing") {
  const ModalTrajectory u{1.5, {}};
  for (const auto& h : {NonlinearityDescriptor::cubic(), NonlinearityDescriptor::sine(),
                        NonlinearityDescriptor::linear_memory({2.0, 1.0})}) {
    const auto p = make_manufactured(1.5, SpectralOperator(4), u, h);
    for (const double t : {0.0, 0.3, 1.0}) CHECK(p.f.value(t).coeffs.isZero());
  }
}

TEST_CASE("make_manufactured: rejects trajectories without a closed-form Caputo derivative") {
  const ModalTrajectory half{1.5, {Term{Term::Profile::Monomial, 0.5, 0.0, SpectralField::unit(2, 1)}}};
  CHECK_THROWS_AS(make_manufactured(1.5, SpectralOperator(2), half, {}), std::invalid_argument);
  const ModalTrajectory rl{
      1.5, {Term{Term::Profile::RiemannLiouvilleFamily, 0.0, -1.0, SpectralField::unit(2, 1)}}};
  CHECK_THROWS_AS(make_manufactured(1.5, SpectralOperator(2), rl, {}), std::invalid_argument);
}

TEST_CASE("manufactured family trajectory needs no forcing") {
  // u* = C(t) e_1 + S(t) e_2 solves the homogeneous linear problem
  const ModalTrajectory u{1.5,
                          {Term{Term::Profile::CosineFamily, 0.0, -1.0, SpectralField::unit(3, 1)},
                           Term{Term::Profile::SineFamily, 0.0, -4.0, SpectralField::unit(3, 2)}}};
  const auto p = make_manufactured(1.5, SpectralOperator(3), u, {});
  for (const double t : {0.2, 0.7, 1.3}) CHECK(p.f.value(t).norm() < 1e-12);
}

TEST_CASE("nonlinear round trip recovers u*") {
  const auto u = t_squared_mode2(4);
  const auto p = make_manufactured(1.5, SpectralOperator(4), u, NonlinearityDescriptor::cubic());
  const auto r = picard_solve(p, TimeGrid(0.5, 256));
  CHECK(r.converged);
  CHECK(r.iterations <= 50);
  CHECK(sup_beta_error(r, u, 0.5) <= 5e-3);
}

TEST_CASE("converged solutions pass an independent fixed-point recheck") {
  const auto u = t_squared_mode2(4);
  const PicardSettings s{1e-9, 200, 1.0};
  for (const auto& h : {NonlinearityDescriptor::cubic(), NonlinearityDescriptor::sine({0.5, 1.0}),
                        NonlinearityDescriptor::linear_memory({1.0, 2.0})}) {
    const auto p = make_manufactured(1.5, SpectralOperator(4), u, h);
    const TimeGrid g(0.5, 128);
    const auto r = picard_solve(p, g, s);
    REQUIRE(r.converged);
    CHECK(r.fixed_point_residual <= s.tol);
    const auto q = apply_fixed_point_map(p, g, r.trajectory);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      worst = std::max(worst, (q[i] - r.trajectory[i]).beta_norm(p.beta));
    }
    CHECK(worst <= 2 * s.tol);
  }
}

TEST_CASE("initial conditions: exact value and difference-quotient slope") {
  // u(h) - x - h y = O(h^alpha) from A x + f(0), O(h^{alpha+1}) otherwise, so
  // the slope error decays like h^{alpha-1} in general and at first order
  // when x = 0.
  SpectralField x = SpectralField::zero(4);
  x.coeffs << 0.5, 0.0, -1.0, 0.0;
  SpectralField y = SpectralField::zero(4);
  y.coeffs << 0.0, 2.0, 0.0, 1.0;
  for (const bool with_x : {true, false}) {
    auto p = linear_problem(4, with_x ? x : SpectralField::zero(4), y);
    p.h = NonlinearityDescriptor::sine();
    const double expected_order = with_x ? p.alpha - 1.0 : 1.0;
    double previous = 0.0;
    for (const std::size_t n : {64u, 128u, 256u}) {
      const TimeGrid g(1.0, n);
      const auto r = picard_solve(p, g);
      CHECK(r.trajectory[0] == p.x);
      const double slope_err = ((r.trajectory[1] - r.trajectory[0]) * (1.0 / g.step()) - y).norm();
      if (previous > 0.0) CHECK(std::log2(previous / slope_err) >= expected_order - 0.1);
      previous = slope_err;
    }
  }
}

TEST_CASE("max_excursion tracks the beta-distance from x") {
  const auto p = linear_problem(2, SpectralField::unit(2, 1), SpectralField::zero(2));
  const TimeGrid g(1.0, 64);
  const auto r = linear_mild_solution(p, g);
  double m = 0.0;
  for (const auto& u : r.trajectory) m = std::max(m, (u - p.x).beta_norm(0.5));
  CHECK(r.max_excursion == m);
  CHECK(r.res_fp.size() == g.size());
  CHECK(r.res_volterra.size() == g.size());
}

TEST_CASE("property: linearity of the mild solution in the data") {
  std::mt19937_64 rng(20240611);
  std::normal_distribution<double> d;
  const TimeGrid g(1.0, 64);
  for (int trial = 0; trial < 10; ++trial) {
    auto rand_field = [&] {
      SpectralField f = SpectralField::zero(5);
      for (std::size_t k = 1; k <= 5; ++k) f.mode(k) = d(rng);
      return f;
    };
    const auto x1 = rand_field();
    const auto x2 = rand_field();
    const auto y1 = rand_field();
    const auto y2 = rand_field();
    const double a = d(rng);
    const auto r1 = linear_mild_solution(linear_problem(5, x1, y1), g);
    const auto r2 = linear_mild_solution(linear_problem(5, x2, y2), g);
    const auto r = linear_mild_solution(linear_problem(5, x1 + a * x2, y1 + a * y2), g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK((r.trajectory[i] - r1.trajectory[i] - a * r2.trajectory[i]).coeffs.lpNorm<Eigen::Infinity>() <
            1e-11 * (1 + std::abs(a)));
    }
  }
}

TEST_CASE("property: modes decouple in the linear problem") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(1, 6);
  const TimeGrid g(1.0, 64);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t m = pick(rng);
    const auto r = linear_mild_solution(
        linear_problem(6, SpectralField::unit(6, m), SpectralField::zero(6)), g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t k = 1; k <= 6; ++k) {
        if (k != m) CHECK(r.trajectory[i].mode(k) == 0.0);
      }
    }
  }
}

TEST_CASE("ProblemSpec::validate") {
  auto p = linear_problem(3, SpectralField::unit(3, 1), SpectralField::zero(3));
  CHECK_NOTHROW(p.validate());
  p.alpha = 2.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.alpha = 1.5;
  p.beta = 1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.beta = 0.5;
  p.x = SpectralField::zero(2);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
