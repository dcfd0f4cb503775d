#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "fracres/fracalc.hpp"
#include "fracres/specfun.hpp"

using namespace fracres;
using specfun::gamma_fn;

namespace {

template <class E>
double max_error(const GridFunction<double>& got, E&& exact, std::size_t from = 0,
                 std::size_t to = static_cast<std::size_t>(-1)) {
  double e = 0.0;
  for (std::size_t i = from; i < got.size() && i <= to; ++i) {
    e = std::max(e, std::abs(got[i] - exact(got.grid.node(i))));
  }
  return e;
}

}  // namespace

TEST_CASE("TimeGrid nodes") {
  const TimeGrid g(3.0, 7);
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(7) == 3.0);
  CHECK(g.size() == 8);
  CHECK(g.step() == doctest::Approx(3.0 / 7));
  CHECK_THROWS(TimeGrid(0.0, 4));
  CHECK_THROWS(TimeGrid(1.0, 0));
}

TEST_CASE("rl_integral: alpha = 1 of a constant is exact") {
  const TimeGrid g(2.0, 50);
  const auto j = rl_integral(1.0, sample(g, [](double) { return 1.0; }));
  CHECK(max_error(j, [](double t) { return t; }) < 1e-14);
  CHECK_THROWS_AS(rl_integral(0.0, j), std::invalid_argument);
}

TEST_CASE("rl_integral: J^0.5 g_0.5 approaches 1 away from the origin") {
  // g_0.5 is infinite at 0; the first sample is set to 0 and the lost mass
  // shrinks like h^0.5.
  const auto err = [](std::size_t n) {
    const TimeGrid g(1.0, n);
    std::vector<double> v(g.size(), 0.0);
    for (std::size_t i = 1; i < g.size(); ++i) v[i] = specfun::g_kernel(0.5, g.node(i));
    return max_error(rl_integral(0.5, GridFunction<double>(g, v)), [](double) { return 1.0; },
                     n / 2);
  };
  const double e1 = err(256);
  const double e2 = err(1024);
  CHECK(e2 < 3e-2);
  CHECK(e1 / e2 > 1.7);
}

TEST_CASE("rl_integral: monomial t^2 at alpha = 1.5") {
  const TimeGrid g(1.0, 256);
  const auto j = rl_integral(1.5, sample(g, [](double t) { return t * t; }));
  CHECK(max_error(j, [](double t) { return 2.0 * std::pow(t, 3.5) / gamma_fn(4.5); }) < 1e-5);
}

TEST_CASE("rl_integral: order 2 for t^3") {
  const auto err = [](std::size_t n) {
    const TimeGrid g(1.0, n);
    const auto j = rl_integral(1.5, sample(g, [](double t) { return t * t * t; }));
    return max_error(j, [](double t) { return 6.0 * std::pow(t, 4.5) / gamma_fn(5.5); });
  };
  const double ratio = err(128) / err(256);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("rl_integral works on vector values") {
  const TimeGrid g(1.0, 64);
  std::vector<Eigen::VectorXd> v;
  for (std::size_t i = 0; i < g.size(); ++i) v.push_back(Eigen::Vector2d(1.0, g.node(i)));
  const auto j = rl_integral(1.0, GridFunction<Eigen::VectorXd>(g, v));
  CHECK(j[64](0) == doctest::Approx(1.0));
  CHECK(j[64](1) == doctest::Approx(0.5));
}

TEST_CASE("rl_derivative examples") {
  const TimeGrid g(1.0, 1024);
  const auto d1 = rl_derivative(1.5, sample(g, [](double t) { return t * t; }));
  CHECK(max_error(d1.values, [](double t) { return 2.0 * std::sqrt(t) / gamma_fn(1.5); },
                  8, d1.last_interior) < 1e-3);

  const auto d2 = rl_derivative(2.0, sample(g, [](double t) { return t * t * t; }));
  CHECK(max_error(d2.values, [](double t) { return 6.0 * t; }, 1, d2.last_interior) < 1e-9);

  const auto d3 = rl_derivative(1.5, sample(g, [](double t) { return t * t * t; }));
  CHECK(max_error(d3.values, [](double t) { return 6.0 * std::pow(t, 1.5) / gamma_fn(2.5); }, 8,
                  d3.last_interior) < 1e-4);

  CHECK_THROWS_AS(rl_derivative(1.0, d3.values), std::invalid_argument);
  CHECK_THROWS_AS(rl_derivative(1.5, sample(TimeGrid(1.0, 3), [](double t) { return t; })),
                  std::invalid_argument);
}

TEST_CASE("caputo_derivative examples") {
  const TimeGrid g(1.0, 512);
  const auto affine = caputo_derivative(1.5, sample(g, [](double t) { return 3.0 + 2.0 * t; }),
                                        3.0, 2.0);
  CHECK(max_error(affine.values, [](double) { return 0.0; }, 1, affine.last_interior) < 1e-9);

  const auto sq = caputo_derivative(1.5, sample(g, [](double t) { return t * t; }), 0.0, 0.0);
  CHECK(max_error(sq.values, [](double t) { return 2.0 * std::sqrt(t) / gamma_fn(1.5); }, 8,
                  sq.last_interior) < 2e-3);

  const auto c = caputo_derivative(2.0, sample(g, [](double t) { return std::cos(t); }), 1.0, 0.0);
  CHECK(max_error(c.values, [](double t) { return -std::cos(t); }, 1, c.last_interior) < 1e-5);
}

TEST_CASE("caputo equals rl_derivative of the affine-corrected samples, bit for bit") {
  const TimeGrid g(1.0, 128);
  const auto u = sample(g, [](double t) { return std::exp(t) + t * t; });
  const auto c = caputo_derivative(1.7, u, 1.0, 1.0);
  const auto r = rl_derivative(1.7, sample(g, [&](double t) {
    return (std::exp(t) + t * t) - 1.0 - 1.0 * t;
  }));
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(c.values[i] == r.values[i]);
}

TEST_CASE("caputo is a left inverse of J^alpha at first order or better") {
  const auto err = [](std::size_t n) {
    const TimeGrid g(1.0, n);
    const auto u = sample(g, [](double t) { return std::sin(2.0 * t); });
    const auto d = caputo_derivative(1.5, rl_integral(1.5, u), 0.0, 0.0);
    return max_error(d.values, [](double t) { return std::sin(2.0 * t); }, 1, d.last_interior);
  };
  const double e1 = err(256);
  const double e2 = err(512);
  CHECK(e2 < e1);
  CHECK(std::log2(e1 / e2) >= 0.9);
}

TEST_CASE("numeric_laplace examples") {
  const TimeGrid g(40.0, 40000);
  const auto one = numeric_laplace(sample(g, [](double) { return 1.0; }), 1.0, 1.0, 0.0);
  CHECK(std::abs(one.value - 1.0) <= 1e-10 + one.truncation_bound);
  const auto ex = numeric_laplace(sample(g, [](double t) { return std::exp(-t); }), 1.0, 1.0, 0.0);
  CHECK(ex.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(ex.truncation_bound == doctest::Approx(std::exp(-40.0)));
  CHECK_THROWS_AS(numeric_laplace(sample(g, [](double) { return 1.0; }), 1.0, 1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("laplace moments are accurate near zero") {
  for (const double x : {1e-12, 1e-8, 1e-4, 0.1, 1.0, 30.0}) {
    CHECK(detail::laplace_moment0(x) == doctest::Approx(-std::expm1(-x) / x).epsilon(1e-13));
  }
  CHECK(detail::laplace_moment1(1e-10) == doctest::Approx(0.5).epsilon(1e-9));
}
