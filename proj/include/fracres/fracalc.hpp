#pragma once

// Grid-based fractional calculus on a uniform partition of [0, T]:
// Riemann-Liouville integral J^alpha, Riemann-Liouville derivative D^alpha,
// Caputo derivative, and a truncated Laplace transform.
//
// GridFunction is templated over its value type so the same kernels serve
// scalars (double), spectral fields and small dense matrices. A value type
// only needs copy, `+=`, `-`, and multiplication by a double.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fracres {

/// Uniform nodes t_i = i T / n_steps, i = 0..n_steps.
class TimeGrid {
 public:
  TimeGrid(double horizon, std::size_t n_steps);

  double horizon() const { return horizon_; }
  std::size_t n_steps() const { return n_steps_; }
  std::size_t size() const { return n_steps_ + 1; }
  double step() const { return horizon_ / static_cast<double>(n_steps_); }
  /// t_i; t_0 is exactly 0 and t_{n_steps} exactly T.
  double node(std::size_t i) const;

  /// Same horizon, twice the steps.
  TimeGrid refined() const { return TimeGrid(horizon_, 2 * n_steps_); }

  bool operator==(const TimeGrid&) const = default;

 private:
  double horizon_;
  std::size_t n_steps_;
};

template <class V>
struct GridFunction {
  TimeGrid grid;
  std::vector<V> values;

  GridFunction(TimeGrid g, std::vector<V> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size()) {
      throw std::invalid_argument("GridFunction: one value per node required");
    }
  }

  const V& operator[](std::size_t i) const { return values[i]; }
  V& operator[](std::size_t i) { return values[i]; }
  std::size_t size() const { return values.size(); }
};

template <class F>
auto sample(const TimeGrid& grid, F&& f) {
  using V = std::decay_t<decltype(f(0.0))>;
  std::vector<V> v;
  v.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v.push_back(f(grid.node(i)));
  return GridFunction<V>(grid, std::move(v));
}

/// Product-trapezoidal weights for J^alpha on a uniform grid: the data are
/// interpolated linearly on each subinterval and integrated exactly against
/// g_alpha(t_n - s). J^alpha u(t_n) ~ sum_j weight(n, j) u_j.
class ProductTrapezoid {
 public:
  ProductTrapezoid(double alpha, const TimeGrid& grid);

  double alpha() const { return alpha_; }
  const TimeGrid& grid() const { return grid_; }

  double weight(std::size_t n, std::size_t j) const {
    if (j == n) return scale_;
    if (j == 0) return scale_ * start_[n];
    return scale_ * interior_[n - j];
  }

  /// sum_j weight(n, j) u_j for any value type.
  template <class V, class Access>
  V apply_at(std::size_t n, Access&& u) const {
    V acc = u(0) * 0.0;
    if (n == 0) return acc;
    acc += u(0) * weight(n, 0);
    for (std::size_t j = 1; j < n; ++j) acc += u(j) * (scale_ * interior_[n - j]);
    acc += u(n) * scale_;
    return acc;
  }

 private:
  double alpha_;
  TimeGrid grid_;
  double scale_;                 // h^alpha / Gamma(alpha + 2)
  std::vector<double> start_;    // endpoint coefficient for j = 0, by n
  std::vector<double> interior_; // coefficient by distance n - j
};

/// J^alpha u at every node (0 at t_0).
template <class V>
GridFunction<V> rl_integral(double alpha, const GridFunction<V>& u) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("rl_integral: alpha must be positive");
  }
  const ProductTrapezoid w(alpha, u.grid);
  std::vector<V> out;
  out.reserve(u.size());
  auto at = [&](std::size_t j) -> const V& { return u.values[j]; };
  for (std::size_t n = 0; n < u.size(); ++n) out.push_back(w.apply_at<V>(n, at));
  return GridFunction<V>(u.grid, std::move(out));
}

/// Output of the grid derivatives. Interior nodes carry second-order centered
/// differences; nodes 0 and n_steps use one-sided stencils and are less
/// accurate.
template <class V>
struct GridDerivative {
  GridFunction<V> values;
  std::size_t first_interior;
  std::size_t last_interior;
};

/// Second difference quotient of samples, one-sided at both ends.
template <class V>
GridFunction<V> second_difference(const GridFunction<V>& v) {
  const std::size_t n = v.grid.n_steps();
  if (n < 4) {
    throw std::invalid_argument("second_difference: at least 4 steps required");
  }
  const double inv_h2 = 1.0 / (v.grid.step() * v.grid.step());
  std::vector<V> out;
  out.reserve(v.size());
  out.push_back((v[0] * 2.0 - v[1] * 5.0 + v[2] * 4.0 - v[3]) * inv_h2);
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back((v[i + 1] - v[i] * 2.0 + v[i - 1]) * inv_h2);
  }
  out.push_back((v[n] * 2.0 - v[n - 1] * 5.0 + v[n - 2] * 4.0 - v[n - 3]) * inv_h2);
  return GridFunction<V>(v.grid, std::move(out));
}

/// D^alpha u = d^2/dt^2 J^{2-alpha} u for alpha in (1, 2].
template <class V>
GridDerivative<V> rl_derivative(double alpha, const GridFunction<V>& u) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw std::invalid_argument("rl_derivative: alpha must lie in (1,2]");
  }
  if (u.grid.n_steps() < 4) {
    throw std::invalid_argument("rl_derivative: at least 4 steps required");
  }
  GridFunction<V> d = alpha == 2.0 ? second_difference(u)
                                   : second_difference(rl_integral(2.0 - alpha, u));
  return {std::move(d), 1, u.grid.n_steps() - 1};
}

/// D^alpha applied to u(t) - u0 - du0 t. u0 and du0 are data, not estimates.
template <class V>
GridDerivative<V> caputo_derivative(double alpha, const GridFunction<V>& u,
                                    const V& u0, const V& du0) {
  std::vector<V> shifted;
  shifted.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    shifted.push_back(u[i] - u0 - du0 * u.grid.node(i));
  }
  return rl_derivative(alpha, GridFunction<V>(u.grid, std::move(shifted)));
}

template <class V>
struct LaplaceEstimate {
  V value;
  /// Analytic bound M e^{-(s-omega)T} / (s-omega) on the neglected tail.
  double truncation_bound;
};

namespace detail {
// (1 - e^{-x}) / x and (1 - e^{-x}(1 + x)) / x^2 without cancellation.
double laplace_moment0(double x);
double laplace_moment1(double x);
}  // namespace detail

/// Truncated Laplace transform over [0, T]: u is interpolated linearly per
/// subinterval and the exponential is integrated exactly against it.
template <class V>
LaplaceEstimate<V> numeric_laplace(const GridFunction<V>& u, double s,
                                   double bound_m, double bound_omega) {
  if (!(s > bound_omega)) {
    throw std::invalid_argument(
        "numeric_laplace: s must exceed the growth bound omega");
  }
  const TimeGrid& g = u.grid;
  const double h = g.step();
  const double x = s * h;
  const double m0 = h * detail::laplace_moment0(x);
  const double m1 = h * detail::laplace_moment1(x);  // includes the 1/h of the slope
  V acc = u[0] * 0.0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) {
    const double e = std::exp(-s * g.node(j));
    acc += (u[j] * (m0 - m1) + u[j + 1] * m1) * e;
  }
  const double gap = s - bound_omega;
  return {acc, bound_m * std::exp(-gap * g.horizon()) / gap};
}

}  // namespace fracres
