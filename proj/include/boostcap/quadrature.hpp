#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <vector>

#include "boostcap/errors.hpp"

namespace boostcap {

struct QuadratureConfig {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;

  // Throws DomainError unless tolerances are positive (abs_tol may be 0 when
  // rel_tol > 0) and max_subdivisions ≥ 1.
  void validate() const;

  static QuadratureConfig verification() { return {0.0, 1e-10, 2000}; }
  static QuadratureConfig sweep() { return {0.0, 1e-8, 2000}; }
};

template <std::size_t Dim>
struct QuadratureResult {
  std::array<double, Dim> value{};
  std::array<double, Dim> error{};
  int subdivisions = 0;
};

namespace detail {

// 21-point Gauss-Kronrod rule with the embedded 10-point Gauss rule.
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208136266780, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t Dim>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::array<double, Dim> value{};
  std::array<double, Dim> error{};
  double worst = 0.0;  // max component error, the bisection priority
};

template <std::size_t Dim, class F>
Panel<Dim> gauss_kronrod_21(F& f, double a, double b) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kUnderflow = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<std::array<double, Dim>, 21> fv;
  fv[10] = f(center);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    fv[j] = f(center - dx);
    fv[20 - j] = f(center + dx);
  }

  Panel<Dim> panel{a, b, {}, {}, 0.0};
  for (std::size_t k = 0; k < Dim; ++k) {
    double kronrod = kKronrodWeights[10] * fv[10][k];
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    for (int j = 0; j < 10; ++j) {
      const double pair = fv[j][k] + fv[20 - j][k];
      kronrod += kKronrodWeights[j] * pair;
      abs_sum += kKronrodWeights[j] * (std::abs(fv[j][k]) + std::abs(fv[20 - j][k]));
      if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[10] * std::abs(fv[10][k] - mean);
    for (int j = 0; j < 10; ++j)
      asc += kKronrodWeights[j] * (std::abs(fv[j][k] - mean) + std::abs(fv[20 - j][k] - mean));

    const double width = std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    asc *= width;
    abs_sum *= width;
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    if (abs_sum > kUnderflow / (50.0 * kEps)) err = std::max(50.0 * kEps * abs_sum, err);
    panel.value[k] = kronrod * half;
    panel.error[k] = err;
    panel.worst = std::max(panel.worst, err);
  }
  return panel;
}

template <std::size_t Dim>
double inf_norm(const std::array<double, Dim>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod quadrature of a vector-valued integrand.
//
// `points` is the ordered list [a, x1, ..., b]; every listed point starts a
// new panel. The worst panel (by max-component error) is bisected until
//   max_k error_k ≤ max(abs_tol, rel_tol · max_k |value_k|),
// so all components share one mesh and one tolerance scale. Throws
// ConvergenceError when max_subdivisions bisections do not suffice.
template <std::size_t Dim, class F>
QuadratureResult<Dim> integrate(F&& f, std::span<const double> points,
                                const QuadratureConfig& cfg) {
  cfg.validate();
  if (points.size() < 2) throw DomainError("integrate: need at least two points");

  using Panel = detail::Panel<Dim>;
  auto by_error = [](const Panel& x, const Panel& y) { return x.worst < y.worst; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> queue(by_error);
  std::vector<Panel> frozen;  // too narrow to bisect further

  std::array<double, Dim> total{};
  std::array<double, Dim> total_err{};
  auto accumulate = [&](const Panel& p, double sign) {
    for (std::size_t k = 0; k < Dim; ++k) {
      total[k] += sign * p.value[k];
      total_err[k] += sign * p.error[k];
    }
  };

  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i + 1] > points[i])) continue;
    Panel p = detail::gauss_kronrod_21<Dim>(f, points[i], points[i + 1]);
    accumulate(p, 1.0);
    queue.push(p);
  }

  // Re-sum from the panels themselves so the running totals do not drift
  // and the final value does not depend on the bisection history.
  auto resum = [&]() {
    total.fill(0.0);
    total_err.fill(0.0);
    std::vector<Panel> all(frozen);
    auto copy = queue;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : all) accumulate(p, 1.0);
  };
  auto converged = [&]() {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * detail::inf_norm(total));
    return detail::inf_norm(total_err) <= tol;
  };

  int subdivisions = 0;
  while (true) {
    if (converged()) {
      resum();
      if (converged()) break;
    }
    if (queue.empty() || subdivisions >= cfg.max_subdivisions) {
      resum();
      if (converged()) break;
      std::ostringstream msg;
      msg << "adaptive quadrature did not converge after " << subdivisions
          << " subdivisions (error bound " << detail::inf_norm(total_err) << ")";
      throw ConvergenceError(msg.str(), total[0], detail::inf_norm(total_err));
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max({std::abs(worst.a), std::abs(worst.b), 1e-300});
    if (worst.b - worst.a < 64.0 * std::numeric_limits<double>::epsilon() * scale) {
      frozen.push_back(worst);
      continue;
    }
    accumulate(worst, -1.0);
    Panel left = detail::gauss_kronrod_21<Dim>(f, worst.a, mid);
    Panel right = detail::gauss_kronrod_21<Dim>(f, mid, worst.b);
    accumulate(left, 1.0);
    accumulate(right, 1.0);
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  QuadratureResult<Dim> out;
  out.value = total;
  out.error = total_err;
  out.subdivisions = subdivisions;
  return out;
}

// Scalar convenience wrapper.
template <class F>
QuadratureResult<1> integrate_scalar(F&& f, std::span<const double> points,
                                     const QuadratureConfig& cfg) {
  auto wrapped = [&f](double x) { return std::array<double, 1>{f(x)}; };
  return integrate<1>(wrapped, points, cfg);
}

}  // namespace boostcap
