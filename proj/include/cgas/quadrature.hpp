#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cgas/errors.hpp"
#include "cgas/summation.hpp"

namespace cgas {

struct QuadOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  std::size_t max_subintervals = std::size_t{1} << 20;
  /// Number of equal panels the interval is cut into before adapting.
  int initial_panels = 1;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t subintervals = 0;
};

namespace detail {

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// 21-point Kronrod rule with the embedded 10-point Gauss rule; QUADPACK
// style error estimate.
template <class F>
Panel gk21(F& f, double a, double b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& xk = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[21];
  fv[0] = f(center);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double dx = half * xk[i];
    fv[2 * i - 1] = f(center - dx);
    fv[2 * i] = f(center + dx);
  }

  double resk = wk[0] * fv[0];
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double pair = fv[2 * i - 1] + fv[2 * i];
    resk += wk[i] * pair;
    resabs += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 1) resg += wg[(i - 1) / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < xk.size(); ++i)
    resasc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));

  resk *= half;
  resg *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 4.0 * eps * resabs);
  return {a, b, resk, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b]: the panel
/// with the largest error estimate is bisected until the summed estimate
/// drops below max(abs_tol, rel_tol * |I|). Panel sums are compensated and
/// accumulated in left-to-right order, so the result is reproducible.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw DomainError("integrate: non-finite bounds");
  if (a == b) return {};
  const int initial = std::max(1, opt.initial_panels);

  std::priority_queue<detail::Panel> active;
  std::vector<detail::Panel> done;
  const double width = (b - a) / initial;
  for (int i = 0; i < initial; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == initial) ? b : a + (i + 1) * width;
    active.push(detail::gk21(f, lo, hi));
  }

  auto totals = [&](double& value, double& error) {
    std::vector<detail::Panel> all = done;
    auto copy = active;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
    CompensatedSum v, e;
    for (const auto& p : all) {
      v += p.value;
      e += p.error;
    }
    value = v.value();
    error = e.value();
  };

  // Running sums steer the loop; the final answer is re-summed in order.
  double value = 0.0, error = 0.0;
  totals(value, error);
  std::size_t count = active.size();
  while (!active.empty() && error > std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
    if (count >= opt.max_subintervals)
      throw IntegrationError("integrate: subinterval limit reached on [" + std::to_string(a) +
                             ", " + std::to_string(b) + "]");
    detail::Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel is at floating-point resolution; accept what it has.
      done.push_back(worst);
      continue;
    }
    const detail::Panel left = detail::gk21(f, worst.a, mid);
    const detail::Panel right = detail::gk21(f, mid, worst.b);
    value += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    active.push(left);
    active.push(right);
    ++count;
  }
  totals(value, error);
  if (!std::isfinite(value)) throw IntegrationError("integrate: non-finite result");
  return {value, error, count};
}

}  // namespace cgas
