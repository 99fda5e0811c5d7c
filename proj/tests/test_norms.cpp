#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "cgas/errors.hpp"
#include "cgas/norms.hpp"
#include "cgas/oracles.hpp"
#include "cgas/partition.hpp"
#include "cgas/special_fn.hpp"

using namespace cgas;

namespace {

const Ensemble kNormal = Ensemble::normal;
const Ensemble kSymp = Ensemble::symplectic;

double laplace_gap(const RadialPotential& p, long N, long j, Ensemble e) {
  return std::abs(log_norm_laplace(p, {N, j, e}) - log_norm_exact(p, {N, j, e}));
}

double median(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
  return v[v.size() / 2];
}

}  // namespace

TEST_CASE("exact norms: examples") {
  CHECK(log_norm_exact(RadialPotential::ginibre(1), {2, 1, kNormal}) ==
        doctest::Approx(std::log(0.25)).epsilon(1e-14));
  CHECK(log_norm_exact(RadialPotential::ginibre(1), {1, 1, kSymp}) ==
        doctest::Approx(std::log(0.25)).epsilon(1e-14));
}

TEST_CASE("exact norms against Gamma closed forms") {
  for (long N : {10L, 50L, 200L}) {
    for (long j = 0; j < N; ++j) {
      const double g = ln_factorial(j) - double(j + 1) * std::log(double(N));
      CHECK(std::abs(log_norm_exact(RadialPotential::ginibre(1), {N, j, kNormal}) - g) <= 1e-11);
      const auto ml = RadialPotential::mittag_leffler(1, 1);
      CHECK(std::abs(log_norm_exact(ml, {N, j, kNormal}) - ml_log_norm(1, 1, N, j, kNormal)) <= 1e-11);
      const auto ml2 = RadialPotential::mittag_leffler(0.5, 2);
      CHECK(std::abs(log_norm_exact(ml2, {N, j, kNormal}) - ml_log_norm(0.5, 2, N, j, kNormal)) <= 1e-11);
      const auto tu = RadialPotential::truncated_unitary(1, 1);
      CHECK(std::abs(log_norm_exact(tu, {N, j, kNormal}) - tu_log_norm(1, 1, N, j, kNormal)) <= 1e-11);
    }
    for (long j = 1; j < 2 * N; j += 2) {
      const auto tu = RadialPotential::truncated_unitary(2, 1.5);
      CHECK(std::abs(log_norm_exact(tu, {N, j, kSymp}) - tu_log_norm(2, 1.5, N, j, kSymp)) <= 1e-11);
      const auto ml = RadialPotential::mittag_leffler(2, 0.5);
      CHECK(std::abs(log_norm_exact(ml, {N, j, kSymp}) - ml_log_norm(2, 0.5, N, j, kSymp)) <= 1e-11);
    }
  }
}

TEST_CASE("exact norms beyond the droplet edge") {
  // j > N: the peak lies outside the droplet.
  const double g = ln_factorial(30) - 31.0 * std::log(20.0);
  CHECK(std::abs(log_norm_exact(RadialPotential::ginibre(1), {20, 30, kNormal}) - g) <= 1e-11);
}

TEST_CASE("Laplace form") {
  const auto g = RadialPotential::ginibre(1);
  // V_{1/2}(sqrt(1/2)) = 1/2 - log(1/2)/2, B1 = 1/(12 r^2) = 1/6
  const double analytic =
      -100.0 * (0.5 - 0.5 * std::log(0.5)) + 0.5 * std::log(2 * M_PI * 0.5 / 100.0) + std::log1p(1.0 / 600.0);
  CHECK(log_norm_laplace(g, {100, 50, kNormal}) == doctest::Approx(analytic).epsilon(1e-15));
  CHECK(laplace_gap(g, 100, 50, kNormal) <= 1e-5);
  CHECK(laplace_gap(RadialPotential::mittag_leffler(1, 1), 200, 100, kNormal) <= 1e-7);
  // Gaussian case: the gap is the Stirling remainder
  // 1/(12j) - 1/(360 j^3) - log(1 + 1/(12j)) ~ 1.53e-7 at j = 150.
  const double j = 150.0;
  const double stirling = 1 / (12 * j) - 1 / (360 * j * j * j) - std::log1p(1 / (12 * j));
  CHECK(std::abs(laplace_gap(g, 100, 150, kSymp) - stirling) <= 1e-10);
  CHECK_THROWS_AS(log_norm_laplace(g, {100, 0, kNormal}), DomainError);
}

TEST_CASE("Laplace error is O(N^-2)") {
  const auto ml = RadialPotential::mittag_leffler(1, 1);
  for (long N : {100L, 200L, 400L}) {
    const double ratio = laplace_gap(ml, 2 * N, N, kNormal) / laplace_gap(ml, N, N / 2, kNormal);
    INFO("N = " << N << " ratio = " << ratio);
    CHECK(ratio >= 1.0 / 8.0);
    CHECK(ratio <= 0.5);
  }
}

TEST_CASE("low-degree form") {
  const auto g = RadialPotential::ginibre(1);
  CHECK(log_norm_lowdeg(g, {100, 0, kNormal}) == doctest::Approx(-std::log(100.0)).epsilon(1e-15));
  CHECK(log_norm_exact(g, {100, 0, kNormal}) == doctest::Approx(-std::log(100.0)).epsilon(1e-14));
  CHECK(log_norm_lowdeg(g, {400, 3, kNormal}) == doctest::Approx(-4 * std::log(400.0) + std::log(6.0)).epsilon(1e-15));
  CHECK(std::abs(log_norm_lowdeg(g, {400, 3, kNormal}) - log_norm_exact(g, {400, 3, kNormal})) <= 1e-1);

  const auto tu = RadialPotential::truncated_unitary(1, 1);
  CHECK(log_norm_lowdeg(tu, {400, 2, kNormal}) ==
        doctest::Approx(-3 * std::log(400 * 1.0 / 2) + std::log(2.0)).epsilon(1e-14));
  double prev = INFINITY;
  for (long N : {100L, 400L, 1600L}) {
    const double gap = std::abs(log_norm_lowdeg(tu, {N, 2, kNormal}) - log_norm_exact(tu, {N, 2, kNormal}));
    CHECK(gap < prev);
    prev = gap;
  }
  prev = INFINITY;
  for (long N : {100L, 400L, 1600L}) {
    const double gap = std::abs(log_norm_lowdeg(tu, {N, 3, kSymp}) - log_norm_exact(tu, {N, 3, kSymp}));
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK_THROWS_AS(log_norm_lowdeg(RadialPotential::mittag_leffler(1, 1), {100, 0, kNormal}), DomainError);
}

TEST_CASE("high-degree form") {
  const auto g = RadialPotential::ginibre(1);
  const auto tu = RadialPotential::truncated_unitary(1, 1);
  auto gap = [](const RadialPotential& p, long N, long j) {
    return std::abs(log_norm_highdeg(p, {N, j, kNormal}) - log_norm_exact(p, {N, j, kNormal}));
  };
  CHECK(gap(g, 1000, 100) <= 5e-4);
  CHECK(gap(g, 1000, 500) <= 1e-5);
  CHECK(gap(tu, 1000, 800) <= 1e-5);
  CHECK(high_degree_threshold(1000, kNormal) == 4);
  CHECK(high_degree_threshold(1000, kSymp) == 8);
  CHECK_THROWS_AS(log_norm_highdeg(g, {1000, 3, kNormal}), DomainError);
  CHECK_THROWS_AS(log_norm_highdeg(RadialPotential::mittag_leffler(1, 1), {1000, 500, kNormal}), DomainError);

  // Error profile in j at fixed N decays at least like j^-3/2; the log N
  // factor is left unconstrained.
  std::vector<double> x, y;
  for (long j : {8L, 16L, 32L, 64L, 128L}) {
    x.push_back(std::log(double(j)));
    y.push_back(std::log(gap(tu, 4000, j)));
  }
  const LinearFit f = least_squares(x, y);
  INFO("slope = " << f.slope);
  CHECK(f.slope <= -1.5);
}

TEST_CASE("j -> log h_j + (j+1) log N is smooth") {
  struct Case {
    RadialPotential p;
    long N;
    Ensemble e;
    long j_from;
  };
  const std::vector<Case> cases = {
      {RadialPotential::mittag_leffler(1, 1), 200, kNormal, 0},
      {RadialPotential::mittag_leffler(0.5, 2), 200, kNormal, 0},
      {RadialPotential::ginibre(1), 200, kNormal, 20},
      {RadialPotential::truncated_unitary(1, 1), 200, kNormal, 20},
      {RadialPotential::truncated_unitary(1, 1), 200, kSymp, 40},
  };
  for (const auto& c : cases) {
    const long jmax = c.e == kNormal ? c.N : 2 * c.N;
    std::vector<double> f;
    for (long j = c.j_from; j < jmax; ++j)
      f.push_back(log_norm_exact(c.p, {c.N, j, c.e}) + double(j + 1) * std::log(double(c.N)));
    std::vector<double> d2;
    for (std::size_t i = 1; i + 1 < f.size(); ++i) d2.push_back(std::abs(f[i + 1] - 2 * f[i] + f[i - 1]));
    const double m = median(d2);
    for (double v : d2) CHECK(v <= 10.0 * m);
  }
}
