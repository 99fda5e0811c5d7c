#include <cmath>
#include <vector>

#include "doctest.h"

#include "cgas/droplet.hpp"
#include "cgas/errors.hpp"
#include "cgas/partition.hpp"

using namespace cgas;

TEST_CASE("solve_r_tau examples") {
  CHECK(solve_r_tau(RadialPotential::ginibre(1), 0.25) == doctest::Approx(0.5).epsilon(1e-14));
  for (double lambda : {0.5, 1.0, 2.0, 3.5})
    for (double c : {0.5, 1.0, 4.0})
      for (double tau : {0.0, 0.1, 0.5, 1.0}) {
        const double expect = std::pow((tau + c) / lambda, 1.0 / (2.0 * lambda));
        CHECK(solve_r_tau(RadialPotential::mittag_leffler(lambda, c), tau) ==
              doctest::Approx(expect).epsilon(1e-13));
      }
  for (double alpha : {0.5, 1.0, 3.0})
    for (double R : {0.5, 1.0, 2.0})
      CHECK(solve_r_tau(RadialPotential::truncated_unitary(alpha, R), 1.0) == doctest::Approx(R).epsilon(1e-13));
  CHECK(solve_r_tau(RadialPotential::ginibre(1), 0.0) == 0.0);
  CHECK_THROWS_AS(solve_r_tau(RadialPotential::ginibre(1), 1.5), DomainError);
  CHECK_THROWS_AS(solve_r_tau(RadialPotential::ginibre(1), -0.1), DomainError);
}

TEST_CASE("droplet_of examples") {
  const Droplet ml = droplet_of(RadialPotential::mittag_leffler(1, 1));
  CHECK(ml.r0 == 1.0);
  CHECK(ml.r1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ml.kind == DropletKind::annulus);
  const Droplet g = droplet_of(RadialPotential::ginibre(1));
  CHECK(g.r0 == 0.0);
  CHECK(g.r1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.kind == DropletKind::disc);
  const Droplet tu = droplet_of(RadialPotential::truncated_unitary(1, 1));
  CHECK(tu.r0 == 0.0);
  CHECK(tu.r1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(tu.kind == DropletKind::disc);
  CHECK(droplet_of(RadialPotential::mittag_leffler(1, 0)).kind == DropletKind::disc);
}

TEST_CASE("non-subharmonic potential is rejected") {
  // q = r^2 - r^4/8 has Delta Q = 1 - r^2 changing sign inside 1.1 r1.
  Custom c;
  c.q = [](double r) { return r * r - r * r * r * r / 8.0; };
  c.derivatives[0] = [](double r) { return 2 * r - r * r * r / 2.0; };
  c.derivatives[1] = [](double r) { return 2 - 1.5 * r * r; };
  CHECK_THROWS_AS(droplet_of(RadialPotential(c)), InvalidPotential);
}

TEST_CASE("dr_dtau") {
  CHECK(dr_dtau(RadialPotential::ginibre(1), 0.25) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(dr_dtau(RadialPotential::mittag_leffler(1, 1), 1.0) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-13));
  CHECK_THROWS_AS(dr_dtau(RadialPotential::ginibre(1), 0.0), DomainError);
  CHECK(dr_dtau(RadialPotential::mittag_leffler(2, 1), 0.0) > 0.0);
  const std::vector<RadialPotential> ps = {RadialPotential::ginibre(1), RadialPotential::mittag_leffler(2, 0.5),
                                           RadialPotential::truncated_unitary(1, 1),
                                           RadialPotential::truncated_unitary(3, 2)};
  for (const auto& p : ps)
    for (double tau : {0.05, 0.3, 0.6, 0.95}) {
      const double h = 1e-5;
      const double fd = (solve_r_tau(p, tau + h) - solve_r_tau(p, tau - h)) / (2 * h);
      CHECK(std::abs(fd - dr_dtau(p, tau)) <= 1e-6 * dr_dtau(p, tau));
    }
}

TEST_CASE("monotonicity and consistency on a tau grid") {
  const std::vector<RadialPotential> ps = {RadialPotential::ginibre(1), RadialPotential::mittag_leffler(1, 1),
                                           RadialPotential::mittag_leffler(0.5, 2),
                                           RadialPotential::truncated_unitary(1, 1)};
  for (const auto& p : ps) {
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double tau = i / 1000.0;
      const double r = solve_r_tau(p, tau);
      CHECK(r > prev);
      if (r > 0.0) CHECK(std::abs(r * q_derivs(p, r, 1) - 2.0 * tau) <= 1e-12);
      prev = r;
    }
  }
}

TEST_CASE("disc r_tau near the origin") {
  for (const auto& p : {RadialPotential::truncated_unitary(1, 1), RadialPotential::truncated_unitary(2, 1.5)}) {
    const double dq0 = laplacian_at_origin(p, 1.0);
    std::vector<double> x, y;
    for (double tau = 1e-6; tau <= 1e-2; tau *= 10) {
      const double dev = std::abs(solve_r_tau(p, tau) * std::sqrt(dq0 / tau) - 1.0);
      x.push_back(std::log(tau));
      y.push_back(std::log(dev));
    }
    // deviation is O(tau) here, so certainly C sqrt(tau)
    const LinearFit f = least_squares(x, y);
    CHECK(f.slope >= 0.5);
  }
}
