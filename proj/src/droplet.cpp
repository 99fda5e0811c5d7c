#include "cgas/droplet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cgas/errors.hpp"

namespace cgas {

namespace {

constexpr double kDiscProbe = 1e-8;
constexpr double kTauFloor = 1e-12;
constexpr int kMaxBisections = 200;

double rq1(const RadialPotential& p, double r) { return r * p.q(r, 1); }

bool is_disc(const RadialPotential& p) { return rq1(p, kDiscProbe) > 0.0; }

double find_root(const RadialPotential& p, double tau) {
  const double target = 2.0 * tau;
  const auto support = p.support_radius();

  double lo = 1e-12;
  if (support) lo = std::min(lo, 1e-12 * *support);
  while (rq1(p, lo) - target >= 0.0) {
    lo *= 1e-3;
    if (lo < 1e-300) throw InvalidPotential("solve_r_tau: no lower bracket for tau=" + std::to_string(tau));
  }

  // Upper bracket; the hard edge counts as r q' = +infinity.
  double hi = 1.0;
  while (true) {
    if (support && hi >= *support) {
      hi = *support;
      break;
    }
    if (rq1(p, hi) - target > 0.0) break;
    lo = std::max(lo, hi);
    hi *= 2.0;
    if (!std::isfinite(hi)) throw InvalidPotential("solve_r_tau: no upper bracket for tau=" + std::to_string(tau));
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  int steps = 0;
  while (hi - lo > 4.0 * eps * hi) {
    if (++steps > kMaxBisections) throw SolverError("solve_r_tau: bisection did not converge");
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (rq1(p, mid) - target > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  double r = 0.5 * (lo + hi);

  // Newton polish on f(r) = r q'(r) - 2 tau, f' = 4 r Delta Q.
  for (int k = 0; k < 3; ++k) {
    const double f = rq1(p, r) - target;
    const double fp = 4.0 * r * laplacian(p, r);
    if (!(fp > 0.0)) break;
    const double next = r - f / fp;
    if (!(next > lo * 0.5) || !p.in_support(next)) break;
    if (std::abs(rq1(p, next) - target) >= std::abs(f)) break;
    r = next;
  }
  return r;
}

}  // namespace

const char* to_string(DropletKind kind) { return kind == DropletKind::disc ? "disc" : "annulus"; }

double critical_radius(const RadialPotential& p, double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("solve_r_tau: tau must be >= 0");
  if (tau == 0.0 && is_disc(p)) return 0.0;
  return find_root(p, tau);
}

double solve_r_tau(const RadialPotential& p, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("solve_r_tau: tau must lie in [0, 1]");
  return critical_radius(p, tau);
}

Droplet droplet_of(const RadialPotential& p) {
  Droplet d;
  d.kind = is_disc(p) ? DropletKind::disc : DropletKind::annulus;
  d.r0 = d.kind == DropletKind::disc ? 0.0 : find_root(p, 0.0);
  d.r1 = find_root(p, 1.0);
  if (!(d.r0 < d.r1)) throw InvalidPotential("droplet: r0 >= r1");

  double a = std::max(0.9 * d.r0, 1e-6);
  double b = 1.1 * d.r1;
  if (const auto s = p.support_radius()) b = std::min(b, std::nextafter(*s, 0.0));
  constexpr int grid = 64;
  for (int i = 0; i <= grid; ++i) {
    const double r = a + (b - a) * i / grid;
    const double dq = laplacian(p, r);
    if (!(dq > 0.0))
      throw InvalidPotential("potential is not strictly subharmonic at r=" + std::to_string(r));
  }
  return d;
}

double dr_dtau(const RadialPotential& p, double tau) {
  if (is_disc(p) && tau < kTauFloor)
    throw DomainError("dr_dtau: tau below 1e-12 for a disc droplet");
  const double r = solve_r_tau(p, tau);
  return 1.0 / (2.0 * r * laplacian(p, r));
}

}  // namespace cgas
