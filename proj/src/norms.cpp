#include "cgas/norms.hpp"

#include <cmath>
#include <string>

#include "cgas/droplet.hpp"
#include "cgas/equilibrium.hpp"
#include "cgas/errors.hpp"
#include "cgas/special_fn.hpp"

namespace cgas {

namespace {

void check_query(const NormQuery& nq) {
  if (nq.N < 1) throw DomainError("norm: N must be >= 1");
  if (nq.j < 0) throw DomainError("norm: j must be >= 0");
}

}  // namespace

double log_norm_exact(const RadialPotential& p, const NormQuery& nq, const QuadOptions& opt) {
  check_query(nq);
  const double s = nq.weight_scale();
  const double tau = nq.tau();
  const double r_star = critical_radius(p, tau);
  const auto support = p.support_radius();

  // Peak value; for a disc at j = 0 the peak is at the origin and any
  // nearby value of q serves as the shift.
  double r_ref = r_star;
  if (r_ref == 0.0) r_ref = 1e-8 * solve_r_tau(p, 1.0);
  const double v_min = v_tau(p, tau, r_ref);
  auto excess = [&](double r) { return s * (v_tau(p, tau, r) - v_min); };
  auto integrand = [&](double r) { return 2.0 * r * std::exp(-excess(r)); };

  const double cutoff = 40.0 + std::log(s);
  const double dq = laplacian(p, r_ref);
  double sigma = 1.0 / std::sqrt(s * 4.0 * dq);
  if (!std::isfinite(sigma) || !(sigma > 0.0)) sigma = 1e-3 * std::max(r_ref, 1e-3);

  // Outer cutoff: double the offset until the excess clears the cutoff,
  // then bisect the last step.
  double r_hi;
  {
    double step = sigma;
    double inside = r_star;
    while (true) {
      double cand = r_star + step;
      if (support && cand >= *support) {
        r_hi = *support;
        break;
      }
      if (excess(cand) >= cutoff) {
        for (int k = 0; k < 60 && cand - inside > 1e-3 * sigma; ++k) {
          const double mid = 0.5 * (inside + cand);
          if (excess(mid) >= cutoff)
            cand = mid;
          else
            inside = mid;
        }
        r_hi = cand;
        break;
      }
      inside = cand;
      step *= 2.0;
      if (!std::isfinite(step)) throw IntegrationError("norm: no outer cutoff");
    }
  }

  double r_lo = 0.0;
  if (r_star > 0.0) {
    double step = sigma;
    double inside = r_star;
    while (true) {
      double cand = r_star - step;
      if (cand <= 0.0) {
        r_lo = 0.0;
        break;
      }
      if (excess(cand) >= cutoff) {
        for (int k = 0; k < 60 && inside - cand > 1e-3 * sigma; ++k) {
          const double mid = 0.5 * (inside + cand);
          if (excess(mid) >= cutoff)
            cand = mid;
          else
            inside = mid;
        }
        r_lo = cand;
        break;
      }
      inside = cand;
      step *= 2.0;
    }
  }

  QuadOptions o = opt;
  o.initial_panels = std::max(o.initial_panels, 16);
  const QuadResult res = integrate(integrand, r_lo, r_hi, o);
  if (!(res.value > 0.0))
    throw IntegrationError("norm: non-positive integral for N=" + std::to_string(nq.N) +
                           " j=" + std::to_string(nq.j));
  return -s * v_min + std::log(res.value);
}

double log_norm_laplace(const RadialPotential& p, const NormQuery& nq) {
  check_query(nq);
  const double s = nq.weight_scale();
  const double tau = nq.tau();
  const double r = critical_radius(p, tau);
  if (!(r > 0.0)) throw DomainError("norm_laplace: critical point at the origin (disc, j = 0)");
  const double dq = laplacian(p, r);
  constexpr double two_pi = 6.28318530717958647692;
  return -s * v_tau(p, tau, r) + 0.5 * std::log(two_pi * r * r / (s * dq)) +
         std::log1p(b1(p, r) / s);
}

double log_norm_lowdeg(const RadialPotential& p, const NormQuery& nq) {
  check_query(nq);
  const Droplet d = droplet_of(p);
  if (d.kind != DropletKind::disc) throw DomainError("norm_lowdeg: requires a disc droplet");
  const double s = nq.weight_scale();
  const double q0 = q_at_origin(p, d.r1);
  const double q2 = q2_at_origin(p, d.r1);
  if (!(q2 > 0.0) || !std::isfinite(q2))
    throw DomainError("norm_lowdeg: q''(0) must be positive and finite");
  return -s * q0 - double(nq.j + 1) * std::log(s * q2 / 2.0) + ln_factorial(nq.j);
}

long high_degree_threshold(long N, Ensemble ensemble) {
  const double m = std::ceil(std::pow(double(N), 1.0 / 6.0));
  return static_cast<long>(ensemble == Ensemble::normal ? m : 2.0 * m);
}

double log_norm_highdeg(const RadialPotential& p, const NormQuery& nq) {
  check_query(nq);
  const Droplet d = droplet_of(p);
  if (d.kind != DropletKind::disc) throw DomainError("norm_highdeg: requires a disc droplet");
  if (nq.j < high_degree_threshold(nq.N, nq.ensemble))
    throw DomainError("norm_highdeg: j below N^(1/6)");
  return log_norm_laplace(p, nq);
}

}  // namespace cgas
