#include "cgas/equilibrium.hpp"

#include <cmath>

#include "cgas/errors.hpp"

namespace cgas {

namespace {

// Disc integrals start at eps * r1; every integrand here is O(r) or smaller
// at the origin so the dropped piece is below 1e-24.
constexpr double kDiscCut = 1e-12;

double lower_limit(const Droplet& d) {
  return d.kind == DropletKind::disc ? kDiscCut * d.r1 : d.r0;
}

template <class F>
double quad(F&& f, double a, double b, const QuadOptions& opt) {
  QuadOptions o = opt;
  o.initial_panels = std::max(o.initial_panels, 8);
  return integrate(f, a, b, o).value;
}

double dq_ratio(const RadialPotential& p, double r) { return laplacian_dr(p, r) / laplacian(p, r); }

double f_integral(const RadialPotential& p, const Droplet& d, const QuadOptions& opt) {
  return quad(
      [&](double r) {
        const double g = dq_ratio(p, r);
        return g * g * r;
      },
      lower_limit(d), d.r1, opt);
}

double energy_integral(const RadialPotential& p, const Droplet& d, const QuadOptions& opt) {
  return quad(
      [&](double r) {
        const double q1 = p.q(r, 1);
        return r * q1 * q1;
      },
      lower_limit(d), d.r1, opt);
}

double f_annulus_from(const RadialPotential& p, const Droplet& d, double integral) {
  const double r0 = d.r0, r1 = d.r1;
  return std::log(r0 * r0 * laplacian(p, r0) / (r1 * r1 * laplacian(p, r1))) / 12.0 -
         (r1 * dq_ratio(p, r1) - r0 * dq_ratio(p, r0)) / 16.0 + integral / 24.0;
}

double f_disc_from(const RadialPotential& p, const Droplet& d, double integral) {
  const double r1 = d.r1;
  return std::log(1.0 / (r1 * r1 * laplacian(p, r1))) / 12.0 - r1 * dq_ratio(p, r1) / 16.0 +
         integral / 24.0;
}

Droplet require(const RadialPotential& p, DropletKind kind, const char* what) {
  const Droplet d = droplet_of(p);
  if (d.kind != kind)
    throw DomainError(std::string(what) + ": requires a " + to_string(kind) + " droplet, got " +
                      to_string(d.kind));
  return d;
}

}  // namespace

double energy(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = droplet_of(p);
  return p.q(d.r1) - std::log(d.r1) - 0.25 * energy_integral(p, d, opt);
}

double entropy(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = droplet_of(p);
  return quad(
      [&](double r) {
        const double dq = laplacian(p, r);
        return std::log(dq) * 2.0 * r * dq;
      },
      lower_limit(d), d.r1, opt);
}

double log_potential_origin(const RadialPotential& p) {
  const Droplet d = droplet_of(p);
  const double q0 = d.kind == DropletKind::disc ? q_at_origin(p, d.r1) : p.q(d.r0);
  return -std::log(d.r1) + 0.5 * (p.q(d.r1) - q0);
}

double equilibrium_mass(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = droplet_of(p);
  return quad([&](double r) { return 2.0 * r * laplacian(p, r); }, lower_limit(d), d.r1, opt);
}

double b1(const RadialPotential& p, double r) {
  const double dq = laplacian(p, r);
  const double d1 = laplacian_dr(p, r);
  const double d2 = laplacian_dr2(p, r);
  const double dq2 = dq * dq;
  return -d2 / (32.0 * dq2) - 19.0 * d1 / (96.0 * r * dq2) + 5.0 * d1 * d1 / (96.0 * dq2 * dq) +
         1.0 / (12.0 * r * r * dq);
}

B1Integral b1_integral(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = require(p, DropletKind::annulus, "b1_integral");
  B1Integral out;
  out.direct =
      quad([&](double r) { return b1(p, r) * 2.0 * r * laplacian(p, r); }, d.r0, d.r1, opt);
  out.identity = f_annulus_from(p, d, f_integral(p, d, opt)) -
                 0.25 * std::log(laplacian(p, d.r1) / laplacian(p, d.r0)) +
                 std::log(d.r1 / d.r0) / 3.0;
  return out;
}

double f_annulus(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = require(p, DropletKind::annulus, "f_annulus");
  return f_annulus_from(p, d, f_integral(p, d, opt));
}

double f_disc(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = require(p, DropletKind::disc, "f_disc");
  return f_disc_from(p, d, f_integral(p, d, opt));
}

double f_term(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = droplet_of(p);
  const double integral = f_integral(p, d, opt);
  return d.kind == DropletKind::disc ? f_disc_from(p, d, integral) : f_annulus_from(p, d, integral);
}

double f_disc_chi_form(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = require(p, DropletKind::disc, "f_disc_chi_form");
  const double r1 = d.r1;
  auto chi1 = [&](double r) { return 0.5 * dq_ratio(p, r); };
  auto chi2 = [&](double r) {
    const double dq = laplacian(p, r);
    const double d1 = laplacian_dr(p, r);
    return 0.5 * (laplacian_dr2(p, r) / dq - d1 * d1 / (dq * dq));
  };
  const double boundary = -std::log(laplacian(p, r1)) / 12.0;  // -chi(r1)/6
  const double lap = quad([&](double r) { return 0.5 * r * (chi2(r) + chi1(r) / r); },
                          kDiscCut * r1, r1, opt);
  const double dirichlet = quad(
      [&](double r) {
        const double c = chi1(r);
        return c * c * 2.0 * r;
      },
      kDiscCut * r1, r1, opt);
  return std::log(1.0 / (r1 * r1)) / 12.0 + boundary - 0.25 * lap + dirichlet / 12.0;
}

ZWCoefficients zw_coefficients(const RadialPotential& p, const QuadOptions& opt) {
  const Droplet d = require(p, DropletKind::disc, "zw_coefficients");
  const double x1 = d.r1 * d.r1;
  const double x0 = kDiscCut * x1;
  constexpr double pi = 3.14159265358979323846;

  auto w = [&](double x) { return -p.q(std::sqrt(x)); };
  auto w1 = [&](double x) {
    const double r = std::sqrt(x);
    return -p.q(r, 1) / (2.0 * r);
  };
  auto sigma = [&](double x) { return laplacian(p, std::sqrt(x)) / pi; };
  // chi(x) = log(Delta Q(sqrt x))/2 and its x-derivative.
  auto chi = [&](double x) { return 0.5 * std::log(laplacian(p, std::sqrt(x))); };
  auto chi1 = [&](double x) {
    const double r = std::sqrt(x);
    return dq_ratio(p, r) / (4.0 * r);
  };

  ZWCoefficients z;
  z.f0 = pi * quad([&](double x) { return (w(x) - w1(x) * x * std::log(x)) * sigma(x); }, x0, x1,
                   opt);
  z.f_half = -0.5 * pi * quad(
                             [&](double x) {
                               const double s = sigma(x);
                               return s * std::log(pi * s);
                             },
                             x0, x1, opt);
  const double dirichlet = quad(
      [&](double x) {
        const double c = chi1(x);
        return x * c * c;
      },
      x0, x1, opt);
  z.f1 = std::log(1.0 / x1) / 12.0 - chi(x1) / 6.0 - 0.25 * x1 * chi1(x1) + dirichlet / 3.0;
  return z;
}

EquilibriumReport equilibrium_report(const RadialPotential& p, const QuadOptions& opt) {
  EquilibriumReport rep;
  rep.droplet = droplet_of(p);
  const Droplet& d = rep.droplet;
  rep.energy_integral = energy_integral(p, d, opt);
  rep.energy = p.q(d.r1) - std::log(d.r1) - 0.25 * rep.energy_integral;
  rep.entropy = entropy(p, opt);
  rep.log_potential_origin = log_potential_origin(p);
  rep.f_integral = f_integral(p, d, opt);
  rep.f_term = d.kind == DropletKind::disc ? f_disc_from(p, d, rep.f_integral)
                                           : f_annulus_from(p, d, rep.f_integral);
  rep.mass = equilibrium_mass(p, opt);
  return rep;
}

}  // namespace cgas
