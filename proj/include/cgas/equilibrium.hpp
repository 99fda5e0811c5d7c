#pragma once

#include "cgas/droplet.hpp"
#include "cgas/potential.hpp"
#include "cgas/quadrature.hpp"

namespace cgas {

struct EquilibriumReport {
  double energy = 0.0;                // I_Q[mu_Q]
  double entropy = 0.0;               // E_Q[mu_Q] = int log Delta Q dmu_Q
  double log_potential_origin = 0.0;  // U_{mu_Q}(0)
  double f_term = 0.0;                // F_Q of the annulus or disc
  double mass = 0.0;                  // int dmu_Q, should be 1
  double energy_integral = 0.0;       // int r q'(r)^2 dr over the droplet
  double f_integral = 0.0;            // int (Delta Q'/Delta Q)^2 r dr over the droplet
  Droplet droplet;
};

struct ZWCoefficients {
  double f0 = 0.0;
  double f_half = 0.0;
  double f1 = 0.0;
};

struct B1Integral {
  double direct = 0.0;    // quadrature of int B1 dmu_Q
  double identity = 0.0;  // F_Q[A] - log(Delta Q(r1)/Delta Q(r0))/4 + log(r1/r0)/3
};

double energy(const RadialPotential& p, const QuadOptions& opt = {});
double entropy(const RadialPotential& p, const QuadOptions& opt = {});
double log_potential_origin(const RadialPotential& p);
/// Total mass of the equilibrium measure.
double equilibrium_mass(const RadialPotential& p, const QuadOptions& opt = {});

/// First subleading coefficient of the norm asymptotics at radius r.
double b1(const RadialPotential& p, double r);
B1Integral b1_integral(const RadialPotential& p, const QuadOptions& opt = {});

double f_annulus(const RadialPotential& p, const QuadOptions& opt = {});
double f_disc(const RadialPotential& p, const QuadOptions& opt = {});
/// F_Q[D] through chi = log(Delta Q)/2: boundary, Laplacian and Dirichlet
/// pieces integrated separately.
double f_disc_chi_form(const RadialPotential& p, const QuadOptions& opt = {});
/// f_annulus or f_disc by droplet kind.
double f_term(const RadialPotential& p, const QuadOptions& opt = {});

ZWCoefficients zw_coefficients(const RadialPotential& p, const QuadOptions& opt = {});

EquilibriumReport equilibrium_report(const RadialPotential& p, const QuadOptions& opt = {});

}  // namespace cgas
