#pragma once

#include "cgas/potential.hpp"

namespace cgas {

enum class DropletKind { disc, annulus };

/// Support of the equilibrium measure: the annulus r0 <= |z| <= r1, or the
/// disc |z| <= r1 when r0 = 0.
struct Droplet {
  double r0 = 0.0;
  double r1 = 0.0;
  DropletKind kind = DropletKind::disc;
};

const char* to_string(DropletKind kind);

/// The radius r with r q'(r) = 2 tau, 0 <= tau <= 1. For tau = 0 returns r0,
/// which is 0 for a disc.
double solve_r_tau(const RadialPotential& p, double tau);

/// Same root without the tau <= 1 restriction, for degrees past the
/// droplet's outer edge.
double critical_radius(const RadialPotential& p, double tau);

/// Disc iff r q'(r) > 0 already at r = 1e-8. Validates Delta Q > 0 on
/// [max(0.9 r0, 1e-6), 1.1 r1] (clamped to the support).
Droplet droplet_of(const RadialPotential& p);

/// dr_tau/dtau = 1 / (2 r_tau Delta Q(r_tau)).
double dr_dtau(const RadialPotential& p, double tau);

}  // namespace cgas
