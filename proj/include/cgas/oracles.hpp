#pragma once

#include "cgas/equilibrium.hpp"
#include "cgas/potential.hpp"

namespace cgas {

/// log Z_N for q = r^(2 lambda) - 2c log r via Barnes G products. Normal
/// needs 1/lambda integral, symplectic needs 2/lambda integral.
double ml_log_z(double lambda, double c, long N, Ensemble ensemble);

/// log Z_N for the truncated unitary potential.
double tu_log_z(double alpha, double R, long N, Ensemble ensemble);

/// Per-norm closed forms (degree j, weight e^{-s q}).
double ml_log_norm(double lambda, double c, long N, long j, Ensemble ensemble);
double tu_log_norm(double alpha, double R, long N, long j, Ensemble ensemble);

/// Equilibrium quantities in closed form; ML needs c > 0 (annulus).
EquilibriumReport ml_equilibrium(double lambda, double c);
EquilibriumReport tu_equilibrium(double alpha, double R);

}  // namespace cgas
