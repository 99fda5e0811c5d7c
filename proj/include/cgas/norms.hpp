#pragma once

#include "cgas/potential.hpp"
#include "cgas/quadrature.hpp"

namespace cgas {

/// h_j = int |z|^{2j} e^{-s Q} dA with s = N (normal) or 2N (symplectic).
struct NormQuery {
  long N = 1;
  long j = 0;
  Ensemble ensemble = Ensemble::normal;

  double weight_scale() const { return ensemble == Ensemble::normal ? double(N) : 2.0 * double(N); }
  double tau() const { return double(j) / weight_scale(); }
};

/// log h_j by quadrature of 2r exp(-s (V_tau - V_tau(r_tau))) with the
/// shift added back.
double log_norm_exact(const RadialPotential& p, const NormQuery& nq, const QuadOptions& opt = {});

/// Laplace two-term form: -s V(r_tau) + log(2 pi r_tau^2 / (s Delta Q))/2
/// + log(1 + B1(r_tau)/s).
double log_norm_laplace(const RadialPotential& p, const NormQuery& nq);

/// Small-degree Gamma form for disc droplets:
/// -s q(0) - (j+1) log(s q''(0)/2) + log j!.
double log_norm_lowdeg(const RadialPotential& p, const NormQuery& nq);

/// Laplace form restricted to j >= N^(1/6) (2 N^(1/6) for the symplectic
/// degrees); disc droplets only.
double log_norm_highdeg(const RadialPotential& p, const NormQuery& nq);

/// Smallest degree admitted by log_norm_highdeg.
long high_degree_threshold(long N, Ensemble ensemble);

}  // namespace cgas
