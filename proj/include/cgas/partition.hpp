#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cgas/droplet.hpp"
#include "cgas/potential.hpp"

namespace cgas {

/// physics: Z_N; canonical: Z_N / N!.
enum class Convention { physics, canonical };

struct ExecOptions {
  unsigned threads = 0;  // 0 = all hardware threads
  double quad_rel_tol = 1e-12;
};

/// log Z ~ c_n2 N^2 + c_nlogn N log N + c_n N + c_logn log N + c_1.
struct ExpansionTerms {
  double c_n2 = 0.0;
  double c_nlogn = 0.0;
  double c_n = 0.0;
  double c_logn = 0.0;
  double c_1 = 0.0;
  Convention convention = Convention::physics;
  Ensemble ensemble = Ensemble::normal;
  DropletKind kind = DropletKind::disc;

  double evaluate(double N) const;
};

struct ConvergenceRow {
  long N = 0;
  double exact = 0.0;
  double asymptotic = 0.0;
  double residual = 0.0;  // exact - asymptotic
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double fitted_exponent = 0.0;  // OLS slope of log|residual| on log N
  double fit_r2 = 0.0;
  bool underflow = false;  // some |residual| < 1e-12; exponent is NaN
};

enum class LemmaSum {
  sum_v_normal,
  sum_logdq_normal,
  sum_logr_normal,
  sum_v_symp_odd,
  sum_logdq_symp_odd,
  sum_logr_symp_odd,
};

struct LemmaSumResult {
  double direct = 0.0;
  double predicted = 0.0;
};

const char* to_string(Ensemble e);
const char* to_string(Convention c);
const char* to_string(LemmaSum w);
Ensemble parse_ensemble(const std::string& s);
Convention parse_convention(const std::string& s);
LemmaSum parse_lemma_sum(const std::string& s);
/// Power of N in the remainder of the lemma identity (-3 or -1).
int lemma_sum_order(LemmaSum w);

/// log Z_N (physics) or log Z_N - log N! (canonical) from exact norms.
double log_z_exact(const RadialPotential& p, long N, Ensemble ensemble,
                   Convention convention = Convention::physics, const ExecOptions& exec = {});

ExpansionTerms expansion_terms(const RadialPotential& p, Ensemble ensemble, Convention convention);
double log_z_asymptotic(const RadialPotential& p, long N, Ensemble ensemble, Convention convention);

LemmaSumResult lemma_sum(const RadialPotential& p, long N, LemmaSum which);

using LogZFn = std::function<double(long N)>;

/// Generic study: exact(N) and asymptotic(N) are evaluated for every N in
/// order; residuals fitted against log N.
ConvergenceTable convergence_study(const std::vector<long>& Ns, const LogZFn& exact,
                                   const LogZFn& asymptotic);
ConvergenceTable convergence_study(const RadialPotential& p, const std::vector<long>& Ns,
                                   Ensemble ensemble, Convention convention,
                                   const ExecOptions& exec = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// CSV: header N,log_z_exact,log_z_asymptotic,residual, one row per N,
/// trailing "# fitted_exponent=<v> r2=<v>".
std::string to_csv(const ConvergenceTable& t);

}  // namespace cgas
