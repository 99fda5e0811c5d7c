#include "cgas/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "cgas/equilibrium.hpp"
#include "cgas/errors.hpp"
#include "cgas/norms.hpp"
#include "cgas/parallel.hpp"
#include "cgas/special_fn.hpp"
#include "cgas/summation.hpp"

namespace cgas {

namespace {

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogPi = 1.14472988584940017414;

double half_log_2pi() { return 0.5 * SpecialConstants::log_2pi; }

}  // namespace

const char* to_string(Ensemble e) { return e == Ensemble::normal ? "normal" : "symplectic"; }
const char* to_string(Convention c) { return c == Convention::physics ? "physics" : "canonical"; }

const char* to_string(LemmaSum w) {
  switch (w) {
    case LemmaSum::sum_v_normal: return "sum_v_normal";
    case LemmaSum::sum_logdq_normal: return "sum_logdq_normal";
    case LemmaSum::sum_logr_normal: return "sum_logr_normal";
    case LemmaSum::sum_v_symp_odd: return "sum_v_symp_odd";
    case LemmaSum::sum_logdq_symp_odd: return "sum_logdq_symp_odd";
    case LemmaSum::sum_logr_symp_odd: return "sum_logr_symp_odd";
  }
  return "?";
}

Ensemble parse_ensemble(const std::string& s) {
  if (s == "normal") return Ensemble::normal;
  if (s == "symplectic") return Ensemble::symplectic;
  throw DomainError("unknown ensemble '" + s + "'");
}

Convention parse_convention(const std::string& s) {
  if (s == "physics") return Convention::physics;
  if (s == "canonical") return Convention::canonical;
  throw DomainError("unknown convention '" + s + "'");
}

LemmaSum parse_lemma_sum(const std::string& s) {
  for (auto w : {LemmaSum::sum_v_normal, LemmaSum::sum_logdq_normal, LemmaSum::sum_logr_normal,
                 LemmaSum::sum_v_symp_odd, LemmaSum::sum_logdq_symp_odd,
                 LemmaSum::sum_logr_symp_odd})
    if (s == to_string(w)) return w;
  throw DomainError("unknown lemma sum '" + s + "'");
}

int lemma_sum_order(LemmaSum w) {
  return (w == LemmaSum::sum_v_normal || w == LemmaSum::sum_v_symp_odd) ? -3 : -1;
}

double ExpansionTerms::evaluate(double N) const {
  const double logn = std::log(N);
  CompensatedSum s;
  s += c_n2 * N * N;
  s += c_nlogn * N * logn;
  s += c_n * N;
  s += c_logn * logn;
  s += c_1;
  return s.value();
}

double log_z_exact(const RadialPotential& p, long N, Ensemble ensemble, Convention convention,
                   const ExecOptions& exec) {
  if (N < 1) throw DomainError("log_z_exact: N must be >= 1");
  droplet_of(p);  // validates the potential before spawning work
  QuadOptions opt;
  opt.rel_tol = exec.quad_rel_tol;
  if (N >= 400) opt.rel_tol = std::min(opt.rel_tol, 1e-14);

  const std::vector<double> logs =
      parallel_map(static_cast<std::size_t>(N), exec.threads, [&](std::size_t j) {
        if (ensemble == Ensemble::normal)
          return log_norm_exact(p, {N, static_cast<long>(j), Ensemble::normal}, opt);
        return kLog2 + log_norm_exact(p, {N, static_cast<long>(2 * j + 1), Ensemble::symplectic}, opt);
      });

  const double base = convention == Convention::physics ? ln_factorial(N) : 0.0;
  if (N > 1000) {
    DoubleDoubleSum s;
    s += base;
    for (double v : logs) s += v;
    return s.value();
  }
  CompensatedSum s;
  s += base;
  for (double v : logs) s += v;
  return s.value();
}

ExpansionTerms expansion_terms(const RadialPotential& p, Ensemble ensemble, Convention convention) {
  const EquilibriumReport eq = equilibrium_report(p);
  const Droplet& d = eq.droplet;
  ExpansionTerms t;
  t.convention = convention;
  t.ensemble = ensemble;
  t.kind = d.kind;

  const double I = eq.energy, E = eq.entropy, U0 = eq.log_potential_origin, F = eq.f_term;
  const double zeta1 = SpecialConstants::zeta_prime_minus1;
  t.c_nlogn = 0.5;
  if (ensemble == Ensemble::normal) {
    t.c_n2 = -I;
    t.c_n = half_log_2pi() - 1.0 - E / 2.0;
    if (d.kind == DropletKind::annulus) {
      t.c_logn = 0.5;
      t.c_1 = half_log_2pi() + F;
    } else {
      t.c_logn = 5.0 / 12.0;
      t.c_1 = half_log_2pi() + zeta1 + F;
    }
  } else {
    t.c_n2 = -2.0 * I;
    t.c_n = 0.5 * (2.0 * kLog2 + kLogPi) - 1.0 - U0 - E / 2.0;
    if (d.kind == DropletKind::annulus) {
      t.c_logn = 0.5;
      t.c_1 = half_log_2pi() + F / 2.0 +
              std::log(laplacian(p, d.r0) / laplacian(p, d.r1)) / 8.0;
    } else {
      const double dq0 = laplacian_at_origin(p, d.r1);
      if (!(dq0 > 0.0) || !std::isfinite(dq0))
        throw DomainError("expansion: Delta Q(0) must be positive and finite for a disc");
      t.c_logn = 11.0 / 24.0;
      t.c_1 = half_log_2pi() + zeta1 / 2.0 + F / 2.0 + 5.0 * kLog2 / 24.0 +
              std::log(dq0 / laplacian(p, d.r1)) / 8.0;
    }
  }
  if (convention == Convention::canonical) {
    // log N! = N log N - N + log(N)/2 + log(2 pi)/2 + O(1/N)
    t.c_nlogn -= 1.0;
    t.c_n += 1.0;
    t.c_logn -= 0.5;
    t.c_1 -= half_log_2pi();
  }
  return t;
}

double log_z_asymptotic(const RadialPotential& p, long N, Ensemble ensemble, Convention convention) {
  if (N < 1) throw DomainError("log_z_asymptotic: N must be >= 1");
  return expansion_terms(p, ensemble, convention).evaluate(double(N));
}

LemmaSumResult lemma_sum(const RadialPotential& p, long N, LemmaSum which) {
  if (N < 1) throw DomainError("lemma_sum: N must be >= 1");
  const EquilibriumReport eq = equilibrium_report(p);
  const Droplet& d = eq.droplet;
  if (d.kind != DropletKind::annulus) throw DomainError("lemma_sum: requires an annulus droplet");
  const bool odd = which == LemmaSum::sum_v_symp_odd || which == LemmaSum::sum_logdq_symp_odd ||
                   which == LemmaSum::sum_logr_symp_odd;

  CompensatedSum s;
  for (long j = 0; j < N; ++j) {
    const double tau = odd ? (2.0 * j + 1.0) / (2.0 * N) : double(j) / N;
    const double r = solve_r_tau(p, tau);
    switch (which) {
      case LemmaSum::sum_v_normal:
      case LemmaSum::sum_v_symp_odd: s += v_tau(p, tau, r); break;
      case LemmaSum::sum_logdq_normal:
      case LemmaSum::sum_logdq_symp_odd: s += std::log(laplacian(p, r)); break;
      default: s += std::log(r); break;
    }
  }

  const double n = double(N);
  const double lr = std::log(d.r0 / d.r1);
  const double dq_ratio = laplacian(p, d.r1) / laplacian(p, d.r0);
  LemmaSumResult out;
  out.direct = s.value();
  switch (which) {
    case LemmaSum::sum_v_normal:
      out.predicted = n * eq.energy - eq.log_potential_origin + lr / (6.0 * n);
      break;
    case LemmaSum::sum_logdq_normal: out.predicted = n * eq.entropy - 0.5 * std::log(dq_ratio); break;
    case LemmaSum::sum_logr_normal:
      out.predicted = -n * eq.log_potential_origin - 0.5 * std::log(d.r1 / d.r0);
      break;
    case LemmaSum::sum_v_symp_odd: out.predicted = n * eq.energy - lr / (12.0 * n); break;
    case LemmaSum::sum_logdq_symp_odd: out.predicted = n * eq.entropy; break;
    case LemmaSum::sum_logr_symp_odd: out.predicted = -n * eq.log_potential_origin; break;
  }
  return out;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("least_squares: need >= 2 points");
  const double n = double(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

ConvergenceTable convergence_study(const std::vector<long>& Ns, const LogZFn& exact,
                                   const LogZFn& asymptotic) {
  if (Ns.empty()) throw DomainError("convergence_study: empty N list");
  if (!std::is_sorted(Ns.begin(), Ns.end()))
    throw DomainError("convergence_study: N list must be ascending");
  ConvergenceTable t;
  std::vector<double> x, y;
  for (long N : Ns) {
    ConvergenceRow row;
    row.N = N;
    row.exact = exact(N);
    row.asymptotic = asymptotic(N);
    row.residual = row.exact - row.asymptotic;
    t.rows.push_back(row);
    if (std::abs(row.residual) < 1e-12) t.underflow = true;
    x.push_back(std::log(double(N)));
    y.push_back(std::log(std::abs(row.residual)));
  }
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (t.underflow || Ns.size() < 2) {
    t.fitted_exponent = nan;
    t.fit_r2 = nan;
  } else {
    const LinearFit f = least_squares(x, y);
    t.fitted_exponent = f.slope;
    t.fit_r2 = f.r2;
  }
  return t;
}

ConvergenceTable convergence_study(const RadialPotential& p, const std::vector<long>& Ns,
                                   Ensemble ensemble, Convention convention,
                                   const ExecOptions& exec) {
  for (long N : Ns)
    if (N < 10) throw DomainError("convergence_study: every N must be >= 10");
  const ExpansionTerms terms = expansion_terms(p, ensemble, convention);
  return convergence_study(
      Ns, [&](long N) { return log_z_exact(p, N, ensemble, convention, exec); },
      [&](long N) { return terms.evaluate(double(N)); });
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const ConvergenceTable& t) {
  std::string out = "N,log_z_exact,log_z_asymptotic,residual\n";
  for (const auto& r : t.rows) {
    out += std::to_string(r.N) + "," + format_double(r.exact) + "," + format_double(r.asymptotic) +
           "," + format_double(r.residual) + "\n";
  }
  out += "# fitted_exponent=" + format_double(t.fitted_exponent) +
         " r2=" + format_double(t.fit_r2) + "\n";
  return out;
}

}  // namespace cgas
