#include "cgas/oracles.hpp"

#include <cmath>

#include "cgas/errors.hpp"
#include "cgas/special_fn.hpp"
#include "cgas/summation.hpp"

namespace cgas {

namespace {

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogPi = 1.14472988584940017414;

// Returns m if x is within 1e-12 of a positive integer m, else 0.
long as_positive_integer(double x) {
  const double m = std::round(x);
  if (m >= 1.0 && std::abs(x - m) <= 1e-12 * m) return static_cast<long>(m);
  return 0;
}

void check_n(long N) {
  if (N < 1) throw DomainError("oracle: N must be >= 1");
}

}  // namespace

double ml_log_z(double lambda, double c, long N, Ensemble ensemble) {
  check_n(N);
  if (!(lambda > 0.0) || !(c >= 0.0)) throw DomainError("ml oracle: need lambda > 0, c >= 0");
  const double n = double(N);
  CompensatedSum s;
  s += ln_factorial(N);

  if (ensemble == Ensemble::normal) {
    // h_j = lambda^-1 N^{-(j+1+cN)/lambda} Gamma(m (j+1+cN)), m = 1/lambda;
    // Gamma(m z) by the multiplication theorem, then products over j
    // telescope into Barnes G ratios.
    const long m = as_positive_integer(1.0 / lambda);
    if (m == 0) throw DomainError("ml oracle: normal ensemble needs 1/lambda in N");
    const double md = double(m);
    s += -n * std::log(lambda);
    s += -(std::log(n) / lambda) * (n * (n + 1.0) / 2.0 + c * n * n);
    s += n * (1.0 - md) / 2.0 * SpecialConstants::log_2pi;
    s += std::log(md) * (md * (n * (n - 1.0) / 2.0 + n * (n * c + 1.0)) - n / 2.0);
    for (long k = 0; k < m; ++k) {
      const double shift = n * c + 1.0 + double(k) / md;
      s += ln_barnes_g(shift + n);
      s += -ln_barnes_g(shift);
    }
    return s.value();
  }

  // Symplectic: 2 h~_{2j+1} = 2 lambda^-1 (2N)^{-(2j+2+2cN)/lambda}
  // Gamma(m (j+1+cN)), m = 2/lambda.
  const long m = as_positive_integer(2.0 / lambda);
  if (m == 0) throw DomainError("ml oracle: symplectic ensemble needs 2/lambda in N");
  const double md = double(m);
  s += n * (kLog2 - std::log(lambda));
  s += -(std::log(2.0 * n) / lambda) * (n * n + n + 2.0 * c * n * n);
  s += n * (1.0 - md) / 2.0 * SpecialConstants::log_2pi;
  s += std::log(md) * (md * (n * (n - 1.0) / 2.0 + n * (n * c + 1.0)) - n / 2.0);
  for (long k = 0; k < m; ++k) {
    const double shift = n * c + 1.0 + double(k) / md;
    s += ln_barnes_g(shift + n);
    s += -ln_barnes_g(shift);
  }
  return s.value();
}

double tu_log_z(double alpha, double R, long N, Ensemble ensemble) {
  check_n(N);
  if (!(alpha > 0.0) || !(R > 0.0)) throw DomainError("tu oracle: need alpha > 0, R > 0");
  const double n = double(N);
  const double an = alpha * n;
  const double log_b = 2.0 * std::log(R) + std::log1p(alpha);  // b = R^2 (1 + alpha)
  CompensatedSum s;
  s += ln_factorial(N);

  if (ensemble == Ensemble::normal) {
    // h_j = b^{j+1} Gamma(aN+1) Gamma(j+1) / Gamma(aN+j+2)
    s += n * (n + 1.0) / 2.0 * log_b;
    s += n * ln_gamma(an + 1.0);
    s += ln_barnes_g(n + 1.0);
    s += ln_barnes_g(an + 2.0);
    s += -ln_barnes_g(an + n + 2.0);
    return s.value();
  }

  // 2 h~_{2j+1} = 2 b^{2j+2} Gamma(2j+2) Gamma(2aN+1) / Gamma(2aN+2j+3);
  // both Gamma(2z) factors split by the duplication formula.
  s += n * kLog2;
  s += n * (n + 1.0) * log_b;
  s += n * ln_gamma(2.0 * an + 1.0);
  s += n * n * kLog2;
  s += ln_barnes_g(n + 1.0);
  s += ln_barnes_g(n + 1.5);
  s += -ln_barnes_g(1.5);
  s += -(2.0 * an * n + n * n + n) * kLog2;
  s += -ln_barnes_g(an + n + 1.5);
  s += ln_barnes_g(an + 1.5);
  s += -ln_barnes_g(an + n + 2.0);
  s += ln_barnes_g(an + 2.0);
  return s.value();
}

double ml_log_norm(double lambda, double c, long N, long j, Ensemble ensemble) {
  check_n(N);
  const double s = ensemble == Ensemble::normal ? double(N) : 2.0 * double(N);
  const double a = (double(j) + 1.0 + c * s) / lambda;
  return -std::log(lambda) - a * std::log(s) + ln_gamma(a);
}

double tu_log_norm(double alpha, double R, long N, long j, Ensemble ensemble) {
  check_n(N);
  const double s = ensemble == Ensemble::normal ? double(N) : 2.0 * double(N);
  const double log_b = 2.0 * std::log(R) + std::log1p(alpha);
  const double as = alpha * s;
  return (double(j) + 1.0) * log_b + ln_gamma(as + 1.0) + ln_gamma(double(j) + 1.0) -
         ln_gamma(as + double(j) + 2.0);
}

EquilibriumReport ml_equilibrium(double lambda, double c) {
  if (!(lambda > 0.0)) throw DomainError("ml_equilibrium: lambda must be positive");
  if (!(c > 0.0)) throw DomainError("ml_equilibrium: closed forms need c > 0 (annulus)");
  const double l = lambda;
  EquilibriumReport rep;
  rep.droplet.kind = DropletKind::annulus;
  rep.droplet.r0 = std::pow(c / l, 1.0 / (2.0 * l));
  rep.droplet.r1 = std::pow((1.0 + c) / l, 1.0 / (2.0 * l));
  const double log_cc = c * std::log(c) - (1.0 + c) * std::log1p(c);  // log(c^c / (1+c)^(1+c))
  rep.energy = (c * c * std::log(c) - (1.0 + c) * (1.0 + c) * std::log1p(c)) / (2.0 * l) +
               (1.0 + 2.0 * c) / (2.0 * l) * (std::log(l) + 1.5);
  rep.entropy = (1.0 + l) / l * std::log(l) + (1.0 - l) / l * (1.0 + log_cc);
  auto q = [&](double r) { return std::pow(r, 2.0 * l) - 2.0 * c * std::log(r); };
  rep.log_potential_origin =
      -std::log(rep.droplet.r1) + 0.5 * (q(rep.droplet.r1) - q(rep.droplet.r0));
  rep.f_term = -(l * l - 3.0 * l + 1.0) / (12.0 * l) * std::log(c / (1.0 + c));
  rep.mass = 1.0;
  return rep;
}

EquilibriumReport tu_equilibrium(double alpha, double R) {
  if (!(alpha > 0.0) || !(R > 0.0)) throw DomainError("tu_equilibrium: need alpha > 0, R > 0");
  const double a = alpha;
  const double la = std::log(a / (1.0 + a));
  EquilibriumReport rep;
  rep.droplet.kind = DropletKind::disc;
  rep.droplet.r0 = 0.0;
  rep.droplet.r1 = R;
  rep.energy = -a / 2.0 - a * (2.0 + a) / 2.0 * la - std::log(R);
  rep.entropy = -2.0 - (1.0 + 2.0 * a) * la - 2.0 * std::log(R);
  // q(R) = -alpha log(alpha/(1+alpha)), q(0) = 0
  rep.log_potential_origin = -std::log(R) - 0.5 * a * la;
  rep.f_term = (1.0 / a + 5.0 * la) / 12.0;
  rep.mass = 1.0;
  return rep;
}

}  // namespace cgas
