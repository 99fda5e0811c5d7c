#include "cgas/potential.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "cgas/errors.hpp"

namespace cgas {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double ginibre_q(const Ginibre& g, double r, int order) {
  const double s2 = g.scale * g.scale;
  switch (order) {
    case 0: return r * r / s2;
    case 1: return 2.0 * r / s2;
    case 2: return 2.0 / s2;
    default: return 0.0;
  }
}

double ml_q(const MittagLeffler& m, double r, int order) {
  const double p = 2.0 * m.lambda;
  // d^k/dr^k r^p = p (p-1) ... (p-k+1) r^(p-k)
  double falling = 1.0;
  for (int k = 0; k < order; ++k) falling *= (p - k);
  const double power = falling * std::pow(r, p - order);
  switch (order) {
    case 0: return power - 2.0 * m.c * std::log(r);
    case 1: return power - 2.0 * m.c / r;
    case 2: return power + 2.0 * m.c / (r * r);
    case 3: return power - 4.0 * m.c / (r * r * r);
    default: return power + 12.0 * m.c / (r * r * r * r);
  }
}

double tu_q(const TruncatedUnitary& t, double r, int order) {
  // q = -alpha log(1 - u), u = r^2 / b, b = R^2 (1 + alpha).
  // Equivalently q = -alpha [log(s - r) + log(s + r) - log b], s = sqrt(b).
  const double b = t.R * t.R * (1.0 + t.alpha);
  const double s = std::sqrt(b);
  const double a = t.alpha;
  const double m = s - r;
  const double p = s + r;
  switch (order) {
    case 0: return -a * std::log1p(-r * r / b);
    case 1: return a * (1.0 / m - 1.0 / p);
    case 2: return a * (1.0 / (m * m) + 1.0 / (p * p));
    case 3: return a * (2.0 / (m * m * m) - 2.0 / (p * p * p));
    default: return a * (6.0 / (m * m * m * m) + 6.0 / (p * p * p * p));
  }
}

}  // namespace

RadialPotential::RadialPotential(Profile profile, std::optional<double> support_radius)
    : profile_(std::move(profile)), support_(support_radius) {
  if (support_ && !(*support_ > 0.0))
    throw InvalidPotential("support radius must be positive");
  std::visit(overloaded{
                 [](const Ginibre& g) {
                   if (!(g.scale > 0.0)) throw InvalidPotential("ginibre: scale must be positive");
                 },
                 [](const MittagLeffler& m) {
                   if (!(m.lambda > 0.0)) throw InvalidPotential("ml: lambda must be positive");
                   if (!(m.c >= 0.0)) throw InvalidPotential("ml: c must be nonnegative");
                 },
                 [this](const TruncatedUnitary& t) {
                   if (!(t.alpha > 0.0) || !(t.R > 0.0))
                     throw InvalidPotential("tu: alpha and R must be positive");
                   if (!support_) support_ = t.R * std::sqrt(1.0 + t.alpha);
                 },
                 [](const Custom& c) {
                   if (!c.q) throw InvalidPotential("custom: q evaluator required");
                 },
             },
             profile_);
}

RadialPotential RadialPotential::ginibre(double scale) { return RadialPotential(Ginibre{scale}); }

RadialPotential RadialPotential::mittag_leffler(double lambda, double c) {
  return RadialPotential(MittagLeffler{lambda, c});
}

RadialPotential RadialPotential::truncated_unitary(double alpha, double R) {
  return RadialPotential(TruncatedUnitary{alpha, R});
}

double RadialPotential::q(double r, int order) const {
  if (order < 0 || order > 4)
    throw UnsupportedOrder("q_derivs: order " + std::to_string(order) + " not in 0..4");
  if (!(r > 0.0) || !std::isfinite(r))
    throw DomainError("q_derivs: r must be positive, got " + std::to_string(r));
  if (support_ && r >= *support_)
    throw DomainError("q_derivs: r=" + std::to_string(r) + " outside support radius " +
                      std::to_string(*support_));
  return std::visit(overloaded{
                        [&](const Ginibre& g) { return ginibre_q(g, r, order); },
                        [&](const MittagLeffler& m) { return ml_q(m, r, order); },
                        [&](const TruncatedUnitary& t) { return tu_q(t, r, order); },
                        [&](const Custom& c) { return custom_derivative(c, r, order); },
                    },
                    profile_);
}

double RadialPotential::custom_derivative(const Custom& c, double r, int order) const {
  if (order == 0) return c.q(r);
  if (c.derivatives[order - 1]) return c.derivatives[order - 1](r);
  // Five-point stencil on the order-1 evaluator, h = max(r,1) eps^(1/6),
  // kept inside (0, support).
  double h = std::max(r, 1.0) * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / 6.0);
  h = std::min(h, 0.25 * r);
  if (support_) h = std::min(h, 0.25 * (*support_ - r));
  auto lower = [&](double x) { return custom_derivative(c, x, order - 1); };
  return (lower(r - 2 * h) - 8 * lower(r - h) + 8 * lower(r + h) - lower(r + 2 * h)) / (12 * h);
}

std::string RadialPotential::describe() const {
  char buf[160];
  std::visit(overloaded{
                 [&](const Ginibre& g) { std::snprintf(buf, sizeof buf, "ginibre(scale=%.17g)", g.scale); },
                 [&](const MittagLeffler& m) {
                   std::snprintf(buf, sizeof buf, "ml(lambda=%.17g, c=%.17g)", m.lambda, m.c);
                 },
                 [&](const TruncatedUnitary& t) {
                   std::snprintf(buf, sizeof buf, "tu(alpha=%.17g, R=%.17g)", t.alpha, t.R);
                 },
                 [&](const Custom& c) { std::snprintf(buf, sizeof buf, "%s", c.name.c_str()); },
             },
             profile_);
  return buf;
}

RadialPotential dilate(const RadialPotential& p, double a) {
  if (!(a > 0.0)) throw DomainError("dilate: factor must be positive");
  Custom c;
  c.name = p.describe() + " dilated by " + std::to_string(a);
  c.q = [p, a](double r) { return p.q(r / a, 0); };
  for (int k = 1; k <= 4; ++k)
    c.derivatives[k - 1] = [p, a, k](double r) { return p.q(r / a, k) / std::pow(a, k); };
  try {
    c.q0 = q_at_origin(p, 1.0);
  } catch (const DomainError&) {
  }
  const double q2 = q2_at_origin(p, 1.0);
  if (std::isfinite(q2)) c.q2_0 = q2 / (a * a);
  std::optional<double> support;
  if (p.support_radius()) support = a * *p.support_radius();
  return RadialPotential(std::move(c), support);
}

double q_derivs(const RadialPotential& p, double r, int order) { return p.q(r, order); }

double laplacian(const RadialPotential& p, double r) {
  return 0.25 * (p.q(r, 1) / r + p.q(r, 2));
}

double laplacian_dr(const RadialPotential& p, double r) {
  // d/dr (q'/r + q'')/4
  return 0.25 * (p.q(r, 2) / r - p.q(r, 1) / (r * r) + p.q(r, 3));
}

double laplacian_dr2(const RadialPotential& p, double r) {
  return 0.25 * (p.q(r, 3) / r - 2.0 * p.q(r, 2) / (r * r) + 2.0 * p.q(r, 1) / (r * r * r) +
                 p.q(r, 4));
}

namespace {

template <class F>
double richardson_at_origin(F&& f, double length_scale) {
  const double eps = 1e-4 * length_scale;
  return (4.0 * f(eps) - f(2.0 * eps)) / 3.0;
}

}  // namespace

double q_at_origin(const RadialPotential& p, double length_scale) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double v = std::visit(
      overloaded{
          [](const Ginibre&) { return 0.0; },
          [](const MittagLeffler& m) { return m.c > 0.0 ? inf : 0.0; },
          [](const TruncatedUnitary&) { return 0.0; },
          [&](const Custom& c) {
            if (c.q0) return *c.q0;
            return richardson_at_origin([&](double r) { return p.q(r, 0); }, length_scale);
          },
      },
      p.profile());
  if (!std::isfinite(v)) throw DomainError("q(0) is not finite for " + p.describe());
  return v;
}

double q2_at_origin(const RadialPotential& p, double length_scale) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{
          [](const Ginibre& g) { return 2.0 / (g.scale * g.scale); },
          [](const MittagLeffler& m) {
            if (m.c > 0.0) return inf;
            if (m.lambda == 1.0) return 2.0;
            return m.lambda > 1.0 ? 0.0 : inf;
          },
          [](const TruncatedUnitary& t) { return 2.0 * t.alpha / (t.R * t.R * (1.0 + t.alpha)); },
          [&](const Custom& c) {
            if (c.q2_0) return *c.q2_0;
            return richardson_at_origin([&](double r) { return p.q(r, 2); }, length_scale);
          },
      },
      p.profile());
}

double laplacian_at_origin(const RadialPotential& p, double length_scale) {
  // q'(r)/r -> q''(0) for a smooth radial profile.
  return 0.5 * q2_at_origin(p, length_scale);
}

TauParams TauParams::from_degree(long j, long N, Ensemble kind) {
  if (N <= 0 || j < 0) throw DomainError("TauParams: need N > 0 and j >= 0");
  const double scale = kind == Ensemble::normal ? double(N) : 2.0 * double(N);
  const double tau = double(j) / scale;
  if (tau > 1.0) throw DomainError("TauParams: tau > 1");
  return {tau, kind};
}

double v_tau(const RadialPotential& p, double tau, double r, int order) {
  const double q = p.q(r, order);
  switch (order) {
    case 0: return q - 2.0 * tau * std::log(r);
    case 1: return q - 2.0 * tau / r;
    case 2: return q + 2.0 * tau / (r * r);
    case 3: return q - 4.0 * tau / (r * r * r);
    default: return q + 12.0 * tau / (r * r * r * r);
  }
}

}  // namespace cgas
