#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace cgas {

/// q(r) = (r / scale)^2.
struct Ginibre {
  double scale = 1.0;
};

/// q(r) = r^(2 lambda) - 2 c log r.
struct MittagLeffler {
  double lambda = 1.0;
  double c = 1.0;
};

/// q(r) = -alpha log(1 - r^2 / (R^2 (1 + alpha))) on r < R sqrt(1 + alpha),
/// +infinity beyond.
struct TruncatedUnitary {
  double alpha = 1.0;
  double R = 1.0;
};

/// User supplied profile. Missing derivative evaluators are filled in by
/// five-point central differences of the next lower order.
struct Custom {
  using Fn = std::function<double(double)>;
  Fn q;
  std::array<Fn, 4> derivatives;  // q', q'', q''', q''''
  std::string name = "custom";
  // Known limits q(0+) and q''(0+); extrapolated when absent.
  std::optional<double> q0;
  std::optional<double> q2_0;
};

using Profile = std::variant<Ginibre, MittagLeffler, TruncatedUnitary, Custom>;

enum class Ensemble { normal, symplectic };

/// A radially symmetric potential Q(z) = q(|z|).
class RadialPotential {
 public:
  explicit RadialPotential(Profile profile, std::optional<double> support_radius = std::nullopt);

  static RadialPotential ginibre(double scale = 1.0);
  static RadialPotential mittag_leffler(double lambda, double c);
  /// Carries the hard edge R sqrt(1 + alpha) as its support radius.
  static RadialPotential truncated_unitary(double alpha, double R);

  const Profile& profile() const { return profile_; }
  std::optional<double> support_radius() const { return support_; }
  bool in_support(double r) const { return r > 0.0 && (!support_ || r < *support_); }

  /// d^order q / dr^order at r.
  double q(double r, int order = 0) const;

  std::string describe() const;

 private:
  double custom_derivative(const Custom& c, double r, int order) const;

  Profile profile_;
  std::optional<double> support_;
};

/// Q_a(z) = Q(z / a); the droplet scales by a.
RadialPotential dilate(const RadialPotential& p, double a);

double q_derivs(const RadialPotential& p, double r, int order);

/// Delta Q = (q'/r + q'')/4, a quarter of the usual Laplacian.
double laplacian(const RadialPotential& p, double r);
double laplacian_dr(const RadialPotential& p, double r);
double laplacian_dr2(const RadialPotential& p, double r);

/// Limits r -> 0+. Built-in families use exact values; custom profiles
/// without stored limits fall back to Richardson extrapolation of the even
/// function at eps and 2 eps, eps = 1e-4 * length_scale. A non-finite q(0)
/// is a domain error; Delta Q(0) = q''(0)/2 may come out 0 or +infinity.
double q_at_origin(const RadialPotential& p, double length_scale);
double q2_at_origin(const RadialPotential& p, double length_scale);
double laplacian_at_origin(const RadialPotential& p, double length_scale);

/// Fractional degree tau = j/N (normal) or j/(2N) (symplectic).
struct TauParams {
  double tau = 0.0;
  Ensemble kind = Ensemble::normal;

  static TauParams from_degree(long j, long N, Ensemble kind);
};

/// V_tau(r) = q(r) - 2 tau log r and its r-derivatives up to order 4.
double v_tau(const RadialPotential& p, double tau, double r, int order = 0);
inline double v_tau(const RadialPotential& p, const TauParams& tp, double r, int order = 0) {
  return v_tau(p, tp.tau, r, order);
}

}  // namespace cgas
