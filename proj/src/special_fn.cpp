#include "cgas/special_fn.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "cgas/errors.hpp"
#include "cgas/summation.hpp"

namespace cgas {

namespace {

constexpr double kBarnesShift = 30.0;

// log G(z + 1) for large z including B_{2k+2} / (4k(k+1) z^{2k}), k = 1..4.
double barnes_large(double z) {
  const double z2 = z * z;
  const double iz2 = 1.0 / z2;
  const double correction =
      iz2 * (-1.0 / 240.0 +
             iz2 * (1.0 / 1008.0 + iz2 * (-1.0 / 1440.0 + iz2 * (5.0 / 66.0 / 80.0))));
  return ln_barnes_g_asymptotic(z) + correction;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("ln_gamma: argument must be positive, got " + std::to_string(x));
  return boost::math::lgamma(x);
}

double ln_factorial(std::int64_t n) {
  if (n < 0) throw DomainError("ln_factorial: negative argument");
  if (n <= 20) {
    std::uint64_t f = 1;
    for (std::int64_t k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return std::log(static_cast<double>(f));
  }
  return ln_gamma(static_cast<double>(n) + 1.0);
}

double stirling_ln_factorial(double n) {
  return n * std::log(n) - n + 0.5 * std::log(n) + 0.5 * SpecialConstants::log_2pi;
}

double ln_barnes_g_asymptotic(double z) {
  const double lz = std::log(z);
  return 0.5 * z * z * lz - 0.75 * z * z + 0.5 * SpecialConstants::log_2pi * z - lz / 12.0 +
         SpecialConstants::zeta_prime_minus1;
}

double ln_barnes_g(double x) {
  if (!(x >= 0.5) || !std::isfinite(x))
    throw DomainError("ln_barnes_g: argument must be >= 0.5, got " + std::to_string(x));
  if (x == 1.0 || x == 2.0) return 0.0;
  // Small integers: G(n) = prod_{k<n-1} k! exactly.
  if (x == std::floor(x) && x <= kBarnesShift + 1.0) {
    CompensatedSum s;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(x) - 2; ++k) s += ln_factorial(k);
    return s.value();
  }
  // G(x) = G(x + n) / prod_{k<n} Gamma(x + k)
  CompensatedSum shift;
  double z = x;
  while (z - 1.0 < kBarnesShift) {
    shift += ln_gamma(z);
    z += 1.0;
  }
  return barnes_large(z - 1.0) - shift.value();
}

}  // namespace cgas
