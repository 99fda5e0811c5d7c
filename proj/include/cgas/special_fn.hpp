#pragma once

#include <cstdint>

namespace cgas {

struct SpecialConstants {
  static constexpr double log_2pi = 1.8378770664093454836;
  /// zeta'(-1) = 1/12 - log A, A the Glaisher-Kinkelin constant.
  static constexpr double zeta_prime_minus1 = -0.16542114370045092921;
  static constexpr double log_glaisher = 0.24875447703378425886;
};

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

/// Exact log n! (via ln_gamma; direct products for n <= 20).
double ln_factorial(std::int64_t n);

/// Stirling's form of log n! through the constant term:
/// n log n - n + (1/2) log n + (1/2) log(2 pi).
double stirling_ln_factorial(double n);

/// log G(x) of the Barnes G-function for x >= 0.5.
///
/// Arguments below the shift threshold are raised with
/// log G(z + 1) = log Gamma(z) + log G(z); above it the large-z expansion is
/// used with Bernoulli corrections through z^-8.
double ln_barnes_g(double x);

/// The bare large-z expansion of log G(z + 1) truncated after the
/// zeta'(-1) constant (no 1/z^2 corrections).
double ln_barnes_g_asymptotic(double z);

}  // namespace cgas
