#include <cmath>

#include "doctest.h"

#include "cgas/errors.hpp"
#include "cgas/parallel.hpp"
#include "cgas/quadrature.hpp"
#include "cgas/summation.hpp"

using namespace cgas;

TEST_CASE("polynomials and smooth functions") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 40.0).value ==
        doctest::Approx(1.0 - std::exp(-40.0)).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI).value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("narrow peak seen by the initial panels") {
  const double s = 2e-3;
  auto f = [&](double x) { return std::exp(-(x - 0.3) * (x - 0.3) / (2 * s * s)); };
  QuadOptions o;
  o.initial_panels = 16;
  const QuadResult r = integrate(f, 0.0, 1.0, o);
  CHECK(r.value == doctest::Approx(s * std::sqrt(2 * M_PI)).epsilon(1e-12));
}

TEST_CASE("endpoint singularity") {
  const QuadResult r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("failures") {
  QuadOptions o;
  o.max_subintervals = 4;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, o), IntegrationError);
  CHECK_THROWS_AS(integrate([](double) { return NAN; }, 0.0, 1.0), IntegrationError);
  CHECK(integrate([](double x) { return x; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("compensated and double-double sums") {
  CompensatedSum c;
  DoubleDoubleSum d;
  c += 1e16;
  d += 1e16;
  for (int i = 0; i < 1000; ++i) {
    c += 1.0;
    d += 1.0;
  }
  c += -1e16;
  d += -1e16;
  CHECK(c.value() == 1000.0);
  CHECK(d.value() == 1000.0);
}

TEST_CASE("parallel_map is independent of thread count") {
  auto f = [](std::size_t i) { return std::sin(double(i)); };
  const auto a = parallel_map(1000, 1, f);
  const auto b = parallel_map(1000, 8, f);
  CHECK(a == b);
  CHECK_THROWS_AS(parallel_map(10, 4,
                               [](std::size_t i) -> double {
                                 if (i == 7) throw DomainError("boom");
                                 return 0.0;
                               }),
                  DomainError);
}
