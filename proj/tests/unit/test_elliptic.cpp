#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sphrect/elliptic.hpp"
#include "sphrect/error.hpp"
#include "sphrect/quadrature.hpp"

using namespace sphrect;

namespace {

// K and E from their hypergeometric series in kappa^2.
double series_K(double kappa) {
  double term = 1.0, sum = 1.0;
  const double m = kappa * kappa;
  for (int n = 1; n < 400; ++n) {
    term *= (2.0 * n - 1.0) / (2.0 * n);
    sum += term * term * std::pow(m, n);
  }
  return std::numbers::pi / 2.0 * sum;
}

double series_E(double kappa) {
  double term = 1.0, sum = 1.0;
  const double m = kappa * kappa;
  for (int n = 1; n < 400; ++n) {
    term *= (2.0 * n - 1.0) / (2.0 * n);
    sum -= term * term * std::pow(m, n) / (2.0 * n - 1.0);
  }
  return std::numbers::pi / 2.0 * sum;
}

}  // namespace

TEST_CASE("series oracle") {
  CHECK(ellip_K(0.5) == doctest::Approx(1.6857503548125961).epsilon(1e-14));
  CHECK(ellip_K(0.5) == doctest::Approx(series_K(0.5)).epsilon(1e-14));
  for (double kappa : {0.1, 0.3, 0.6, 0.8}) {
    CHECK(std::abs(ellip_K(kappa) - series_K(kappa)) < 1e-13);
    CHECK(std::abs(ellip_E(kappa) - series_E(kappa)) < 1e-13);
  }
}

TEST_CASE("agm against hand iteration") {
  double a = 1.0, b = 0.5;
  for (int i = 0; i < 6; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  CHECK(agm(1.0, 0.5) == doctest::Approx(a).epsilon(1e-15));
  CHECK(agm(1.0, 0.5) == doctest::Approx(0.7283955155234534).epsilon(1e-15));
  CHECK(agm(3.0, 3.0) == 3.0);
  CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(agm(-1.0, 1.0), DomainError);
}

TEST_CASE("agm homogeneity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const double lhs = agm(c * a, c * b);
    const double rhs = c * agm(a, b);
    CHECK(std::abs(lhs - rhs) <= 4.0 * eps * rhs);
  }
}

TEST_CASE("Legendre relation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 100; ++i) {
    const EllipticModulus m(u(rng));
    const auto mp = EllipticModulus::from_complement(m.kappa());
    const double lhs = ellip_E(m) * ellip_K(mp) + ellip_E(mp) * ellip_K(m) - ellip_K(m) * ellip_K(mp);
    CHECK(std::abs(lhs - std::numbers::pi / 2.0) < 1e-12);
  }
}

TEST_CASE("monotone on 1000 points") {
  double prev_K = ellip_K(0.0005), prev_E = ellip_E(0.0005);
  for (int i = 1; i < 1000; ++i) {
    const double kappa = (i + 0.5) / 1000.0;
    const double K = ellip_K(kappa), E = ellip_E(kappa);
    CHECK(K > prev_K);
    CHECK(E < prev_E);
    prev_K = K;
    prev_E = E;
  }
}

TEST_CASE("quadrature cross-check") {
  for (double kappa : {0.3, 0.5, 0.7, 0.9}) {
    const double k2 = kappa * kappa;
    const auto direct = integrate_singular(
        [k2](double x) { return 1.0 / std::sqrt((1.0 + x) * (1.0 - k2 * x * x)); }, 0.0, 1.0,
        EndpointExponents(0.0, -0.5), 1e-12);
    CHECK(std::abs(direct.value - ellip_K(kappa)) < 1e-9);
  }
}

TEST_CASE("endpoints and domain") {
  CHECK(ellip_K(0.0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(ellip_E(0.0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(ellip_E(1.0) == 1.0);
  CHECK_THROWS_AS(ellip_K(1.0), DivergenceError);
  CHECK_THROWS_AS(EllipticModulus(1.5), DomainError);
  CHECK_THROWS_AS(EllipticModulus(-0.1), DomainError);
  const auto m = EllipticModulus::from_complement(1e-10);
  CHECK(m.complement() == 1e-10);
  CHECK(std::isfinite(ellip_K(m)));
}

TEST_CASE("values at the critical modulus") {
  const double x = 0.9089085575;
  double a = 1.0, b = x;
  for (int i = 0; i < 3; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  CHECK(std::abs(agm(1.0, x) - a) < 1e-12);
  // 30-digit references
  CHECK(std::abs(agm(1.0, x) - 0.9539105411476275) < 1e-13);
  CHECK(std::abs(ellip_K(x) - 2.3210497322979415) < 1e-12);
  CHECK(std::abs(ellip_E(x) - 1.1605248663271900) < 1e-12);
  // K = 2E holds at this modulus to the precision of its ten given digits
  CHECK(std::abs(ellip_K(x) - 2.0 * ellip_E(x)) < 1e-9);
  CHECK(agm(4.0, 1.0) == doctest::Approx(4.0 * agm(1.0, 0.25)).epsilon(1e-15));
  CHECK(agm(1.0, 1.0) == 1.0);
}
