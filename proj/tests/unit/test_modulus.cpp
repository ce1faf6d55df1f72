#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sphrect/constants.hpp"
#include "sphrect/elliptic.hpp"
#include "sphrect/error.hpp"
#include "sphrect/modulus.hpp"
#include "sphrect/quadrature.hpp"

using namespace sphrect;

namespace {
std::vector<double> log_grid(int n, double lo, double hi) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, (i + 0.5) / n));
  return out;
}
}  // namespace

TEST_CASE("example value") {
  CHECK(std::abs(modulus_of_k(2.0) - 0.63963) < 1e-5);
  for (double k : {1.5, 2.0, 3.0, 5.0}) CHECK(std::abs(modulus_of_k(k) - modulus_oracle(k)) < 1e-8);
}

TEST_CASE("grid properties") {
  const auto grid = log_grid(500, 1.001, 50.0);
  double prev = 0.0;
  for (double k : grid) {
    const double K = modulus_of_k(k);
    CHECK(K > prev);
    prev = K;
    CHECK(std::abs(K - modulus_oracle(k)) <= 1e-8);
    CHECK(std::abs(k_of_modulus(K) - k) <= 1e-8);
  }
}

TEST_CASE("forbidden gap") {
  const auto& cc = critical_constants();
  for (int i = 1; i < 100; ++i) {
    const double k = 1.0 + (cc.k_crit - 1.0) * i / 100.0;
    CHECK(modulus_of_k(k) < cc.K_crit);
  }
  CHECK(cc.K_crit < 1.0);
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(modulus_of_k(1.0), DomainError);
  CHECK_THROWS_AS(modulus_oracle(0.5), DomainError);
  CHECK_THROWS_AS(k_of_modulus(0.0), DomainError);
  CHECK_THROWS_AS(k_of_modulus(0.01), DomainError);
  CHECK(std::isfinite(modulus_of_k(1e300)));
}

TEST_CASE("pairs") {
  const auto p = ModulusPair::from_k(2.0);
  CHECK(p.reciprocal() == doctest::Approx(1.0 / p.K_quad));
  const auto q = ModulusPair::from_modulus(p.K_quad);
  CHECK(q.k == doctest::Approx(2.0).epsilon(1e-12));
  // the square is its own reciprocal: modulus 1 lies inside the forbidden interval
  CHECK(k_of_modulus(1.0) > critical_constants().k_crit);
}

TEST_CASE("stated reference values") {
  // the modulus vanishes only logarithmically as k -> 1
  CHECK(std::abs(modulus_of_k(1.0001) - 0.1391337213) < 1e-9);
  CHECK(std::abs(modulus_of_k(1.0001) - modulus_oracle(1.0001)) < 1e-8);
  CHECK(modulus_of_k(1.00000001) < 0.1);
  CHECK(modulus_of_k(1.000000000001) < modulus_of_k(1.00000001));
  CHECK(std::abs(modulus_oracle(2.0) - 0.63963) < 1e-5);
  CHECK(std::abs(modulus_of_k(critical_constants().k_crit) - 0.709459) < 2e-4);
  CHECK(std::abs(k_of_modulus(0.63963) - 2.0) < 1e-3);
  CHECK(std::abs(k_of_modulus(modulus_of_k(3.0)) - 3.0) < 1e-9);
  CHECK(std::abs(k_of_modulus(0.709459) - 2.4305) < 1e-3);
}

TEST_CASE("width integral at k = 2") {
  const auto w = integrate_singular([](double t) { return 1.0 / std::sqrt((1.0 + t) * (4.0 - t * t)); }, 0.0, 1.0,
                                    EndpointExponents(0.0, -0.5), 1e-12);
  CHECK(std::abs(2.0 * w.value - ellip_K(0.5)) < 1e-9);
}
