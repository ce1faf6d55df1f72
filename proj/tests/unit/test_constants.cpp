#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numbers>

#include "sphrect/accessory.hpp"
#include "sphrect/constants.hpp"
#include "sphrect/elliptic.hpp"
#include "sphrect/error.hpp"
#include "sphrect/modulus.hpp"

using namespace sphrect;

TEST_CASE("published values") {
  const auto& cc = critical_constants();
  CHECK(std::abs(cc.kappa_prime_crit - 0.9089085575) < 1e-9);
  CHECK(std::abs(cc.lambda - 0.1076539192) < 1e-9);
  CHECK(std::abs(cc.k_crit - 2.4305) < 5e-5);
  CHECK(std::abs(cc.K_crit - 0.709459) < 2e-4);
}

TEST_CASE("kappa_prime_crit is a root of K - 2E") {
  const double x = kappa_prime_crit();
  CHECK(std::abs(ellip_K(x) - 2.0 * ellip_E(x)) < 1e-10);
  CHECK(critical_equation(x - 1e-3) < 0.0);
  CHECK(critical_equation(x + 1e-3) > 0.0);
}

TEST_CASE("record invariants") {
  const auto& cc = critical_constants();
  CHECK(std::abs(cc.kappa_crit * cc.kappa_crit + cc.kappa_prime_crit * cc.kappa_prime_crit - 1.0) < 1e-15);
  CHECK(cc.k_crit == doctest::Approx((1.0 + cc.kappa_crit) / (1.0 - cc.kappa_crit)).epsilon(1e-15));
  CHECK(cc.k_crit == doctest::Approx(derive_k_crit()).epsilon(1e-15));
  // Lambda = exp(-pi / b1) by definition of both
  CHECK(cc.lambda == doctest::Approx(std::exp(-std::numbers::pi / cc.b1)).epsilon(1e-13));
  CHECK(cc.b1 == doctest::Approx(ellip_K(cc.kappa_prime_crit) / ellip_K(cc.kappa_crit)).epsilon(1e-14));
  CHECK(k_crit() == cc.k_crit);
}

TEST_CASE("cross-module consistency") {
  const auto& cc = critical_constants();
  CHECK(std::abs(modulus_of_k(cc.k_crit) - cc.K_crit) < 1e-4);
  CHECK(std::abs(modulus_oracle(cc.k_crit) - cc.K_crit) < 1e-9);
  CHECK(cc.K_crit < 1.0);
  CHECK_THROWS_AS(family1_root(cc.k_crit + 0.01), BracketError);
}

TEST_CASE("Halphen series evaluators") {
  CHECK(halphen_series(0.5, 1) == 1.0);
  // 1 + 9 x^2 + 25 x^6
  CHECK(halphen_series(0.5, 3) == doctest::Approx(1.0 + 9.0 * 0.25 + 25.0 / 64.0));
  CHECK(halphen_series_alternating(0.5, 3) == doctest::Approx(1.0 - 9.0 * 0.25 + 25.0 / 64.0));
  for (int i = 1; i < 100; ++i) CHECK(halphen_series(i / 100.0, 40) > 0.0);
  CHECK_THROWS_AS(halphen_series(1.0, 5), DomainError);
  CHECK_THROWS_AS(halphen_series(0.5, 0), DomainError);
  CHECK_THROWS_AS(halphen_series_alternating(0.0, 5), DomainError);
}

TEST_CASE("stated reference values") {
  const auto& cc = critical_constants();
  CHECK(std::abs(derive_k_crit() - 2.43047) < 1e-4);
  CHECK(std::abs(cc.b1 - 1.40961) < 1e-4);
  CHECK(std::abs(-std::log(cc.lambda) / std::numbers::pi - 1.0 / cc.b1) < 1e-14);
  CHECK(critical_equation(0.5) < 0.0);
  CHECK(critical_equation(0.99) > 0.0);
  CHECK(std::abs(one_ninth_lambda() - 0.1076539192) < 1e-9);
  CHECK(b1_constant() == cc.b1);
  CHECK(std::abs(halphen_series(0.5, 10) - halphen_series(0.5, 11)) < 1e-15);
}
