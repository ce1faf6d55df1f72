#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "sphrect/developing.hpp"
#include "sphrect/error.hpp"
#include "sphrect/quadrature.hpp"

using namespace sphrect;
using cd = std::complex<double>;

namespace {
double beta(double x, double y) { return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y); }
}  // namespace

TEST_CASE("smooth integrals") {
  auto r = integrate_adaptive<double>([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0);
  CHECK(std::abs(r.value - std::numbers::pi) < 1e-12);
  CHECK(r.error <= kDefaultQuadTolerance);
  auto s = integrate_adaptive<double>([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(std::abs(s.value - 2.0) < 1e-12);
  // reversed limits flip the sign
  auto rev = integrate_adaptive<double>([](double x) { return x * x; }, 1.0, 0.0);
  CHECK(std::abs(rev.value + 1.0 / 3.0) < 1e-14);
}

TEST_CASE("log endpoint singularity") {
  auto r = integrate_adaptive<double>([](double x) { return -std::log(x); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(r.value - 1.0) < 1e-9);
}

TEST_CASE("budget exhaustion reports best estimate") {
  try {
    integrate_adaptive<double>([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-10, 50);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_estimate() > 1e-10);
  }
}

TEST_CASE("Beta closed form for half-integer exponents") {
  for (double p : {-0.5, 0.5}) {
    for (double q : {-0.5, 0.5}) {
      const double tol = 1e-11;
      auto r = integrate_singular([](double) { return 1.0; }, -1.0, 1.0, EndpointExponents(p, q), tol);
      const double exact = std::pow(2.0, p + q + 1.0) * beta(p + 1.0, q + 1.0);
      CHECK(std::abs(r.value - exact) <= tol);
    }
  }
}

TEST_CASE("general exponents") {
  auto r = integrate_singular([](double x) { return std::exp(x); }, 0.0, 1.0, EndpointExponents(0.3, -0.7), 1e-11);
  // series oracle: sum_n B(n + 1.3, 0.3) / n!
  double exact = 0.0, fact = 1.0;
  for (int n = 0; n < 30; ++n) {
    if (n > 0) fact *= n;
    exact += beta(n + 1.3, 0.3) / fact;
  }
  CHECK(std::abs(r.value - exact) < 1e-10);
  CHECK_THROWS_AS(EndpointExponents(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(EndpointExponents(0.0, -1.5), DomainError);
}

TEST_CASE("additivity across an interior split") {
  const double tol = 1e-11;
  auto f = [](double x) { return std::cos(3.0 * x); };
  const double a = 0.0, m = 0.37, b = 1.0;
  // (x-a)^-1/2 (b-x)^-1/2 written as separate endpoint factors on each part
  auto whole = integrate_singular(f, a, b, EndpointExponents(-0.5, -0.5), tol);
  auto left = integrate_singular([&](double x) { return f(x) / std::sqrt(b - x); }, a, m,
                                 EndpointExponents(-0.5, 0.0), tol);
  auto right = integrate_singular([&](double x) { return f(x) / std::sqrt(x - a); }, m, b,
                                  EndpointExponents(0.0, -0.5), tol);
  CHECK(std::abs(left.value + right.value - whole.value) <= 2.0 * tol);
}

TEST_CASE("path arcs over a pole") {
  const ComplexPath path({cd(1.0, 0.0), cd(-1.0, 0.0)}, {0.0});
  REQUIRE(path.pieces().size() == 3);
  CHECK(std::holds_alternative<ComplexPath::Arc>(path.pieces()[1]));
  auto r = integrate_path([](cd z) { return 1.0 / z; }, path, 1e-12);
  // log(-1) - log(1) on the upper branch
  CHECK(std::abs(r - cd(0.0, std::numbers::pi)) < 1e-11);
}

TEST_CASE("endpoint square-root singularities on a path") {
  const ComplexPath path({cd(-1.0, 0.0), cd(1.0, 0.0)}, {-1.0, 1.0});
  auto r = integrate_path([](cd z) { return 1.0 / (std::sqrt(1.0 + z) * std::sqrt(1.0 - z)); }, path, 1e-11);
  CHECK(std::abs(r - cd(std::numbers::pi, 0.0)) < 1e-10);
}

TEST_CASE("path independence for the developing integrand") {
  const double k = 2.0, c = std::sqrt(3.0) - 1.0;
  const DevelopingMap dev(k, Family::First, c, 2.0);
  const double tol = 1e-10;
  auto f = [&](cd z) { return dev.integrand(z); };
  for (cd z : {cd(0.3, 0.7), cd(-1.5, 0.2), cd(4.0, 2.0), cd(-3.0, 0.05)}) {
    const ComplexPath low({cd(k, 0.0), cd(k, 0.5 * z.imag()), cd(z.real(), 0.5 * z.imag()), z},
                          dev.singularities(), dev.detour_radius());
    const ComplexPath high({cd(k, 0.0), cd(k, 3.0), cd(z.real(), 3.0), z}, dev.singularities(),
                           dev.detour_radius());
    const cd a = integrate_path(f, low, tol);
    const cd b = integrate_path(f, high, tol);
    CHECK(std::abs(a - b) <= 2.0 * tol);
  }
}

TEST_CASE("path contracts") {
  CHECK_THROWS_AS(ComplexPath({cd(0.0, 0.0)}, {}), ContractError);
  CHECK_THROWS_AS(ComplexPath({cd(0.0, 0.0), cd(1.0, -1.0)}, {}), ContractError);
  // off-axis leg grazing a singularity
  CHECK_THROWS_AS(ComplexPath({cd(-1.0, 0.01), cd(1.0, 0.01)}, {0.0}, 0.05), ContractError);
  const double sing[] = {-2.0, -1.0, 0.0, 0.06};
  CHECK(ComplexPath::default_detour_radius(sing) == doctest::Approx(0.03));
  const double wide[] = {-2.0, 2.0};
  CHECK(ComplexPath::default_detour_radius(wide) == doctest::Approx(0.05));
}

TEST_CASE("closed forms") {
  auto arcsine = integrate_singular([](double) { return 1.0; }, -1.0, 1.0, EndpointExponents(-0.5, -0.5));
  CHECK(std::abs(arcsine.value - std::numbers::pi) < 1e-10);
  auto odd = integrate_singular([](double x) { return (1.0 + x) / std::sqrt(1.0 + x); }, -1.0, 1.0,
                                EndpointExponents(0.0, -0.5));
  CHECK(std::abs(odd.value - std::numbers::pi) < 1e-10);
  auto k_half = integrate_singular([](double x) { return 1.0 / std::sqrt((1.0 + x) * (1.0 - x * x / 4.0)); }, 0.0,
                                   1.0, EndpointExponents(0.0, -0.5), 1e-12);
  CHECK(std::abs(k_half.value - 1.6857503548) < 1e-9);

  const ComplexPath line({cd(0.2, 0.1), cd(1.5, 2.0), cd(-3.0, 0.4)}, {});
  CHECK(std::abs(integrate_path([](cd) { return cd(1.0, 0.0); }, line) - (cd(-3.0, 0.4) - cd(0.2, 0.1))) < 1e-13);

  const cd z0(1.0, 0.5), z1(-1.0, 0.5);
  const ComplexPath across({z0, z1}, {0.3});
  const cd got = integrate_path([](cd z) { return 1.0 / (z - 0.3); }, across, 1e-12);
  CHECK(std::abs(got - std::log((z1 - 0.3) / (z0 - 0.3))) < 1e-11);

  const double r = 0.25;
  const ComplexPath arc({cd(r, 0.0), cd(-r, 0.0)}, {0.0}, r);
  CHECK(std::abs(integrate_path([](cd z) { return 1.0 / z; }, arc, 1e-12) - cd(0.0, std::numbers::pi)) < 1e-11);
}
