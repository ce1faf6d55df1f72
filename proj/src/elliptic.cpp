#include "sphrect/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sphrect/error.hpp"

namespace sphrect {

namespace {

double ulp(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity()) - x;
}

// Both K and E consume the same AGM sequence starting at (1, kappa').
struct AgmRun {
  double mean = 0.0;
  double weighted_sum = 0.0;  // sum_{n>=0} 2^{n-1} c_n^2
};

AgmRun run_agm(double kappa, double kappa_prime) {
  double a = 1.0;
  double b = kappa_prime;
  double c = kappa;
  double power = 0.5;
  AgmRun run;
  run.weighted_sum = power * c * c;
  for (int n = 0; n < 64 && std::abs(a - b) > 4.0 * ulp(a); ++n) {
    c = 0.5 * (a - b);
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
    power *= 2.0;
    run.weighted_sum += power * c * c;
  }
  run.mean = a;
  return run;
}

}  // namespace

EllipticModulus::EllipticModulus(double kappa) : kappa_(kappa), complement_(0.0) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw DomainError("elliptic modulus must lie in [0, 1], got " + std::to_string(kappa));
  }
  complement_ = std::sqrt((1.0 - kappa) * (1.0 + kappa));
}

EllipticModulus EllipticModulus::from_complement(double kappa_prime) {
  if (!(kappa_prime >= 0.0 && kappa_prime <= 1.0)) {
    throw DomainError("complementary modulus must lie in [0, 1], got " +
                      std::to_string(kappa_prime));
  }
  return EllipticModulus(std::sqrt((1.0 - kappa_prime) * (1.0 + kappa_prime)), kappa_prime);
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("agm requires positive arguments");
  }
  for (int n = 0; n < 64 && std::abs(a - b) > 4.0 * ulp(a); ++n) {
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  return a;
}

double ellip_K(EllipticModulus m) {
  if (m.complement() <= 0.0) {
    throw DivergenceError("K(kappa) diverges at kappa = 1");
  }
  return std::numbers::pi / (2.0 * agm(1.0, m.complement()));
}

double ellip_E(EllipticModulus m) {
  if (m.complement() <= 0.0) return 1.0;
  const AgmRun run = run_agm(m.kappa(), m.complement());
  const double K = std::numbers::pi / (2.0 * run.mean);
  return K * (1.0 - run.weighted_sum);
}

}  // namespace sphrect
