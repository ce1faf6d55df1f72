#include "sphrect/modulus.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sphrect/elliptic.hpp"
#include "sphrect/error.hpp"
#include "sphrect/quadrature.hpp"

namespace sphrect {

namespace {

// log(k - 1) range over which k is a distinct double above 1 and finite.
constexpr double kLogMin = -36.0;
constexpr double kLogMax = 700.0;

double modulus_at_log(double x) { return modulus_of_k(1.0 + std::exp(x)); }

}  // namespace

double modulus_of_k(double k) {
  if (!(k > 1.0)) throw DomainError("modulus_of_k requires k > 1, got " + std::to_string(k));
  const double inv = 1.0 / k;
  // complement of 1/k computed without cancellation or overflow
  const double inv_complement = std::sqrt((k - 1.0) / k) * std::sqrt(1.0 + inv);
  const auto side = EllipticModulus::from_complement(inv_complement);  // kappa = 1/k
  const auto height = EllipticModulus::from_complement(inv);           // kappa = sqrt(1 - 1/k^2)
  return ellip_K(height) / (2.0 * ellip_K(side));
}

double modulus_oracle(double k, double tol) {
  if (!(k > 1.0)) throw DomainError("modulus_oracle requires k > 1");
  const double k2 = k * k;
  const auto width = integrate_singular(
      [k2](double t) { return 1.0 / std::sqrt((1.0 + t) * (k2 - t * t)); }, 0.0, 1.0,
      EndpointExponents(0.0, -0.5), 0.25 * tol);
  const auto height = integrate_singular(
      [k](double t) { return 1.0 / std::sqrt((t + 1.0) * (k + t)); }, 1.0, k,
      EndpointExponents(-0.5, -0.5), 0.25 * tol);
  return height.value / (2.0 * width.value);
}

double k_of_modulus(double modulus) {
  if (!(modulus > 0.0)) throw DomainError("k_of_modulus requires a positive modulus");
  double lo = kLogMin;
  double hi = kLogMax;
  if (modulus < modulus_at_log(lo) || modulus > modulus_at_log(hi)) {
    throw DomainError("modulus " + std::to_string(modulus) +
                      " corresponds to a k outside double precision range");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (modulus_at_log(mid) < modulus) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 1.0 + std::exp(0.5 * (lo + hi));
}

ModulusPair ModulusPair::from_k(double k) { return {k, modulus_of_k(k)}; }

ModulusPair ModulusPair::from_modulus(double modulus) { return {k_of_modulus(modulus), modulus}; }

}  // namespace sphrect
