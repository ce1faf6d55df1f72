#include "sphrect/constants.hpp"

#include <cmath>
#include <numbers>

#include "sphrect/elliptic.hpp"
#include "sphrect/error.hpp"
#include "sphrect/modulus.hpp"

namespace sphrect {

double critical_equation(double kappa_prime) {
  const EllipticModulus m(kappa_prime);
  return ellip_K(m) - 2.0 * ellip_E(m);
}

double kappa_prime_crit(double tol) {
  double lo = 0.5;
  double hi = 0.99;
  // critical_equation(0.5) < 0 < critical_equation(0.99)
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (critical_equation(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double derive_k_crit() {
  const double kappa = EllipticModulus::from_complement(kappa_prime_crit()).kappa();
  return (1.0 + kappa) / (1.0 - kappa);
}

double one_ninth_lambda() {
  const auto m = EllipticModulus(kappa_prime_crit());
  const auto complement = EllipticModulus::from_complement(m.kappa());
  return std::exp(-std::numbers::pi * ellip_K(complement) / ellip_K(m));
}

double b1_constant() {
  const auto m = EllipticModulus(kappa_prime_crit());
  return ellip_K(m) / ellip_K(EllipticModulus::from_complement(m.kappa()));
}

const CriticalConstants& critical_constants() {
  static const CriticalConstants constants = [] {
    CriticalConstants cc;
    cc.kappa_prime_crit = kappa_prime_crit();
    cc.kappa_crit = EllipticModulus::from_complement(cc.kappa_prime_crit).kappa();
    cc.k_crit = (1.0 + cc.kappa_crit) / (1.0 - cc.kappa_crit);
    cc.K_crit = modulus_of_k(cc.k_crit);
    cc.lambda = one_ninth_lambda();
    cc.b1 = b1_constant();
    return cc;
  }();
  return constants;
}

double k_crit() { return critical_constants().k_crit; }

double halphen_series(double x, int terms) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("halphen_series requires 0 < x < 1");
  if (terms < 1) throw DomainError("halphen_series requires at least one term");
  double sum = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double odd = 2.0 * n + 1.0;
    const double exponent = static_cast<double>(n) * (n + 1);
    // (-x)^{n(n+1)} = x^{n(n+1)} because n(n+1) is even
    sum += odd * odd * std::pow(x, exponent);
  }
  return sum;
}

double halphen_series_alternating(double x, int terms) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("halphen_series requires 0 < x < 1");
  if (terms < 1) throw DomainError("halphen_series requires at least one term");
  double sum = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double odd = 2.0 * n + 1.0;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    sum += sign * odd * odd * std::pow(x, static_cast<double>(n) * (n + 1));
  }
  return sum;
}

}  // namespace sphrect
