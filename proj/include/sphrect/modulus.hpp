#pragma once

namespace sphrect {

/// Conformal modulus of the upper half-plane with corners at -k, -1, 1, k,
/// marked so that (-1, 1) is the unit side: K(sqrt(1 - 1/k^2)) / (2 K(1/k)).
/// Throws DomainError for k <= 1.
double modulus_of_k(double k);

/// Independent quadrature route to the same modulus: H / W with
/// W = 2 int_0^1 dt / sqrt((1 - t^2)(k^2 - t^2)) and
/// H = int_1^k dt / sqrt((t^2 - 1)(k^2 - t^2)).
double modulus_oracle(double k, double tol = 1e-12);

/// Inverse of modulus_of_k by bisection in log(k - 1). Throws DomainError when
/// the corresponding k is not representable in double precision (K below about
/// 0.041 or astronomically large).
double k_of_modulus(double modulus);

/// A corner parameter with its modulus. The second family is labelled by the
/// reciprocal as well, since which side carries the marked corner there is a
/// convention.
struct ModulusPair {
  double k = 0.0;
  double K_quad = 0.0;

  static ModulusPair from_k(double k);
  static ModulusPair from_modulus(double modulus);
  double reciprocal() const { return 1.0 / K_quad; }
};

}  // namespace sphrect
