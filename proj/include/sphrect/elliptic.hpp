#pragma once

namespace sphrect {

/// Modulus of a complete elliptic integral, in the "modulus" convention:
/// K(kappa) = int_0^1 dx / sqrt((1 - x^2)(1 - kappa^2 x^2)).
/// The parameter m = kappa^2 is never used in public signatures.
class EllipticModulus {
 public:
  /// Throws DomainError unless 0 <= kappa <= 1.
  explicit EllipticModulus(double kappa);

  /// Builds the modulus whose complementary modulus is `kappa_prime`. Keeps full
  /// relative precision of the complement when kappa is close to 1.
  static EllipticModulus from_complement(double kappa_prime);

  double kappa() const noexcept { return kappa_; }
  /// sqrt(1 - kappa^2).
  double complement() const noexcept { return complement_; }

 private:
  EllipticModulus(double kappa, double complement) : kappa_(kappa), complement_(complement) {}

  double kappa_;
  double complement_;
};

/// Arithmetic-geometric mean of two positive numbers. Iterates until
/// |a_n - b_n| <= 4 ulp(a_n).
double agm(double a, double b);

/// K(kappa) = pi / (2 agm(1, kappa')). Throws DivergenceError at kappa = 1.
double ellip_K(EllipticModulus m);
inline double ellip_K(double kappa) { return ellip_K(EllipticModulus(kappa)); }

/// E(kappa) = int_0^1 sqrt((1 - kappa^2 x^2) / (1 - x^2)) dx, from the same AGM
/// sequence as K via the c_n sum. E(1) = 1.
double ellip_E(EllipticModulus m);
inline double ellip_E(double kappa) { return ellip_E(EllipticModulus(kappa)); }

}  // namespace sphrect
