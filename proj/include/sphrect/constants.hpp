#pragma once

namespace sphrect {

/// Critical constants of the (3/2, 1/2, 3/2, 1/2) family.
struct CriticalConstants {
  double kappa_prime_crit = 0.0;  // root of K(x) - 2E(x) on (0, 1)
  double kappa_crit = 0.0;        // sqrt(1 - kappa_prime_crit^2)
  double k_crit = 0.0;            // (1 + kappa_crit) / (1 - kappa_crit)
  double K_crit = 0.0;            // conformal modulus at k_crit
  double lambda = 0.0;            // exp(-pi K(kappa_crit) / K(kappa_prime_crit))
  double b1 = 0.0;                // K(kappa_prime_crit) / K(kappa_crit)
};

/// K(x) - 2E(x); negative below kappa_prime_crit and positive above it.
double critical_equation(double kappa_prime);

/// Bisection root of critical_equation on (0, 1).
double kappa_prime_crit(double tol = 1e-15);

/// k_crit = (1 + kappa) / (1 - kappa), kappa = sqrt(1 - kappa_prime_crit^2).
double derive_k_crit();

/// The "One-Ninth" constant exp(-pi K(sqrt(1 - c^2)) / K(c)) with c = kappa_prime_crit.
double one_ninth_lambda();

/// b1 = K(c) / K(sqrt(1 - c^2)) with c = kappa_prime_crit.
double b1_constant();

/// All constants, computed once on first use.
const CriticalConstants& critical_constants();

/// Shorthand for critical_constants().k_crit.
double k_crit();

/// Partial sum of sum_{n < terms} (2n + 1)^2 (-x)^{n(n+1)}. Every exponent
/// n(n+1) is even, so all terms are positive and the series has no root on
/// (0, 1); it is kept as an evaluator only.
double halphen_series(double x, int terms);

/// Alternating variant sum_{n < terms} (-1)^n (2n + 1)^2 x^{n(n+1)}.
double halphen_series_alternating(double x, int terms);

}  // namespace sphrect
