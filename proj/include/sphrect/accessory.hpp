#pragma once

#include <string_view>

#include "sphrect/quadrature.hpp"

namespace sphrect {

/// First type: the side ending at the marked corner shares its circle with the
/// opposite side (1 < k < k_crit, 0 < c < 1). Second type: k > k_crit, 1 < c < k.
enum class Family { First, Second };

std::string_view to_string(Family family);

/// Schwarz-Christoffel corner parameter: prevertices at -k, -1, 1, k.
class QuadParam {
 public:
  /// Throws DomainError if k <= 1, or if the family is inconsistent with k_crit.
  QuadParam(double k, Family family);

  /// Family chosen by comparing k with k_crit.
  static QuadParam classify(double k);

  double k() const noexcept { return k_; }
  Family family() const noexcept { return family_; }

 private:
  double k_;
  Family family_;
};

struct SolverTolerances {
  double quad = kDefaultQuadTolerance;  // absolute quadrature tolerance
  double root = 1e-12;                  // bisection stops when |delta c| <= root
  double functional = 1e-9;             // accepted |residual| at the root
};

/// A solved quadrilateral.
struct AccessorySolution {
  QuadParam param;
  double c = 0.0;          // accessory parameter; the second pole is d = -k/c
  double amplitude = 0.0;  // A (first family) or A' (second family)
  double alpha = 0.0;      // corner angle parameter in [0, 1)
  double alpha_orbit = 0.0;  // min(alpha, 1 - alpha)
  bool alpha_ambiguous = false;  // second family: representative not pinned down
  double modulus = 0.0;    // modulus_of_k(k)
  double residual = 0.0;   // defining functional at c
  double tolerance = 0.0;  // functional tolerance the residual was checked against

  double d() const { return -param.k() / c; }
};

/// h(x) = (1 + x)(k - x) / ((1 - x)(k + x)). Throws DomainError at x = 1 or x = -k.
double bethe_h(double k, double x);

/// g(c, zeta) = (c + k/c) / (zeta + k/c) * sqrt((1-c)(k+c)(1+zeta)(k-zeta) /
/// ((1+c)(k-c)(1-zeta)(k+zeta))) on -1 <= zeta < 1, first family. g(c, c) = 1.
/// Throws SingularPointError at zeta = 1 and DomainError outside the slice.
double g_weight(double k, double c, double zeta);

/// d/dzeta g(c, zeta) at zeta = c.
double g_weight_slope_at_pole(double k, double c);

/// Regularized first-family functional
/// F(k, c) = int_{-1}^{1} (g(c, z) - 1) / (z - c) dz + log((1 - c) / (1 + c)).
double bigF(double k, double c, double tol = kDefaultQuadTolerance);

/// sqrt((1+c)(k-c) / ((1-c)(k+c))) F(k, c), strictly decreasing in c.
double scaled_functional(double k, double c, double tol = kDefaultQuadTolerance);

/// A = (c + k/c) sqrt((1-c)(k+c) / ((1+c)(k-c))) for 0 < c < 1 < k.
double amp_A(double k, double c);

/// A' = (c - d) sqrt((c-1)(k+c) / ((c+1)(k-c))), d = -k/c, for 1 < c < k.
double amp_A_second(double k, double c);

/// Second-family integral
/// int_{-1}^{1} (c^2 + k)/(c x + k) sqrt((c-1)(k+c)(1+x)(k-x) / ((c+1)(k-c)(1-x)(k+x))) dx / (x - c),
/// which equals -pi at the accessory parameter.
double family2_integral(double k, double c, double tol = kDefaultQuadTolerance);

/// Unique root of F(k, .) on (0, 1) for 1 < k < k_crit.
double family1_root(double k, const SolverTolerances& tol = {});

/// Root of family2_integral(k, .) + pi on (1, k) for k > k_crit. Throws
/// BracketError when the scan finds no sign change or more than one.
double family2_root(double k, const SolverTolerances& tol = {});

/// Full first-family solution: c, A, alpha and modulus. Throws DomainError
/// unless 1 < k < k_crit.
AccessorySolution solve_family1(double k, const SolverTolerances& tol = {});

/// Full second-family solution. Throws DomainError unless k > k_crit.
AccessorySolution solve_family2(double k, const SolverTolerances& tol = {});

/// Dispatches on k versus k_crit.
AccessorySolution solve(double k, const SolverTolerances& tol = {});

}  // namespace sphrect
