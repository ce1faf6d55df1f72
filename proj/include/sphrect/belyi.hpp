#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sphrect {

/// 50 significant decimal digits.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;
using ComplexHP = std::complex<HighPrecision>;

HighPrecision magnitude(const ComplexHP& z);

/// Dense polynomial with ascending high-precision real coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<HighPrecision> coefficients);
  /// (z - root)
  static Polynomial linear(const HighPrecision& root);

  /// Degree after dropping trailing zero coefficients; -1 for the zero polynomial.
  int degree() const;
  const std::vector<HighPrecision>& coefficients() const noexcept { return coefficients_; }
  HighPrecision leading() const;
  HighPrecision max_abs_coefficient() const;

  ComplexHP operator()(const ComplexHP& z) const;
  HighPrecision operator()(const HighPrecision& x) const;
  Polynomial derivative() const;
  Polynomial pow(int exponent) const;

  /// Drops leading coefficients below relative_threshold * max |coefficient|.
  Polynomial trimmed(const HighPrecision& relative_threshold) const;

  friend Polynomial operator+(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator-(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(const HighPrecision& s, const Polynomial& p);

 private:
  std::vector<HighPrecision> coefficients_;
};

struct PolynomialRoot {
  ComplexHP value;
  int multiplicity = 1;
};

/// Roots with multiplicities: eigenvalues of the companion matrix in extended
/// precision, clustered within cluster_tol * max(1, |z|), and each cluster centre
/// polished by Newton's method on the (m-1)-th derivative.
std::vector<PolynomialRoot> polynomial_roots(const Polynomial& p, double cluster_tol = 1e-10);

/// A named coefficient with its exact expression.
struct MapParameter {
  std::string name;
  HighPrecision value;
  std::string expression;
};

/// h(z) = numerator(z) / denominator(z).
struct RationalMap {
  std::string name;
  std::string variant;
  Polynomial numerator;
  Polynomial denominator;
  std::vector<MapParameter> parameters;

  int degree() const;
  ComplexHP operator()(const ComplexHP& z) const;
  /// h'(z) or h''(z) by the quotient rule.
  ComplexHP derivative(const ComplexHP& z, int order) const;
  const MapParameter& parameter(const std::string& name) const;
};

enum class BelyiValue { Zero, One, Infinity };

std::string to_string(BelyiValue value);

/// A point of a fibre over 0, 1 or infinity; point == nullopt stands for z = infinity.
struct RamificationPoint {
  std::optional<ComplexHP> point;
  int local_degree = 1;
  BelyiValue value = BelyiValue::Zero;
};

/// Full fibres of h over 0, 1 and infinity.
struct RamificationPortrait {
  int degree = 0;
  std::vector<RamificationPoint> points;

  /// Sum of (local degree - 1) over all listed points.
  int ramification_total() const;
  bool riemann_hurwitz_holds() const { return ramification_total() == 2 * degree - 2; }
  int fibre_sum(BelyiValue value) const;
  bool fibre_sums_hold() const;
  /// Points over `value` with the given local degree.
  std::vector<RamificationPoint> select(BelyiValue value, int local_degree) const;
};

/// A zero of h' (or infinity) with what h does there.
struct CriticalPoint {
  std::optional<ComplexHP> point;
  int local_degree = 2;
  bool value_is_infinite = false;
  ComplexHP value;
  BelyiValue nearest = BelyiValue::Zero;
  double deviation = 0.0;  // distance of the critical value to `nearest`
};

struct BelyiAnalysis {
  RamificationPortrait portrait;
  std::vector<CriticalPoint> critical_points;
  double max_deviation = 0.0;
  double coprimality_margin = 0.0;  // min over poles y of |N(y)| / (|N| max(1,|y|)^deg N)
  bool critical_points_in_portrait = false;
  bool belyi = false;
};

/// Computes critical points and fibres without throwing on violations.
BelyiAnalysis analyze_belyi(const RationalMap& map, double tol = 1e-10);

/// Throws BelyiViolation if a critical value lies farther than tol from
/// {0, 1, inf}, or if the portrait invariants fail.
RamificationPortrait verify_belyi(const RationalMap& map, double tol = 1e-10);

/// g_q(z) = -(z^q + z^-q - 2) / 4. Throws SingularPointError at z = 0.
std::complex<double> dihedral_invariant(int q, std::complex<double> z);

enum class Example2Coefficient { Corrected, Printed };

/// The three algebraic examples. For example 2, Corrected builds
/// t = (e^2 + e + 3)/2 + sqrt(8e^2 + 10e + 13)/2, e = 2^(1/3); Printed uses the
/// coefficient 1 on the square root.
RationalMap example_map(int n, Example2Coefficient t_form = Example2Coefficient::Corrected);

struct ConditionCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

/// h(0) = h(1) = h(w) = 1 and h'(1) = h''(1) = h'(w) = 0 for an example-2 map.
std::vector<ConditionCheck> example2_conditions(const RationalMap& map, double tol = 1e-10);

/// -(z+2)(z-2)^3 - 3(z^2+2z-2)^2 against -4(z-1)(z+1)^3, coefficientwise in integers.
struct IntegerIdentity {
  std::vector<long long> lhs;
  std::vector<long long> rhs;
  bool holds = false;
};
IntegerIdentity example1_identity();

/// Cross-check of an example against the numerical solver.
struct ExampleConsistency {
  int n = 0;
  double modulus = 0.0;  // stated modulus
  double k = 0.0;        // k_of_modulus(modulus)
  double c = 0.0;
  double alpha = 0.0;
  double alpha_orbit = 0.0;
  double alpha_expected = 0.0;
  double alpha_error = 0.0;  // |alpha - expected|
  double orbit_error = 0.0;  // |alpha_orbit - orbit(expected)|
  // Example 1 only: max |g_2(exp L(x)) - h(x)| over boundary samples at k = 2.
  std::optional<double> composition_residual;
};
ExampleConsistency example_consistency(int n);

}  // namespace sphrect
