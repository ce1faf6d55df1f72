#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "sphrect/accessory.hpp"
#include "sphrect/quadrature.hpp"

namespace sphrect {

/// Logarithm of the developing map, L(z) = A int_k^z S(zeta) dzeta /
/// ((zeta - c)(zeta - d)) with S = sqrt((1 + zeta)(k - zeta) / ((1 - zeta)(k + zeta)))
/// continued through the upper half-plane from its positive values on (k, inf).
/// L(k) = 0. Real arguments are boundary values (limits from above).
class DevelopingMap {
 public:
  DevelopingMap(double k, Family family, double c, double amplitude);
  explicit DevelopingMap(const AccessorySolution& sol);

  double k() const noexcept { return k_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return -k_ / c_; }
  Family family() const noexcept { return family_; }

  /// The real points the path must avoid: d, -k, -1, c, 1, k in increasing order.
  const std::vector<double>& singularities() const noexcept { return singularities_; }

  /// 0.02 times the smallest gap between consecutive singularities.
  double detour_radius() const noexcept { return detour_radius_; }

  /// dL/dzeta for Im zeta >= 0.
  std::complex<double> integrand(std::complex<double> zeta) const;

  /// Path from k to z: along the real axis for real z, otherwise up to height
  /// `height` (at least Im z), across, and down to z.
  ComplexPath path_to(std::complex<double> z, double height = 1.0) const;

  /// L(z). Throws DomainError for Im z < 0 and SingularPointError at the poles c, d.
  std::complex<double> log_value(std::complex<double> z, double tol = kDefaultQuadTolerance) const;
  std::complex<double> log_value_along(const ComplexPath& path, double tol = kDefaultQuadTolerance) const;

  /// Im L(1) / pi.
  double corner_turn(double tol = kDefaultQuadTolerance) const;

 private:
  void check_target(std::complex<double> z) const;

  double k_;
  Family family_;
  double c_;
  double amplitude_;
  std::vector<double> singularities_;
  double detour_radius_;
};

std::complex<double> L_eval(const AccessorySolution& sol, std::complex<double> z,
                            double tol = kDefaultQuadTolerance);

/// alpha from the corner image f(1) = exp(L(1)): the line l_alpha through 0 and
/// f(1) makes angle pi*alpha with the positive axis, so alpha = Im L(1)/pi mod 1.
double alpha_from_turn(double turn);

/// Dihedral orbit representative min(alpha, 1 - alpha).
double alpha_orbit_value(double alpha);

double extract_alpha(const AccessorySolution& sol, double tol = kDefaultQuadTolerance);

/// Boundary sides of the half-plane in positive order.
enum class Side { MinusKToMinusOne, MinusOneToOne, OneToK, Outer };

std::string_view to_string(Side side);

/// The three circles of the boundary image: the real line, the line l_alpha and
/// the unit circle.
enum class Circle { RealLine, LineAlpha, UnitCircle };

std::string_view to_string(Circle circle);

struct SideImage {
  Side side;
  Circle expected;
  double max_distance = 0.0;  // spherical (angular) distance to the expected circle
  std::array<double, 3> max_distance_to{};  // per circle, indexed by Circle
  int samples = 0;
};

struct BoundaryImageReport {
  Family family = Family::First;
  double k = 0.0;
  double alpha = 0.0;
  std::array<SideImage, 4> sides{};
  std::array<Side, 2> unit_circle_pair{};  // the two sides closest to the unit circle
  bool unit_circle_pair_opposite = false;
  // Smallest, over the three pairs of circles, of the largest distance from a
  // sample to the nearer circle of the pair. Positive means no two circles
  // contain the whole boundary image.
  double two_circle_witness = 0.0;
  double max_distance = 0.0;
};

/// Samples every side at the given density (the unbounded side through
/// x = +-1/u) and measures the images on the Riemann sphere.
BoundaryImageReport boundary_check(const AccessorySolution& sol, int samples_per_side,
                                   double tol = kDefaultQuadTolerance);

/// Static SVG of the boundary image together with the three circles.
std::string boundary_svg(const AccessorySolution& sol, int samples_per_side,
                         double tol = kDefaultQuadTolerance);

}  // namespace sphrect
