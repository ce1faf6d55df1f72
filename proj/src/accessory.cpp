#include "sphrect/accessory.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sphrect/constants.hpp"
#include "sphrect/developing.hpp"
#include "sphrect/error.hpp"
#include "sphrect/modulus.hpp"

namespace sphrect {

namespace {

// Below this distance from the pole the removable quotient (g - 1)/(z - c) is
// replaced by its limit g'(c).
constexpr double kRemovableGuard = 1e-7;

// Number of halvings toward an endpoint of (0, 1) while bracketing F.
constexpr int kBracketHalvings = 30;

// Geometric scan for the second family.
constexpr int kFamily2ScanPoints = 64;
constexpr double kFamily2ScanOffset = 1e-6;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_first_family_range(double k, double c) {
  if (!(k > 1.0)) throw DomainError("k must exceed 1, got " + fmt(k));
  if (!(c > 0.0 && c < 1.0)) throw DomainError("c must lie in (0, 1), got " + fmt(c));
}

void require_second_family_range(double k, double c) {
  if (!(k > 1.0)) throw DomainError("k must exceed 1, got " + fmt(k));
  if (!(c > 1.0 && c < k)) throw DomainError("c must lie in (1, k), got " + fmt(c));
}

template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double f_lo, double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = fn(mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void check_bethe(const AccessorySolution& sol) {
  const double k = sol.param.k();
  const double lhs = bethe_h(k, sol.c);
  const double rhs = bethe_h(k, sol.d());
  if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs))) {
    throw AccuracyError("residue condition h(c) = h(-k/c) violated", lhs - rhs, 0.0);
  }
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::First ? "first" : "second";
}

QuadParam::QuadParam(double k, Family family) : k_(k), family_(family) {
  if (!(k > 1.0)) throw DomainError("corner parameter k must exceed 1, got " + fmt(k));
  const double kc = sphrect::k_crit();
  if (family == Family::First && !(k < kc)) {
    throw DomainError("first-family quadrilaterals need k < k_crit = " + fmt(kc) + ", got " + fmt(k));
  }
  if (family == Family::Second && !(k > kc)) {
    throw DomainError("second-family quadrilaterals need k > k_crit = " + fmt(kc) + ", got " + fmt(k));
  }
}

QuadParam QuadParam::classify(double k) {
  if (!(k > 1.0)) throw DomainError("corner parameter k must exceed 1, got " + fmt(k));
  const double kc = sphrect::k_crit();
  if (std::abs(k - kc) <= 1e-9) {
    throw DomainError("k = " + fmt(k) + " is at k_crit; no quadrilateral has a modulus in the "
                      "forbidden interval [K_crit, 1/K_crit]");
  }
  return QuadParam(k, k < kc ? Family::First : Family::Second);
}

double bethe_h(double k, double x) {
  if (x == 1.0 || x == -k) throw DomainError("bethe_h has a pole at x = " + fmt(x));
  return (1.0 + x) * (k - x) / ((1.0 - x) * (k + x));
}

double g_weight(double k, double c, double zeta) {
  require_first_family_range(k, c);
  if (zeta == 1.0) throw SingularPointError("g(c, zeta) is singular at zeta = 1");
  if (!(zeta >= -1.0 && zeta < 1.0)) throw DomainError("g_weight evaluates on [-1, 1) only");
  const double kc = k / c;
  const double prefactor = (1.0 - c) * (k + c) / ((1.0 + c) * (k - c));
  const double ratio = (1.0 + zeta) * (k - zeta) / ((1.0 - zeta) * (k + zeta));
  return (c + kc) / (zeta + kc) * std::sqrt(prefactor * ratio);
}

double g_weight_slope_at_pole(double k, double c) {
  require_first_family_range(k, c);
  // g(c, c) = 1, so the slope equals the logarithmic derivative.
  return -1.0 / (c + k / c) +
         0.5 * (1.0 / (1.0 + c) - 1.0 / (k - c) + 1.0 / (1.0 - c) - 1.0 / (k + c));
}

double bigF(double k, double c, double tol) {
  require_first_family_range(k, c);
  // g = w * rho with w(z) = sqrt((1 + z) / (1 - z)) and rho analytic on [-1, 1].
  // Since PV int_{-1}^{1} w(z) / (z - c) dz = pi, and the log term is the
  // principal value of int dz / (z - c),
  //   F = int_{-1}^{1} w(z) (rho(z) - rho(c)) / (z - c) dz + pi rho(c),
  // whose integrand is smooth apart from the weight w.
  const double kc = k / c;
  const double prefactor = (1.0 - c) * (k + c) / ((1.0 + c) * (k - c));
  auto rho = [&](double z) { return (c + kc) / (z + kc) * std::sqrt(prefactor * (k - z) / (k + z)); };
  const double rho_c = rho(c);
  const double slope = rho_c * (-1.0 / (c + kc) - 0.5 / (k - c) - 0.5 / (k + c));
  auto divided = [&](double z) {
    if (std::abs(z - c) < kRemovableGuard) return slope;
    return (rho(z) - rho_c) / (z - c);
  };
  const auto regular = integrate_singular(divided, -1.0, 1.0, EndpointExponents(0.5, -0.5), tol);
  return regular.value + std::numbers::pi * rho_c;
}

double scaled_functional(double k, double c, double tol) {
  require_first_family_range(k, c);
  return std::sqrt((1.0 + c) * (k - c) / ((1.0 - c) * (k + c))) * bigF(k, c, tol);
}

double amp_A(double k, double c) {
  require_first_family_range(k, c);
  return (c + k / c) * std::sqrt((1.0 - c) * (k + c) / ((1.0 + c) * (k - c)));
}

double amp_A_second(double k, double c) {
  require_second_family_range(k, c);
  return (c + k / c) * std::sqrt((c - 1.0) * (k + c) / ((c + 1.0) * (k - c)));
}

double family2_integral(double k, double c, double tol) {
  require_second_family_range(k, c);
  const double prefactor = (c - 1.0) * (k + c) / ((c + 1.0) * (k - c));
  auto smooth = [&](double x) {
    return (c * c + k) / (c * x + k) * std::sqrt(prefactor * (k - x) / (k + x)) / (x - c);
  };
  return integrate_singular(smooth, -1.0, 1.0, EndpointExponents(0.5, -0.5), tol).value;
}

double family1_root(double k, const SolverTolerances& tol) {
  if (!(k > 1.0)) throw DomainError("k must exceed 1, got " + fmt(k));
  auto F = [&](double c) { return bigF(k, c, tol.quad); };
  double lo = 0.5;
  double hi = 0.5;
  double f_lo = F(0.5);
  bool bracketed = false;
  try {
    if (f_lo > 0.0) {
      for (int j = 1; j <= kBracketHalvings && !bracketed; ++j) {
        const double c = 1.0 - 0.5 * std::ldexp(1.0, -j);
        const double value = F(c);
        if (value < 0.0) {
          hi = c;
          bracketed = true;
        } else {
          lo = c;
          f_lo = value;
        }
      }
    } else {
      for (int j = 1; j <= kBracketHalvings && !bracketed; ++j) {
        const double c = 0.5 * std::ldexp(1.0, -j);
        const double value = F(c);
        if (value > 0.0) {
          lo = c;
          f_lo = value;
          bracketed = true;
        } else {
          hi = c;
        }
      }
    }
  } catch (const AccuracyError& e) {
    throw BracketError("no sign change of F(" + fmt(k) + ", c) before quadrature lost accuracy: " +
                       e.what());
  }
  if (!bracketed) {
    throw BracketError("F(" + fmt(k) + ", c) does not change sign on (0, 1); k is beyond k_crit "
                       "or the quadrature is inaccurate");
  }
  return bisect(F, lo, hi, f_lo, tol.root);
}

double family2_root(double k, const SolverTolerances& tol) {
  if (!(k > 1.0)) throw DomainError("k must exceed 1, got " + fmt(k));
  auto phi = [&](double c) { return family2_integral(k, c, tol.quad) + std::numbers::pi; };
  const double first = kFamily2ScanOffset;
  const double last = (k - 1.0) - kFamily2ScanOffset;
  if (!(last > first)) throw BracketError("k too close to 1 for the second-family scan");
  const double ratio = std::pow(last / first, 1.0 / (kFamily2ScanPoints - 1));
  std::vector<double> grid(kFamily2ScanPoints);
  std::vector<double> values(kFamily2ScanPoints);
  for (int i = 0; i < kFamily2ScanPoints; ++i) {
    grid[i] = 1.0 + (i + 1 == kFamily2ScanPoints ? last : first * std::pow(ratio, i));
    values[i] = phi(grid[i]);
  }
  std::vector<int> changes;
  for (int i = 0; i + 1 < kFamily2ScanPoints; ++i) {
    if ((values[i] > 0.0) != (values[i + 1] > 0.0)) changes.push_back(i);
  }
  if (changes.empty()) {
    throw BracketError("second-family integral + pi has no sign change on (1, " + fmt(k) + ")");
  }
  if (changes.size() > 1) {
    std::string where;
    for (int i : changes) where += " (" + fmt(grid[i]) + ", " + fmt(grid[i + 1]) + ")";
    throw BracketError("second-family integral + pi changes sign " +
                       std::to_string(changes.size()) + " times:" + where);
  }
  const int i = changes.front();
  return bisect(phi, grid[i], grid[i + 1], values[i], tol.root);
}

AccessorySolution solve_family1(double k, const SolverTolerances& tol) {
  QuadParam param(k, Family::First);
  AccessorySolution sol{param};
  sol.c = family1_root(k, tol);
  sol.amplitude = amp_A(k, sol.c);
  sol.residual = bigF(k, sol.c, tol.quad);
  sol.tolerance = tol.functional;
  if (std::abs(sol.residual) > tol.functional) {
    throw AccuracyError("F(k, c) residual " + fmt(sol.residual) + " above tolerance", sol.residual,
                        tol.functional);
  }
  check_bethe(sol);
  const DevelopingMap map(k, Family::First, sol.c, sol.amplitude);
  sol.alpha = alpha_from_turn(map.corner_turn(tol.quad));
  sol.alpha_orbit = alpha_orbit_value(sol.alpha);
  sol.modulus = modulus_of_k(k);
  return sol;
}

AccessorySolution solve_family2(double k, const SolverTolerances& tol) {
  QuadParam param(k, Family::Second);
  AccessorySolution sol{param};
  sol.c = family2_root(k, tol);
  sol.amplitude = amp_A_second(k, sol.c);
  sol.residual = family2_integral(k, sol.c, tol.quad) + std::numbers::pi;
  sol.tolerance = tol.functional;
  if (std::abs(sol.residual) > tol.functional) {
    throw AccuracyError("second-family residual " + fmt(sol.residual) + " above tolerance",
                        sol.residual, tol.functional);
  }
  check_bethe(sol);
  const DevelopingMap map(k, Family::Second, sol.c, sol.amplitude);
  sol.alpha = alpha_from_turn(map.corner_turn(tol.quad));
  sol.alpha_orbit = alpha_orbit_value(sol.alpha);
  sol.alpha_ambiguous = true;
  sol.modulus = modulus_of_k(k);
  return sol;
}

AccessorySolution solve(double k, const SolverTolerances& tol) {
  const QuadParam param = QuadParam::classify(k);
  return param.family() == Family::First ? solve_family1(k, tol) : solve_family2(k, tol);
}

}  // namespace sphrect
