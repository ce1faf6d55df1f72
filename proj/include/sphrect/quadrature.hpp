#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sphrect/error.hpp"

namespace sphrect {

inline constexpr double kDefaultQuadTolerance = 1e-10;
inline constexpr int kDefaultPanelBudget = 2000;

template <class T>
struct Integral {
  T value{};
  double error = 0.0;
  int panels = 0;
};

namespace detail {

// 10-point Gauss / 21-point Kronrod pair (QUADPACK qk21). Odd indices of
// kXgk are the Gauss abscissae.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
};

template <class T, class F>
Panel<T> gauss_kronrod21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T f_center = f(center);
  T kronrod = f_center * kWgk[10];
  T gauss{};
  double abs_sum = std::abs(f_center) * kWgk[10];
  std::array<T, 10> lower{};
  std::array<T, 10> upper{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    lower[j] = f(center - dx);
    upper[j] = f(center + dx);
    kronrod += kWgk[j] * (lower[j] + upper[j]);
    abs_sum += kWgk[j] * (std::abs(lower[j]) + std::abs(upper[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * (lower[j] + upper[j]);
  }
  const T mean = kronrod * 0.5;
  double asc = kWgk[10] * std::abs(f_center - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    asc += kWgk[j] * (std::abs(lower[j] - mean) + std::abs(upper[j] - mean));
  }
  const double scale = std::abs(half);
  asc *= scale;
  abs_sum *= scale;
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * abs_sum);
  return {a, b, kronrod * half, err};
}

}  // namespace detail

/// Globally adaptive G10/K21 quadrature of a real- or complex-valued function
/// over [a, b]. The panel with the largest error estimate is bisected until the
/// summed estimate is below `tol` or `panel_budget` panels exist; in the latter
/// case AccuracyError carries the best estimate.
template <class T, class F>
Integral<T> integrate_adaptive(F&& f, double a, double b, double tol = kDefaultQuadTolerance,
                               int panel_budget = kDefaultPanelBudget) {
  std::vector<detail::Panel<T>> panels;
  panels.reserve(static_cast<std::size_t>(panel_budget));
  panels.push_back(detail::gauss_kronrod21<T>(f, a, b));
  auto totals = [&panels] {
    T value{};
    double error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };
  auto [value, error] = totals();
  while (error > tol) {
    if (static_cast<int>(panels.size()) >= panel_budget) {
      throw AccuracyError("adaptive quadrature exhausted its panel budget (error estimate " +
                              std::to_string(error) + ")",
                          std::complex<double>(value), error);
    }
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const auto& l, const auto& r) { return l.error < r.error; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (!(mid > std::min(worst->a, worst->b) && mid < std::max(worst->a, worst->b))) {
      throw AccuracyError("adaptive quadrature reached the resolution limit of double precision",
                          std::complex<double>(value), error);
    }
    const double left_end = worst->a;
    const double right_end = worst->b;
    *worst = detail::gauss_kronrod21<T>(f, left_end, mid);
    panels.push_back(detail::gauss_kronrod21<T>(f, mid, right_end));
    std::tie(value, error) = totals();
  }
  return {value, error, static_cast<int>(panels.size())};
}

/// Exponents of the algebraic endpoint factors (x - a)^p (b - x)^q.
struct EndpointExponents {
  double p = 0.0;
  double q = 0.0;

  /// Throws DomainError unless p > -1 and q > -1.
  EndpointExponents(double left, double right);
};

/// Integral of f(x) (x - a)^p (b - x)^q over (a, b). Each half of the interval
/// is mapped by x = a + u^2 (mirrored at b) when 2p (resp. 2q) is an integer,
/// otherwise by x - a = u^(1/(1+p)), so that the weight is absorbed into the
/// Jacobian. Only f(x) times the weight needs to be smooth after the change of
/// variables; f itself may carry a compensating singular factor.
Integral<double> integrate_singular(const std::function<double(double)>& f, double a, double b,
                                    EndpointExponents exps, double tol = kDefaultQuadTolerance,
                                    int panel_budget = kDefaultPanelBudget);

/// A polyline in the closed upper half-plane. Real-axis legs that cross a
/// listed real singularity are rerouted over it by a semicircular arc in the
/// upper half-plane. Vertices that coincide with a listed singularity are
/// allowed; the adjacent legs are integrated with an endpoint substitution that
/// removes inverse-square-root behaviour there.
class ComplexPath {
 public:
  struct Segment {
    std::complex<double> from;
    std::complex<double> to;
    bool singular_from = false;
    bool singular_to = false;
  };
  /// zeta = center + radius * exp(i theta), theta running from theta_from to theta_to.
  struct Arc {
    double center = 0.0;
    double radius = 0.0;
    double theta_from = 0.0;
    double theta_to = 0.0;
  };
  using Piece = std::variant<Segment, Arc>;

  /// Throws ContractError if a vertex lies below the real axis, if fewer than two
  /// vertices are given, or if an off-axis leg comes within the detour radius of
  /// a singularity that is not one of its endpoints.
  ComplexPath(std::vector<std::complex<double>> vertices, std::vector<double> singularities,
              std::optional<double> detour_radius = std::nullopt);

  /// min(0.05, half the smallest gap between consecutive singularities).
  static double default_detour_radius(std::span<const double> singularities);

  const std::vector<std::complex<double>>& vertices() const noexcept { return vertices_; }
  const std::vector<double>& singularities() const noexcept { return singularities_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  double detour_radius() const noexcept { return detour_radius_; }

 private:
  void add_real_leg(double from, double to);
  void add_offaxis_leg(std::complex<double> from, std::complex<double> to);
  bool is_singularity(std::complex<double> z) const;

  std::vector<std::complex<double>> vertices_;
  std::vector<double> singularities_;
  double detour_radius_ = 0.0;
  std::vector<Piece> pieces_;
};

/// Contour integral of f along the path; the tolerance is shared evenly among
/// the path's pieces.
std::complex<double> integrate_path(const std::function<std::complex<double>(std::complex<double>)>& f,
                                    const ComplexPath& path, double tol = kDefaultQuadTolerance,
                                    int panel_budget = kDefaultPanelBudget);

}  // namespace sphrect
