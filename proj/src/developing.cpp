#include "sphrect/developing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sphrect/error.hpp"

namespace sphrect {

namespace {

using cd = std::complex<double>;

constexpr double kDetourFraction = 0.02;

// Angular distances on the Riemann sphere from f = exp(L) to the three great
// circles, computed from L so that |f| never overflows.
std::array<double, 3> circle_distances(cd L, double alpha) {
  const double rho = L.real();
  const double theta = L.imag();
  const double sech = std::isinf(std::cosh(rho)) ? 0.0 : 1.0 / std::cosh(rho);
  auto clamp_asin = [](double v) { return std::asin(std::min(1.0, std::abs(v))); };
  std::array<double, 3> out{};
  out[static_cast<int>(Circle::RealLine)] = clamp_asin(std::sin(theta) * sech);
  out[static_cast<int>(Circle::LineAlpha)] = clamp_asin(std::sin(theta - std::numbers::pi * alpha) * sech);
  out[static_cast<int>(Circle::UnitCircle)] = clamp_asin(std::tanh(rho));
  return out;
}

std::vector<double> side_samples(Side side, double k, int n) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = (j + 0.5) / n;
    switch (side) {
      case Side::MinusKToMinusOne: xs.push_back(-k + (k - 1.0) * t); break;
      case Side::MinusOneToOne: xs.push_back(-1.0 + 2.0 * t); break;
      case Side::OneToK: xs.push_back(1.0 + (k - 1.0) * t); break;
      case Side::Outer: break;
    }
  }
  if (side == Side::Outer) {
    const int positive = (n + 1) / 2;
    const int negative = n - positive;
    for (int j = 0; j < positive; ++j) xs.push_back(1.0 / ((j + 0.5) / positive / k));
    for (int j = 0; j < negative; ++j) xs.push_back(-1.0 / ((j + 0.5) / negative / k));
  }
  return xs;
}

Circle expected_circle(Side side) {
  switch (side) {
    case Side::MinusKToMinusOne:
    case Side::OneToK: return Circle::UnitCircle;
    case Side::MinusOneToOne: return Circle::LineAlpha;
    case Side::Outer: return Circle::RealLine;
  }
  return Circle::RealLine;
}

}  // namespace

DevelopingMap::DevelopingMap(double k, Family family, double c, double amplitude)
    : k_(k), family_(family), c_(c), amplitude_(amplitude) {
  if (!(k > 1.0)) throw DomainError("developing map needs k > 1");
  if (family == Family::First && !(c > 0.0 && c < 1.0)) {
    throw DomainError("first-family accessory parameter must lie in (0, 1)");
  }
  if (family == Family::Second && !(c > 1.0 && c < k)) {
    throw DomainError("second-family accessory parameter must lie in (1, k)");
  }
  if (!(amplitude > 0.0)) throw DomainError("amplitude must be positive");
  singularities_ = {d(), -k, -1.0, c, 1.0, k};
  std::sort(singularities_.begin(), singularities_.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < singularities_.size(); ++i) {
    gap = std::min(gap, singularities_[i + 1] - singularities_[i]);
  }
  detour_radius_ = kDetourFraction * gap;
}

DevelopingMap::DevelopingMap(const AccessorySolution& sol)
    : DevelopingMap(sol.param.k(), sol.param.family(), sol.c, sol.amplitude) {}

cd DevelopingMap::integrand(cd zeta) const {
  // Principal square roots of the linear factors have their cuts below the
  // real axis; on it the imaginary part is +0, which selects the limit from above.
  const cd s = std::sqrt(zeta + 1.0) * std::sqrt(zeta - k_) / (std::sqrt(zeta - 1.0) * std::sqrt(zeta + k_));
  return amplitude_ * s / ((zeta - c_) * (zeta - d()));
}

void DevelopingMap::check_target(cd z) const {
  if (z.imag() < 0.0) throw DomainError("L is evaluated in the closed upper half-plane only");
  if (z.imag() == 0.0 && (z.real() == c_ || z.real() == d())) {
    throw SingularPointError("L has a logarithmic singularity at the pole " + std::to_string(z.real()));
  }
}

ComplexPath DevelopingMap::path_to(cd z, double height) const {
  check_target(z);
  double radius = detour_radius_;
  for (double s : singularities_) {
    const double dist = std::abs(z - cd(s, 0.0));
    if (dist > 0.0) radius = std::min(radius, 0.5 * dist);
  }
  const cd base(k_, 0.0);
  if (z.imag() == 0.0) return ComplexPath({base, z}, singularities_, radius);
  const double h = std::max(height, z.imag());
  return ComplexPath({base, cd(k_, h), cd(z.real(), h), z}, singularities_, radius);
}

cd DevelopingMap::log_value_along(const ComplexPath& path, double tol) const {
  return integrate_path([this](cd zeta) { return integrand(zeta); }, path, tol);
}

cd DevelopingMap::log_value(cd z, double tol) const {
  check_target(z);
  if (z == cd(k_, 0.0)) return {0.0, 0.0};
  return log_value_along(path_to(z), tol);
}

double DevelopingMap::corner_turn(double tol) const {
  return log_value(cd(1.0, 0.0), tol).imag() / std::numbers::pi;
}

cd L_eval(const AccessorySolution& sol, cd z, double tol) {
  return DevelopingMap(sol).log_value(z, tol);
}

double alpha_from_turn(double turn) {
  double a = turn - std::floor(turn);
  if (a >= 1.0) a = 0.0;
  return a;
}

double alpha_orbit_value(double alpha) { return std::min(alpha, 1.0 - alpha); }

double extract_alpha(const AccessorySolution& sol, double tol) {
  return alpha_from_turn(DevelopingMap(sol).corner_turn(tol));
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::MinusKToMinusOne: return "(-k,-1)";
    case Side::MinusOneToOne: return "(-1,1)";
    case Side::OneToK: return "(1,k)";
    case Side::Outer: return "(k,inf)u(-inf,-k)";
  }
  return "";
}

std::string_view to_string(Circle circle) {
  switch (circle) {
    case Circle::RealLine: return "real_line";
    case Circle::LineAlpha: return "line_alpha";
    case Circle::UnitCircle: return "unit_circle";
  }
  return "";
}

BoundaryImageReport boundary_check(const AccessorySolution& sol, int samples_per_side, double tol) {
  if (samples_per_side < 1) throw DomainError("boundary_check needs at least one sample per side");
  const DevelopingMap map(sol);
  BoundaryImageReport report;
  report.family = sol.param.family();
  report.k = sol.param.k();
  report.alpha = sol.alpha;

  constexpr std::array<Side, 4> kSides = {Side::MinusKToMinusOne, Side::MinusOneToOne, Side::OneToK,
                                          Side::Outer};
  // Largest over samples of the smaller distance to each pair of circles.
  std::array<double, 3> pair_spread{};  // (real, alpha), (real, unit), (alpha, unit)
  for (std::size_t i = 0; i < kSides.size(); ++i) {
    SideImage image;
    image.side = kSides[i];
    image.expected = expected_circle(image.side);
    for (double x : side_samples(image.side, report.k, samples_per_side)) {
      if (x == map.c() || x == map.d()) continue;
      const auto dist = circle_distances(map.log_value(cd(x, 0.0), tol), sol.alpha);
      for (int j = 0; j < 3; ++j) image.max_distance_to[j] = std::max(image.max_distance_to[j], dist[j]);
      pair_spread[0] = std::max(pair_spread[0], std::min(dist[0], dist[1]));
      pair_spread[1] = std::max(pair_spread[1], std::min(dist[0], dist[2]));
      pair_spread[2] = std::max(pair_spread[2], std::min(dist[1], dist[2]));
      ++image.samples;
    }
    image.max_distance = image.max_distance_to[static_cast<int>(image.expected)];
    report.max_distance = std::max(report.max_distance, image.max_distance);
    report.sides[i] = image;
  }
  report.two_circle_witness = *std::min_element(pair_spread.begin(), pair_spread.end());

  std::array<std::size_t, 4> order = {0, 1, 2, 3};
  const int unit = static_cast<int>(Circle::UnitCircle);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return report.sides[l].max_distance_to[unit] < report.sides[r].max_distance_to[unit];
  });
  report.unit_circle_pair = {report.sides[std::min(order[0], order[1])].side,
                             report.sides[std::max(order[0], order[1])].side};
  // Sides i and i + 2 are opposite in the cyclic order.
  report.unit_circle_pair_opposite = (std::max(order[0], order[1]) - std::min(order[0], order[1])) == 2;
  return report;
}

std::string boundary_svg(const AccessorySolution& sol, int samples_per_side, double tol) {
  const DevelopingMap map(sol);
  constexpr double kView = 3.0;
  constexpr double kScale = 100.0;
  auto px = [](double v) { return kScale * (v + kView); };
  auto py = [](double v) { return kScale * (kView - v); };

  std::ostringstream svg;
  svg.precision(6);
  const double size = 2.0 * kView * kScale;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"" << kScale
      << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  svg << "<line x1=\"" << px(-kView) << "\" y1=\"" << py(0) << "\" x2=\"" << px(kView) << "\" y2=\""
      << py(0) << "\" stroke=\"#bbbbbb\"/>\n";
  const double angle = std::numbers::pi * sol.alpha;
  svg << "<line x1=\"" << px(-kView * std::cos(angle)) << "\" y1=\"" << py(-kView * std::sin(angle))
      << "\" x2=\"" << px(kView * std::cos(angle)) << "\" y2=\"" << py(kView * std::sin(angle))
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";

  constexpr std::array<const char*, 4> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  constexpr std::array<Side, 4> kSides = {Side::MinusKToMinusOne, Side::MinusOneToOne, Side::OneToK,
                                          Side::Outer};
  for (std::size_t i = 0; i < kSides.size(); ++i) {
    std::vector<double> xs = side_samples(kSides[i], sol.param.k(), samples_per_side);
    // The unbounded side is drawn as two polylines, one per half-line.
    if (kSides[i] == Side::Outer) std::sort(xs.begin(), xs.end());
    std::string points;
    auto flush = [&] {
      if (!points.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"" << kColors[i] << "\" stroke-width=\"2\" points=\""
            << points << "\"/>\n";
      }
      points.clear();
    };
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const double x = xs[j];
      if (j > 0 && (x > 0.0) != (xs[j - 1] > 0.0)) flush();
      if (x == map.c() || x == map.d()) continue;
      const cd L = map.log_value(cd(x, 0.0), tol);
      if (L.real() > std::log(kView)) {
        flush();
        continue;
      }
      const cd f = std::exp(L);
      std::ostringstream pt;
      pt.precision(6);
      pt << px(f.real()) << ',' << py(f.imag()) << ' ';
      points += pt.str();
    }
    flush();
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sphrect
