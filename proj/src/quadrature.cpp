#include "sphrect/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace sphrect {

namespace {

using cd = std::complex<double>;

bool is_half_integer_multiple(double p) { return std::abs(2.0 * p - std::round(2.0 * p)) < 1e-14; }

double distance_to_segment(cd point, cd from, cd to) {
  const cd edge = to - from;
  const double len2 = std::norm(edge);
  if (len2 == 0.0) return std::abs(point - from);
  const double t = std::clamp(((point - from) * std::conj(edge)).real() / len2, 0.0, 1.0);
  return std::abs(point - (from + t * edge));
}

}  // namespace

EndpointExponents::EndpointExponents(double left, double right) : p(left), q(right) {
  if (!(left > -1.0) || !(right > -1.0)) {
    throw DomainError("endpoint exponents must exceed -1 for integrability");
  }
}

Integral<double> integrate_singular(const std::function<double(double)>& f, double a, double b,
                                    EndpointExponents exps, double tol, int panel_budget) {
  if (!(a < b)) throw DomainError("integrate_singular requires a < b");
  const double mid = 0.5 * (a + b);
  const double p = exps.p;
  const double q = exps.q;

  Integral<double> left;
  if (is_half_integer_multiple(p)) {
    const double power = 2.0 * p + 1.0;
    left = integrate_adaptive<double>(
        [&](double u) {
          const double x = a + u * u;
          return 2.0 * f(x) * std::pow(u, power) * std::pow(b - x, q);
        },
        0.0, std::sqrt(mid - a), 0.5 * tol, panel_budget);
  } else {
    const double s = 1.0 / (1.0 + p);
    left = integrate_adaptive<double>(
        [&](double u) {
          const double x = a + std::pow(u, s);
          return s * f(x) * std::pow(b - x, q);
        },
        0.0, std::pow(mid - a, 1.0 + p), 0.5 * tol, panel_budget);
  }

  Integral<double> right;
  if (is_half_integer_multiple(q)) {
    const double power = 2.0 * q + 1.0;
    right = integrate_adaptive<double>(
        [&](double u) {
          const double x = b - u * u;
          return 2.0 * f(x) * std::pow(u, power) * std::pow(x - a, p);
        },
        0.0, std::sqrt(b - mid), 0.5 * tol, panel_budget);
  } else {
    const double s = 1.0 / (1.0 + q);
    right = integrate_adaptive<double>(
        [&](double u) {
          const double x = b - std::pow(u, s);
          return s * f(x) * std::pow(x - a, p);
        },
        0.0, std::pow(b - mid, 1.0 + q), 0.5 * tol, panel_budget);
  }
  return {left.value + right.value, left.error + right.error, left.panels + right.panels};
}

ComplexPath::ComplexPath(std::vector<cd> vertices, std::vector<double> singularities,
                         std::optional<double> detour_radius)
    : vertices_(std::move(vertices)), singularities_(std::move(singularities)) {
  if (vertices_.size() < 2) throw ContractError("a path needs at least two vertices");
  for (const cd& v : vertices_) {
    if (v.imag() < 0.0) throw ContractError("path vertices must lie in the closed upper half-plane");
  }
  std::sort(singularities_.begin(), singularities_.end());
  singularities_.erase(std::unique(singularities_.begin(), singularities_.end()),
                       singularities_.end());
  detour_radius_ = detour_radius.value_or(default_detour_radius(singularities_));
  if (!(detour_radius_ > 0.0)) throw ContractError("detour radius must be positive");

  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const cd from = vertices_[i];
    const cd to = vertices_[i + 1];
    if (from == to) continue;
    if (from.imag() == 0.0 && to.imag() == 0.0) {
      add_real_leg(from.real(), to.real());
    } else {
      add_offaxis_leg(from, to);
    }
  }
}

double ComplexPath::default_detour_radius(std::span<const double> singularities) {
  std::vector<double> sorted(singularities.begin(), singularities.end());
  std::sort(sorted.begin(), sorted.end());
  double radius = 0.05;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const double gap = sorted[i + 1] - sorted[i];
    if (gap > 0.0) radius = std::min(radius, 0.5 * gap);
  }
  return radius;
}

bool ComplexPath::is_singularity(cd z) const {
  if (z.imag() != 0.0) return false;
  return std::binary_search(singularities_.begin(), singularities_.end(), z.real());
}

void ComplexPath::add_real_leg(double from, double to) {
  const double dir = to > from ? 1.0 : -1.0;
  std::vector<double> crossed;
  for (double s : singularities_) {
    if (s > std::min(from, to) && s < std::max(from, to)) crossed.push_back(s);
  }
  if (dir < 0.0) std::reverse(crossed.begin(), crossed.end());

  cd cursor(from, 0.0);
  bool cursor_singular = is_singularity(cursor);
  for (std::size_t i = 0; i < crossed.size(); ++i) {
    const double s = crossed[i];
    const double prev = i == 0 ? from : crossed[i - 1];
    const double next = i + 1 == crossed.size() ? to : crossed[i + 1];
    const double r = std::min({detour_radius_, 0.5 * std::abs(s - prev), 0.5 * std::abs(next - s)});
    pieces_.emplace_back(Segment{cursor, cd(s - dir * r, 0.0), cursor_singular, false});
    // Rightward travel goes over the top from theta = pi down to 0.
    pieces_.emplace_back(dir > 0.0 ? Arc{s, r, std::numbers::pi, 0.0}
                                   : Arc{s, r, 0.0, std::numbers::pi});
    cursor = cd(s + dir * r, 0.0);
    cursor_singular = false;
  }
  const cd end(to, 0.0);
  pieces_.emplace_back(Segment{cursor, end, cursor_singular, is_singularity(end)});
}

void ComplexPath::add_offaxis_leg(cd from, cd to) {
  for (double s : singularities_) {
    const cd point(s, 0.0);
    if (point == from || point == to) continue;
    if (distance_to_segment(point, from, to) < detour_radius_) {
      throw ContractError("path leg passes within the detour radius of the singularity at " +
                          std::to_string(s));
    }
  }
  pieces_.emplace_back(Segment{from, to, is_singularity(from), is_singularity(to)});
}

cd integrate_path(const std::function<cd(cd)>& f, const ComplexPath& path, double tol,
                  int panel_budget) {
  const auto& pieces = path.pieces();
  if (pieces.empty()) return {0.0, 0.0};
  const double piece_tol = tol / static_cast<double>(pieces.size());
  cd total(0.0, 0.0);
  for (const auto& piece : pieces) {
    if (const auto* seg = std::get_if<ComplexPath::Segment>(&piece)) {
      const cd from = seg->from;
      const cd edge = seg->to - seg->from;
      auto at = [&](double t) { return f(from + t * edge) * edge; };
      if (!seg->singular_from && !seg->singular_to) {
        total += integrate_adaptive<cd>(at, 0.0, 1.0, piece_tol, panel_budget).value;
        continue;
      }
      const double half_tol = 0.5 * piece_tol;
      const double u_max = std::sqrt(0.5);
      if (seg->singular_from) {
        total += integrate_adaptive<cd>([&](double u) { return at(u * u) * (2.0 * u); }, 0.0, u_max,
                                        half_tol, panel_budget)
                     .value;
      } else {
        total += integrate_adaptive<cd>(at, 0.0, 0.5, half_tol, panel_budget).value;
      }
      if (seg->singular_to) {
        total += integrate_adaptive<cd>([&](double u) { return at(1.0 - u * u) * (2.0 * u); }, 0.0,
                                        u_max, half_tol, panel_budget)
                     .value;
      } else {
        total += integrate_adaptive<cd>(at, 0.5, 1.0, half_tol, panel_budget).value;
      }
    } else {
      const auto& arc = std::get<ComplexPath::Arc>(piece);
      auto on_arc = [&](double theta) {
        const cd rotor = std::polar(1.0, theta);
        return f(arc.center + arc.radius * rotor) * (cd(0.0, arc.radius) * rotor);
      };
      total += integrate_adaptive<cd>(on_arc, arc.theta_from, arc.theta_to, piece_tol, panel_budget)
                   .value;
    }
  }
  return total;
}

}  // namespace sphrect
