#include "sphrect/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphrect/belyi.hpp"
#include "sphrect/constants.hpp"
#include "sphrect/developing.hpp"
#include "sphrect/error.hpp"
#include "sphrect/modulus.hpp"

namespace sphrect::cli {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double round_significant(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

double to_double(const HighPrecision& v) { return static_cast<double>(v); }

json complex_json(const ComplexHP& z) { return json::array({to_double(z.real()), to_double(z.imag())}); }

json point_json(const std::optional<ComplexHP>& z) { return z ? complex_json(*z) : json("inf"); }

json solution_json(const AccessorySolution& sol) {
  json j;
  j["k"] = sol.param.k();
  j["family"] = std::string(to_string(sol.param.family()));
  j["c"] = sol.c;
  j["d"] = sol.d();
  j["amplitude"] = sol.amplitude;
  j["alpha"] = sol.alpha;
  j["alpha_orbit"] = sol.alpha_orbit;
  j["alpha_ambiguous"] = sol.alpha_ambiguous;
  j["modulus"] = sol.modulus;
  j["modulus_reciprocal"] = 1.0 / sol.modulus;
  j["residual"] = sol.residual;
  j["tolerance"] = sol.tolerance;
  return j;
}

json constants_json() {
  const CriticalConstants& cc = critical_constants();
  json j;
  j["kappa_prime_crit"] = round_significant(cc.kappa_prime_crit, 12);
  j["kappa_crit"] = round_significant(cc.kappa_crit, 12);
  j["k_crit"] = round_significant(cc.k_crit, 12);
  j["K_crit"] = round_significant(cc.K_crit, 12);
  j["lambda"] = round_significant(cc.lambda, 12);
  j["b1"] = round_significant(cc.b1, 12);
  return j;
}

json analysis_json(const RationalMap& map, const BelyiAnalysis& a) {
  json j;
  j["name"] = map.name;
  if (!map.variant.empty()) j["variant"] = map.variant;
  j["degree"] = map.degree();
  json params = json::array();
  for (const auto& p : map.parameters) {
    params.push_back({{"name", p.name}, {"value", to_double(p.value)}, {"expression", p.expression}});
  }
  j["parameters"] = params;
  json points = json::array();
  for (const auto& p : a.portrait.points) {
    points.push_back({{"point", point_json(p.point)}, {"local_degree", p.local_degree}, {"value", to_string(p.value)}});
  }
  j["portrait"] = points;
  json crit = json::array();
  for (const auto& cp : a.critical_points) {
    json c = {{"point", point_json(cp.point)},
              {"local_degree", cp.local_degree},
              {"nearest_value", to_string(cp.nearest)},
              {"deviation", cp.deviation}};
    c["value"] = cp.value_is_infinite ? json("inf") : complex_json(cp.value);
    crit.push_back(c);
  }
  j["critical_points"] = crit;
  j["ramification_total"] = a.portrait.ramification_total();
  j["riemann_hurwitz"] = a.portrait.riemann_hurwitz_holds();
  j["fibre_sums"] = {{"zero", a.portrait.fibre_sum(BelyiValue::Zero)},
                     {"one", a.portrait.fibre_sum(BelyiValue::One)},
                     {"infinity", a.portrait.fibre_sum(BelyiValue::Infinity)}};
  j["critical_points_in_portrait"] = a.critical_points_in_portrait;
  j["coprimality_margin"] = a.coprimality_margin;
  j["max_deviation"] = a.max_deviation;
  j["belyi"] = a.belyi;
  return j;
}

json conditions_json(const std::vector<ConditionCheck>& checks, bool* all_pass) {
  json arr = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    arr.push_back({{"condition", c.name}, {"residual", c.residual}, {"pass", c.pass}});
    ok = ok && c.pass;
  }
  if (all_pass) *all_pass = ok;
  return arr;
}

// Returns the report and whether every check passed.
std::pair<json, bool> belyi_report(int n, bool printed_t) {
  constexpr double tol = 1e-10;
  if (printed_t && n != 2) throw DomainError("--printed-t applies to example 2 only");
  const RationalMap map =
      example_map(n, printed_t ? Example2Coefficient::Printed : Example2Coefficient::Corrected);
  const BelyiAnalysis analysis = analyze_belyi(map, tol);
  json j = analysis_json(map, analysis);
  bool ok = analysis.belyi;

  if (n == 1) {
    const IntegerIdentity id = example1_identity();
    j["integer_identity"] = {{"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds}};
    ok = ok && id.holds;
  }
  if (n == 2) {
    bool conditions_ok = false;
    j["conditions"] = conditions_json(example2_conditions(map, tol), &conditions_ok);
    ok = ok && conditions_ok;
    // The other form of t is reported alongside.
    const RationalMap printed =
        example_map(2, printed_t ? Example2Coefficient::Corrected : Example2Coefficient::Printed);
    bool printed_ok = false;
    json p = analysis_json(printed, analyze_belyi(printed, tol));
    p["conditions"] = conditions_json(example2_conditions(printed, tol), &printed_ok);
    p["conditions_hold"] = printed_ok;
    j[printed_t ? "corrected_variant" : "printed_variant"] = p;
  }

  const ExampleConsistency ec = example_consistency(n);
  json cons = {{"modulus", ec.modulus},     {"k", ec.k},
               {"c", ec.c},                 {"alpha", ec.alpha},
               {"alpha_orbit", ec.alpha_orbit}, {"alpha_expected", ec.alpha_expected},
               {"alpha_error", ec.alpha_error}, {"orbit_error", ec.orbit_error}};
  if (ec.composition_residual) cons["composition_residual"] = *ec.composition_residual;
  j["solver_consistency"] = cons;
  j["verified"] = ok;
  return {j, ok};
}

json boundary_json(const BoundaryImageReport& r) {
  json j;
  j["k"] = r.k;
  j["family"] = std::string(to_string(r.family));
  j["alpha"] = r.alpha;
  json sides = json::array();
  for (const auto& s : r.sides) {
    sides.push_back({{"side", std::string(to_string(s.side))},
                     {"expected_circle", std::string(to_string(s.expected))},
                     {"max_distance", s.max_distance},
                     {"max_distance_real_line", s.max_distance_to[0]},
                     {"max_distance_line_alpha", s.max_distance_to[1]},
                     {"max_distance_unit_circle", s.max_distance_to[2]},
                     {"samples", s.samples}});
  }
  j["sides"] = sides;
  j["unit_circle_pair"] = {std::string(to_string(r.unit_circle_pair[0])),
                           std::string(to_string(r.unit_circle_pair[1]))};
  j["unit_circle_pair_opposite"] = r.unit_circle_pair_opposite;
  j["two_circle_witness"] = r.two_circle_witness;
  j["max_distance"] = r.max_distance;
  return j;
}

}  // namespace

SweepRow SweepRow::from_solution(const AccessorySolution& sol) {
  return {sol.param.k(), sol.c, sol.alpha, sol.modulus, sol.residual, sol.param.family()};
}

std::string format_row(const SweepRow& row) {
  return fmt17(row.k) + "," + fmt17(row.c) + "," + fmt17(row.alpha) + "," + fmt17(row.modulus) + "," +
         fmt17(row.residual) + "," + std::string(to_string(row.family));
}

SweepRow parse_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (fields.size() != 6) throw std::invalid_argument("sweep row needs 6 fields: " + line);
  auto num = [](const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number in sweep row: " + s);
    return v;
  };
  SweepRow row{num(fields[0]), num(fields[1]), num(fields[2]), num(fields[3]), num(fields[4]), Family::First};
  if (fields[5] == "second") {
    row.family = Family::Second;
  } else if (fields[5] != "first") {
    throw std::invalid_argument("unknown family: " + fields[5]);
  }
  return row;
}

std::vector<double> sweep_grid(double k_min, double k_max, int steps, std::vector<double>* skipped,
                               double skip_radius) {
  if (!(k_min > 1.0 && k_max > k_min)) throw DomainError("sweep needs 1 < k_min < k_max");
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  const double kc = k_crit();
  std::vector<double> grid;
  for (int i = 0; i < steps; ++i) {
    const double k = i == steps - 1 ? k_max : k_min + (k_max - k_min) * i / (steps - 1);
    if (std::abs(k - kc) <= skip_radius) {
      if (skipped) skipped->push_back(k);
      continue;
    }
    grid.push_back(k);
  }
  return grid;
}

std::vector<SweepRow> sweep(const std::vector<double>& grid, const SolverTolerances& tol) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double k : grid) rows.push_back(SweepRow::from_solution(solve(k, tol)));
  return rows;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot open " + path + " for writing");
  f << kSweepHeader << '\n';
  for (const auto& r : rows) f << format_row(r) << '\n';
  f.flush();
  if (!f) throw std::ios_base::failure("failed writing " + path);
}

std::vector<SweepRow> read_sweep_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  std::string line;
  if (!std::getline(f, line) || line != kSweepHeader) throw std::invalid_argument("missing sweep header in " + path);
  std::vector<SweepRow> rows;
  while (std::getline(f, line)) {
    if (!line.empty()) rows.push_back(parse_row(line));
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical rectangles with angles (3/2, 1/2, 3/2, 1/2)", "sphrect"};
  app.require_subcommand(1);
  SolverTolerances tol;
  app.add_option("--tol-quad", tol.quad, "absolute quadrature tolerance")->capture_default_str();
  app.add_option("--tol-root", tol.root, "bisection tolerance on c")->capture_default_str();

  app.add_subcommand("constants", "critical constants, 12 significant digits");

  double solve_k = 0.0;
  auto* solve_cmd = app.add_subcommand("solve", "solve for the accessory parameter");
  solve_cmd->add_option("--k", solve_k, "corner parameter, k > 1")->required();

  double k_min = 0.0, k_max = 0.0;
  int steps = 0;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep over a grid of k");
  sweep_cmd->add_option("--k-min", k_min)->required();
  sweep_cmd->add_option("--k-max", k_max)->required();
  sweep_cmd->add_option("--steps", steps)->required();
  sweep_cmd->add_option("--out", sweep_out)->required();

  double mod_k = 0.0, mod_K = 0.0;
  auto* mod_cmd = app.add_subcommand("modulus", "convert between k and the conformal modulus");
  auto* opt_k = mod_cmd->add_option("--k", mod_k, "corner parameter");
  auto* opt_K = mod_cmd->add_option("--K", mod_K, "conformal modulus");
  opt_k->excludes(opt_K);
  mod_cmd->require_option(1);

  int example = 0;
  bool strict = false;
  bool printed_t = false;
  auto* belyi_cmd = app.add_subcommand("belyi", "verify an example Belyi map");
  belyi_cmd->add_option("--example", example)->required()->check(CLI::Range(1, 3));
  belyi_cmd->add_flag("--strict", strict, "exit 4 if any check fails");
  belyi_cmd->add_flag("--printed-t", printed_t, "example 2 with t as printed (coefficient 1 on the root)");

  double bd_k = 0.0;
  int samples = 0;
  std::string svg_path;
  auto* bd_cmd = app.add_subcommand("boundary", "boundary image report");
  bd_cmd->add_option("--k", bd_k)->required();
  bd_cmd->add_option("--samples", samples)->required()->check(CLI::PositiveNumber);
  bd_cmd->add_option("--svg", svg_path, "also write an SVG picture");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (app.got_subcommand("constants")) {
      out << constants_json().dump(2) << '\n';
    } else if (solve_cmd->parsed()) {
      out << solution_json(solve(solve_k, tol)).dump(2) << '\n';
    } else if (sweep_cmd->parsed()) {
      std::vector<double> skipped;
      const auto grid = sweep_grid(k_min, k_max, steps, &skipped);
      for (double k : skipped) err << "skipping k = " << fmt17(k) << ": inside the forbidden zone around k_crit\n";
      write_sweep_csv(sweep_out, sweep(grid, tol));
    } else if (mod_cmd->parsed()) {
      const ModulusPair pair = opt_k->count() ? ModulusPair::from_k(mod_k) : ModulusPair::from_modulus(mod_K);
      json j = {{"k", pair.k}, {"modulus", pair.K_quad}, {"reciprocal", pair.reciprocal()}};
      if (opt_k->count()) {
        j["k_round_trip"] = k_of_modulus(pair.K_quad);
      } else {
        j["modulus_round_trip"] = modulus_of_k(pair.k);
      }
      out << j.dump(2) << '\n';
    } else if (belyi_cmd->parsed()) {
      auto [report, ok] = belyi_report(example, printed_t);
      out << report.dump(2) << '\n';
      if (strict && !ok) {
        err << "example " << example << " failed verification\n";
        return kVerificationFailure;
      }
    } else if (bd_cmd->parsed()) {
      const AccessorySolution sol = solve(bd_k, tol);
      out << boundary_json(boundary_check(sol, samples, tol.quad)).dump(2) << '\n';
      if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw std::ios_base::failure("cannot open " + svg_path + " for writing");
        f << boundary_svg(sol, samples, tol.quad);
        if (!f) throw std::ios_base::failure("failed writing " + svg_path);
      }
    }
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonconvergence;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    const bool explained = std::string(e.what()).find("forbidden") != std::string::npos;
    if (!explained && (solve_cmd->parsed() || sweep_cmd->parsed() || bd_cmd->parsed()))
      err << "k must exceed 1 and stay outside the forbidden interval: no quadrilateral exists at k = k_crit = "
        << fmt17(k_crit()) << ", i.e. for moduli in [K_crit, 1/K_crit]\n";
    return kUsage;
  } catch (const AccuracyError& e) {
    err << "nonconvergence: " << e.what() << " (best estimate " << fmt17(e.best_estimate()) << ", error "
        << fmt17(e.error_estimate()) << ")\n";
    return kNonconvergence;
  } catch (const BracketError& e) {
    err << "nonconvergence: " << e.what() << '\n';
    return kNonconvergence;
  } catch (const BelyiViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  }
  return kSuccess;
}

}  // namespace sphrect::cli
