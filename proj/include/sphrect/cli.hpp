#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sphrect/accessory.hpp"

namespace sphrect::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoFailure = 1,
  kUsage = 2,
  kNonconvergence = 3,
  kVerificationFailure = 4,
};

struct SweepRow {
  double k = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  double modulus = 0.0;
  double residual = 0.0;
  Family family = Family::First;

  static SweepRow from_solution(const AccessorySolution& sol);
  bool operator==(const SweepRow&) const = default;
};

inline constexpr const char* kSweepHeader = "k,c,alpha,modulus,residual,family";

/// One CSV line without the newline; reals use 17 significant digits.
std::string format_row(const SweepRow& row);
/// Inverse of format_row. Throws std::invalid_argument on malformed input.
SweepRow parse_row(const std::string& line);

/// Grid points of a sweep with those inside the forbidden zone around k_crit
/// (half-width skip_radius) removed. `skipped` receives the removed points.
std::vector<double> sweep_grid(double k_min, double k_max, int steps, std::vector<double>* skipped = nullptr,
                               double skip_radius = 1e-6);

std::vector<SweepRow> sweep(const std::vector<double>& grid, const SolverTolerances& tol = {});

/// Writes header plus rows. Throws std::ios_base::failure if the file cannot be written.
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(const std::string& path);

/// Runs the command line `args` (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphrect::cli
