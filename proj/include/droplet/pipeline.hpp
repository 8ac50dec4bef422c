#pragma once

#include <string>
#include <vector>

#include "droplet/kernels.hpp"
#include "droplet/numerics.hpp"

namespace droplet::pipeline {

struct SweepRow {
  double kappa = 0.0;
  double rho_ball = 0.0;
  double l_opt = 0.0;
  double sigma_cyl = 0.0;
  std::string regime;
};

struct SweepResult {
  std::vector<SweepRow> rows;                 // sorted by kappa
  std::vector<std::string> comment_lines;     // "# key=value" threshold markers
};

/// One row per kappa on the closed range [kappa_from, kappa_to]:
/// rho_ball for the family, and sigma_cyl minimized over the family's
/// admissible l (truncated kernels: l in (0, kappa/2]).  Rows are computed
/// concurrently and assembled in kappa order.
SweepResult sweep(KernelFamily family, double kappa_from, double kappa_to, int steps,
                  int n_quad, double tol);

std::string sweep_to_csv(const SweepResult& s);
SweepResult sweep_from_csv(const std::string& text);

struct ConvergeResult {
  numerics::ConvergenceReport report;
  double reference = 0.0;
  int reference_n = 0;
  bool machine_precision_limited = false;
};

/// Convergence study of the singularity-subtracted Yukawa quadrature at
/// (kappa, l) against a reference grid of reference_n subintervals.
ConvergeResult converge_yukawa(double kappa, double l, const std::vector<int>& n_list,
                               int reference_n);

std::string converge_to_csv(const ConvergeResult& c);

/// Writes text to path atomically (write to temp file, then rename).
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace droplet::pipeline
