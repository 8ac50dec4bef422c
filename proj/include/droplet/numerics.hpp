#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "droplet/interval.hpp"

namespace droplet::numerics {

/// Composite Simpson quadrature on [a, b] with n (even) subintervals.
/// Exact for cubics.
double simpson(const std::function<double(double)>& f, double a, double b, int n);

struct NewtonResult {
  double root = 0.0;
  int iterations = 0;
};

/// Newton iteration with the stopping rule |f(x)| <= tol or |step| <= tol.
/// When a bracket with a sign change is supplied, iterates falling outside it
/// are replaced by bisection steps, which guarantees termination on
/// continuous f.  Non-convergence within max_iter throws std::runtime_error.
NewtonResult newton(const std::function<double(double)>& f,
                    const std::function<double(double)>& df, double x0, double tol,
                    int max_iter,
                    std::optional<std::pair<double, double>> bracket = std::nullopt);

/// true iff f(a) * f(b) < 0.
bool sign_change_bracket(const std::function<double(double)>& f, double a, double b);

/// Certified variant: nullopt unless both signs are provably determined.
std::optional<bool> sign_change_bracket_certified(
    const std::function<certified::Interval(const certified::Interval&)>& f,
    const certified::Interval& a, const certified::Interval& b);

struct MinimizeResult {
  double x = 0.0;
  double fx = 0.0;
};

/// Golden-section search for a unimodal f on [a, b]; refines the bracket to
/// width <= tol and returns its midpoint.  Never evaluates outside [a, b].
MinimizeResult minimize_1d(const std::function<double(double)>& f, double a, double b,
                           double tol);

struct ConvergenceRow {
  double h = 0.0;
  double error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double fitted_order = 0.0;  ///< least-squares slope of log error vs log h
};

/// Empirical order study: Simpson errors against `reference` for each n in
/// n_list (increasing).  Rows with zero error are excluded from the fit.
ConvergenceReport convergence_study(const std::function<double(double)>& f, double a,
                                    double b, const std::vector<int>& n_list,
                                    double reference);

}  // namespace droplet::numerics
