#include "droplet/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace droplet::numerics {

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (!(b > a)) throw std::domain_error("simpson requires b > a");
  if (n <= 0 || n % 2 != 0) throw std::domain_error("simpson requires even n > 0");
  const double h = (b - a) / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n; i += 2) odd += f(a + i * h);
  for (int i = 2; i < n; i += 2) even += f(a + i * h);
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

NewtonResult newton(const std::function<double(double)>& f,
                    const std::function<double(double)>& df, double x0, double tol,
                    int max_iter, std::optional<std::pair<double, double>> bracket) {
  if (!(tol > 0.0)) throw std::domain_error("newton requires tol > 0");
  double lo = 0.0, hi = 0.0, flo = 0.0;
  if (bracket) {
    lo = bracket->first;
    hi = bracket->second;
    flo = f(lo);
    double fhi = f(hi);
    if (!(flo * fhi < 0.0)) throw std::domain_error("newton bracket has no sign change");
  }
  double x = x0;
  for (int it = 1; it <= max_iter; ++it) {
    const double fx = f(x);
    if (std::abs(fx) <= tol) return {x, it};
    const double d = df(x);
    double step = (d != 0.0 && std::isfinite(d)) ? fx / d : std::numeric_limits<double>::quiet_NaN();
    double next = x - step;
    if (bracket) {
      // keep the sign-changing bracket current, bisect on bad steps
      if (fx * flo > 0.0) lo = x;
      else hi = x;
      if (!std::isfinite(next) || next <= std::min(lo, hi) || next >= std::max(lo, hi))
        next = 0.5 * (lo + hi);
    } else if (!std::isfinite(next)) {
      throw std::runtime_error("newton: derivative vanished away from a root");
    }
    if (std::abs(next - x) <= tol) {
      if (std::abs(f(next)) > std::sqrt(tol) && !bracket)
        throw std::runtime_error("newton stalled without reaching residual tolerance");
      return {next, it};
    }
    x = next;
  }
  throw std::runtime_error("newton did not converge within max_iter");
}

bool sign_change_bracket(const std::function<double(double)>& f, double a, double b) {
  if (!(a < b)) throw std::domain_error("sign_change_bracket requires a < b");
  return f(a) * f(b) < 0.0;
}

std::optional<bool> sign_change_bracket_certified(
    const std::function<certified::Interval(const certified::Interval&)>& f,
    const certified::Interval& a, const certified::Interval& b) {
  certified::Interval fa = f(a);
  certified::Interval fb = f(b);
  if (fa.contains_zero() || fb.contains_zero()) return std::nullopt;
  return fa.is_positive() != fb.is_positive();
}

MinimizeResult minimize_1d(const std::function<double(double)>& f, double a, double b,
                           double tol) {
  if (!(a < b)) throw std::domain_error("minimize_1d requires a < b");
  if (!(tol > 0.0)) throw std::domain_error("minimize_1d requires tol > 0");
  constexpr double invphi = 0.6180339887498948482;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

ConvergenceReport convergence_study(const std::function<double(double)>& f, double a,
                                    double b, const std::vector<int>& n_list,
                                    double reference) {
  ConvergenceReport rep;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw std::domain_error("convergence_study requires increasing n_list");
    const double h = (b - a) / n_list[i];
    rep.rows.push_back({h, std::abs(simpson(f, a, b, n_list[i]) - reference)});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& r : rep.rows) {
    if (r.error <= 0.0) continue;  // machine-precision-limited rows
    const double lx = std::log(r.h), ly = std::log(r.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  rep.fitted_order = (m >= 2) ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
  return rep;
}

}  // namespace droplet::numerics
