#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "droplet/enclosure.hpp"
#include "droplet/rational.hpp"

namespace droplet::certify {

enum class Verdict { Certified, Inconclusive };

const char* verdict_name(Verdict v);

/// Full evidence for one certified inequality rho_cyl < rho_ball: the two
/// enclosures, the bracket/sign check where applicable, every intermediate
/// enclosure of the computation, and the verdict.
///
/// verdict == Certified requires provable strict separation
/// (upper_bound_cyl.hi < lower_bound_ball.lo) AND both enclosure widths
/// within width_tolerance; otherwise Inconclusive.
struct CertificationReport {
  std::string kernel;
  std::map<std::string, std::string> params;  // exact rational inputs
  Enclosure lower_bound_ball;
  Enclosure upper_bound_cyl;
  std::optional<std::pair<double, double>> bracket;
  std::optional<bool> sign_check;
  Verdict verdict = Verdict::Inconclusive;
  unsigned precision_bits = 0;
  double wall_time_s = 0.0;
  double width_tolerance = 1e-4;
  std::vector<std::pair<std::string, Enclosure>> intermediates;

  std::string to_json() const;
  static CertificationReport from_json(const std::string& text);
};

/// Truncated Coulomb case (n = 3, alpha = 1): enclosures of
/// sigma_cyl(kappa/2) via the exact Catalan form and of rho_ball = f(lambda*)
/// with lambda* = sqrt((beta+2)/pi (pi/beta - 1/kappa^beta)).  The regime
/// condition kappa_min < kappa < kappa_max is itself verified in certified
/// arithmetic before the comparison.
CertificationReport certify_trunc_coulomb(const Rational& kappa, unsigned precision_bits,
                                          double width_tolerance = 1e-4);

/// Yukawa case (n = 3, alpha = 1): certified sign check f'(a) f'(b) < 0 on
/// the supplied bracket, tangent-line lower bound
/// rho_ball >= min(T_a(b), T_b(a)), and the certified Riemann upper bound for
/// sigma_cyl(l) on an N-cell grid.
CertificationReport certify_yukawa(const Rational& kappa, const Rational& l, long N,
                                   const Rational& bracket_lo, const Rational& bracket_hi,
                                   unsigned precision_bits, double width_tolerance = 1e-4);

struct RieszRatioResult {
  double tau = 0.0;        ///< rho_cyl / rho_ball
  long long base_num = 0;  ///< exact rational r with tau = (r)^(1/beta)
  long long base_den = 1;
  int beta = 0;
};

/// Exact rational form of (rho_cyl/rho_ball)^beta for integer alpha in (1, n),
/// cross-checked against the Gamma-function expression.
RieszRatioResult riesz_ratio(int n, int alpha);

}  // namespace droplet::certify
