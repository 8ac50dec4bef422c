#pragma once

#include <optional>

#include "droplet/enclosure.hpp"
#include "droplet/kernels.hpp"

namespace droplet::ball {

enum class BallRegime {
  RieszClosedForm,
  TruncSubcritical,
  TruncIntermediate,
  TruncRieszRegime,
  YukawaFlat,
  YukawaInterior,
};

const char* regime_name(BallRegime r);

struct BallRatioResult {
  double rho = 0.0;
  std::optional<Enclosure> rho_enclosure;  ///< populated by certified paths only
  std::optional<double> r_star;            ///< optimal radius; may be +inf
  std::optional<double> lambda_star;       ///< kappa/(2R) optimizer
  BallRegime regime = BallRegime::RieszClosedForm;
};

/// Riesz interaction energy of a ball of radius R:
///   I = 2^beta pi^(n-1/2)/(beta-1) * Gamma(beta/2)/(Gamma(n/2) Gamma((n+beta+1)/2)) R^(n+beta-1).
double riesz_ball_energy(int n, double alpha, double R);

/// Optimal ball energy/mass ratio for the Riesz kernel.
BallRatioResult rho_ball_riesz(int n, double alpha);

/// Truncated-Riesz interaction energy of a ball (incomplete-Beta closed form;
/// reduces to the Riesz value when kappa > 2R).
double trunc_ball_energy(int n, double alpha, double kappa, double R);

/// Optimal ball ratio in the truncated case, n = 3: three regimes split at
/// kappa_min = (beta/pi)^(1/beta) and kappa_max = (beta(beta+2)/(2 pi))^(1/beta).
BallRatioResult rho_ball_trunc(double alpha, double kappa);

double trunc_kappa_min(double alpha);
double trunc_kappa_max(double alpha);

/// Ball ratio as a function of lambda = kappa/(2R) for the truncated kernel
/// (n = 3), valid on [0, 1].
double trunc_f(double alpha, double kappa, double lambda);

/// Yukawa interaction energy of a ball (n = 3, alpha = 1):
///   I = R^5 2^6 pi^2 lambda^2 (1/3 - lambda(1-4 lambda^2)
///       - lambda(4 lambda^2+4 lambda+1) e^(-1/lambda)),  lambda = kappa/(2R).
/// For lambda > 10 the bracket is evaluated by its 1/lambda series to avoid
/// catastrophic cancellation.
double yukawa_ball_energy(double kappa, double R);

/// Energy/mass ratio of the ball parametrized by lambda = kappa/(2R), with
/// the continuous extension f(0) = 4 pi kappa^2, and its derivatives.
double yukawa_f(double kappa, double lambda);
double yukawa_f_prime(double kappa, double lambda);
double yukawa_f_second(double kappa, double lambda);

certified::Interval yukawa_f_interval(const certified::Interval& kappa,
                                      const certified::Interval& lambda);
certified::Interval yukawa_f_prime_interval(const certified::Interval& kappa,
                                            const certified::Interval& lambda);

/// Optimal ball ratio in the Yukawa case; lambda_* = 0 iff kappa <= (2 pi)^(-1/3).
BallRatioResult rho_ball_yukawa(double kappa);

double yukawa_flat_threshold();  // (2 pi)^(-1/3)

/// Family dispatch used by the CLI and sweeps.
BallRatioResult rho_ball(const Kernel& k);

}  // namespace droplet::ball
