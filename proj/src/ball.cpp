#include "droplet/ball.hpp"

#include <cmath>
#include <limits>

#include "droplet/geometry.hpp"
#include "droplet/numerics.hpp"
#include "droplet/specfun.hpp"

namespace droplet {

double unit_ball_volume(int n) {
  return std::pow(M_PI, n / 2.0) / specfun::gamma_fn(1.0 + n / 2.0);
}

double unit_sphere_area(int k) {
  return 2.0 * std::pow(M_PI, (k + 1) / 2.0) / specfun::gamma_fn((k + 1) / 2.0);
}

namespace ball {

using certified::Interval;

const char* regime_name(BallRegime r) {
  switch (r) {
    case BallRegime::RieszClosedForm: return "RieszClosedForm";
    case BallRegime::TruncSubcritical: return "TruncSubcritical";
    case BallRegime::TruncIntermediate: return "TruncIntermediate";
    case BallRegime::TruncRieszRegime: return "TruncRieszRegime";
    case BallRegime::YukawaFlat: return "YukawaFlat";
    case BallRegime::YukawaInterior: return "YukawaInterior";
  }
  return "?";
}

double riesz_ball_energy(int n, double alpha, double R) {
  if (n < 2) throw std::domain_error("riesz_ball_energy requires n >= 2");
  if (!(alpha > 0.0 && alpha < n)) throw std::domain_error("riesz_ball_energy requires 0 < alpha < n");
  if (!(R > 0.0)) throw std::domain_error("riesz_ball_energy requires R > 0");
  const double beta = n + 1.0 - alpha;
  return std::pow(2.0, beta) * std::pow(M_PI, n - 0.5) / (beta - 1.0) *
         specfun::gamma_fn(beta / 2.0) /
         (specfun::gamma_fn(n / 2.0) * specfun::gamma_fn((n + beta + 1.0) / 2.0)) *
         std::pow(R, n + beta - 1.0);
}

BallRatioResult rho_ball_riesz(int n, double alpha) {
  const double beta = n + 1.0 - alpha;
  const double i1 = riesz_ball_energy(n, alpha, 1.0);
  const double vol = unit_ball_volume(n);
  const double r_star = std::pow(n * vol / ((beta - 1.0) * i1), 1.0 / beta);
  BallRatioResult res;
  res.rho = n * beta / (beta - 1.0) / r_star;
  res.r_star = r_star;
  res.regime = BallRegime::RieszClosedForm;
  return res;
}

double trunc_ball_energy(int n, double alpha, double kappa, double R) {
  if (!(kappa > 0.0)) throw std::domain_error("trunc_ball_energy requires kappa > 0");
  if (!(R > 0.0)) throw std::domain_error("trunc_ball_energy requires R > 0");
  if (kappa > 2.0 * R) return riesz_ball_energy(n, alpha, R);
  const double beta = n + 1.0 - alpha;
  const double lam = kappa / (2.0 * R);
  const double bracket =
      std::pow(lam, 1.0 - beta) *
          specfun::beta_incomplete(lam * lam, (beta + 2.0) / 2.0, (n - 1.0) / 2.0) -
      2.0 * (beta - 1.0) * lam / (n - 1.0) * std::pow(1.0 - lam * lam, (n - 1.0) / 2.0) +
      beta * specfun::beta_incomplete(1.0 - lam * lam, (n - 1.0) / 2.0, 1.5);
  const double ratio = n * (n - 1.0) * unit_ball_volume(n - 1) *
                       std::pow(kappa, beta - 1.0) / (beta * (beta - 1.0)) * bracket;
  return ratio * unit_ball_volume(n) * std::pow(R, n);
}

double trunc_kappa_min(double alpha) {
  const double beta = 4.0 - alpha;
  return std::pow(beta / M_PI, 1.0 / beta);
}

double trunc_kappa_max(double alpha) {
  const double beta = 4.0 - alpha;
  return std::pow(beta * (beta + 2.0) / (2.0 * M_PI), 1.0 / beta);
}

double trunc_f(double alpha, double kappa, double lambda) {
  const double beta = 4.0 - alpha;
  return 6.0 * lambda / kappa +
         6.0 * M_PI * std::pow(kappa, beta - 1.0) *
             (lambda * lambda * lambda / (3.0 * (beta + 2.0)) - lambda / beta +
              2.0 / (3.0 * (beta - 1.0)));
}

BallRatioResult rho_ball_trunc(double alpha, double kappa) {
  if (!(alpha > 0.0 && alpha < 3.0)) throw std::domain_error("rho_ball_trunc requires 0 < alpha < 3");
  if (!(kappa > 0.0)) throw std::domain_error("rho_ball_trunc requires kappa > 0");
  const double beta = 4.0 - alpha;
  BallRatioResult res;
  if (kappa <= trunc_kappa_min(alpha)) {
    res.rho = 4.0 * M_PI * std::pow(kappa, beta - 1.0) / (beta - 1.0);
    res.lambda_star = 0.0;
    res.r_star = std::numeric_limits<double>::infinity();  // infimum not attained
    res.regime = BallRegime::TruncSubcritical;
    return res;
  }
  if (kappa >= trunc_kappa_max(alpha)) {
    BallRatioResult riesz = rho_ball_riesz(3, alpha);
    res.rho = riesz.rho;
    res.r_star = riesz.r_star;
    res.lambda_star = kappa / (2.0 * *riesz.r_star);
    res.regime = BallRegime::TruncRieszRegime;
    return res;
  }
  const double lam =
      std::sqrt((beta + 2.0) / M_PI * (M_PI / beta - std::pow(kappa, -beta)));
  res.rho = trunc_f(alpha, kappa, lam);
  res.lambda_star = lam;
  res.r_star = kappa / (2.0 * lam);
  res.regime = BallRegime::TruncIntermediate;
  return res;
}

namespace {

// Bracket of the Yukawa ball energy:
// 1/3 - lambda (1 - 4 lambda^2) - lambda (4 lambda^2 + 4 lambda + 1) e^(-1/lambda).
// The direct form cancels catastrophically for large lambda; past lambda = 10
// the 1/lambda series (whose leading term is 1/(30 lambda^2)) is used.
double yukawa_bracket(double lambda) {
  if (lambda > 10.0) {
    const double u = 1.0 / lambda;
    return u * u *
           (1.0 / 30.0 +
            u * (-1.0 / 72.0 + u * (1.0 / 280.0 + u * (-1.0 / 1440.0 + u / 9072.0))));
  }
  return 1.0 / 3.0 - lambda * (1.0 - 4.0 * lambda * lambda) -
         lambda * (4.0 * lambda * lambda + 4.0 * lambda + 1.0) * std::exp(-1.0 / lambda);
}

}  // namespace

double yukawa_ball_energy(double kappa, double R) {
  if (!(kappa > 0.0 && R > 0.0)) throw std::domain_error("yukawa_ball_energy requires kappa, R > 0");
  const double lam = kappa / (2.0 * R);
  return std::pow(R, 5) * 64.0 * M_PI * M_PI * lam * lam * yukawa_bracket(lam);
}

double yukawa_f(double kappa, double lambda) {
  if (lambda < 0.0) throw std::domain_error("yukawa_f requires lambda >= 0");
  if (lambda == 0.0) return 4.0 * M_PI * kappa * kappa;
  return 6.0 * lambda / kappa +
         4.0 * M_PI * kappa * kappa *
             (1.0 - 3.0 * lambda * (1.0 - 4.0 * lambda * lambda) -
              3.0 * lambda * (4.0 * lambda * lambda + 4.0 * lambda + 1.0) *
                  std::exp(-1.0 / lambda));
}

double yukawa_f_prime(double kappa, double lambda) {
  if (lambda < 0.0) throw std::domain_error("yukawa_f_prime requires lambda >= 0");
  if (lambda == 0.0) return 6.0 / kappa - 12.0 * M_PI * kappa * kappa;
  const double l2 = lambda * lambda;
  return 6.0 / kappa -
         12.0 * M_PI * kappa * kappa *
             (1.0 - 12.0 * l2 +
              std::exp(-1.0 / lambda) / lambda *
                  (12.0 * l2 * lambda + 12.0 * l2 + 5.0 * lambda + 1.0));
}

double yukawa_f_second(double kappa, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("yukawa_f_second requires lambda > 0");
  const double l2 = lambda * lambda;
  return 12.0 * M_PI * kappa * kappa *
         (24.0 * lambda -
          std::exp(-1.0 / lambda) / (l2 * lambda) *
              (24.0 * l2 * l2 + 24.0 * l2 * lambda + 12.0 * l2 + 4.0 * lambda + 1.0));
}

Interval yukawa_f_interval(const Interval& kappa, const Interval& lambda) {
  const mpfr_prec_t prec = std::max(kappa.precision(), lambda.precision());
  Interval one = Interval::integer(1, prec);
  Interval l2 = sqr(lambda);
  Interval expfac = exp(-(one / lambda));
  Interval poly = mul_ui(l2, 4) + mul_ui(lambda, 4) + one;
  Interval inner = one - mul_ui(lambda * (one - mul_ui(l2, 4)), 3) -
                   mul_ui(lambda * poly * expfac, 3);
  return mul_ui(lambda, 6) / kappa + mul_ui(Interval::pi(prec) * sqr(kappa) * inner, 4);
}

Interval yukawa_f_prime_interval(const Interval& kappa, const Interval& lambda) {
  const mpfr_prec_t prec = std::max(kappa.precision(), lambda.precision());
  Interval one = Interval::integer(1, prec);
  Interval l2 = sqr(lambda);
  Interval expfac = exp(-(one / lambda));
  Interval poly = mul_ui(l2 * lambda, 12) + mul_ui(l2, 12) + mul_ui(lambda, 5) + one;
  Interval inner = one - mul_ui(l2, 12) + expfac / lambda * poly;
  return Interval::integer(6, prec) / kappa -
         mul_ui(Interval::pi(prec) * sqr(kappa) * inner, 12);
}

double yukawa_flat_threshold() { return std::pow(2.0 * M_PI, -1.0 / 3.0); }

BallRatioResult rho_ball_yukawa(double kappa) {
  if (!(kappa > 0.0)) throw std::domain_error("rho_ball_yukawa requires kappa > 0");
  BallRatioResult res;
  if (kappa <= yukawa_flat_threshold()) {
    res.rho = 4.0 * M_PI * kappa * kappa;
    res.lambda_star = 0.0;
    res.r_star = std::numeric_limits<double>::infinity();
    res.regime = BallRegime::YukawaFlat;
    return res;
  }
  auto fp = [kappa](double l) { return yukawa_f_prime(kappa, l); };
  // coarse log-grid scan for a sign change of f', then Newton with fallback
  double lo = 1e-4, hi = 10.0;
  double prev = lo, fprev = fp(lo);
  std::optional<std::pair<double, double>> bracket;
  for (int i = 1; i <= 200; ++i) {
    const double x = lo * std::pow(hi / lo, i / 200.0);
    const double fx = fp(x);
    if (fprev * fx < 0.0) {
      bracket = {prev, x};
      break;
    }
    prev = x;
    fprev = fx;
  }
  if (!bracket) throw std::runtime_error("rho_ball_yukawa: no sign change of f' located");
  auto fpp = [kappa](double l) { return yukawa_f_second(kappa, l); };
  auto nr = numerics::newton(fp, fpp, 0.5 * (bracket->first + bracket->second), 1e-12,
                             100, bracket);
  res.rho = yukawa_f(kappa, nr.root);
  res.lambda_star = nr.root;
  res.r_star = kappa / (2.0 * nr.root);
  res.regime = BallRegime::YukawaInterior;
  return res;
}

BallRatioResult rho_ball(const Kernel& k) {
  switch (k.family) {
    case KernelFamily::Riesz:
      return rho_ball_riesz(k.dim, k.alpha);
    case KernelFamily::TruncatedCoulomb:
      if (k.dim != 3) throw unsupported_error("rho_ball for truncated kernels requires n=3");
      return rho_ball_trunc(k.alpha, k.kappa);
    case KernelFamily::Yukawa:
      if (k.dim != 3 || k.alpha != 1.0)
        throw unsupported_error("rho_ball for yukawa requires n=3, alpha=1");
      return rho_ball_yukawa(k.kappa);
  }
  throw std::logic_error("unreachable");
}

}  // namespace ball
}  // namespace droplet
