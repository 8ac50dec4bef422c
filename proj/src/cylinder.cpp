#include "droplet/cylinder.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

#include "droplet/ball.hpp"
#include "droplet/geometry.hpp"
#include "droplet/numerics.hpp"
#include "droplet/specfun.hpp"
#include "droplet/threads.hpp"

namespace droplet::cylinder {

using certified::Interval;

const char* method_name(CylMethod m) {
  switch (m) {
    case CylMethod::ClosedForm: return "ClosedForm";
    case CylMethod::GIntegral: return "GIntegral";
    case CylMethod::ExactCatalan: return "ExactCatalan";
    case CylMethod::SimpsonSubtracted: return "SimpsonSubtracted";
    case CylMethod::RiemannUpper: return "RiemannUpper";
  }
  return "?";
}

double sigma_cyl_riesz(int n, double alpha, double l) {
  if (n < 3) throw std::domain_error("sigma_cyl_riesz requires n >= 3");
  if (!(alpha > 1.0 && alpha < n))
    throw unsupported_error("sigma_cyl_riesz: sigma is infinite for alpha <= 1");
  if (!(l > 0.0)) throw std::domain_error("sigma_cyl_riesz requires l > 0");
  const double beta = n + 1.0 - alpha;
  const double c = kernels::cyl_reduction_constant(alpha);
  const double i1 = ball::riesz_ball_energy(n - 1, alpha - 1.0, 1.0);
  return (n - 1.0) / l + c * std::pow(l, beta - 1.0) * i1 / unit_ball_volume(n - 1);
}

CylRatioResult rho_cyl_riesz(int n, double alpha) {
  if (n < 3) throw std::domain_error("rho_cyl_riesz requires n >= 3");
  if (!(alpha > 1.0 && alpha < n))
    throw unsupported_error("rho_cyl_riesz: sigma is infinite for alpha <= 1");
  const double beta = n + 1.0 - alpha;
  const double c = kernels::cyl_reduction_constant(alpha);
  const double i1 = ball::riesz_ball_energy(n - 1, alpha - 1.0, 1.0);
  const double l_star =
      std::pow((n - 1.0) * unit_ball_volume(n - 1) / (c * (beta - 1.0) * i1), 1.0 / beta);
  CylRatioResult res;
  res.sigma = (n - 1.0) * beta / (beta - 1.0) / l_star;
  res.l = l_star;
  res.method = CylMethod::ClosedForm;
  return res;
}

double g_trunc(double ell) {
  if (ell < 0.0 || ell > 1.0 + 1e-12) throw std::domain_error("g_trunc requires 0 <= ell <= 1");
  ell = std::min(ell, 1.0);
  if (ell == 0.0) return 0.0;
  if (ell < 1e-6) {
    // g ~ (4 pi/3) ell^3 (5/6 + log(2/ell)); the direct form hits
    // atanh(1) once 1 - ell^2 rounds to 1.
    return 4.0 * M_PI / 3.0 * ell * ell * ell * (5.0 / 6.0 + std::log(2.0 / ell));
  }
  const double s = std::sqrt(std::max(0.0, 1.0 - ell * ell));
  return 4.0 * M_PI / 3.0 *
         (ell - std::asin(ell) + 2.0 * ell * (1.0 - s) + ell * ell * ell * std::atanh(s));
}

CylRatioResult sigma_cyl_trunc(double kappa, double l, int n_quad) {
  if (!(kappa > 0.0 && l > 0.0)) throw std::domain_error("sigma_cyl_trunc requires kappa, l > 0");
  if (l > kappa / 2.0 * (1.0 + 1e-12))
    throw unsupported_error("sigma_cyl_trunc covers l <= kappa/2 only");
  const double lam = std::max(kappa / (2.0 * l), 1.0);
  auto integrand = [lam](double r) {
    const double ell = std::min(std::sqrt(std::max(0.0, 1.0 - r * r)) / lam, 1.0);
    return g_trunc(ell);
  };
  CylRatioResult res;
  res.sigma = 4.0 * lam / kappa +
              2.0 * lam * kappa * kappa / M_PI * numerics::simpson(integrand, 0.0, 1.0, n_quad);
  res.l = l;
  res.method = CylMethod::GIntegral;
  return res;
}

CylRatioResult sigma_cyl_trunc_exact_half(double kappa) {
  if (!(kappa > 0.0)) throw std::domain_error("sigma_cyl_trunc_exact_half requires kappa > 0");
  CylRatioResult res;
  res.sigma = 4.0 / kappa +
              4.0 * kappa * kappa * (M_PI / 2.0 - 17.0 / 12.0 + specfun::catalan() / 2.0);
  res.l = kappa / 2.0;
  res.method = CylMethod::ExactCatalan;
  return res;
}

CylRatioResult sigma_cyl_trunc_exact_half_certified(const Rational& kappa,
                                                    unsigned precision_bits,
                                                    double catalan_width) {
  if (kappa.num <= 0) throw std::domain_error("kappa must be positive");
  const mpfr_prec_t prec = precision_bits;
  Interval k = Interval::rational(kappa.num, kappa.den, prec);
  Interval cat = specfun::catalan_interval(catalan_width, prec);
  Interval paren = mul_2si(Interval::pi(prec), -1) - Interval::rational(17, 12, prec) +
                   mul_2si(cat, -1);
  Interval sigma = Interval::integer(4, prec) / k + mul_ui(sqr(k) * paren, 4);
  CylRatioResult res;
  res.sigma = sigma.mid();
  res.sigma_enclosure = to_enclosure(sigma);
  res.l = kappa.value() / 2.0;
  res.method = CylMethod::ExactCatalan;
  return res;
}

double yukawa_geometry_I(double l, double s) {
  if (!(l > 0.0)) throw std::domain_error("yukawa_geometry_I requires l > 0");
  if (s < 0.0 || s > 2.0 * l * (1.0 + 1e-12))
    throw std::domain_error("yukawa_geometry_I requires 0 <= s <= 2l");
  s = std::min(s, 2.0 * l);
  const double half = std::clamp(s / (2.0 * l), 0.0, 1.0);
  const double rad = std::max(0.0, 4.0 * l * l - s * s);
  return l * (2.0 * l - s) / 2.0 * std::acos(half) +
         l * s * std::asin(std::sqrt(std::max(0.0, (2.0 * l - s) / (4.0 * l)))) -
         s / 4.0 * std::sqrt(rad);
}

double yukawa_geometry_I_prime(double l, double s) {
  if (!(l > 0.0)) throw std::domain_error("yukawa_geometry_I_prime requires l > 0");
  if (s < 0.0 || s > 2.0 * l * (1.0 + 1e-12))
    throw std::domain_error("yukawa_geometry_I_prime requires 0 <= s <= 2l");
  s = std::min(s, 2.0 * l);
  const double rad = std::max(0.0, 4.0 * l * l - s * s);
  return -std::sqrt(rad) / 2.0 - l / 2.0 * std::acos(std::clamp(s / (2.0 * l), 0.0, 1.0)) +
         l * std::asin(std::sqrt(std::max(0.0, (2.0 * l - s) / (4.0 * l))));
}

Interval yukawa_geometry_I_interval(const Interval& l, const Interval& s) {
  const mpfr_prec_t prec = std::max(l.precision(), s.precision());
  Interval two_l = mul_2si(l, 1);
  Interval diff = two_l - s;                       // 2l - s
  Interval term1 = mul_2si(l * diff, -1) * acos(s / two_l);
  Interval term2 = l * s * asin(sqrt(diff / mul_2si(l, 2)));
  Interval term3 = mul_2si(s * sqrt(sqr(two_l) - sqr(s)), -2);
  Interval res = term1 + term2 - term3;
  return max(res, Interval::integer(0, prec));  // I >= 0 on [0, 2l]
}

namespace {

struct YukawaParts {
  double i0;       // I(0) = pi l^2 / 2
  double ip0;      // I'(0) = -l
  double k0_2l;    // K0(2l/kappa)
  double log_2lk;  // log(2l/kappa)
};

YukawaParts yukawa_parts(double kappa, double l) {
  return {M_PI * l * l / 2.0, -l, specfun::bessel_k0(2.0 * l / kappa),
          std::log(2.0 * l / kappa)};
}

}  // namespace

CylRatioResult sigma_cyl_yukawa(double kappa, double l, int n_quad) {
  if (!(kappa > 0.0 && l > 0.0)) throw std::domain_error("sigma_cyl_yukawa requires kappa, l > 0");
  const auto p = yukawa_parts(kappa, l);
  const double two_l = 2.0 * l;
  auto g1 = [&](double s) { return -std::log(s / kappa) * (p.i0 * s + p.ip0 * s * s); };
  auto g2 = [&](double s) {
    return 4.0 / 3.0 * std::pow(l, 1.5) * p.k0_2l * std::pow(two_l - s, 1.5);
  };
  // Endpoint values are the analytic limits: F and G2 vanish at 2l, F and G1
  // vanish at 0, so F_reg(0) = -G2(0) and F_reg(2l) = -G1(2l).
  auto f_reg = [&](double s) {
    if (s <= 0.0) return -g2(0.0);
    if (s >= two_l) return -g1(two_l);
    const double f = s * specfun::bessel_k0(s / kappa) * yukawa_geometry_I(l, s);
    return f - g1(s) - g2(s);
  };
  const double singular =
      l * l * p.i0 * (1.0 - 2.0 * p.log_2lk) +
      8.0 / 9.0 * l * l * l * p.ip0 * (1.0 - 3.0 * p.log_2lk) +
      32.0 * std::sqrt(2.0) / 15.0 * std::pow(l, 4) * p.k0_2l;
  const double j = numerics::simpson(f_reg, 0.0, two_l, n_quad) + singular;
  CylRatioResult res;
  res.sigma = 2.0 / l + 8.0 / (l * l) * j;
  res.l = l;
  res.method = CylMethod::SimpsonSubtracted;
  return res;
}

CylRatioResult sigma_cyl_yukawa_upper(double kappa, double l, long N) {
  if (!(kappa > 0.0 && l > 0.0)) throw std::domain_error("sigma_cyl_yukawa_upper requires kappa, l > 0");
  if (N < 2) throw std::domain_error("sigma_cyl_yukawa_upper requires N >= 2");
  const double h = 2.0 * l / N;
  const double i0 = M_PI * l * l / 2.0;
  double sum = 0.0;
  for (long k = 1; k < N; ++k) {
    const double s = k * h;
    sum += (2.0 * k + 1.0) * yukawa_geometry_I(l, s) * specfun::bessel_k0(s / kappa);
  }
  const double j = std::sqrt(2.0) / 3.0 * i0 * std::sqrt(M_PI * kappa) * std::pow(h, 1.5) +
                   h * h / 2.0 * sum;
  CylRatioResult res;
  res.sigma = 2.0 / l + 8.0 / (l * l) * j;
  res.l = l;
  res.method = CylMethod::RiemannUpper;
  return res;
}

namespace {

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("rational overflow in certified Riemann sum");
  return r;
}

}  // namespace

CylRatioResult sigma_cyl_yukawa_upper_certified(const Rational& kappa, const Rational& l,
                                                long N, unsigned precision_bits) {
  if (kappa.num <= 0 || l.num <= 0) throw std::domain_error("kappa and l must be positive");
  if (N < 2) throw std::domain_error("sigma_cyl_yukawa_upper requires N >= 2");
  const mpfr_prec_t prec = precision_bits;
  const Interval kI = Interval::rational(kappa.num, kappa.den, prec);
  const Interval lI = Interval::rational(l.num, l.den, prec);
  const Interval h = div_ui(mul_2si(lI, 1), static_cast<unsigned long>(N));

  // Grid abscissa s_k = k h and argument s_k / kappa, both exact rationals.
  const long long s_num = checked_mul(2, l.num);
  const long long s_den = checked_mul(l.den, N);
  const long long x_num = checked_mul(s_num, kappa.den);
  const long long x_den = checked_mul(s_den, kappa.num);

  // Terms are evaluated in parallel but assembled in a fixed block order so
  // the resulting enclosure is deterministic.
  const int blocks = 64;
  std::vector<Interval> partial(blocks, Interval(prec));
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string error_msg;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const int b = next.fetch_add(1);
      if (b >= blocks || failed.load()) return;
      try {
        Interval acc(prec);
        const long k_lo = 1 + (N - 1) * static_cast<long>(b) / blocks;
        const long k_hi = 1 + (N - 1) * static_cast<long>(b + 1) / blocks;
        for (long k = k_lo; k < k_hi; ++k) {
          Interval x = Interval::rational(checked_mul(k, x_num), x_den, prec);
          const double xd = x.mid();
          const double tol = 1e-8 * specfun::bessel_k0(xd) + 1e-14;
          Interval k0 = specfun::bessel_k0_interval(x, tol);
          Interval s = Interval::rational(checked_mul(k, s_num), s_den, prec);
          Interval iv = yukawa_geometry_I_interval(lI, s);
          acc += mul_ui(iv * k0, static_cast<unsigned long>(2 * k + 1));
        }
        partial[b] = std::move(acc);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        error_msg = e.what();
      }
    }
  };
  const int nthreads = std::min(thread_budget(), blocks);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::runtime_error("certified Riemann sum failed: " + error_msg);

  Interval sum(prec);
  for (const auto& p : partial) sum += p;

  const Interval i0 = mul_2si(Interval::pi(prec) * sqr(lI), -1);
  const Interval first = div_ui(
      sqrt(Interval::integer(2, prec)) * i0 * sqrt(Interval::pi(prec) * kI) * h * sqrt(h), 3);
  const Interval j = first + mul_2si(sqr(h) * sum, -1);
  const Interval sigma = Interval::integer(2, prec) / lI + mul_ui(j, 8) / sqr(lI);

  CylRatioResult res;
  res.sigma = sigma.mid();
  res.sigma_enclosure = to_enclosure(sigma);
  res.l = l.value();
  res.method = CylMethod::RiemannUpper;
  return res;
}

double sigma_cyl(const Kernel& k, double l, int n_quad) {
  switch (k.family) {
    case KernelFamily::Riesz:
      return sigma_cyl_riesz(k.dim, k.alpha, l);
    case KernelFamily::TruncatedCoulomb:
      if (k.dim != 3 || k.alpha != 1.0)
        throw unsupported_error("sigma_cyl for truncated kernels requires n=3, alpha=1");
      return sigma_cyl_trunc(k.kappa, l, n_quad).sigma;
    case KernelFamily::Yukawa:
      if (k.dim != 3 || k.alpha != 1.0)
        throw unsupported_error("sigma_cyl for yukawa requires n=3, alpha=1");
      return sigma_cyl_yukawa(k.kappa, l, n_quad).sigma;
  }
  throw std::logic_error("unreachable");
}

CylRatioResult rho_cyl(const Kernel& k, double l_min, double l_max, double tol,
                       int n_quad) {
  if (k.family == KernelFamily::TruncatedCoulomb) l_max = std::min(l_max, k.kappa / 2.0);
  if (!(l_min > 0.0 && l_min < l_max)) throw std::domain_error("rho_cyl requires 0 < l_min < l_max");
  auto objective = [&](double l) { return sigma_cyl(k, l, n_quad); };
  auto m = numerics::minimize_1d(objective, l_min, l_max, tol);
  CylRatioResult res;
  res.sigma = m.fx;
  res.l = m.x;
  switch (k.family) {
    case KernelFamily::Riesz: res.method = CylMethod::ClosedForm; break;
    case KernelFamily::TruncatedCoulomb: res.method = CylMethod::GIntegral; break;
    case KernelFamily::Yukawa: res.method = CylMethod::SimpsonSubtracted; break;
  }
  return res;
}

CylRatioResult rho_cyl(const Kernel& k, double tol, int n_quad) {
  switch (k.family) {
    case KernelFamily::Riesz: {
      auto closed = rho_cyl_riesz(k.dim, k.alpha);
      return rho_cyl(k, closed.l / 5.0, closed.l * 5.0, tol, n_quad);
    }
    case KernelFamily::TruncatedCoulomb:
      return rho_cyl(k, k.kappa / 50.0, k.kappa / 2.0, tol, n_quad);
    case KernelFamily::Yukawa:
      return rho_cyl(k, 0.25, 8.0, tol, n_quad);
  }
  throw std::logic_error("unreachable");
}

}  // namespace droplet::cylinder
