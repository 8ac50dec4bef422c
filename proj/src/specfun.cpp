#include "droplet/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace droplet::specfun {

using certified::Interval;

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn requires x > 0");
  return std::tgamma(x);
}

double beta_incomplete(double z, double x, double y) {
  if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("beta_incomplete requires 0 <= z <= 1");
  if (!(x > 0.0 && y > 0.0)) throw std::domain_error("beta_incomplete requires x, y > 0");
  if (z == 0.0) return 0.0;
  return boost::math::beta(x, y, z);
}

double bessel_k0(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k0 requires x > 0");
  return boost::math::cyl_bessel_k(0, x);
}

namespace {

// Fourth derivative of exp(-x cosh(xi)) w.r.t. xi equals P * exp(-x cosh xi)
// with  P = x^4 s^4 - 6 x^3 s^2 c + 3 x^2 c^2 + 4 x^2 s^2 - x c,
// s = sinh(xi), c = cosh(xi).
Interval k0_quartic_factor(const Interval& x, const Interval& s, const Interval& c) {
  Interval x2 = sqr(x);
  Interval s2 = sqr(s);
  Interval t = sqr(x2) * sqr(s2);              // x^4 s^4
  t = t - mul_ui(x2 * x * s2 * c, 6);          // - 6 x^3 s^2 c
  t = t + mul_ui(x2 * sqr(c), 3);              // + 3 x^2 c^2
  t = t + mul_ui(x2 * s2, 4);                  // + 4 x^2 s^2
  t = t - x * c;                               // - x c
  return t;
}

unsigned round_up_pow2(double n) {
  unsigned v = 2;
  while (v < n && v < (1u << 16)) v <<= 1;
  return v;
}

}  // namespace

Interval bessel_k0_interval(const Interval& x, double abs_tol) {
  if (!x.is_positive()) throw std::domain_error("bessel_k0 requires x > 0");
  const mpfr_prec_t prec = x.precision();
  const double xd = std::max(x.mid(), 1e-300);
  const double tol = abs_tol > 0 ? abs_tol : 1e-12;

  // Truncation point Xi: exp(-x cosh Xi)/(x sinh Xi) <= tol/4, solved
  // approximately in doubles (the tail actually charged below is rigorous).
  double T = std::max(2.0, std::log(4.0 / (tol * xd)) / xd);
  for (int it = 0; it < 3; ++it) {
    double sh = std::sqrt(std::max(T * T - 1.0, 1.0));
    T = std::max(2.0, std::log(4.0 / (tol * xd * sh)) / xd);
  }
  double Xi = std::ceil(std::max(std::acosh(T), 0.5) * 16.0) / 16.0;

  const int chunks = 16;
  const double chunk_w = Xi / chunks;  // Xi is a multiple of 1/16, so dyadic
  const double chunk_target = tol / (4.0 * chunks);

  Interval total(prec);
  for (int j = 0; j < chunks; ++j) {
    const double a = j * chunk_w;
    const double b = a + chunk_w;

    // The integrand is positive and decreasing; a cheap bound on the whole
    // chunk lets us skip quadrature where the contribution is negligible.
    Interval fa = exp(-(x * cosh(Interval::point(a, prec))));
    double coarse = fa.hi_double() * chunk_w;
    if (coarse <= chunk_target) {
      total += Interval::bounds(0.0, coarse, prec);
      continue;
    }

    Interval xi_range = Interval::bounds(a, b, prec);
    Interval pmag = abs(k0_quartic_factor(x, sinh(xi_range), cosh(xi_range)));
    Interval m4 = pmag * fa;  // |f''''| <= |P| * exp(-x cosh a) on [a, b]
    double m4d = m4.hi_double();

    unsigned n = 2;
    if (m4d > 0.0 && std::isfinite(m4d)) {
      double hmax = std::pow(180.0 * chunk_target / (chunk_w * m4d), 0.25);
      n = round_up_pow2(chunk_w / hmax);
    }
    const double h = chunk_w / n;  // n is a power of two, h stays dyadic

    Interval acc(prec);
    for (unsigned i = 0; i <= n; ++i) {
      Interval f = exp(-(x * cosh(Interval::point(a + i * h, prec))));
      unsigned w = (i == 0 || i == n) ? 1 : (i % 2 == 1 ? 4 : 2);
      acc += mul_ui(f, w);
    }
    total += div_ui(acc * Interval::point(h, prec), 3);

    Interval errj = div_ui(Interval::point(chunk_w, prec) *
                               pow_int(Interval::point(h, prec), 4) * m4,
                           180);
    double e = errj.hi_double();
    total += Interval::bounds(-e, e, prec);
  }

  // Rigorous quadrature tail: int_Xi^inf exp(-x cosh xi) dxi
  //   <= exp(-x cosh Xi)/(x sinh Xi).
  Interval xiI = Interval::point(Xi, prec);
  Interval tail = exp(-(x * cosh(xiI))) / (x * sinh(xiI));
  total += Interval::bounds(0.0, tail.hi_double(), prec);

  total = max(total, Interval::integer(0, prec));

  // K0(x) < exp(-x) sqrt(pi/(2x)); intersecting the upper endpoint is sound.
  Interval ub = exp(-x) * sqrt(Interval::pi(prec) / mul_ui(x, 2));
  if (mpfr_cmp(ub.hi(), total.hi()) < 0) mpfr_set(total.hi_mut(), ub.hi(), MPFR_RNDU);

  return total;
}

Enclosure bessel_k0_enclosure(double x, unsigned precision_bits, double abs_tol) {
  if (precision_bits < 113) throw std::invalid_argument("certified mode requires >= 113 bits");
  return to_enclosure(bessel_k0_interval(Interval::point(x, precision_bits), abs_tol));
}

double catalan() { return 0.915965594177219015054603514932; }

Interval catalan_interval(double width_target, mpfr_prec_t prec) {
  if (!(width_target > 0)) throw std::invalid_argument("catalan width target must be positive");
  // The alternating partial sums bracket the limit: after an odd number of
  // terms S > C > S - t_next, after an even number S < C < S + t_next, with
  // t_next = 1/(2N+1)^2 the first omitted term.
  const double need =
      std::clamp(std::ceil((std::sqrt(2.0 / width_target) - 1.0) / 2.0), 0.0, 2.0e7);
  const unsigned long n_terms = static_cast<unsigned long>(need) + 1;
  Interval acc(prec);
  for (unsigned long n = 0; n < n_terms; ++n) {
    const unsigned long odd = 2 * n + 1;
    Interval term = Interval::rational(1, static_cast<long long>(odd) * odd, prec);
    acc = (n % 2 == 0) ? acc + term : acc - term;
  }
  const unsigned long odd = 2 * n_terms + 1;
  const double tail_hi =
      Interval::rational(1, static_cast<long long>(odd) * odd, prec).hi_double();
  return (n_terms % 2 == 1) ? acc + Interval::bounds(-tail_hi, 0.0, prec)
                            : acc + Interval::bounds(0.0, tail_hi, prec);
}

Enclosure catalan_enclosure(double width_target, unsigned precision_bits) {
  return to_enclosure(catalan_interval(width_target, precision_bits));
}

Enclosure pi_enclosure(unsigned precision_bits) {
  if (precision_bits < 53) throw std::invalid_argument("pi_enclosure requires >= 53 bits");
  // Two extra working bits keep the interval width at most 2^(1-p); the
  // double projection saturates at one double ulp.
  return to_enclosure(Interval::pi(static_cast<mpfr_prec_t>(precision_bits) + 2));
}

double euler_gamma() { return 0.577215664901532860606512090082; }

}  // namespace droplet::specfun
