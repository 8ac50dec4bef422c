#pragma once

#include "droplet/enclosure.hpp"
#include "droplet/interval.hpp"
#include "droplet/rational.hpp"

namespace droplet::specfun {

/// Gamma function for x > 0.
double gamma_fn(double x);

/// Non-normalized incomplete Beta function
///   B(z; x, y) = int_0^z t^(x-1) (1-t)^(y-1) dt,  0 <= z <= 1, x > 0, y > 0.
double beta_incomplete(double z, double x, double y);

/// Modified Bessel function K0, fast evaluation (relative error <= 1e-12).
double bessel_k0(double x);

/// Certified K0 by rigorous quadrature of int_0^inf exp(-x cosh xi) dxi:
/// the integral is truncated at Xi with the tail bounded by
/// exp(-x cosh Xi)/(x sinh Xi), and composite Simpson is applied on [0, Xi]
/// with the quadrature error bounded through an interval evaluation of the
/// fourth derivative of the integrand.  The result is intersected with the
/// bound K0(x) < exp(-x) sqrt(pi/(2x)).
///
/// `abs_tol` steers the truncation/grid heuristics; the returned interval is
/// sound regardless of whether the target width was reached.
certified::Interval bessel_k0_interval(const certified::Interval& x, double abs_tol);
Enclosure bessel_k0_enclosure(double x, unsigned precision_bits, double abs_tol = 1e-12);

/// Catalan constant.  Fast: fixed high-accuracy constant.  Certified: the
/// defining alternating series with the tail bounded by its first omitted
/// term, 1/(2N+1)^2 <= width_target.
double catalan();
certified::Interval catalan_interval(double width_target, mpfr_prec_t prec);
Enclosure catalan_enclosure(double width_target, unsigned precision_bits = 128);

/// Enclosure of pi of width <= 2^(1-precision_bits).
Enclosure pi_enclosure(unsigned precision_bits);

/// Euler-Mascheroni constant (fixed 30-digit constant; cross-checked in the
/// test suite against an independent evaluation).
double euler_gamma();

}  // namespace droplet::specfun
