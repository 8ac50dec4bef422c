#pragma once

#include <optional>

#include "droplet/enclosure.hpp"
#include "droplet/kernels.hpp"
#include "droplet/rational.hpp"

namespace droplet::cylinder {

enum class CylMethod { ClosedForm, GIntegral, ExactCatalan, SimpsonSubtracted, RiemannUpper };

const char* method_name(CylMethod m);

struct CylRatioResult {
  double sigma = 0.0;
  std::optional<Enclosure> sigma_enclosure;  ///< certified paths only
  double l = 0.0;                            ///< cylinder radius the value refers to
  CylMethod method = CylMethod::ClosedForm;
};

/// sigma(l) = (n-1)/l + c_alpha l^(beta-1) I_(alpha-1)^(n-1)(B_1)/|B_1^(n-1)|,
/// finite for alpha in (1, n), n >= 3.
double sigma_cyl_riesz(int n, double alpha, double l);

/// Closed-form optimal cylinder ratio and optimal radius for Riesz kernels.
CylRatioResult rho_cyl_riesz(int n, double alpha);

/// g(ell) = 4 pi/3 [ell - arcsin(ell) + 2 ell (1 - sqrt(1-ell^2))
///                  + ell^3 argtanh(sqrt(1-ell^2))] on [0, 1].
double g_trunc(double ell);

/// Truncated-Coulomb cylinder ratio (n = 3, alpha = 1) for l <= kappa/2:
///   sigma(l) = 4 lambda/kappa
///            + (2 lambda kappa^2/pi) int_0^1 g(sqrt(1-r^2)/lambda) dr.
CylRatioResult sigma_cyl_trunc(double kappa, double l, int n_quad);

/// Exact value at l = kappa/2 via the Catalan constant:
///   sigma(kappa/2) = 4/kappa + 4 kappa^2 (pi/2 - 17/12 + C/2).
CylRatioResult sigma_cyl_trunc_exact_half(double kappa);
CylRatioResult sigma_cyl_trunc_exact_half_certified(const Rational& kappa,
                                                    unsigned precision_bits,
                                                    double catalan_width = 1e-10);

/// Overlap weight of the Yukawa cylinder reduction:
///   I(s) = l(2l-s)/2 arccos(s/2l) + l s arcsin(sqrt((2l-s)/(4l)))
///          - s/4 sqrt((2l)^2 - s^2)  on [0, 2l].
double yukawa_geometry_I(double l, double s);
double yukawa_geometry_I_prime(double l, double s);
certified::Interval yukawa_geometry_I_interval(const certified::Interval& l,
                                               const certified::Interval& s);

/// Yukawa cylinder ratio by singularity-subtracted Simpson quadrature:
///   sigma(l) = 2/l + 8/l^2 int_0^2l s K0(s/kappa) I(s) ds,
/// with the s log(s) part at 0 and the (2l-s)^(3/2) part at 2l removed from
/// the quadrature and integrated in closed form.
CylRatioResult sigma_cyl_yukawa(double kappa, double l, int n_quad);

/// Guaranteed upper bound for sigma(l) from a rectangle majorant on a regular
/// N-cell grid (monotonicity of I and K0, crude sqrt(pi/(2x)) bound on the
/// first cell only).  The certified variant returns an enclosure of the
/// majorant; its upper endpoint is the proven bound.
CylRatioResult sigma_cyl_yukawa_upper(double kappa, double l, long N);
CylRatioResult sigma_cyl_yukawa_upper_certified(const Rational& kappa, const Rational& l,
                                                long N, unsigned precision_bits);

/// sigma(l) for the kernel's family at the given radius (fast mode).
double sigma_cyl(const Kernel& k, double l, int n_quad);

/// Golden-section minimization of sigma over [l_min, l_max].
CylRatioResult rho_cyl(const Kernel& k, double l_min, double l_max, double tol,
                       int n_quad);
/// Same with a family-appropriate default search interval
/// (truncated kernels: (0, kappa/2]).
CylRatioResult rho_cyl(const Kernel& k, double tol = 1e-6, int n_quad = 4096);

}  // namespace droplet::cylinder
