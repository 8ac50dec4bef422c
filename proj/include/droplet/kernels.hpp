#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "droplet/enclosure.hpp"

namespace droplet {

/// Requested configuration lies outside the range covered by the closed
/// forms (for example Yukawa outside n = 3, alpha = 1).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class KernelFamily { Riesz, TruncatedCoulomb, Yukawa };

/// Radial interaction kernel: |x|^-alpha, possibly cut at range kappa
/// (TruncatedCoulomb) or damped by exp(-|x|/kappa) (Yukawa), in dimension n.
struct Kernel {
  KernelFamily family = KernelFamily::Riesz;
  double alpha = 1.0;
  double kappa = 0.0;  // meaningful iff family != Riesz
  int dim = 3;

  static Kernel riesz(double alpha, int n);
  static Kernel truncated_coulomb(double alpha, double kappa, int n);
  static Kernel yukawa(double alpha, double kappa, int n);

  /// Parses "riesz:alpha=1,n=3", "trunc:alpha=1,kappa=1.1,n=3",
  /// "yukawa:alpha=1,kappa=0.56,n=3".
  static Kernel parse(std::string_view spec);
  std::string format() const;

  double beta() const { return dim + 1 - alpha; }
  bool has_kappa() const { return family != KernelFamily::Riesz; }
};

namespace kernels {

/// Pointwise kernel value at distance r > 0.
double eval(const Kernel& k, double r);

/// 1D slice self-interaction S_G(L) = int_0^L int_0^L |s-t|^(n-1) G(s-t) ds dt.
/// Closed form per family; Yukawa is available for n = 3, alpha = 1 only.
double slice_energy(const Kernel& k, double L);

/// c_alpha = sqrt(pi) Gamma((alpha-1)/2) / Gamma(alpha/2), the constant in
/// R_alpha^cyl = c_alpha R_(alpha-1).  Finite only for alpha > 1.
double cyl_reduction_constant(double alpha);

/// Axis-integrated truncated-Coulomb kernel (n = 3, alpha = 1):
///   c_(1,kappa)(l) = 2 argtanh(sqrt(1 - (l/kappa)^2)) for l < kappa, else 0.
double trunc_cyl_kernel(double kappa, double l);

/// Axis-integrated Yukawa kernel 2 K0(s/kappa) (n = 3, alpha = 1).
double yukawa_cyl_kernel(double kappa, double s);
Enclosure yukawa_cyl_kernel_enclosure(double kappa, double s, unsigned precision_bits,
                                      double abs_tol = 1e-12);

}  // namespace kernels
}  // namespace droplet
