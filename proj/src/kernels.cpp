#include "droplet/kernels.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "droplet/specfun.hpp"

namespace droplet {

namespace {

void check_common(double alpha, int n) {
  if (n < 2) throw std::domain_error("kernel dimension must be >= 2");
  if (!(alpha > 0.0 && alpha < n)) throw std::domain_error("kernel requires 0 < alpha < n");
}

}  // namespace

Kernel Kernel::riesz(double alpha, int n) {
  check_common(alpha, n);
  return Kernel{KernelFamily::Riesz, alpha, 0.0, n};
}

Kernel Kernel::truncated_coulomb(double alpha, double kappa, int n) {
  check_common(alpha, n);
  if (!(kappa > 0.0)) throw std::domain_error("truncated kernel requires kappa > 0");
  return Kernel{KernelFamily::TruncatedCoulomb, alpha, kappa, n};
}

Kernel Kernel::yukawa(double alpha, double kappa, int n) {
  check_common(alpha, n);
  if (!(kappa > 0.0)) throw std::domain_error("yukawa kernel requires kappa > 0");
  return Kernel{KernelFamily::Yukawa, alpha, kappa, n};
}

Kernel Kernel::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw parse_error("kernel spec missing ':'");
  const std::string family(spec.substr(0, colon));
  std::map<std::string, double> kv;
  std::stringstream rest{std::string(spec.substr(colon + 1))};
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw parse_error("kernel spec expects key=value pairs");
    const std::string key = item.substr(0, eq);
    try {
      kv[key] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw parse_error("bad numeric value for kernel parameter '" + key + "'");
    }
  }
  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw parse_error(std::string("kernel spec missing '") + key + "'");
    return it->second;
  };
  const int n = kv.count("n") ? static_cast<int>(need("n")) : 3;
  try {
    if (family == "riesz") return riesz(need("alpha"), n);
    if (family == "trunc") return truncated_coulomb(need("alpha"), need("kappa"), n);
    if (family == "yukawa") return yukawa(need("alpha"), need("kappa"), n);
  } catch (const std::domain_error& e) {
    throw parse_error(std::string("invalid kernel parameters: ") + e.what());
  }
  throw parse_error("unknown kernel family '" + family + "'");
}

std::string Kernel::format() const {
  std::ostringstream out;
  out.precision(17);
  switch (family) {
    case KernelFamily::Riesz:
      out << "riesz:alpha=" << alpha << ",n=" << dim;
      break;
    case KernelFamily::TruncatedCoulomb:
      out << "trunc:alpha=" << alpha << ",kappa=" << kappa << ",n=" << dim;
      break;
    case KernelFamily::Yukawa:
      out << "yukawa:alpha=" << alpha << ",kappa=" << kappa << ",n=" << dim;
      break;
  }
  return out.str();
}

namespace kernels {

double eval(const Kernel& k, double r) {
  if (!(r > 0.0)) throw std::domain_error("kernel eval requires r > 0");
  switch (k.family) {
    case KernelFamily::Riesz:
      return std::pow(r, -k.alpha);
    case KernelFamily::TruncatedCoulomb:
      return r < k.kappa ? std::pow(r, -k.alpha) : 0.0;
    case KernelFamily::Yukawa:
      return std::exp(-r / k.kappa) * std::pow(r, -k.alpha);
  }
  return 0.0;
}

double slice_energy(const Kernel& k, double L) {
  if (L < 0.0) throw std::domain_error("slice_energy requires L >= 0");
  if (L == 0.0) return 0.0;
  const double beta = k.beta();
  switch (k.family) {
    case KernelFamily::Riesz:
      return 2.0 / (beta * (beta - 1.0)) * std::pow(L, beta);
    case KernelFamily::TruncatedCoulomb: {
      if (L <= k.kappa) return 2.0 / (beta * (beta - 1.0)) * std::pow(L, beta);
      return 2.0 / (beta * (beta - 1.0)) * std::pow(k.kappa, beta - 1.0) *
             (beta * L - (beta - 1.0) * k.kappa);
    }
    case KernelFamily::Yukawa: {
      if (k.dim != 3 || k.alpha != 1.0)
        throw unsupported_error("yukawa slice energy is available for n=3, alpha=1 only");
      const double u = L / k.kappa;
      // 2 kappa^3 (u - 2 + (u + 2) e^-u); for small u evaluate the series
      // u^3/3 - u^4/12 + ... to avoid cancellation.
      const double kap3 = k.kappa * k.kappa * k.kappa;
      if (u < 1e-3) {
        const double u3 = u * u * u;
        return 2.0 * kap3 * u3 * (1.0 / 3.0 - u / 12.0 + u * u / 60.0 - u * u * u / 360.0);
      }
      return 2.0 * kap3 * (u - 2.0 + (u + 2.0) * std::exp(-u));
    }
  }
  return 0.0;
}

double cyl_reduction_constant(double alpha) {
  if (!(alpha > 1.0))
    throw std::domain_error("cyl_reduction_constant requires alpha > 1 (sigma is infinite otherwise)");
  return std::sqrt(M_PI) * specfun::gamma_fn((alpha - 1.0) / 2.0) / specfun::gamma_fn(alpha / 2.0);
}

double trunc_cyl_kernel(double kappa, double l) {
  if (!(kappa > 0.0)) throw std::domain_error("trunc_cyl_kernel requires kappa > 0");
  if (!(l > 0.0)) throw std::domain_error("trunc_cyl_kernel requires l > 0");
  if (l >= kappa) return 0.0;
  const double ratio = l / kappa;
  return 2.0 * std::atanh(std::sqrt(std::max(0.0, 1.0 - ratio * ratio)));
}

double yukawa_cyl_kernel(double kappa, double s) {
  if (!(kappa > 0.0)) throw std::domain_error("yukawa_cyl_kernel requires kappa > 0");
  if (!(s > 0.0)) throw std::domain_error("yukawa_cyl_kernel requires s > 0");
  return 2.0 * specfun::bessel_k0(s / kappa);
}

Enclosure yukawa_cyl_kernel_enclosure(double kappa, double s, unsigned precision_bits,
                                      double abs_tol) {
  if (!(kappa > 0.0 && s > 0.0)) throw std::domain_error("yukawa_cyl_kernel requires s, kappa > 0");
  using certified::Interval;
  Interval x = Interval::point(s, precision_bits) / Interval::point(kappa, precision_bits);
  return to_enclosure(mul_ui(specfun::bessel_k0_interval(x, abs_tol), 2));
}

}  // namespace kernels
}  // namespace droplet
