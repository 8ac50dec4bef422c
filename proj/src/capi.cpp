#include "droplet/droplet.h"

#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "droplet/ball.hpp"
#include "droplet/certify.hpp"
#include "droplet/cylinder.hpp"
#include "droplet/kernels.hpp"
#include "droplet/pipeline.hpp"

using namespace droplet;

struct droplet_kernel {
  Kernel k;
};

namespace {

thread_local std::string g_last_error;

droplet_status fail(droplet_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_tag(char (&dst)[32], const char* src) {
  std::strncpy(dst, src, sizeof dst - 1);
  dst[sizeof dst - 1] = '\0';
}

void fill_ball(const ball::BallRatioResult& r, droplet_ratio_result* out) {
  out->value = r.rho;
  out->lo = r.rho_enclosure ? r.rho_enclosure->lo : r.rho;
  out->hi = r.rho_enclosure ? r.rho_enclosure->hi : r.rho;
  out->has_enclosure = r.rho_enclosure.has_value();
  out->optimizer = r.r_star ? *r.r_star
                            : (r.lambda_star ? *r.lambda_star
                                             : std::numeric_limits<double>::quiet_NaN());
  copy_tag(out->regime, ball::regime_name(r.regime));
  copy_tag(out->method, "");
}

void fill_cyl(const cylinder::CylRatioResult& r, droplet_ratio_result* out) {
  out->value = r.sigma;
  out->lo = r.sigma_enclosure ? r.sigma_enclosure->lo : r.sigma;
  out->hi = r.sigma_enclosure ? r.sigma_enclosure->hi : r.sigma;
  out->has_enclosure = r.sigma_enclosure.has_value();
  out->optimizer = r.l;
  copy_tag(out->regime, "");
  copy_tag(out->method, cylinder::method_name(r.method));
}

// Maps C++ exceptions onto status codes; every API body runs inside.
template <typename Fn>
droplet_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    return fail(DROPLET_ERR_PARSE, e.what());
  } catch (const unsupported_error& e) {
    return fail(DROPLET_ERR_UNSUPPORTED, e.what());
  } catch (const std::domain_error& e) {
    return fail(DROPLET_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DROPLET_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(DROPLET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DROPLET_ERR_INTERNAL, "unknown exception");
  }
}

}  // namespace

extern "C" {

droplet_status droplet_kernel_parse(const char* spec, droplet_kernel** out) {
  if (!spec || !out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = new droplet_kernel{Kernel::parse(spec)};
    return DROPLET_OK;
  });
}

droplet_status droplet_kernel_format(const droplet_kernel* k, char** out) {
  if (!k || !out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = dup_string(k->k.format());
    return *out ? DROPLET_OK : fail(DROPLET_ERR_INTERNAL, "allocation failed");
  });
}

void droplet_kernel_free(droplet_kernel* k) { delete k; }

droplet_status droplet_rho_ball(const droplet_kernel* k, droplet_ratio_result* out) {
  if (!k || !out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    fill_ball(ball::rho_ball(k->k), out);
    return DROPLET_OK;
  });
}

droplet_status droplet_sigma_cyl(const droplet_kernel* k, double l, int n_quad,
                                 droplet_ratio_result* out) {
  if (!k || !out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    if (n_quad <= 0) n_quad = 4096;
    cylinder::CylRatioResult r;
    switch (k->k.family) {
      case KernelFamily::Riesz:
        r.sigma = cylinder::sigma_cyl_riesz(k->k.dim, k->k.alpha, l);
        r.l = l;
        r.method = cylinder::CylMethod::ClosedForm;
        break;
      case KernelFamily::TruncatedCoulomb:
        if (k->k.dim != 3 || k->k.alpha != 1.0)
          throw unsupported_error("sigma_cyl for truncated kernels requires n=3, alpha=1");
        r = cylinder::sigma_cyl_trunc(k->k.kappa, l, n_quad);
        break;
      case KernelFamily::Yukawa:
        if (k->k.dim != 3 || k->k.alpha != 1.0)
          throw unsupported_error("sigma_cyl for yukawa requires n=3, alpha=1");
        r = cylinder::sigma_cyl_yukawa(k->k.kappa, l, n_quad);
        break;
    }
    fill_cyl(r, out);
    return DROPLET_OK;
  });
}

droplet_status droplet_rho_cyl(const droplet_kernel* k, double l_min, double l_max,
                               double tol, int n_quad, droplet_ratio_result* out) {
  if (!k || !out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    if (tol <= 0) tol = 1e-6;
    if (n_quad <= 0) n_quad = 4096;
    const auto r = (l_min == 0.0 && l_max == 0.0)
                       ? cylinder::rho_cyl(k->k, tol, n_quad)
                       : cylinder::rho_cyl(k->k, l_min, l_max, tol, n_quad);
    fill_cyl(r, out);
    return DROPLET_OK;
  });
}

droplet_status droplet_sigma_cyl_trunc_half_certified(const char* kappa,
                                                      unsigned precision_bits,
                                                      droplet_ratio_result* out) {
  if (!kappa || !out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const auto r = cylinder::sigma_cyl_trunc_exact_half_certified(Rational::parse(kappa),
                                                                  precision_bits);
    fill_cyl(r, out);
    return DROPLET_OK;
  });
}

droplet_status droplet_certify_trunc_coulomb(const char* kappa, unsigned precision_bits,
                                             char** json_out) {
  if (!kappa || !json_out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const auto rep = certify::certify_trunc_coulomb(Rational::parse(kappa), precision_bits);
    *json_out = dup_string(rep.to_json());
    if (!*json_out) return fail(DROPLET_ERR_INTERNAL, "allocation failed");
    return rep.verdict == certify::Verdict::Certified ? DROPLET_OK : DROPLET_INCONCLUSIVE;
  });
}

droplet_status droplet_certify_yukawa(const char* kappa, const char* l, long N,
                                      const char* bracket_lo, const char* bracket_hi,
                                      unsigned precision_bits, char** json_out) {
  if (!kappa || !l || !bracket_lo || !bracket_hi || !json_out)
    return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const auto rep = certify::certify_yukawa(Rational::parse(kappa), Rational::parse(l), N,
                                             Rational::parse(bracket_lo),
                                             Rational::parse(bracket_hi), precision_bits);
    *json_out = dup_string(rep.to_json());
    if (!*json_out) return fail(DROPLET_ERR_INTERNAL, "allocation failed");
    return rep.verdict == certify::Verdict::Certified ? DROPLET_OK : DROPLET_INCONCLUSIVE;
  });
}

droplet_status droplet_riesz_ratio(int n, int alpha, double* tau, long long* base_num,
                                   long long* base_den, int* beta) {
  if (!tau || !base_num || !base_den || !beta) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const auto r = certify::riesz_ratio(n, alpha);
    *tau = r.tau;
    *base_num = r.base_num;
    *base_den = r.base_den;
    *beta = r.beta;
    return DROPLET_OK;
  });
}

droplet_status droplet_sweep_csv(const char* family, double kappa_from, double kappa_to,
                                 int steps, int n_quad, double tol, char** csv_out) {
  if (!family || !csv_out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    KernelFamily f;
    const std::string fam(family);
    if (fam == "trunc") f = KernelFamily::TruncatedCoulomb;
    else if (fam == "yukawa") f = KernelFamily::Yukawa;
    else if (fam == "riesz") f = KernelFamily::Riesz;
    else throw parse_error("unknown sweep family '" + fam + "'");
    if (n_quad <= 0) n_quad = 4096;
    if (tol <= 0) tol = 1e-6;
    const auto s = pipeline::sweep(f, kappa_from, kappa_to, steps, n_quad, tol);
    *csv_out = dup_string(pipeline::sweep_to_csv(s));
    return *csv_out ? DROPLET_OK : fail(DROPLET_ERR_INTERNAL, "allocation failed");
  });
}

droplet_status droplet_converge_csv(double kappa, double l, const int* n_list,
                                    int n_count, int reference_n, char** csv_out,
                                    double* fitted_order) {
  if (!n_list || n_count <= 0 || !csv_out) return fail(DROPLET_ERR_DOMAIN, "null argument");
  return guarded([&] {
    std::vector<int> ns(n_list, n_list + n_count);
    const auto c = pipeline::converge_yukawa(kappa, l, ns, reference_n);
    *csv_out = dup_string(pipeline::converge_to_csv(c));
    if (!*csv_out) return fail(DROPLET_ERR_INTERNAL, "allocation failed");
    if (fitted_order) *fitted_order = c.report.fitted_order;
    return DROPLET_OK;
  });
}

void droplet_string_free(char* s) { delete[] s; }

const char* droplet_last_error(void) { return g_last_error.c_str(); }

const char* droplet_version(void) { return "1.0.0"; }

}  // extern "C"
