/* droplet: energy/mass ratios of balls and infinite cylinders for the
 * generalized liquid-drop model under Riesz, truncated-Coulomb and Yukawa
 * kernels, with certified (enclosure-based) comparisons.
 *
 * C API: opaque handles plus status codes.  Strings returned through char**
 * are owned by the caller and released with droplet_string_free().  All
 * functions are thread-safe; the last error message is thread-local.
 */
#ifndef DROPLET_H
#define DROPLET_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum droplet_status {
  DROPLET_OK = 0,
  DROPLET_INCONCLUSIVE = 1, /* certification ran but could not conclude */
  DROPLET_ERR_PARSE = 2,
  DROPLET_ERR_UNSUPPORTED = 3,
  DROPLET_ERR_INTERNAL = 4,
  DROPLET_ERR_DOMAIN = 5
} droplet_status;

typedef struct droplet_kernel droplet_kernel; /* opaque */

typedef struct droplet_ratio_result {
  double value;     /* point value (midpoint when an enclosure is present) */
  double lo, hi;    /* enclosure endpoints; equal to value in fast mode */
  int has_enclosure;
  double optimizer; /* R*, l* or lambda*; may be +inf */
  char regime[32];  /* ball regime tag, empty for cylinder results */
  char method[32];  /* cylinder method tag, empty for ball results */
} droplet_ratio_result;

/* ---- kernel handles ---------------------------------------------------- */

/* Parses "riesz:alpha=1,n=3", "trunc:alpha=1,kappa=1.1,n=3",
 * "yukawa:alpha=1,kappa=0.56,n=3". */
droplet_status droplet_kernel_parse(const char* spec, droplet_kernel** out);
droplet_status droplet_kernel_format(const droplet_kernel* k, char** out);
void droplet_kernel_free(droplet_kernel* k);

/* ---- ratio queries (fast mode) ----------------------------------------- */

droplet_status droplet_rho_ball(const droplet_kernel* k, droplet_ratio_result* out);

/* sigma at a given cylinder radius l. */
droplet_status droplet_sigma_cyl(const droplet_kernel* k, double l, int n_quad,
                                 droplet_ratio_result* out);

/* Minimize sigma over [l_min, l_max]; pass l_min = l_max = 0 for the
 * family-default search interval. */
droplet_status droplet_rho_cyl(const droplet_kernel* k, double l_min, double l_max,
                               double tol, int n_quad, droplet_ratio_result* out);

/* Certified sigma_cyl(kappa/2) for the truncated kernel (exact Catalan form);
 * kappa is a rational string such as "11/10". */
droplet_status droplet_sigma_cyl_trunc_half_certified(const char* kappa,
                                                      unsigned precision_bits,
                                                      droplet_ratio_result* out);

/* ---- certifications ----------------------------------------------------- */

/* Returns DROPLET_OK when Certified, DROPLET_INCONCLUSIVE otherwise; the full
 * JSON report is stored in *json_out in both cases. */
droplet_status droplet_certify_trunc_coulomb(const char* kappa, unsigned precision_bits,
                                             char** json_out);
droplet_status droplet_certify_yukawa(const char* kappa, const char* l, long N,
                                      const char* bracket_lo, const char* bracket_hi,
                                      unsigned precision_bits, char** json_out);

/* tau = rho_cyl/rho_ball for integer alpha in (1, n), with the exact rational
 * base: tau = (base_num/base_den)^(1/beta). */
droplet_status droplet_riesz_ratio(int n, int alpha, double* tau, long long* base_num,
                                   long long* base_den, int* beta);

/* ---- figure pipelines --------------------------------------------------- */

/* family: "trunc" or "yukawa".  The CSV (schema
 * kappa,rho_ball,l_opt,sigma_cyl,regime with '#' metadata lines) is returned
 * as a string. */
droplet_status droplet_sweep_csv(const char* family, double kappa_from, double kappa_to,
                                 int steps, int n_quad, double tol, char** csv_out);

/* Convergence study of the subtracted Yukawa quadrature; n_list holds n_count
 * even subinterval counts. */
droplet_status droplet_converge_csv(double kappa, double l, const int* n_list,
                                    int n_count, int reference_n, char** csv_out,
                                    double* fitted_order);

/* ---- misc ---------------------------------------------------------------- */

void droplet_string_free(char* s);
const char* droplet_last_error(void); /* thread-local, valid until next call */
const char* droplet_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DROPLET_H */
