/* lamw: Lambert W principal branch through an integral representation.
 *
 * C API over the C++ core. All functions are thread-safe and deterministic:
 * identical inputs produce bit-identical outputs. Functions returning
 * lamw_status never throw across the boundary; on failure the output
 * parameters are untouched and lamw_last_error() carries a diagnostic for
 * the calling thread.
 */
#ifndef LAMW_LAMW_H
#define LAMW_LAMW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lamw_status {
  LAMW_OK = 0,
  LAMW_ERR_DOMAIN = 1,            /* argument outside the documented domain */
  LAMW_ERR_INVALID_ARGUMENT = 2,  /* malformed parameter (null, bad config) */
  LAMW_ERR_NO_CONVERGENCE = 3,    /* iteration or subdivision budget spent */
  LAMW_ERR_SINGULAR_INTEGRAND = 4,/* integrand hit the log branch cut */
  LAMW_ERR_INTERNAL = 5,
} lamw_status;

typedef struct lamw_complex {
  double re;
  double im;
} lamw_complex;

typedef struct lamw_tol {
  double abs_tol;
  double rel_tol;
  size_t max_subdivisions;
  size_t max_iterations;
} lamw_tol;

/* g(t) = (sin t / t) e^(t cot t) and its log at one abscissa. */
typedef struct lamw_kernel_point {
  double t;
  double g;
  double log_g; /* -inf at t = pi */
} lamw_kernel_point;

/* One check of: integral of g^nu over [0, pi] == pi nu^nu / Gamma(1+nu). */
typedef struct lamw_nb_record {
  double nu;
  double lhs;
  double rhs;
  double rel_error;
} lamw_nb_record;

typedef enum lamw_cell_status {
  LAMW_CELL_VALID = 0,
  LAMW_CELL_MISMATCH = 1,
  LAMW_CELL_INTEGRAL_SINGULAR = 2,
  LAMW_CELL_INTEGRAL_NO_CONVERGE = 3,
  LAMW_CELL_ORACLE_FAIL = 4,
} lamw_cell_status;

/* has_* flags gate the optional fields; unset fields read as 0. */
typedef struct lamw_grid_cell {
  lamw_complex x;
  lamw_complex w_int;
  lamw_complex w_ref;
  double abs_err;
  int has_w_int;
  int has_w_ref;
  int has_abs_err;
  int status; /* lamw_cell_status */
} lamw_grid_cell;

typedef struct lamw_grid_spec {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
  size_t nx;
  size_t ny;
  lamw_tol tol;      /* zero-initialized: filled from lamw_tol_default() */
  double match_abs;  /* <= 0: default 1e-8 */
  double match_rel;  /* <= 0: default 1e-6 */
} lamw_grid_spec;

/* Opaque handle holding the cells of one completed sweep. */
typedef struct lamw_sweep lamw_sweep;

/* Library defaults: abs 1e-13, rel 1e-12, 2000 subdivisions, 100 iterations.
 * Every `tol` parameter below also accepts NULL with the same meaning. */
lamw_tol lamw_tol_default(void);

/* ----- kernel and gamma ----- */

lamw_status lamw_kernel(double t, lamw_kernel_point* out);
lamw_status lamw_kernel_power(double t, double nu, double* out);
lamw_status lamw_log_gamma(double x, double* out);

/* ----- W0 evaluations ----- */

/* (1/pi) int_0^pi log(1 + x g(t)) dt. Real inputs (im = 0) produce im = 0
 * outputs exactly. */
lamw_status lamw_w0_integral(lamw_complex x, const lamw_tol* tol,
                             lamw_complex* out);
lamw_status lamw_w0_integral_real(double x, const lamw_tol* tol, double* out);

/* Taylor series, |x| < 1/e strict. terms <= 0 means automatic length. */
lamw_status lamw_w0_series(lamw_complex x, int terms, lamw_complex* out);
lamw_status lamw_w0_series_real(double x, int terms, double* out);

/* Halley oracle, residual-certified to max(1e-15, 1e-15 |x|). */
lamw_status lamw_w0_halley(lamw_complex x, const lamw_tol* tol,
                           lamw_complex* out);
lamw_status lamw_w0_halley_real(double x, const lamw_tol* tol, double* out);

/* W0(1), identical to lamw_w0_integral_real(1.0, tol, out). */
lamw_status lamw_omega(const lamw_tol* tol, double* out);

/* ----- identity checks ----- */

lamw_status lamw_nb_rhs(double nu, double* out);
lamw_status lamw_nb_check(double nu, const lamw_tol* tol, lamw_nb_record* out);

/* Max term-by-term deviation between the integral identity and the series
 * coefficients, nu = 1..n_terms. |x| <= 0.3, 1 <= n_terms <= 30. */
lamw_status lamw_series_integral_consistency(double x, int n_terms,
                                             const lamw_tol* tol, double* out);

/* ----- validity exploration ----- */

/* match_abs/match_rel <= 0 pick the defaults (1e-8 / 1e-6). */
lamw_status lamw_classify_point(lamw_complex x, double match_abs,
                                double match_rel, const lamw_tol* tol,
                                lamw_grid_cell* out);

/* Runs the full grid; on success the caller owns *out and must release it
 * with lamw_sweep_free. */
lamw_status lamw_sweep_run(const lamw_grid_spec* spec, lamw_sweep** out);
size_t lamw_sweep_cell_count(const lamw_sweep* sweep);
lamw_status lamw_sweep_cell(const lamw_sweep* sweep, size_t index,
                            lamw_grid_cell* out);
/* CSV text of the whole sweep (header + one row per cell). The pointer stays
 * valid until lamw_sweep_free(sweep). */
lamw_status lamw_sweep_csv(lamw_sweep* sweep, const char** out);
void lamw_sweep_free(lamw_sweep* sweep);

/* ----- metadata ----- */

const char* lamw_strerror(lamw_status status);
const char* lamw_cell_status_name(lamw_cell_status status);
/* Diagnostic for the most recent failing call on this thread ("" if none). */
const char* lamw_last_error(void);
const char* lamw_version(void);
/* -1/e, the left end of the real domain of W0. */
double lamw_branch_point(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LAMW_LAMW_H */
