/* kinf.h - C interface to the disk interpolation library
 *
 * Conventions:
 *   - Disk points travel as (gap, phase) pairs with gap = 1 - |z| in [0, 1]
 *     and phase = arg z.  gap = 0 is the circle, gap = 1 the origin.
 *   - Complex arrays travel as parallel re/im double arrays of length n.
 *     A NULL im input array means "all imaginary parts are zero".
 *   - Every fallible call returns a kinf_status; on failure the thread-local
 *     message from kinf_last_error() describes what went wrong and output
 *     parameters are left untouched.
 */
#ifndef KINF_H
#define KINF_H

#include <stdint.h>

#if defined(_WIN32)
#define KINF_API __declspec(dllexport)
#elif defined(KINF_BUILD)
#define KINF_API __attribute__((visibility("default")))
#else
#define KINF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kinf_status {
  KINF_OK = 0,
  KINF_ERR_ARGUMENT = 1, /* bad value, bad shape, parse failure */
  KINF_ERR_INDEX = 2,    /* index out of range */
  KINF_ERR_DOMAIN = 3,   /* point outside the required domain */
  KINF_ERR_SINGULAR = 4, /* linear system numerically singular */
  KINF_ERR_NUMERIC = 5,  /* quadrature or iteration failed to converge */
  KINF_ERR_INTERNAL = 6
} kinf_status;

typedef struct kinf_sequence kinf_sequence; /* validated zero sequence */
typedef struct kinf_blaschke kinf_blaschke; /* product data over a sequence */
typedef struct kinf_majorant kinf_majorant;

KINF_API const char* kinf_version(void);

/* Message for the most recent failure on this thread; empty after success. */
KINF_API const char* kinf_last_error(void);

/* Free a string returned by this library. */
KINF_API void kinf_string_free(char* s);

/* ---- zero sequences ---------------------------------------------------- */

KINF_API kinf_status kinf_sequence_create(const double* gaps, const double* phases,
                                          int n, kinf_sequence** out);
KINF_API kinf_status kinf_sequence_from_json(const char* text, kinf_sequence** out);
KINF_API kinf_status kinf_sequence_to_json(const kinf_sequence* seq, char** out);
KINF_API kinf_status kinf_sequence_radial_dyadic(int n, kinf_sequence** out);
KINF_API kinf_status kinf_sequence_radial_geometric(int n, double ratio,
                                                    kinf_sequence** out);
KINF_API kinf_status kinf_sequence_tangential(int n, double kappa, kinf_sequence** out);
KINF_API kinf_status kinf_sequence_seeded(uint64_t seed, int index, kinf_sequence** out);
KINF_API kinf_status kinf_sequence_truncate(const kinf_sequence* seq, int n,
                                            kinf_sequence** out);
KINF_API int kinf_sequence_n(const kinf_sequence* seq);
KINF_API kinf_status kinf_sequence_point(const kinf_sequence* seq, int j, double* gap,
                                         double* phase);
KINF_API void kinf_sequence_free(kinf_sequence* seq);

/* Targets with |w| <= 1 matching kinf_sequence_seeded(seed, index). */
KINF_API kinf_status kinf_seeded_targets(uint64_t seed, int index, int n, double* re,
                                         double* im);

/* ---- pointwise disk geometry ------------------------------------------- */

KINF_API kinf_status kinf_pseudohyperbolic(double gap_a, double phase_a, double gap_b,
                                           double phase_b, double* out);
KINF_API kinf_status kinf_blaschke_factor(double gap_a, double phase_a, double gap_z,
                                          double phase_z, double* re, double* im);

/* ---- Blaschke product data ---------------------------------------------- */

typedef enum kinf_product_mode {
  KINF_PRODUCT_AUTO = 0,
  KINF_PRODUCT_DIRECT = 1,
  KINF_PRODUCT_LOG = 2
} kinf_product_mode;

KINF_API kinf_status kinf_blaschke_create(const kinf_sequence* seq, kinf_blaschke** out);
KINF_API void kinf_blaschke_free(kinf_blaschke* b);
KINF_API int kinf_blaschke_n(const kinf_blaschke* b);
KINF_API kinf_status kinf_blaschke_delta(const kinf_blaschke* b, double* out);
KINF_API kinf_status kinf_blaschke_interp_constant(const kinf_blaschke* b, double* out);
KINF_API kinf_status kinf_blaschke_origin_value(const kinf_blaschke* b, double* re,
                                                double* im);
KINF_API kinf_status kinf_blaschke_subproduct_at_zero(const kinf_blaschke* b, int j,
                                                      double* re, double* im);
KINF_API kinf_status kinf_blaschke_derivative_at_zero(const kinf_blaschke* b, int j,
                                                      double* re, double* im);
KINF_API kinf_status kinf_blaschke_eval(const kinf_blaschke* b, double gap, double phase,
                                        kinf_product_mode mode, double* re, double* im);
KINF_API kinf_status kinf_subproduct_eval(const kinf_blaschke* b, int j, double gap,
                                          double phase, kinf_product_mode mode,
                                          double* re, double* im);
KINF_API kinf_status kinf_numeric_derivative(const kinf_blaschke* b, double gap,
                                             double phase, double step, double* re,
                                             double* im);

/* ---- sequence diagnostics ----------------------------------------------- */

KINF_API kinf_status kinf_frostman_sum(const kinf_sequence* seq, double phase,
                                       double* out);

typedef struct kinf_frostman_estimate {
  double sup;
  double argmax_phase;
  int grid;
} kinf_frostman_estimate;

KINF_API kinf_status kinf_frostman_sup(const kinf_sequence* seq, int grid,
                                       kinf_frostman_estimate* out);
KINF_API kinf_status kinf_min_separation(const kinf_sequence* seq, double* out);

typedef struct kinf_sequence_report {
  double delta;          /* min_j |B_j(a_j)| */
  double interp_const;   /* min_j |B'(a_j)| (1 - |a_j|) */
  double min_separation; /* min pairwise pseudohyperbolic distance */
  double frostman_sup;
  int frostman_grid;
} kinf_sequence_report;

KINF_API kinf_status kinf_make_report(const kinf_blaschke* b, int frostman_grid,
                                      kinf_sequence_report* out);

/* ---- model space -------------------------------------------------------- */

KINF_API kinf_status kinf_gamma_coeffs(const kinf_blaschke* b, const double* w_re,
                                       const double* w_im, double* g_re, double* g_im);
KINF_API kinf_status kinf_cauchy_series_eval(const kinf_blaschke* b, const double* g_re,
                                             const double* g_im, double gap, double phase,
                                             double* re, double* im);
KINF_API kinf_status kinf_interpolant_eval(const kinf_blaschke* b, const double* w_re,
                                           const double* w_im, double gap, double phase,
                                           double* re, double* im);

/* Interpolant samples on the uniform circle grid e^{2 pi i k / grid}. */
KINF_API kinf_status kinf_interpolant_boundary(const kinf_blaschke* b, const double* w_re,
                                               const double* w_im, int grid,
                                               double* out_re, double* out_im);

/* Boundary involution of the given samples on the same uniform grid. */
KINF_API kinf_status kinf_involution_boundary(const kinf_blaschke* b, const double* f_re,
                                              const double* f_im, int grid,
                                              double* out_re, double* out_im);

typedef struct kinf_kernel_info {
  double condition_estimate;
  int ill_conditioned;
} kinf_kernel_info;

KINF_API kinf_status kinf_k2_interpolant(const kinf_blaschke* b, const double* w_re,
                                         const double* w_im, double* c_re, double* c_im,
                                         kinf_kernel_info* info);
KINF_API kinf_status kinf_kernel_expansion_eval(const kinf_blaschke* b, const double* c_re,
                                                const double* c_im, double gap,
                                                double phase, double* re, double* im);

/* Boundary function callback: fills f(e^{i phase}). */
typedef kinf_status (*kinf_boundary_fn)(void* ctx, double phase, double* re, double* im);

typedef struct kinf_sup_norm {
  double value;
  int grid;      /* finest grid evaluated */
  int converged; /* nonzero when grid doubling stabilized the max */
} kinf_sup_norm;

KINF_API kinf_status kinf_sup_norm_estimate(kinf_boundary_fn f, void* ctx, int grid,
                                            int refine, kinf_sup_norm* out);

/* Value of 1 - conj(B(0)) B(z), the closed-form all-ones interpolant. */
KINF_API kinf_status kinf_constant_trace_eval(const kinf_blaschke* b, double gap,
                                              double phase, double* re, double* im);

/* ---- criterion sums ------------------------------------------------------ */

KINF_API kinf_status kinf_dual_transform(const kinf_blaschke* b, const double* w_re,
                                         const double* w_im, double* t_re, double* t_im);
KINF_API kinf_status kinf_criterion_sup(const kinf_blaschke* b, const double* w_re,
                                        const double* w_im, double* out);
KINF_API kinf_status kinf_consistency_check(const kinf_blaschke* b, const double* w_re,
                                            const double* w_im, double* out);
KINF_API kinf_status kinf_weighted_p_sum(const kinf_blaschke* b, const double* w_re,
                                         const double* w_im, double p, double* out);

typedef struct kinf_criterion_summary {
  double sup_T;
  double ell1_bound;
  double carleson_sum_1;
  double carleson_sum_dual;
} kinf_criterion_summary;

KINF_API kinf_status kinf_criterion_summary_compute(const kinf_blaschke* b,
                                                    const double* w_re, const double* w_im,
                                                    kinf_criterion_summary* out);

typedef struct kinf_counterexample_summary {
  double s_last;
  double prefix_last;
  double ratio_last;
  int domination_ok;
  int weight_bound_ok;
} kinf_counterexample_summary;

/* Arrays w, s, prefix (length n) may each be NULL to skip that output. */
KINF_API kinf_status kinf_radial_counterexample(const kinf_blaschke* b, const double* beta,
                                                double* w, double* s, double* prefix,
                                                kinf_counterexample_summary* out);

/* ---- majorants ----------------------------------------------------------- */

KINF_API kinf_status kinf_majorant_parse(const char* spec, kinf_majorant** out);
KINF_API void kinf_majorant_free(kinf_majorant* m);
KINF_API kinf_status kinf_majorant_eval(const kinf_majorant* m, double t, double* out);
KINF_API kinf_status kinf_majorant_at_dyadic(const kinf_majorant* m, int level,
                                             double* out);

typedef struct kinf_majorant_validation {
  int ok;
  double t_low;  /* first violating pair when !ok */
  double t_high;
  char which[32]; /* violated axiom label */
} kinf_majorant_validation;

KINF_API kinf_status kinf_majorant_validate(const kinf_majorant* m,
                                            kinf_majorant_validation* out);

typedef struct kinf_upper_type {
  double gamma;
  double c;
  int valid;
} kinf_upper_type;

KINF_API kinf_status kinf_upper_type_estimate(const kinf_majorant* m, double gamma,
                                              kinf_upper_type* out);

/* partial must hold `levels` doubles. */
KINF_API kinf_status kinf_dyadic_sum(const kinf_majorant* m, int levels, double* partial);

typedef struct kinf_integral_test {
  double integral;     /* over (2^-levels, 1] */
  int converged;       /* dyadic tail extrapolation passed */
  int sandwich_ok;     /* two-sided dyadic bound held at every level */
  int first_violation; /* 1-based level of first sandwich violation, else 0 */
} kinf_integral_test;

/* dyadic_partial / integral_partial (length `levels`) may be NULL to skip. */
KINF_API kinf_status kinf_integral_test_run(const kinf_majorant* m, int levels,
                                            double quad_tol, double* dyadic_partial,
                                            double* integral_partial,
                                            kinf_integral_test* out);

KINF_API kinf_status kinf_xphi_norm(const kinf_sequence* seq, const double* w_re,
                                    const double* w_im, const kinf_majorant* m,
                                    double* out);

#ifdef __cplusplus
}
#endif

#endif /* KINF_H */
