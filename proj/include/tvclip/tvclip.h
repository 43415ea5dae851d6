/* tvclip: 1D total-variation denoising by iterative clipping.
 *
 * C API over the C++ core. All objects are opaque handles freed by the
 * matching *_free call; every fallible function returns a tvc_status and
 * leaves a human-readable message in tvc_last_error() on failure.
 */
#ifndef TVCLIP_H
#define TVCLIP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tvc_status {
  TVC_OK = 0,
  TVC_ERR_DOMAIN = 1,      /* invalid argument or violated precondition */
  TVC_ERR_NUMERIC = 2,     /* non-finite values during iteration */
  TVC_ERR_UNSUPPORTED = 3, /* input outside the supported subset */
  TVC_ERR_PARSE = 4,       /* malformed WAV container */
  TVC_ERR_NO_CORNER = 5,   /* L-curve has no usable corner */
  TVC_ERR_INTERNAL = 6
} tvc_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* tvc_last_error(void);

/* ---- signals ---- */

typedef struct tvc_signal tvc_signal;

tvc_status tvc_signal_create(const double* samples, size_t n, tvc_signal** out);
void tvc_signal_free(tvc_signal* s);
size_t tvc_signal_size(const tvc_signal* s);
const double* tvc_signal_samples(const tvc_signal* s);
/* Sample rate is optional; has_rate reports presence, rate is 0 when unset. */
int tvc_signal_has_rate(const tvc_signal* s);
double tvc_signal_rate(const tvc_signal* s);
tvc_status tvc_signal_set_rate(tvc_signal* s, double hz);

/* ---- synthetic signals and noise ---- */

typedef enum tvc_noise_kind {
  TVC_NOISE_GAUSSIAN = 0,
  TVC_NOISE_LAPLACIAN = 1
} tvc_noise_kind;

tvc_status tvc_gen_step(size_t n, size_t edge, double low, double high,
                        tvc_signal** out);
tvc_status tvc_gen_square(size_t n, size_t period, double amplitude,
                          tvc_signal** out);
/* Noise std dev = (level_percent/100) * peak-to-peak of clean; deterministic
 * in (kind, level_percent, seed, clean). */
tvc_status tvc_add_noise(const tvc_signal* clean, tvc_noise_kind kind,
                         double level_percent, uint64_t seed, tvc_signal** out);

/* Synthesized stand-in for the vuvuzela recording: a speech-band tone mixture
 * (clean) under a ~233 Hz harmonic buzz (noisy). Both signals carry the
 * sample rate. */
tvc_status tvc_gen_vuvuzela(double seconds, uint32_t rate, uint64_t seed,
                            tvc_signal** clean, tvc_signal** noisy);

/* ---- iterative clipping solver ---- */

typedef struct tvc_denoise_params {
  double lambda;  /* regularization weight, >= 0 */
  int max_iter;   /* >= 1 */
  double alpha;   /* step scale, >= 4 */
  double tol;     /* early stop on relative cost decrease; 0 disables */
} tvc_denoise_params;

/* lambda 1, max_iter 100, alpha 4, tol 0 */
void tvc_denoise_params_init(tvc_denoise_params* p);

typedef struct tvc_denoise_result tvc_denoise_result;

tvc_status tvc_denoise_clip(const tvc_signal* y, const tvc_denoise_params* p,
                            tvc_denoise_result** out);
void tvc_denoise_result_free(tvc_denoise_result* r);
const tvc_signal* tvc_result_signal(const tvc_denoise_result* r);
const double* tvc_result_dual(const tvc_denoise_result* r, size_t* len);
const double* tvc_result_cost_history(const tvc_denoise_result* r, size_t* len);
int tvc_result_iterations(const tvc_denoise_result* r);
int tvc_result_converged(const tvc_denoise_result* r);

tvc_status tvc_tv_seminorm(const tvc_signal* x, double* out);
tvc_status tvc_cost(const tvc_signal* y, const tvc_signal* x, double lambda,
                    double* out);
/* Smallest lambda whose minimizer is the constant mean signal. */
tvc_status tvc_lambda_max(const tvc_signal* y, double* out);

typedef struct tvc_certificate {
  double max_feasibility_violation;
  double max_complementarity_violation;
  double balance_residual;
} tvc_certificate;

/* KKT residuals for a candidate minimizer; active_tol < 0 selects the default
 * 1e-8 * peak-to-peak of x. */
tvc_status tvc_check_optimality(const tvc_signal* y, const tvc_signal* x,
                                double lambda, double active_tol,
                                tvc_certificate* out);

/* ---- exact oracles ---- */

tvc_status tvc_denoise_exact(const tvc_signal* y, double lambda,
                             tvc_signal** out);
tvc_status tvc_denoise_bruteforce(const tvc_signal* y, double lambda,
                                  double grid_lo, double grid_hi,
                                  size_t grid_steps, tvc_signal** out);

/* ---- L-curve ---- */

typedef enum tvc_solver {
  TVC_SOLVER_CLIP = 0,
  TVC_SOLVER_EXACT = 1
} tvc_solver;

typedef struct tvc_lcurve_point {
  double lambda;
  double residual_norm;
  double tv_norm;
  double cost;
} tvc_lcurve_point;

typedef struct tvc_lcurve_sweep tvc_lcurve_sweep;

/* count log-spaced lambdas in [lo, hi]; tmpl (nullable) supplies the Clip
 * solver's iteration settings, its lambda field is ignored. */
tvc_status tvc_lcurve_sweep_run(const tvc_signal* y, double lo, double hi,
                                size_t count, tvc_solver solver,
                                const tvc_denoise_params* tmpl,
                                tvc_lcurve_sweep** out);
void tvc_lcurve_sweep_free(tvc_lcurve_sweep* s);
size_t tvc_lcurve_sweep_size(const tvc_lcurve_sweep* s);
tvc_status tvc_lcurve_sweep_point(const tvc_lcurve_sweep* s, size_t i,
                                  tvc_lcurve_point* out);
/* Max Menger curvature in log-log coordinates; ties to the smaller lambda. */
tvc_status tvc_lcurve_corner(const tvc_lcurve_sweep* s, double* lambda_out);

/* ---- metrics ---- */

tvc_status tvc_rmse(const tvc_signal* a, const tvc_signal* b, double* out);
/* exact_match is set to 1 (and db left untouched) when estimate == clean. */
tvc_status tvc_snr_db(const tvc_signal* clean, const tvc_signal* estimate,
                      int* exact_match, double* db);

/* ---- WAV audio ---- */

/* PCM-16 RIFF/WAVE, 1 or 2 channels (stereo averages down to mono). The
 * returned signal carries the sample rate. */
tvc_status tvc_read_wav(const uint8_t* bytes, size_t len, tvc_signal** out);
/* Mono PCM-16 with the canonical 44-byte header; the signal must carry a
 * sample rate. Free the buffer with tvc_buffer_free. */
tvc_status tvc_write_wav(const tvc_signal* clip, uint8_t** bytes_out,
                         size_t* len_out);
void tvc_buffer_free(uint8_t* bytes);

/* Hann-weighted 50%-overlap-add windowed denoising for long clips. */
tvc_status tvc_denoise_overlap_add(const tvc_signal* y,
                                   const tvc_denoise_params* p, size_t window,
                                   tvc_signal** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TVCLIP_H */
