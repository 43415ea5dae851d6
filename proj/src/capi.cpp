#include "tvclip/tvclip.h"

#include <new>
#include <string>

#include "audio_io.hpp"
#include "lcurve.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "signal_model.hpp"
#include "tv_clip.hpp"

struct tvc_signal {
  tvd::Signal sig;
};

struct tvc_denoise_result {
  tvd::DenoiseResult res;
  tvc_signal x_view;  // shares nothing; owns a copy of res.x for the accessor
};

struct tvc_lcurve_sweep {
  tvd::LCurveSweep sweep;
};

namespace {

thread_local std::string g_last_error = "ok";

tvc_status fail(tvc_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
tvc_status guarded(Fn&& fn) {
  try {
    fn();
    return TVC_OK;
  } catch (const tvd::wav_parse_error& e) {
    return fail(TVC_ERR_PARSE, e.what());
  } catch (const tvd::unsupported_error& e) {
    return fail(TVC_ERR_UNSUPPORTED, e.what());
  } catch (const tvd::no_corner_error& e) {
    return fail(TVC_ERR_NO_CORNER, e.what());
  } catch (const tvd::numeric_error& e) {
    return fail(TVC_ERR_NUMERIC, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TVC_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TVC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TVC_ERR_INTERNAL, e.what());
  }
}

tvc_status require(bool ok, const char* what) {
  return ok ? TVC_OK : fail(TVC_ERR_DOMAIN, what);
}

tvd::DenoiseParams to_params(const tvc_denoise_params* p) {
  tvd::DenoiseParams out;
  if (p) {
    out.lambda = p->lambda;
    out.max_iter = p->max_iter;
    out.alpha = p->alpha;
    out.tol = p->tol;
  }
  return out;
}

tvc_status emit_signal(tvd::Signal&& sig, tvc_signal** out) {
  *out = new tvc_signal{std::move(sig)};
  return TVC_OK;
}

}  // namespace

extern "C" {

const char* tvc_last_error(void) { return g_last_error.c_str(); }

/* ---- signals ---- */

tvc_status tvc_signal_create(const double* samples, size_t n, tvc_signal** out) {
  if (tvc_status s = require(samples && out && n > 0, "null or empty input"); s) return s;
  return guarded([&] {
    tvd::Signal sig(std::vector<double>(samples, samples + n));
    sig.validate();
    emit_signal(std::move(sig), out);
  });
}

void tvc_signal_free(tvc_signal* s) { delete s; }

size_t tvc_signal_size(const tvc_signal* s) { return s ? s->sig.size() : 0; }

const double* tvc_signal_samples(const tvc_signal* s) {
  return s ? s->sig.samples.data() : nullptr;
}

int tvc_signal_has_rate(const tvc_signal* s) {
  return (s && s->sig.sample_rate) ? 1 : 0;
}

double tvc_signal_rate(const tvc_signal* s) {
  return (s && s->sig.sample_rate) ? *s->sig.sample_rate : 0.0;
}

tvc_status tvc_signal_set_rate(tvc_signal* s, double hz) {
  if (tvc_status st = require(s != nullptr, "null signal"); st) return st;
  if (tvc_status st = require(hz > 0.0, "sample rate must be positive"); st) return st;
  s->sig.sample_rate = hz;
  return TVC_OK;
}

/* ---- synthetic signals and noise ---- */

tvc_status tvc_gen_step(size_t n, size_t edge, double low, double high,
                        tvc_signal** out) {
  if (tvc_status s = require(out != nullptr, "null output"); s) return s;
  return guarded([&] { emit_signal(tvd::gen_step(n, edge, low, high), out); });
}

tvc_status tvc_gen_square(size_t n, size_t period, double amplitude,
                          tvc_signal** out) {
  if (tvc_status s = require(out != nullptr, "null output"); s) return s;
  return guarded([&] { emit_signal(tvd::gen_square(n, period, amplitude), out); });
}

tvc_status tvc_add_noise(const tvc_signal* clean, tvc_noise_kind kind,
                         double level_percent, uint64_t seed, tvc_signal** out) {
  if (tvc_status s = require(clean && out, "null input"); s) return s;
  return guarded([&] {
    tvd::NoiseSpec spec;
    spec.kind = kind == TVC_NOISE_LAPLACIAN ? tvd::NoiseKind::Laplacian
                                            : tvd::NoiseKind::Gaussian;
    spec.level_percent = level_percent;
    spec.seed = seed;
    emit_signal(tvd::add_noise(clean->sig, spec), out);
  });
}

tvc_status tvc_gen_vuvuzela(double seconds, uint32_t rate, uint64_t seed,
                            tvc_signal** clean, tvc_signal** noisy) {
  if (tvc_status s = require(clean && noisy, "null output"); s) return s;
  return guarded([&] {
    tvd::VuvuzelaFixture fx = tvd::gen_vuvuzela(seconds, rate, seed);
    emit_signal(std::move(fx.clean), clean);
    emit_signal(std::move(fx.noisy), noisy);
  });
}

/* ---- iterative clipping solver ---- */

void tvc_denoise_params_init(tvc_denoise_params* p) {
  if (!p) return;
  p->lambda = 1.0;
  p->max_iter = 100;
  p->alpha = 4.0;
  p->tol = 0.0;
}

tvc_status tvc_denoise_clip(const tvc_signal* y, const tvc_denoise_params* p,
                            tvc_denoise_result** out) {
  if (tvc_status s = require(y && p && out, "null input"); s) return s;
  return guarded([&] {
    auto* r = new tvc_denoise_result;
    r->res = tvd::denoise_clip(y->sig, to_params(p));
    r->x_view.sig = r->res.x;
    *out = r;
  });
}

void tvc_denoise_result_free(tvc_denoise_result* r) { delete r; }

const tvc_signal* tvc_result_signal(const tvc_denoise_result* r) {
  return r ? &r->x_view : nullptr;
}

const double* tvc_result_dual(const tvc_denoise_result* r, size_t* len) {
  if (!r) return nullptr;
  if (len) *len = r->res.z.size();
  return r->res.z.data();
}

const double* tvc_result_cost_history(const tvc_denoise_result* r, size_t* len) {
  if (!r) return nullptr;
  if (len) *len = r->res.cost_history.size();
  return r->res.cost_history.data();
}

int tvc_result_iterations(const tvc_denoise_result* r) {
  return r ? r->res.iterations_run : 0;
}

int tvc_result_converged(const tvc_denoise_result* r) {
  return (r && r->res.converged) ? 1 : 0;
}

tvc_status tvc_tv_seminorm(const tvc_signal* x, double* out) {
  if (tvc_status s = require(x && out, "null input"); s) return s;
  return guarded([&] { *out = tvd::tv_seminorm(x->sig); });
}

tvc_status tvc_cost(const tvc_signal* y, const tvc_signal* x, double lambda,
                    double* out) {
  if (tvc_status s = require(y && x && out, "null input"); s) return s;
  return guarded([&] { *out = tvd::cost(y->sig, x->sig, lambda); });
}

tvc_status tvc_lambda_max(const tvc_signal* y, double* out) {
  if (tvc_status s = require(y && out, "null input"); s) return s;
  return guarded([&] { *out = tvd::lambda_max(y->sig); });
}

tvc_status tvc_check_optimality(const tvc_signal* y, const tvc_signal* x,
                                double lambda, double active_tol,
                                tvc_certificate* out) {
  if (tvc_status s = require(y && x && out, "null input"); s) return s;
  return guarded([&] {
    const tvd::OptimalityCertificate c =
        tvd::check_optimality(y->sig, x->sig, lambda, active_tol);
    out->max_feasibility_violation = c.max_feasibility_violation;
    out->max_complementarity_violation = c.max_complementarity_violation;
    out->balance_residual = c.balance_residual;
  });
}

/* ---- exact oracles ---- */

tvc_status tvc_denoise_exact(const tvc_signal* y, double lambda,
                             tvc_signal** out) {
  if (tvc_status s = require(y && out, "null input"); s) return s;
  return guarded([&] { emit_signal(tvd::denoise_exact(y->sig, lambda), out); });
}

tvc_status tvc_denoise_bruteforce(const tvc_signal* y, double lambda,
                                  double grid_lo, double grid_hi,
                                  size_t grid_steps, tvc_signal** out) {
  if (tvc_status s = require(y && out, "null input"); s) return s;
  return guarded([&] {
    emit_signal(tvd::denoise_bruteforce(y->sig, lambda, grid_lo, grid_hi, grid_steps),
                out);
  });
}

/* ---- L-curve ---- */

tvc_status tvc_lcurve_sweep_run(const tvc_signal* y, double lo, double hi,
                                size_t count, tvc_solver solver,
                                const tvc_denoise_params* tmpl,
                                tvc_lcurve_sweep** out) {
  if (tvc_status s = require(y && out, "null input"); s) return s;
  return guarded([&] {
    const tvd::SweepSolver sv = solver == TVC_SOLVER_CLIP ? tvd::SweepSolver::Clip
                                                          : tvd::SweepSolver::Exact;
    tvd::DenoiseParams p = to_params(tmpl);
    p.lambda = 1.0;  // ignored by sweep; keep valid
    *out = new tvc_lcurve_sweep{tvd::sweep(y->sig, lo, hi, count, sv, p)};
  });
}

void tvc_lcurve_sweep_free(tvc_lcurve_sweep* s) { delete s; }

size_t tvc_lcurve_sweep_size(const tvc_lcurve_sweep* s) {
  return s ? s->sweep.points.size() : 0;
}

tvc_status tvc_lcurve_sweep_point(const tvc_lcurve_sweep* s, size_t i,
                                  tvc_lcurve_point* out) {
  if (tvc_status st = require(s && out, "null input"); st) return st;
  if (tvc_status st = require(i < s->sweep.points.size(), "point index out of range"); st)
    return st;
  const tvd::LCurvePoint& p = s->sweep.points[i];
  out->lambda = p.lambda;
  out->residual_norm = p.residual_norm;
  out->tv_norm = p.tv_norm;
  out->cost = p.cost;
  return TVC_OK;
}

tvc_status tvc_lcurve_corner(const tvc_lcurve_sweep* s, double* lambda_out) {
  if (tvc_status st = require(s && lambda_out, "null input"); st) return st;
  return guarded([&] { *lambda_out = tvd::corner(s->sweep); });
}

/* ---- metrics ---- */

tvc_status tvc_rmse(const tvc_signal* a, const tvc_signal* b, double* out) {
  if (tvc_status s = require(a && b && out, "null input"); s) return s;
  return guarded([&] { *out = tvd::rmse(a->sig, b->sig); });
}

tvc_status tvc_snr_db(const tvc_signal* clean, const tvc_signal* estimate,
                      int* exact_match, double* db) {
  if (tvc_status s = require(clean && estimate && exact_match && db, "null input"); s)
    return s;
  return guarded([&] {
    const tvd::SnrResult r = tvd::snr_db(clean->sig, estimate->sig);
    *exact_match = r.exact_match ? 1 : 0;
    if (!r.exact_match) *db = r.db;
  });
}

/* ---- WAV audio ---- */

tvc_status tvc_read_wav(const uint8_t* bytes, size_t len, tvc_signal** out) {
  if (tvc_status s = require(bytes && out, "null input"); s) return s;
  return guarded([&] {
    tvd::AudioClip clip = tvd::read_wav(std::vector<uint8_t>(bytes, bytes + len));
    emit_signal(std::move(clip.signal), out);
  });
}

tvc_status tvc_write_wav(const tvc_signal* clip, uint8_t** bytes_out,
                         size_t* len_out) {
  if (tvc_status s = require(clip && bytes_out && len_out, "null input"); s) return s;
  return guarded([&] {
    tvd::AudioClip c;
    c.signal = clip->sig;
    const std::vector<uint8_t> bytes = tvd::write_wav(c);
    auto* buf = new uint8_t[bytes.size()];
    std::copy(bytes.begin(), bytes.end(), buf);
    *bytes_out = buf;
    *len_out = bytes.size();
  });
}

void tvc_buffer_free(uint8_t* bytes) { delete[] bytes; }

tvc_status tvc_denoise_overlap_add(const tvc_signal* y,
                                   const tvc_denoise_params* p, size_t window,
                                   tvc_signal** out) {
  if (tvc_status s = require(y && p && out, "null input"); s) return s;
  return guarded([&] {
    emit_signal(tvd::denoise_overlap_add(y->sig, to_params(p), window), out);
  });
}

} /* extern "C" */
