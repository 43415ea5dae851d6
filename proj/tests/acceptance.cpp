// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria are property-based on seeded fixtures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "audio_io.hpp"
#include "lcurve.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "signal_model.hpp"
#include "tv_clip.hpp"

using namespace tvd;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::vector<double> random_vec(std::mt19937& gen, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

double rel_l2(const Signal& a, const Signal& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += b[i] * b[i];
  }
  return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

// 1. Monotone descent of the clipping iteration on random signals.
void criterion_1() {
  std::mt19937 gen(1001);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(gen() % 63);
    Signal y(random_vec(gen, n, -2.0, 2.0));
    const double lmax = lambda_max(y);
    if (lmax <= 0.0) continue;
    DenoiseParams p;
    p.lambda = std::uniform_real_distribution<double>(1e-6, 2.0)(gen) * lmax;
    p.max_iter = 400;
    const DenoiseResult r = denoise_clip(y, p);
    for (std::size_t k = 0; k + 1 < r.cost_history.size(); ++k) {
      if (r.cost_history[k + 1] > r.cost_history[k] + 1e-12 * r.cost_history[0]) {
        ok = false;
        break;
      }
    }
  }
  report(1, "iterative clipping cost history is non-increasing", ok);
}

// 2. lambda = 0 identity, bit for bit.
void criterion_2() {
  std::mt19937 gen(1002);
  bool ok = true;
  for (const int nit : {1, 10, 1000}) {
    Signal y(random_vec(gen, 50, -3.0, 3.0));
    DenoiseParams p;
    p.lambda = 0.0;
    p.max_iter = nit;
    const DenoiseResult r = denoise_clip(y, p);
    ok = ok && r.x.samples == y.samples;
  }
  report(2, "lambda = 0 returns the input bit-for-bit", ok);
}

// 3. Clip solver agrees with the exact oracle on the seeded step fixture.
void criterion_3() {
  const Signal clean = gen_step(256, 128, 0.0, 1.0);
  const Signal y = add_noise(clean, {NoiseKind::Gaussian, 10.0, 42});
  const double lam = lambda_max(y) / 2.0;
  DenoiseParams p;
  p.lambda = lam;
  p.max_iter = 20000;
  const DenoiseResult r = denoise_clip(y, p);
  const Signal exact = denoise_exact(y, lam);
  const double dist = rel_l2(r.x, exact);
  const OptimalityCertificate cert = check_optimality(y, r.x, lam);
  const double bound = 1e-3 * peak_to_peak(y);
  const bool ok = dist <= 1e-3 && cert.max_feasibility_violation <= bound &&
                  cert.max_complementarity_violation <= bound &&
                  std::abs(cert.balance_residual) <= bound;
  char detail[128];
  std::snprintf(detail, sizeof detail, "rel_l2=%.3g feas=%.3g compl=%.3g bal=%.3g",
                dist, cert.max_feasibility_violation, cert.max_complementarity_violation,
                cert.balance_residual);
  report(3, "clip solver within 1e-3 of the exact oracle (step fixture)", ok, detail);
}

// 4. Exact-solver soundness: certificates on 200 random instances; brute-force
// agreement for tiny instances.
void criterion_4() {
  std::mt19937 gen(1004);
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(gen() % 63);
    Signal y(random_vec(gen, n, -1.0, 1.0));
    const double lmax = lambda_max(y);
    const double lam = std::uniform_real_distribution<double>(0.0, 1.5)(gen) * lmax;
    const Signal x = denoise_exact(y, lam);
    const OptimalityCertificate c = check_optimality(y, x, lam);
    const double scale = peak_to_peak(y);
    const double resid =
        std::max({c.max_feasibility_violation, c.max_complementarity_violation,
                  std::abs(c.balance_residual)});
    worst = std::max(worst, resid / scale);
    if (resid > 1e-9 * scale) ok = false;
  }

  bool ok_bf = true;
  for (int trial = 0; trial < 24 && ok_bf; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    Signal y(random_vec(gen, n, 0.0, 1.0));
    const double lam =
        std::uniform_real_distribution<double>(0.0, 1.2)(gen) * lambda_max(y);
    const double h = 0.01;
    double lo = y[0], hi = y[0];
    for (double v : y.samples) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 2;
    const Signal bf =
        denoise_bruteforce(y, lam, lo, lo + h * static_cast<double>(steps - 1), steps);
    const Signal ex = denoise_exact(y, lam);
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(bf[i] - ex[i]) > std::sqrt(static_cast<double>(n)) * h) ok_bf = false;
  }
  char detail[64];
  std::snprintf(detail, sizeof detail, "worst certificate residual %.3g (rel)", worst);
  report(4, "exact solver certified on 200 random instances + brute force", ok && ok_bf,
         detail);
}

// 5. Critical lambda behavior.
void criterion_5() {
  std::mt19937 gen(1005);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(gen() % 63);
    Signal y(random_vec(gen, n, -2.0, 2.0));
    const double lmax = lambda_max(y);
    if (lmax <= 0.0) continue;
    const Signal at = denoise_exact(y, lmax);
    const double mean = signal_mean(y);
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(at[i] - mean) > 1e-9) ok = false;
    if (tv_seminorm(denoise_exact(y, 0.99 * lmax)) <= 0.0) ok = false;
  }
  report(5, "lambda_max collapses to the mean; 0.99*lambda_max does not", ok);
}

// 6. Step-signal pipeline: synth -> lcurve -> corner -> denoise_clip.
void criterion_6() {
  const Signal clean = gen_step(256, 128, 0.0, 1.0);
  const Signal y = add_noise(clean, {NoiseKind::Gaussian, 10.0, 42});
  const double lmax = lambda_max(y);
  const LCurveSweep sw = sweep(y, 1e-2, 2.0 * lmax, 30, SweepSolver::Exact);
  const double lam = corner(sw);

  DenoiseParams p;
  p.lambda = lam;
  p.max_iter = 5000;
  const Signal x = denoise_clip(y, p).x;

  const double snr_noisy = snr_db(clean, y).db;
  const double snr_den = snr_db(clean, x).db;
  const double rmse_noisy = rmse(clean, y);
  const double rmse_den = rmse(clean, x);
  const bool ok = snr_den > snr_noisy && rmse_den < rmse_noisy;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "lambda=%.4g lambda/lambda_max=%.4g snr %.2f->%.2f dB rmse %.4f->%.4f",
                lam, lam / lmax, snr_noisy, snr_den, rmse_noisy, rmse_den);
  report(6, "step pipeline improves SNR and RMSE", ok, detail);
}

// 7. Square wave with Laplacian noise, same pipeline.
void criterion_7() {
  const Signal clean = gen_square(512, 64, 1.0);
  const Signal y = add_noise(clean, {NoiseKind::Laplacian, 10.0, 42});
  const double lmax = lambda_max(y);
  const LCurveSweep sw = sweep(y, 1e-2, 2.0 * lmax, 30, SweepSolver::Exact);
  const double lam = corner(sw);

  DenoiseParams p;
  p.lambda = lam;
  p.max_iter = 5000;
  const Signal x = denoise_clip(y, p).x;

  const double snr_noisy = snr_db(clean, y).db;
  const double snr_den = snr_db(clean, x).db;
  const bool ok = snr_den > snr_noisy;
  char detail[96];
  std::snprintf(detail, sizeof detail, "lambda=%.4g snr %.2f->%.2f dB", lam, snr_noisy,
                snr_den);
  report(7, "square-wave pipeline improves SNR", ok, detail);
}

// 8. Vuvuzela stand-in clip: L-curve lambda reduces RMSE; WAV round trip.
void criterion_8() {
  const VuvuzelaFixture fx = gen_vuvuzela(10.0, 8000, 42);
  const double lmax = lambda_max(fx.noisy);
  const LCurveSweep sw = sweep(fx.noisy, lmax / 1000.0, lmax, 30, SweepSolver::Exact);
  const double lam = corner(sw);
  const Signal x = denoise_exact(fx.noisy, lam);

  const double rmse_noisy = rmse(fx.clean, fx.noisy);
  const double rmse_den = rmse(fx.clean, x);

  AudioClip clip;
  clip.signal = x;
  clip.signal.sample_rate = 8000.0;
  const std::vector<std::uint8_t> bytes = write_wav(clip);
  const AudioClip back = read_wav(bytes);
  bool round_ok = back.signal.size() == x.size();
  double worst_rt = 0.0;
  if (round_ok) {
    const std::vector<std::uint8_t> bytes2 = write_wav(back);
    const AudioClip back2 = read_wav(bytes2);
    for (std::size_t i = 0; i < x.size(); ++i) {
      worst_rt = std::max(worst_rt, std::abs(back2.signal[i] - back.signal[i]));
      if (std::abs(back2.signal[i] - back.signal[i]) > 1.0 / 32767.0) round_ok = false;
    }
  }

  const bool ok = rmse_den < rmse_noisy && round_ok;
  char detail[128];
  std::snprintf(detail, sizeof detail, "lambda=%.4g rmse %.4f->%.4f round-trip max %.3g",
                lam, rmse_noisy, rmse_den, worst_rt);
  report(8, "vuvuzela clip pipeline reduces RMSE and WAV round-trips", ok, detail);
}

// 9. Mean preservation across iterates and exact solutions.
void criterion_9() {
  bool ok = true;
  const Signal step_clean = gen_step(256, 128, 0.0, 1.0);
  const Signal step_noisy = add_noise(step_clean, {NoiseKind::Gaussian, 10.0, 42});
  const Signal square_noisy =
      add_noise(gen_square(512, 64, 1.0), {NoiseKind::Laplacian, 10.0, 42});

  for (const Signal* y : {&step_noisy, &square_noisy}) {
    const double mean_y = signal_mean(*y);
    const double scale = std::max(std::abs(mean_y), 1.0);
    const double lam = lambda_max(*y) / 2.0;
    // deterministic iterations: prefixes of the run are its iterates
    for (const int nit : {1, 3, 10, 50, 200}) {
      DenoiseParams p;
      p.lambda = lam;
      p.max_iter = nit;
      const Signal x = denoise_clip(*y, p).x;
      if (std::abs(signal_mean(x) - mean_y) > 1e-12 * scale) ok = false;
    }
    for (const double f : {0.1, 0.5, 1.0, 2.0}) {
      const Signal x = denoise_exact(*y, f * lambda_max(*y));
      if (std::abs(signal_mean(x) - mean_y) > 1e-12 * scale) ok = false;
    }
  }
  report(9, "mean preserved by iterates and exact solutions", ok);
}

// 10. Adjoint identity over 1000 random pairs.
void criterion_10() {
  std::mt19937 gen(1010);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(gen() % 63);
    const std::vector<double> x = random_vec(gen, n, -5.0, 5.0);
    const std::vector<double> z = random_vec(gen, n - 1, -5.0, 5.0);
    double lhs = 0.0, rhs = 0.0;
    const std::vector<double> dx = forward_diff(x);
    const std::vector<double> dtz = adjoint_diff(z);
    for (std::size_t i = 0; i < dx.size(); ++i) lhs += dx[i] * z[i];
    for (std::size_t i = 0; i < x.size(); ++i) rhs += x[i] * dtz[i];
    if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs))) ok = false;
  }
  report(10, "adjoint identity <Dx,z> == <x,D^T z> on 1000 pairs", ok);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::printf("%d criterion(s) failed; total runtime %lld ms\n", g_failures,
              static_cast<long long>(dt));
  return g_failures == 0 ? 0 : 1;
}
