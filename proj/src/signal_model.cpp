#include "signal_model.hpp"

#include <cmath>
#include <random>

namespace tvd {

Signal gen_step(std::size_t n, std::size_t edge, double low, double high) {
  if (n < 1) throw std::invalid_argument("gen_step: n must be >= 1");
  if (edge < 1 || edge > n - 1)
    throw std::invalid_argument("gen_step: edge must lie in [1, n-1]");
  Signal out;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = i < edge ? low : high;
  return out;
}

Signal gen_square(std::size_t n, std::size_t period, double amplitude) {
  if (n < 1) throw std::invalid_argument("gen_square: n must be >= 1");
  if (period < 2) throw std::invalid_argument("gen_square: period must be >= 2");
  if (amplitude <= 0.0) throw std::invalid_argument("gen_square: amplitude must be positive");
  Signal out;
  out.samples.resize(n);
  const std::size_t half = (period + 1) / 2;
  for (std::size_t i = 0; i < n; ++i)
    out.samples[i] = (i % period) < half ? amplitude : -amplitude;
  return out;
}

namespace {

// Uniform in (0, 1]; the raw engine output is specified by the standard, so
// draws are stable across platforms (std distributions are not).
double uniform_open_closed(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

std::vector<double> unit_noise_draws(NoiseKind kind, std::uint64_t seed, std::size_t n) {
  std::mt19937_64 gen(seed);
  std::vector<double> out;
  out.reserve(n);
  if (kind == NoiseKind::Gaussian) {
    // Box-Muller, pairs consumed in order.
    while (out.size() < n) {
      const double u1 = uniform_open_closed(gen);
      const double u2 = uniform_open_closed(gen);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double theta = 2.0 * M_PI * u2;
      out.push_back(r * std::cos(theta));
      if (out.size() < n) out.push_back(r * std::sin(theta));
    }
  } else {
    // Laplace with scale 1/sqrt(2) so the variance is 1.
    const double b = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = uniform_open_closed(gen) - 0.5;
      const double s = u >= 0.0 ? 1.0 : -1.0;
      out.push_back(-b * s * std::log(1.0 - 2.0 * std::abs(u)));
    }
  }
  return out;
}

VuvuzelaFixture gen_vuvuzela(double seconds, std::uint32_t rate, std::uint64_t seed) {
  if (seconds <= 0.0) throw std::invalid_argument("gen_vuvuzela: seconds must be positive");
  if (rate == 0) throw std::invalid_argument("gen_vuvuzela: rate must be positive");
  const std::size_t n = static_cast<std::size_t>(seconds * rate);
  if (n < 1) throw std::invalid_argument("gen_vuvuzela: clip too short");

  std::mt19937_64 gen(seed);
  auto phase = [&gen] {
    return 2.0 * M_PI * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
  };

  // Speech-band tones with slow amplitude envelopes.
  struct Tone { double freq, amp, env_freq, ph, env_ph; };
  const double tone_freqs[3] = {320.0, 445.0, 587.0};
  const double env_freqs[3] = {0.31, 0.47, 0.63};
  Tone tones[3];
  for (int i = 0; i < 3; ++i)
    tones[i] = {tone_freqs[i], 0.14, env_freqs[i], phase(), phase()};

  // Buzz: ~233 Hz fundamental plus harmonics up to Nyquist, 1/h roll-off.
  const double f0 = 233.0;
  const int max_harmonics = 16;
  std::vector<double> buzz_ph;
  for (int h = 1; h <= max_harmonics; ++h) buzz_ph.push_back(phase());

  VuvuzelaFixture fx;
  fx.clean.samples.resize(n);
  fx.noisy.samples.resize(n);
  fx.clean.sample_rate = static_cast<double>(rate);
  fx.noisy.sample_rate = static_cast<double>(rate);

  const double nyquist = rate / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate;
    double s = 0.0;
    for (const Tone& tn : tones) {
      const double env = 0.6 + 0.4 * std::sin(2.0 * M_PI * tn.env_freq * t + tn.env_ph);
      s += tn.amp * env * std::sin(2.0 * M_PI * tn.freq * t + tn.ph);
    }
    double b = 0.0;
    for (int h = 1; h <= max_harmonics; ++h) {
      const double f = f0 * h;
      if (f >= nyquist) break;
      b += (0.35 / h) * std::sin(2.0 * M_PI * f * t + buzz_ph[static_cast<std::size_t>(h - 1)]);
    }
    fx.clean.samples[i] = s;
    fx.noisy.samples[i] = s + b;
  }

  // Keep both within [-1, 1] with common scaling so RMS comparisons hold.
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    peak = std::max(peak, std::abs(fx.noisy.samples[i]));
  if (peak > 0.95) {
    const double scale = 0.95 / peak;
    for (std::size_t i = 0; i < n; ++i) {
      fx.clean.samples[i] *= scale;
      fx.noisy.samples[i] *= scale;
    }
  }
  return fx;
}

Signal add_noise(const Signal& clean, const NoiseSpec& spec) {
  clean.validate();
  if (spec.level_percent < 0.0)
    throw std::invalid_argument("add_noise: level_percent must be >= 0");
  const double sigma = (spec.level_percent / 100.0) * peak_to_peak(clean);
  Signal out = clean;
  if (sigma == 0.0) return out;
  const std::vector<double> w = unit_noise_draws(spec.kind, spec.seed, clean.size());
  for (std::size_t i = 0; i < clean.size(); ++i) out.samples[i] += sigma * w[i];
  return out;
}

}  // namespace tvd
