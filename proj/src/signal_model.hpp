#ifndef TVCLIP_SIGNAL_MODEL_HPP
#define TVCLIP_SIGNAL_MODEL_HPP

#include <cstdint>

#include "signal.hpp"

namespace tvd {

enum class NoiseKind { Gaussian, Laplacian };

// Noise level is a percentage of the clean signal's peak-to-peak range; the
// injected noise has standard deviation sigma = (level_percent/100) * range.
// Identical (kind, level_percent, seed, clean) reproduces the noise bit for bit.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::Gaussian;
  double level_percent = 0.0;
  std::uint64_t seed = 0;
};

// Piecewise-constant step: low before `edge`, high from `edge` on (0-based).
Signal gen_step(std::size_t n, std::size_t edge, double low, double high);

// Square wave of the given full period, starting at +amplitude. Odd periods
// round the first half-period up.
Signal gen_square(std::size_t n, std::size_t period, double amplitude);

Signal add_noise(const Signal& clean, const NoiseSpec& spec);

// The raw unit-variance draws behind add_noise (mt19937_64 stream, Box-Muller
// for Gaussian, inverse-CDF for Laplacian). Exposed so tests can pin the
// generator contract.
std::vector<double> unit_noise_draws(NoiseKind kind, std::uint64_t seed, std::size_t n);

// Stand-in for the vuvuzela recording: a speech-band tone mixture (clean)
// buried under a narrowband ~233 Hz harmonic buzz (noisy = clean + buzz).
// Deterministic in (seconds, rate, seed); both signals carry the sample rate
// and stay within [-1, 1].
struct VuvuzelaFixture {
  Signal clean;
  Signal noisy;
};

VuvuzelaFixture gen_vuvuzela(double seconds, std::uint32_t rate, std::uint64_t seed);

}  // namespace tvd

#endif  // TVCLIP_SIGNAL_MODEL_HPP
