#ifndef TVCLIP_SIGNAL_HPP
#define TVCLIP_SIGNAL_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvd {

// Raised when an iteration produces NaN/inf from pathological input.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by lcurve::corner when no usable corner exists.
class no_corner_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for inputs a routine deliberately refuses (e.g. brute-force
// enumeration beyond its size cap, WAV features outside the supported subset).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite real-valued sequence, optionally tagged with a sample rate when it
// came from (or is destined for) audio.
struct Signal {
  std::vector<double> samples;
  std::optional<double> sample_rate;

  Signal() = default;
  explicit Signal(std::vector<double> s, std::optional<double> rate = std::nullopt)
      : samples(std::move(s)), sample_rate(rate) {}

  std::size_t size() const { return samples.size(); }
  double operator[](std::size_t i) const { return samples[i]; }
  double& operator[](std::size_t i) { return samples[i]; }

  // Enforces the type invariants: N >= 1, all samples finite, rate > 0 if set.
  void validate() const {
    if (samples.empty()) throw std::invalid_argument("signal must have at least one sample");
    for (double v : samples) {
      if (!std::isfinite(v)) throw std::invalid_argument("signal contains a non-finite sample");
    }
    if (sample_rate && *sample_rate <= 0.0)
      throw std::invalid_argument("sample rate must be positive");
  }
};

inline double signal_mean(const Signal& s) {
  double acc = 0.0;
  for (double v : s.samples) acc += v;
  return acc / static_cast<double>(s.size());
}

inline double peak_to_peak(const Signal& s) {
  double lo = s.samples[0], hi = s.samples[0];
  for (double v : s.samples) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

}  // namespace tvd

#endif  // TVCLIP_SIGNAL_HPP
