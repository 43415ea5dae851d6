#include "metrics.hpp"

#include <cmath>

namespace tvd {

double rmse(const Signal& a, const Signal& b) {
  a.validate();
  b.validate();
  if (a.size() != b.size()) throw std::invalid_argument("rmse: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(a.size()));
}

SnrResult snr_db(const Signal& clean, const Signal& estimate) {
  clean.validate();
  estimate.validate();
  if (clean.size() != estimate.size())
    throw std::invalid_argument("snr_db: length mismatch");
  double sig = 0.0, err = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    sig += clean[i] * clean[i];
    const double d = clean[i] - estimate[i];
    err += d * d;
  }
  if (sig == 0.0) throw std::invalid_argument("snr_db: clean signal has zero energy");
  SnrResult out;
  if (err == 0.0) {
    out.exact_match = true;
    return out;
  }
  out.db = 10.0 * std::log10(sig / err);
  return out;
}

}  // namespace tvd
