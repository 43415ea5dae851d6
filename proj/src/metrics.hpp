#ifndef TVCLIP_METRICS_HPP
#define TVCLIP_METRICS_HPP

#include "signal.hpp"

namespace tvd {

double rmse(const Signal& a, const Signal& b);

// 10*log10(sum clean^2 / sum (clean - estimate)^2). An exact match is reported
// through the flag, never as a floating infinity.
struct SnrResult {
  bool exact_match = false;
  double db = 0.0;  // meaningful only when !exact_match
};

SnrResult snr_db(const Signal& clean, const Signal& estimate);

}  // namespace tvd

#endif  // TVCLIP_METRICS_HPP
