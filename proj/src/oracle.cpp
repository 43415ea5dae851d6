#include "oracle.hpp"

#include <cmath>

#include "tv_clip.hpp"

namespace tvd {

namespace {

// Direct taut-string walk for min 0.5*||y - x||^2 + lam*TV(x). Maintains a
// candidate constant segment [k0..k] with the lowest (vmin) and highest (vmax)
// admissible values and their accumulated slacks (umin, umax); a slack leaving
// [-lam, lam] forces a jump and fixes the segment.
void taut_string_half(const double* y, double* x, std::size_t n, double lam) {
  if (n == 1 || lam <= 0.0) {
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i];
    return;
  }
  std::size_t k = 0, k0 = 0, km = 0, kp = 0;
  double vmin = y[0] - lam, vmax = y[0] + lam;
  double umin = lam, umax = -lam;
  const double twolam = 2.0 * lam;
  for (;;) {
    while (k == n - 1) {
      if (umin < 0.0) {
        do x[k0++] = vmin; while (k0 <= km);
        k = km = k0;
        vmin = y[k];
        umin = lam;
        umax = y[k] + lam - vmax;
      } else if (umax > 0.0) {
        do x[k0++] = vmax; while (k0 <= kp);
        k = kp = k0;
        vmax = y[k];
        umax = -lam;
        umin = y[k] - lam - vmin;
      } else {
        vmin += umin / static_cast<double>(k - k0 + 1);
        do x[k0++] = vmin; while (k0 <= k);
        return;
      }
    }
    if ((umin += y[k + 1] - vmin) < -lam) {
      do x[k0++] = vmin; while (k0 <= km);
      k = km = kp = k0;
      vmin = y[k];
      vmax = y[k] + twolam;
      umin = lam;
      umax = -lam;
    } else if ((umax += y[k + 1] - vmax) > lam) {
      do x[k0++] = vmax; while (k0 <= kp);
      k = km = kp = k0;
      vmax = y[k];
      vmin = y[k] - twolam;
      umin = lam;
      umax = -lam;
    } else {
      ++k;
      if (umin >= lam) {
        vmin += (umin - lam) / static_cast<double>(k - k0 + 1);
        umin = lam;
        km = k;
      }
      if (umax <= -lam) {
        vmax += (umax + lam) / static_cast<double>(k - k0 + 1);
        umax = -lam;
        kp = k;
      }
    }
  }
}

}  // namespace

Signal denoise_exact(const Signal& y, double lambda) {
  y.validate();
  if (lambda < 0.0) throw std::invalid_argument("denoise_exact: lambda must be >= 0");
  Signal x = y;
  taut_string_half(y.samples.data(), x.samples.data(), y.size(), lambda / 2.0);
  return x;
}

Signal denoise_bruteforce(const Signal& y, double lambda, double grid_lo,
                          double grid_hi, std::size_t grid_steps) {
  y.validate();
  const std::size_t n = y.size();
  if (n > 5) throw unsupported_error("denoise_bruteforce: refuses N > 5");
  if (lambda < 0.0) throw std::invalid_argument("denoise_bruteforce: lambda must be >= 0");
  if (!(grid_lo < grid_hi)) throw std::invalid_argument("denoise_bruteforce: degenerate grid");
  if (grid_steps < 2) throw std::invalid_argument("denoise_bruteforce: grid_steps must be >= 2");

  const double h = (grid_hi - grid_lo) / static_cast<double>(grid_steps - 1);
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> cand(n, grid_lo);
  Signal best = y;
  double best_cost = std::numeric_limits<double>::infinity();

  // Odometer in lexicographic order; strict improvement keeps the smallest.
  Signal trial = y;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      trial.samples[i] = grid_lo + static_cast<double>(idx[i]) * h;
    const double c = cost(y, trial, lambda);
    if (c < best_cost) {
      best_cost = c;
      best = trial;
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < grid_steps) break;
      idx[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

}  // namespace tvd
