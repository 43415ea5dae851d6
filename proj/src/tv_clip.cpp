#include "tv_clip.hpp"

#include <algorithm>
#include <cmath>

namespace tvd {

std::vector<double> forward_diff(const std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("forward_diff: empty input");
  std::vector<double> out(x.size() - 1);
  for (std::size_t k = 0; k + 1 < x.size(); ++k) out[k] = x[k + 1] - x[k];
  return out;
}

std::vector<double> adjoint_diff(const std::vector<double>& z) {
  std::vector<double> out(z.size() + 1, 0.0);
  if (z.empty()) return out;  // caller's N is 1: [0]
  out[0] = -z[0];
  for (std::size_t j = 1; j < z.size(); ++j) out[j] = z[j - 1] - z[j];
  out[z.size()] = z[z.size() - 1];
  return out;
}

double tv_seminorm(const Signal& x) {
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k)
    acc += std::abs(x[k + 1] - x[k]);
  return acc;
}

double cost(const Signal& y, const Signal& x, double lambda) {
  if (y.size() != x.size()) throw std::invalid_argument("cost: length mismatch");
  if (lambda < 0.0) throw std::invalid_argument("cost: lambda must be >= 0");
  double resid = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - x[i];
    resid += d * d;
  }
  return resid + lambda * tv_seminorm(x);
}

DenoiseResult denoise_clip(const Signal& y, const DenoiseParams& params) {
  y.validate();
  params.validate();

  const std::size_t n = y.size();
  const double clip_bound = params.lambda / 2.0;

  DenoiseResult res;
  res.x = y;
  res.z.assign(n > 1 ? n - 1 : 0, 0.0);
  res.cost_history.reserve(static_cast<std::size_t>(params.max_iter));

  double prev_cost = 0.0;
  for (int k = 0; k < params.max_iter; ++k) {
    // x = y - D^T z
    if (!res.z.empty()) {
      res.x.samples[0] = y[0] + res.z[0];
      for (std::size_t j = 1; j + 1 < n; ++j)
        res.x.samples[j] = y[j] - (res.z[j - 1] - res.z[j]);
      res.x.samples[n - 1] = y[n - 1] - res.z[n - 2];
    } else {
      res.x.samples[0] = y[0];
    }

    const double j_cur = cost(y, res.x, params.lambda);
    if (!std::isfinite(j_cur))
      throw numeric_error("denoise_clip: cost became non-finite");
    res.cost_history.push_back(j_cur);
    res.iterations_run = k + 1;

    // z <- clip(z + (1/alpha) Dx, +-lambda/2)
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double step = res.z[j] + (res.x[j + 1] - res.x[j]) / params.alpha;
      res.z[j] = std::clamp(step, -clip_bound, clip_bound);
    }

    if (params.tol > 0.0 && k > 0) {
      const double decrease = prev_cost - j_cur;
      if (decrease < params.tol * std::max(prev_cost, 1e-300)) {
        res.converged = true;
        break;
      }
    }
    prev_cost = j_cur;
  }
  return res;
}

OptimalityCertificate check_optimality(const Signal& y, const Signal& x,
                                       double lambda, double active_tol) {
  y.validate();
  x.validate();
  if (y.size() != x.size())
    throw std::invalid_argument("check_optimality: length mismatch");
  if (active_tol < 0.0) active_tol = 1e-8 * peak_to_peak(x);

  const std::size_t n = y.size();
  OptimalityCertificate cert;
  cert.dual.assign(n > 1 ? n - 1 : 0, 0.0);

  // x = y - D^T z fixes z by running sums of the residual.
  double running = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    running -= y[k] - x[k];
    cert.dual[k] = running;
    cert.max_feasibility_violation =
        std::max(cert.max_feasibility_violation, std::abs(running) - lambda / 2.0);
  }
  cert.max_feasibility_violation = std::max(cert.max_feasibility_violation, 0.0);

  const std::vector<double> dx = forward_diff(x.samples);
  for (std::size_t k = 0; k < dx.size(); ++k) {
    if (std::abs(dx[k]) > active_tol) {
      const double want = (lambda / 2.0) * (dx[k] > 0.0 ? 1.0 : -1.0);
      cert.max_complementarity_violation =
          std::max(cert.max_complementarity_violation, std::abs(cert.dual[k] - want));
    }
  }

  double bal = 0.0;
  for (std::size_t i = 0; i < n; ++i) bal += y[i] - x[i];
  cert.balance_residual = bal;
  return cert;
}

double lambda_max(const Signal& y) {
  y.validate();
  const double mean = signal_mean(y);
  double running = 0.0, best = 0.0;
  for (std::size_t k = 0; k + 1 < y.size(); ++k) {
    running += y[k] - mean;
    best = std::max(best, std::abs(running));
  }
  return 2.0 * best;
}

}  // namespace tvd
