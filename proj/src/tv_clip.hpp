#ifndef TVCLIP_TV_CLIP_HPP
#define TVCLIP_TV_CLIP_HPP

#include "signal.hpp"

namespace tvd {

struct DenoiseParams {
  double lambda = 1.0;   // regularization weight, >= 0
  int max_iter = 100;    // >= 1
  double alpha = 4.0;    // step scale, >= 4 (descent needs alpha above the
                         // spectral radius of D*D^T, which is < 4)
  double tol = 0.0;      // early stop on relative cost decrease; 0 disables

  void validate() const {
    if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (alpha < 4.0) throw std::invalid_argument("alpha must be >= 4");
    if (tol < 0.0) throw std::invalid_argument("tol must be >= 0");
  }
};

struct DenoiseResult {
  Signal x;                         // denoised estimate
  std::vector<double> z;            // dual/clipping variable, length N-1
  std::vector<double> cost_history; // one J value per completed iteration
  int iterations_run = 0;
  bool converged = false;           // true only when the tol early-stop fired
};

struct OptimalityCertificate {
  std::vector<double> dual;              // z reconstructed from x, length N-1
  double max_feasibility_violation = 0;  // max(|z_k| - lambda/2, 0)
  double max_complementarity_violation = 0;
  double balance_residual = 0;           // sum(y - x), zero at the optimum
};

// out[k] = x[k+1] - x[k]; empty for N = 1.
std::vector<double> forward_diff(const std::vector<double>& x);

// Transpose of forward_diff: out[0] = -z[0], out[j] = z[j-1] - z[j],
// out[M] = z[M-1]. An empty z yields the single-element [0].
std::vector<double> adjoint_diff(const std::vector<double>& z);

// sum_k |x[k+1] - x[k]|
double tv_seminorm(const Signal& x);

// ||y - x||_2^2 + lambda * TV(x)
double cost(const Signal& y, const Signal& x, double lambda);

// Iterative clipping: z <- 0; per iteration x = y - D^T z, record J, then
// z <- clip(z + (1/alpha) Dx, +-lambda/2).
DenoiseResult denoise_clip(const Signal& y, const DenoiseParams& params);

// KKT certificate for a candidate minimizer x of the cost above. Pass a
// negative active_tol to use the default 1e-8 * peak_to_peak(x).
OptimalityCertificate check_optimality(const Signal& y, const Signal& x,
                                       double lambda, double active_tol = -1.0);

// Smallest lambda whose minimizer is the constant mean signal:
// 2 * max_k |sum_{i<=k} (y_i - mean)| over k = 0..N-2.
double lambda_max(const Signal& y);

}  // namespace tvd

#endif  // TVCLIP_TV_CLIP_HPP
