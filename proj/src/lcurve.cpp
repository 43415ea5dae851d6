#include "lcurve.hpp"

#include <cmath>

#include "oracle.hpp"

namespace tvd {

LCurveSweep sweep(const Signal& y, double lambda_lo, double lambda_hi,
                  std::size_t count, SweepSolver solver,
                  const DenoiseParams& tmpl) {
  y.validate();
  if (!(lambda_lo > 0.0) || !(lambda_lo < lambda_hi))
    throw std::invalid_argument("sweep: need 0 < lambda_lo < lambda_hi");
  if (count < 3) throw std::invalid_argument("sweep: count must be >= 3");

  LCurveSweep out;
  out.solver = solver;
  out.points.reserve(count);
  const double log_lo = std::log(lambda_lo);
  const double log_hi = std::log(lambda_hi);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    const double lam = std::exp(log_lo + t * (log_hi - log_lo));
    Signal x;
    if (solver == SweepSolver::Exact) {
      x = denoise_exact(y, lam);
    } else {
      DenoiseParams p = tmpl;
      p.lambda = lam;
      x = denoise_clip(y, p).x;
    }
    LCurvePoint pt;
    pt.lambda = lam;
    double r2 = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double d = y[j] - x[j];
      r2 += d * d;
    }
    pt.residual_norm = std::sqrt(r2);
    pt.tv_norm = tv_seminorm(x);
    pt.cost = r2 + lam * pt.tv_norm;
    out.points.push_back(pt);
  }
  return out;
}

namespace {

// Curvature of the circle through three points: 2|cross| / (|ab||bc||ca|).
double menger_curvature(double ax, double ay, double bx, double by, double cx,
                        double cy) {
  const double cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  const double lab = std::hypot(bx - ax, by - ay);
  const double lbc = std::hypot(cx - bx, cy - by);
  const double lca = std::hypot(cx - ax, cy - ay);
  const double denom = lab * lbc * lca;
  if (denom == 0.0) return 0.0;
  return 2.0 * std::abs(cross) / denom;
}

}  // namespace

double corner(const LCurveSweep& sw) {
  struct LogPt {
    double lambda, lr, lt;
  };
  std::vector<LogPt> pts;
  for (const LCurvePoint& p : sw.points) {
    if (p.residual_norm > 0.0 && p.tv_norm > 0.0)
      pts.push_back({p.lambda, std::log(p.residual_norm), std::log(p.tv_norm)});
  }
  if (pts.size() < 3) throw no_corner_error("corner: fewer than 3 usable points");

  double best_curv = 0.0;
  double best_lambda = 0.0;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    const double c = menger_curvature(pts[i].lr, pts[i].lt, pts[i + 1].lr,
                                      pts[i + 1].lt, pts[i + 2].lr, pts[i + 2].lt);
    if (c > best_curv) {  // strict: ties keep the earlier (smaller) lambda
      best_curv = c;
      best_lambda = pts[i + 1].lambda;
    }
  }
  if (best_curv <= 1e-12) throw no_corner_error("corner: all triples collinear");
  return best_lambda;
}

}  // namespace tvd
