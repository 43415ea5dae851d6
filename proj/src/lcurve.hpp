#ifndef TVCLIP_LCURVE_HPP
#define TVCLIP_LCURVE_HPP

#include "tv_clip.hpp"

namespace tvd {

struct LCurvePoint {
  double lambda = 0.0;
  double residual_norm = 0.0;  // ||y - x(lambda)||_2
  double tv_norm = 0.0;        // ||D x(lambda)||_1
  double cost = 0.0;           // J at the solution
};

enum class SweepSolver { Clip, Exact };

struct LCurveSweep {
  std::vector<LCurvePoint> points;  // strictly increasing in lambda
  SweepSolver solver = SweepSolver::Exact;
};

// Solves at `count` log-spaced lambdas in [lambda_lo, lambda_hi]. For the Clip
// solver, `tmpl` supplies max_iter/alpha/tol; its lambda field is ignored.
LCurveSweep sweep(const Signal& y, double lambda_lo, double lambda_hi,
                  std::size_t count, SweepSolver solver,
                  const DenoiseParams& tmpl = DenoiseParams{});

// Corner lambda by maximum Menger curvature over consecutive triples in
// log-log coordinates; ties go to the smaller lambda. Points with
// non-positive residual or TV are excluded first. Throws no_corner_error when
// fewer than 3 usable points remain or all triples are collinear.
double corner(const LCurveSweep& sw);

}  // namespace tvd

#endif  // TVCLIP_LCURVE_HPP
