#ifndef TVCLIP_ORACLE_HPP
#define TVCLIP_ORACLE_HPP

#include "signal.hpp"

namespace tvd {

// Exact global minimizer of ||y - x||_2^2 + lambda * TV(x), computed by the
// direct taut-string walk (O(N) in practice). Independent of the iterative
// clipping code path; used as the test oracle and by the L-curve sweep.
Signal denoise_exact(const Signal& y, double lambda);

// Exhaustive lattice search over [grid_lo, grid_hi]^N, ties broken toward the
// lexicographically smallest vector. Refuses N > 5.
Signal denoise_bruteforce(const Signal& y, double lambda, double grid_lo,
                          double grid_hi, std::size_t grid_steps);

}  // namespace tvd

#endif  // TVCLIP_ORACLE_HPP
