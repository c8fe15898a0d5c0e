#pragma once

#include <cstdint>

namespace heckeqf {

// Unit-circle Satake pair (alpha, beta) = (e^{i theta}, e^{-i theta}) at a
// prime p, with alpha + beta = lambda_f(p) and alpha beta = 1.
struct SatakeParams {
  double theta = 0.0;
  uint32_t p = 0;  // informational
};

// theta = arccos(lambda_p / 2); rejects |lambda_p| > 2 + 1e-9.
SatakeParams satake(double lambda_p, uint32_t p = 0);

// Second-kind Chebyshev polynomial U_r by the three-term recurrence.
double chebyshev_u(unsigned r, double x);

// Coefficient of T^j in prod_{i=0}^{m} (1 - alpha^{m-i} beta^i T)^{-1},
// expanded in complex arithmetic; the imaginary part must vanish.  m <= 4.
double lambda_sym(unsigned m, const SatakeParams& sp, unsigned j);

// Coefficient of T^j in prod_{i=0}^{M} prod_{l=0}^{N} (1 - alpha^{M-i} beta^i
// alpha^{N-l} beta^l T)^{-1}.  M <= 4, N <= M.
double lambda_rankin_selberg(unsigned big_m, unsigned big_n, const SatakeParams& sp, unsigned j);

// Checks lambda_sym(m, sp, 1) = sum_{j=0}^{m} alpha^j beta^{m-j} for m <= 4.
bool prime_value_identity_check(const SatakeParams& sp, double tol = 1e-9);

}  // namespace heckeqf
