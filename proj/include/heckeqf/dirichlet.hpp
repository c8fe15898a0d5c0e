#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "heckeqf/arith.hpp"
#include "heckeqf/eigenform.hpp"

namespace heckeqf {

// Coefficients c(1..limit) of a truncated Dirichlet series sum c(n) n^{-s}.
// c_lo carries the compensation term of each coefficient: convolve/invert do
// their accumulation in double-double, so chains like L * (L^{-1} * R) cancel
// to working precision even when intermediate coefficients reach 1e9.
// Consumers read c alone; c_lo may be empty (treated as zero).
struct DirichletCoeffs {
  uint32_t limit = 0;
  std::vector<double> c;     // c[0] unused
  std::vector<double> c_lo;  // same indexing; optional

  double lo(uint32_t n) const { return c_lo.empty() ? 0.0 : c_lo[n]; }

  static DirichletCoeffs identity(uint32_t limit);
};

// (A * B)(n) = sum_{d | n} A(d) B(n / d), sequential and deterministic.
DirichletCoeffs convolve(const DirichletCoeffs& a, const DirichletCoeffs& b);

// B with A * B = identity, by the recursive solve; requires |A(1)| > 1e-12.
DirichletCoeffs invert(const DirichletCoeffs& a);

// Multiplicative assembly c(n) = prod local(p_i, e_i); local(p, 0) must be 1.
DirichletCoeffs from_local_factors(const std::function<double(uint32_t, uint32_t)>& local,
                                   uint32_t limit, const FactorTable& table, unsigned workers = 1);

// One factor L(s, sym^M f x sym^N f), possibly twisted by chi_D, raised to
// an exponent.  (M, N) = (0, 0) is zeta; N = 0 is a plain symmetric power.
struct LFactor {
  unsigned sym_m = 0;
  unsigned sym_n = 0;
  bool twisted = false;
  unsigned exponent = 1;

  unsigned degree() const { return (sym_m + 1) * (sym_n + 1); }
  std::string label() const;
};

// Factor multiset of one of the eight decompositions R_r = L_r x U_r.
struct DecompositionSpec {
  unsigned r = 1;
  std::vector<LFactor> factors;

  // sum over factors of exponent * (M+1)(N+1)
  unsigned degree_total() const;

  static DecompositionSpec lemma_ledger(unsigned r);  // r in 1..8
};

// R_r coefficients: c(n) = lambda(n)^r * r_Q(n), h(D) = 1 required.
DirichletCoeffs build_r_series(unsigned r, const Eigenform& f, long long d, uint32_t limit,
                               const FactorTable& table);

// Convolution of all ledger factors, each assembled from its local factors;
// a twisted factor is the untwisted series times chi_D(n) coefficientwise.
DirichletCoeffs build_l_series(const DecompositionSpec& spec, const Eigenform& f, long long d,
                               uint32_t limit, const FactorTable& table, unsigned workers = 1);

// U_r = R_r / L_r as coefficient arrays: convolve(build_r, invert(build_l)).
DirichletCoeffs compute_u_series(unsigned r, const Eigenform& f, long long d, uint32_t limit,
                                 const FactorTable& table, unsigned workers = 1);

}  // namespace heckeqf
