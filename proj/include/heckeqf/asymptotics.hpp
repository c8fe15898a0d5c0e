#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heckeqf/arith.hpp"
#include "heckeqf/eigenform.hpp"
#include "heckeqf/qform.hpp"

namespace heckeqf {

// Checkpoints (x, S_r(f, D; x)) along a grid, ascending in x.
struct PartialSumSeries {
  unsigned r = 1;
  std::vector<std::pair<uint64_t, double>> checkpoints;
};

// Per-r remainder exponent gamma_r and main-term polynomial degree
// (degree -1: identically zero main term, odd r).
struct RemainderTarget {
  double gamma = 0.0;
  int main_term_degree = -1;
};
RemainderTarget theorem_target(unsigned r);

// sum over nonzero lattice points with 1 <= Q(pt) <= x of lambda(Q(pt))^r.
double partial_sum_lattice(const Eigenform& f, const QuadForm& q, unsigned r, uint64_t x);

// Same sum arranged as sum_{n <= x} lambda(n)^r r_Q(n); h(D) = 1 required.
// Parallelized over fixed n-blocks with a pairwise reduction tree, so the
// result is bit-identical at any worker count.
double partial_sum_arith(const Eigenform& f, long long d, unsigned r, uint64_t x,
                         const FactorTable& table, unsigned workers = 1);

// Geometric grid x_i = ceil(x0 * ratio^i), deduplicated, capped at xmax.
std::vector<uint64_t> checkpoint_grid(uint64_t x0, double ratio, uint64_t xmax);

PartialSumSeries compute_series(const Eigenform& f, long long d, unsigned r,
                                const std::vector<uint64_t>& xs, const FactorTable& table,
                                unsigned workers = 1);

struct FitReport {
  std::vector<double> coefficients;  // P(t) = sum coefficients[i] t^i, t = log x
  double max_rel_residual = 0.0;
};

// Least-squares fit of S(x)/x against a polynomial in log x of the target's
// main-term degree; domain_error for odd r (no main term to fit).
FitReport fit_main_term(const PartialSumSeries& series, const RemainderTarget& target);

struct SlopeReport {
  double slope = 0.0;
  double std_error = 0.0;
  bool degenerate = false;  // all residuals ~ 0; slope is -inf
};

// OLS slope of log|S(x) - x P(log x)| against log x.  Even r requires the
// fitted main-term polynomial (coefficients from fit_main_term); odd r uses
// log|S(x)| directly.  A diagnostic, not a proof of gamma_r.
SlopeReport remainder_exponent(const PartialSumSeries& series, const RemainderTarget& target,
                               const std::vector<double>* main_poly = nullptr);

// (n, sign of lambda(n)) over the represented n <= limit (r_Q(n) > 0).
std::vector<std::pair<uint32_t, int>> sign_sequence(const Eigenform& f, long long d,
                                                    uint32_t limit, const FactorTable& table);

struct SignChangeReport {
  uint64_t x = 0;
  uint64_t count = 0;                // adjacent flips within (x, 2x], zeros transparent
  std::vector<uint32_t> locations;   // right endpoint of each flip
  double bound = 0.0;                // x^{8/33}
  double threshold = 0.0;            // x^{8/33 - 0.02}
  bool verdict = false;              // count >= threshold
};
SignChangeReport count_sign_changes(const Eigenform& f, long long d, uint64_t x,
                                    const FactorTable& table);

struct LemmaHypothesisResult {
  bool valid = false;
  std::string violation;  // empty when valid
  double exponent = 0.0;  // 1 - delta when valid
};

// Validates alpha, beta, gamma > 0, alpha + beta < 1 and
// max{alpha + beta, gamma} < delta < 1; on success the sign-change count in
// (x, 2x] is at least x^{1 - delta}.
LemmaHypothesisResult lemma_hypothesis_check(double alpha, double beta, double gamma, double delta);

}  // namespace heckeqf
