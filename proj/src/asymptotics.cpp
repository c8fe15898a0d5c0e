#include "heckeqf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "heckeqf/parallel.hpp"

namespace heckeqf {

RemainderTarget theorem_target(unsigned r) {
  switch (r) {
    case 1: return {7.0 / 10.0, -1};
    case 2: return {8.0 / 11.0, 0};
    case 3: return {17.0 / 20.0, -1};
    case 4: return {43.0 / 46.0, 1};
    case 5: return {83.0 / 86.0, -1};
    case 6: return {184.0 / 187.0, 4};
    case 7: return {355.0 / 358.0, -1};
    case 8: return {752.0 / 755.0, 13};
  }
  throw std::domain_error("theorem_target: r must be in 1..8");
}

namespace {

double powi(double x, unsigned r) {
  double out = 1.0;
  for (unsigned i = 0; i < r; ++i) out *= x;
  return out;
}

long long isqrt_ll(long long v) {
  if (v < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

double partial_sum_lattice(const Eigenform& f, const QuadForm& q, unsigned r, uint64_t x) {
  if (!q.is_positive_definite())
    throw std::domain_error("partial_sum_lattice: form must be positive definite");
  if (x > f.limit) throw std::out_of_range("partial_sum_lattice: x exceeds eigenform table");
  if (x == 0) return 0.0;
  const long long dd = -q.discriminant();
  const long long xx = static_cast<long long>(x);
  const long long x2max = isqrt_ll(4 * q.a * xx / dd);
  double total = 0.0;
  for (long long x2 = -x2max; x2 <= x2max; ++x2) {
    const long long disc = 4 * q.a * xx - dd * x2 * x2;
    if (disc < 0) continue;
    const double sq = std::sqrt(static_cast<double>(disc));
    const double mid = static_cast<double>(-q.b * x2);
    long long lo1 = static_cast<long long>(std::ceil((mid - sq) / (2.0 * q.a))) - 2;
    long long hi1 = static_cast<long long>(std::floor((mid + sq) / (2.0 * q.a))) + 2;
    while (lo1 <= hi1 && q.eval(lo1, x2) > xx) ++lo1;
    while (lo1 <= hi1 && q.eval(hi1, x2) > xx) --hi1;
    if (lo1 > hi1) continue;
    while (q.eval(lo1 - 1, x2) <= xx) --lo1;
    while (q.eval(hi1 + 1, x2) <= xx) ++hi1;
    for (long long x1 = lo1; x1 <= hi1; ++x1) {
      const long long value = q.eval(x1, x2);
      if (value == 0) continue;  // origin: lambda(0) undefined
      total += powi(f.lambda[value], r);
    }
  }
  return total;
}

double partial_sum_arith(const Eigenform& f, long long d, unsigned r, uint64_t x,
                         const FactorTable& table, unsigned workers) {
  if (x > f.limit) throw std::out_of_range("partial_sum_arith: x exceeds eigenform table");
  if (x == 0) return 0.0;
  const uint32_t limit = static_cast<uint32_t>(x);
  std::vector<int64_t> rq = r_formula_table(d, limit, table);

  constexpr uint32_t kBlock = 8192;
  const uint64_t blocks = (x + kBlock - 1) / kBlock;
  std::vector<double> block_sums(blocks, 0.0);
  parallel_blocks(blocks, workers, [&](uint64_t bi) {
    const uint32_t lo = static_cast<uint32_t>(bi * kBlock + 1);
    const uint32_t hi = static_cast<uint32_t>(std::min<uint64_t>((bi + 1) * kBlock, x));
    double s = 0.0;
    for (uint32_t n = lo; n <= hi; ++n) {
      if (rq[n] == 0) continue;
      s += powi(f.lambda[n], r) * static_cast<double>(rq[n]);
    }
    block_sums[bi] = s;
  });
  return tree_reduce(std::move(block_sums));
}

std::vector<uint64_t> checkpoint_grid(uint64_t x0, double ratio, uint64_t xmax) {
  if (x0 < 1 || ratio <= 1.0) throw std::domain_error("checkpoint_grid: need x0 >= 1, ratio > 1");
  std::vector<uint64_t> xs;
  double value = static_cast<double>(x0);
  for (;;) {
    uint64_t x = static_cast<uint64_t>(std::ceil(value));
    if (x > xmax) break;
    if (xs.empty() || x > xs.back()) xs.push_back(x);
    value *= ratio;
  }
  return xs;
}

PartialSumSeries compute_series(const Eigenform& f, long long d, unsigned r,
                                const std::vector<uint64_t>& xs, const FactorTable& table,
                                unsigned workers) {
  PartialSumSeries out;
  out.r = r;
  out.checkpoints.reserve(xs.size());
  for (uint64_t x : xs) out.checkpoints.emplace_back(x, partial_sum_arith(f, d, r, x, table, workers));
  return out;
}

namespace {

// Least squares for y ~ poly(t) of degree deg via modified Gram-Schmidt QR on
// the centered basis (t - mean)^j, then shifted back to powers of t.
std::vector<double> polyfit(const std::vector<double>& t, const std::vector<double>& y, int deg) {
  const std::size_t n = t.size();
  const std::size_t m = static_cast<std::size_t>(deg) + 1;
  long double mean = 0.0L;
  for (double v : t) mean += v;
  mean /= static_cast<long double>(n);

  std::vector<std::vector<long double>> cols(m, std::vector<long double>(n, 1.0L));
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = cols[j - 1][i] * (t[i] - mean);

  std::vector<long double> rhs(y.begin(), y.end());
  std::vector<std::vector<long double>> rmat(m, std::vector<long double>(m, 0.0L));
  std::vector<long double> qty(m, 0.0L);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      long double dot = 0.0L;
      for (std::size_t i = 0; i < n; ++i) dot += cols[k][i] * cols[j][i];
      rmat[k][j] = dot;
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= dot * cols[k][i];
    }
    long double norm = 0.0L;
    for (std::size_t i = 0; i < n; ++i) norm += cols[j][i] * cols[j][i];
    norm = std::sqrt(norm);
    if (norm < 1e-30L) throw std::domain_error("fit_main_term: degenerate design matrix");
    rmat[j][j] = norm;
    for (std::size_t i = 0; i < n; ++i) cols[j][i] /= norm;
    long double dot = 0.0L;
    for (std::size_t i = 0; i < n; ++i) dot += cols[j][i] * rhs[i];
    qty[j] = dot;
  }
  std::vector<long double> centered(m, 0.0L);
  for (std::size_t j = m; j-- > 0;) {
    long double s = qty[j];
    for (std::size_t k = j + 1; k < m; ++k) s -= rmat[j][k] * centered[k];
    centered[j] = s / rmat[j][j];
  }

  // p(t) = sum_j centered[j] (t - mean)^j  ->  powers of t by binomial shift.
  std::vector<long double> coeff(m, 0.0L);
  for (std::size_t j = 0; j < m; ++j) {
    long double binom = 1.0L;
    long double shift = 1.0L;
    for (std::size_t i = 0; i <= j; ++i) {
      coeff[j - i] += centered[j] * binom * shift;
      binom = binom * static_cast<long double>(j - i) / static_cast<long double>(i + 1);
      shift *= -mean;
    }
  }
  return std::vector<double>(coeff.begin(), coeff.end());
}

double eval_poly(const std::vector<double>& coeff, double t) {
  double v = 0.0;
  for (std::size_t j = coeff.size(); j-- > 0;) v = v * t + coeff[j];
  return v;
}

}  // namespace

FitReport fit_main_term(const PartialSumSeries& series, const RemainderTarget& target) {
  if (target.main_term_degree < 0)
    throw std::domain_error("fit_main_term: no main term for odd r (P_r = 0)");
  const std::size_t need = static_cast<std::size_t>(target.main_term_degree) + 1;
  if (series.checkpoints.size() < need)
    throw std::domain_error("fit_main_term: not enough checkpoints for the requested degree");

  std::vector<double> t, y;
  for (const auto& [x, s] : series.checkpoints) {
    t.push_back(std::log(static_cast<double>(x)));
    y.push_back(s / static_cast<double>(x));
  }
  FitReport report;
  report.coefficients = polyfit(t, y, target.main_term_degree);
  double worst = 0.0;
  for (const auto& [x, s] : series.checkpoints) {
    double fitted = static_cast<double>(x) * eval_poly(report.coefficients, std::log(static_cast<double>(x)));
    double denom = std::max(std::abs(s), 1e-300);
    worst = std::max(worst, std::abs(s - fitted) / denom);
  }
  report.max_rel_residual = worst;
  return report;
}

SlopeReport remainder_exponent(const PartialSumSeries& series, const RemainderTarget& target,
                               const std::vector<double>* main_poly) {
  if (target.main_term_degree >= 0 && main_poly == nullptr)
    throw std::domain_error("remainder_exponent: even r needs the fitted main-term polynomial");

  std::vector<double> ts, ys;
  for (const auto& [x, s] : series.checkpoints) {
    const double t = std::log(static_cast<double>(x));
    double residual = s;
    if (target.main_term_degree >= 0) residual -= static_cast<double>(x) * eval_poly(*main_poly, t);
    if (std::abs(residual) < 1e-9 * (1.0 + std::abs(s))) continue;  // treat as exactly fitted
    ts.push_back(t);
    ys.push_back(std::log(std::abs(residual)));
  }

  SlopeReport report;
  if (ts.size() < 2) {
    report.degenerate = true;
    report.slope = -std::numeric_limits<double>::infinity();
    return report;
  }
  const std::size_t n = ts.size();
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    st += ts[i];
    sy += ys[i];
    stt += ts[i] * ts[i];
    sty += ts[i] * ys[i];
  }
  const double denom = n * stt - st * st;
  report.slope = (n * sty - st * sy) / denom;
  const double intercept = (sy - report.slope * st) / n;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = ys[i] - (intercept + report.slope * ts[i]);
    sse += e * e;
  }
  if (n > 2) report.std_error = std::sqrt(sse / (n - 2) / (stt - st * st / n));
  return report;
}

std::vector<std::pair<uint32_t, int>> sign_sequence(const Eigenform& f, long long d,
                                                    uint32_t limit, const FactorTable& table) {
  if (limit > f.limit) throw std::out_of_range("sign_sequence: limit exceeds eigenform table");
  std::vector<int64_t> rq = r_formula_table(d, limit, table);
  std::vector<std::pair<uint32_t, int>> seq;
  for (uint32_t n = 1; n <= limit; ++n) {
    if (rq[n] <= 0) continue;
    const double v = f.lambda[n];
    seq.emplace_back(n, v > 0.0 ? 1 : (v < 0.0 ? -1 : 0));
  }
  return seq;
}

SignChangeReport count_sign_changes(const Eigenform& f, long long d, uint64_t x,
                                    const FactorTable& table) {
  if (2 * x > f.limit) throw std::out_of_range("count_sign_changes: 2x exceeds eigenform table");
  SignChangeReport report;
  report.x = x;
  report.bound = std::pow(static_cast<double>(x), 8.0 / 33.0);
  report.threshold = std::pow(static_cast<double>(x), 8.0 / 33.0 - 0.02);

  std::vector<std::pair<uint32_t, int>> seq = sign_sequence(f, d, static_cast<uint32_t>(2 * x), table);
  int prev = 0;  // last nonzero sign inside the interval; zeros are transparent
  for (const auto& [n, s] : seq) {
    if (n <= x || s == 0) continue;
    if (prev != 0 && s != prev) {
      ++report.count;
      report.locations.push_back(n);
    }
    prev = s;
  }
  report.verdict = static_cast<double>(report.count) >= report.threshold;
  return report;
}

LemmaHypothesisResult lemma_hypothesis_check(double alpha, double beta, double gamma, double delta) {
  LemmaHypothesisResult out;
  if (!(alpha > 0.0)) {
    out.violation = "alpha > 0 fails";
  } else if (!(beta > 0.0)) {
    out.violation = "beta > 0 fails";
  } else if (!(gamma > 0.0)) {
    out.violation = "gamma > 0 fails";
  } else if (!(alpha + beta < 1.0)) {
    out.violation = "alpha + beta < 1 fails";
  } else if (!(delta < 1.0)) {
    out.violation = "delta < 1 fails";
  } else if (!(std::max(alpha + beta, gamma) < delta)) {
    out.violation = "max{alpha + beta, gamma} < delta fails";
  } else {
    out.valid = true;
    out.exponent = 1.0 - delta;
  }
  return out;
}

}  // namespace heckeqf
