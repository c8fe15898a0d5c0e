#include "heckeqf/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

#include "heckeqf/parallel.hpp"
#include "heckeqf/qform.hpp"
#include "heckeqf/symmpower.hpp"

namespace heckeqf {

namespace {

// Double-double helpers (Knuth two-sum, fma error-free product).  Factor
// coefficients reach ~1e9 for r = 8 while the target values sit near zero;
// carrying a compensation term through the series algebra keeps the
// squarefree-vanishing and reconstruction checks at working precision.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double t = s - a;
  return {s, (a - (s - t)) + (b - t)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  DD r = two_sum(s.hi, s.lo);
  return r;
}

inline DD dd_mul(DD a, DD b) {
  const double p = a.hi * b.hi;
  const double perr = std::fma(a.hi, b.hi, -p);
  DD r = two_sum(p, perr + a.hi * b.lo + a.lo * b.hi);
  return r;
}

inline DD dd_div_by(DD a, double b) {
  const double q1 = a.hi / b;
  const double rem = std::fma(-q1, b, a.hi) + a.lo;
  DD r = two_sum(q1, rem / b);
  return r;
}

}  // namespace

DirichletCoeffs DirichletCoeffs::identity(uint32_t limit) {
  DirichletCoeffs out;
  out.limit = limit;
  out.c.assign(limit + 1, 0.0);
  out.c_lo.assign(limit + 1, 0.0);
  if (limit >= 1) out.c[1] = 1.0;
  return out;
}

DirichletCoeffs convolve(const DirichletCoeffs& a, const DirichletCoeffs& b) {
  if (a.limit != b.limit) throw std::out_of_range("convolve: limit mismatch");
  DirichletCoeffs out;
  out.limit = a.limit;
  out.c.assign(a.limit + 1, 0.0);
  out.c_lo.assign(a.limit + 1, 0.0);
  std::vector<DD> acc(a.limit + 1);
  for (uint32_t d = 1; d <= a.limit; ++d) {
    const DD ad{a.c[d], a.lo(d)};
    if (ad.hi == 0.0 && ad.lo == 0.0) continue;
    const uint32_t kmax = a.limit / d;
    for (uint32_t k = 1; k <= kmax; ++k) {
      acc[d * k] = dd_add(acc[d * k], dd_mul(ad, DD{b.c[k], b.lo(k)}));
    }
  }
  for (uint32_t n = 1; n <= a.limit; ++n) {
    out.c[n] = acc[n].hi;
    out.c_lo[n] = acc[n].lo;
  }
  return out;
}

DirichletCoeffs invert(const DirichletCoeffs& a) {
  if (a.limit < 1 || std::abs(a.c[1]) <= 1e-12)
    throw std::domain_error("invert: leading coefficient too small");
  DirichletCoeffs out;
  out.limit = a.limit;
  out.c.assign(a.limit + 1, 0.0);
  out.c_lo.assign(a.limit + 1, 0.0);
  DD lead = dd_div_by(DD{1.0, 0.0}, a.c[1]);  // a(1) is exactly 1 in this library's uses
  out.c[1] = lead.hi;
  out.c_lo[1] = lead.lo;
  for (uint32_t n = 2; n <= a.limit; ++n) {
    DD s;
    for (uint32_t e = 1; static_cast<uint64_t>(e) * e <= n; ++e) {
      if (n % e != 0) continue;
      uint32_t d2 = n / e;
      if (e > 1) s = dd_add(s, dd_mul(DD{a.c[e], a.lo(e)}, DD{out.c[d2], out.c_lo[d2]}));
      if (d2 != e) s = dd_add(s, dd_mul(DD{a.c[d2], a.lo(d2)}, DD{out.c[e], out.c_lo[e]}));
    }
    DD v = dd_div_by(DD{-s.hi, -s.lo}, a.c[1]);
    out.c[n] = v.hi;
    out.c_lo[n] = v.lo;
  }
  return out;
}

DirichletCoeffs from_local_factors(const std::function<double(uint32_t, uint32_t)>& local,
                                   uint32_t limit, const FactorTable& table, unsigned workers) {
  if (limit > table.limit()) throw std::out_of_range("from_local_factors: limit exceeds factor table");
  DirichletCoeffs out;
  out.limit = limit;
  out.c.assign(limit + 1, 0.0);
  out.c_lo.assign(limit + 1, 0.0);
  if (limit >= 1) out.c[1] = 1.0;

  constexpr uint32_t kBlock = 4096;
  const uint64_t blocks = (static_cast<uint64_t>(limit) + kBlock - 1) / kBlock;
  parallel_blocks(blocks, workers, [&](uint64_t bi) {
    const uint32_t lo = static_cast<uint32_t>(bi * kBlock + 1);
    const uint32_t hi = static_cast<uint32_t>(std::min<uint64_t>((bi + 1) * kBlock, limit));
    for (uint32_t n = std::max(lo, 2u); n <= hi; ++n) {
      double value = 1.0;
      uint32_t m = n;
      while (m > 1) {
        uint32_t p = table.smallest_prime_factor(m);
        uint32_t e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        value *= local(p, e);
      }
      out.c[n] = value;
    }
  });
  return out;
}

std::string LFactor::label() const {
  std::string base;
  if (sym_m == 0 && sym_n == 0) {
    base = twisted ? "chi" : "zeta";
    return base;
  }
  base = "sym" + std::to_string(sym_m);
  if (sym_n > 0) base += "xsym" + std::to_string(sym_n);
  if (twisted) base += ".chi";
  return base;
}

unsigned DecompositionSpec::degree_total() const {
  unsigned total = 0;
  for (const LFactor& f : factors) total += f.exponent * f.degree();
  return total;
}

DecompositionSpec DecompositionSpec::lemma_ledger(unsigned r) {
  // Factor multisets of the decompositions R_r = L_r x U_r.  Each row is
  // (M, N, exponent); every factor appears untwisted and chi_D-twisted with
  // the same exponent.
  struct Row {
    unsigned m, n, e;
  };
  std::vector<Row> rows;
  switch (r) {
    case 1: rows = {{1, 0, 1}}; break;
    case 2: rows = {{0, 0, 1}, {2, 0, 1}}; break;
    case 3: rows = {{1, 0, 2}, {3, 0, 1}}; break;
    case 4: rows = {{0, 0, 2}, {2, 0, 3}, {4, 0, 1}}; break;
    case 5: rows = {{1, 0, 5}, {3, 0, 3}, {4, 1, 1}}; break;
    case 6: rows = {{0, 0, 5}, {2, 0, 8}, {4, 0, 4}, {4, 2, 1}}; break;
    case 7: rows = {{1, 0, 13}, {3, 0, 8}, {4, 1, 5}, {4, 3, 1}}; break;
    case 8: rows = {{0, 0, 13}, {2, 0, 21}, {4, 0, 13}, {4, 2, 6}, {4, 4, 1}}; break;
    default: throw std::domain_error("lemma_ledger: r must be in 1..8");
  }
  DecompositionSpec spec;
  spec.r = r;
  for (const Row& row : rows) {
    spec.factors.push_back({row.m, row.n, false, row.e});
    spec.factors.push_back({row.m, row.n, true, row.e});
  }
  return spec;
}

namespace {

double powi(double x, unsigned r) {
  double out = 1.0;
  for (unsigned i = 0; i < r; ++i) out *= x;
  return out;
}

}  // namespace

DirichletCoeffs build_r_series(unsigned r, const Eigenform& f, long long d, uint32_t limit,
                               const FactorTable& table) {
  if (r < 1 || r > 8) throw std::domain_error("build_r_series: r must be in 1..8");
  if (limit > f.limit) throw std::out_of_range("build_r_series: limit exceeds eigenform table");
  std::vector<int64_t> rq = r_formula_table(d, limit, table);
  DirichletCoeffs out;
  out.limit = limit;
  out.c.assign(limit + 1, 0.0);
  out.c_lo.assign(limit + 1, 0.0);
  for (uint32_t n = 1; n <= limit; ++n) {
    out.c[n] = powi(f.lambda[n], r) * static_cast<double>(rq[n]);
  }
  return out;
}

DirichletCoeffs build_l_series(const DecompositionSpec& spec, const Eigenform& f, long long d,
                               uint32_t limit, const FactorTable& table, unsigned workers) {
  if (limit > f.limit) throw std::out_of_range("build_l_series: limit exceeds eigenform table");
  std::vector<int8_t> chi = chi_table(d, limit, table);
  DirichletCoeffs acc = DirichletCoeffs::identity(limit);
  for (const LFactor& factor : spec.factors) {
    std::function<double(uint32_t, uint32_t)> local;
    if (factor.sym_m == 0 && factor.sym_n == 0) {
      local = [](uint32_t, uint32_t) { return 1.0; };
    } else if (factor.sym_n == 0) {
      local = [&f, m = factor.sym_m](uint32_t p, uint32_t j) {
        return lambda_sym(m, satake(f.lambda[p], p), j);
      };
    } else {
      local = [&f, m = factor.sym_m, n = factor.sym_n](uint32_t p, uint32_t j) {
        return lambda_rankin_selberg(m, n, satake(f.lambda[p], p), j);
      };
    }
    DirichletCoeffs base = from_local_factors(local, limit, table, workers);
    if (factor.twisted) {
      // chi_D is completely multiplicative, so twisting the Euler product
      // equals multiplying the n-th coefficient by chi_D(n).
      for (uint32_t n = 1; n <= limit; ++n) {
        base.c[n] *= chi[n];
        base.c_lo[n] *= chi[n];
      }
    }
    for (unsigned e = 0; e < factor.exponent; ++e) acc = convolve(acc, base);
  }
  return acc;
}

DirichletCoeffs compute_u_series(unsigned r, const Eigenform& f, long long d, uint32_t limit,
                                 const FactorTable& table, unsigned workers) {
  DirichletCoeffs r_series = build_r_series(r, f, d, limit, table);
  DirichletCoeffs l_series = build_l_series(DecompositionSpec::lemma_ledger(r), f, d, limit, table, workers);
  return convolve(invert(l_series), r_series);
}

}  // namespace heckeqf
