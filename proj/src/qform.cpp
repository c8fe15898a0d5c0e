#include "heckeqf/qform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "heckeqf/parallel.hpp"

namespace heckeqf {

namespace {

long long isqrt_ll(long long v) {
  if (v < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

bool QuadForm::is_primitive() const {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c)) == 1;
}

bool QuadForm::is_reduced() const {
  if (!(std::llabs(b) <= a && a <= c)) return false;
  if ((std::llabs(b) == a || a == c) && b < 0) return false;
  return true;
}

bool is_valid_discriminant(long long d) {
  if (d >= 0) return false;
  long long m = ((d % 4) + 4) % 4;
  return m == 0 || m == 1;
}

std::vector<QuadForm> reduced_forms(long long d) {
  if (!is_valid_discriminant(d))
    throw std::domain_error("reduced_forms: need d < 0 with d = 0 or 1 (mod 4)");
  std::vector<QuadForm> out;
  // |b| <= a <= c forces b^2 <= |d|/3.  b and d share parity.
  long long bmax = isqrt_ll((-d) / 3);
  for (long long bb = (((d % 2) + 2) % 2); bb <= bmax; bb += 2) {
    long long m = (bb * bb - d) / 4;  // = a*c
    for (long long a = std::max(bb, 1LL); a * a <= m; ++a) {
      if (m % a != 0) continue;
      long long c = m / a;
      QuadForm plus{a, bb, c};
      if (!plus.is_primitive()) continue;
      out.push_back(plus);
      if (bb != 0 && bb < a && a < c) out.push_back({a, -bb, c});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const QuadForm& x, const QuadForm& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return out;
}

uint32_t class_number(long long d) { return static_cast<uint32_t>(reduced_forms(d).size()); }

int automorph_weight(long long d) {
  if (d == -3) return 6;
  if (d == -4) return 4;
  return 2;
}

const std::vector<RegistryEntry>& class_number_one_registry() {
  static const std::vector<RegistryEntry> registry = [] {
    const long long discs[] = {-3, -4, -7, -8, -11, -12, -16, -19, -27, -28, -43, -67, -163};
    std::vector<RegistryEntry> entries;
    for (long long d : discs) {
      std::vector<QuadForm> forms = reduced_forms(d);
      if (forms.size() != 1) throw std::logic_error("registry: class number must be 1");
      entries.push_back({d, forms[0], automorph_weight(d)});
    }
    return entries;
  }();
  return registry;
}

bool in_class_number_one_registry(long long d) {
  for (const RegistryEntry& e : class_number_one_registry())
    if (e.d == d) return true;
  return false;
}

const RegistryEntry& registry_entry(long long d) {
  for (const RegistryEntry& e : class_number_one_registry())
    if (e.d == d) return e;
  throw std::domain_error("registry_entry: class number h(D) != 1");
}

uint64_t r_enumerate(const QuadForm& q, uint64_t n) {
  if (!q.is_positive_definite()) throw std::domain_error("r_enumerate: form must be positive definite");
  if (n == 0) return 1;  // the zero vector
  const long long dd = -q.discriminant();
  const long long nn = static_cast<long long>(n);
  // Q(x1, x2) = n has real x1 solutions iff D x2^2 + 4 a n >= 0.
  long long x2max = isqrt_ll(4 * q.a * nn / dd);
  uint64_t count = 0;
  for (long long x2 = -x2max; x2 <= x2max; ++x2) {
    long long disc = 4 * q.a * nn - dd * x2 * x2;
    if (disc < 0) continue;
    long long s = isqrt_ll(disc);
    if (s * s != disc) continue;
    long long top = -q.b * x2;
    // x1 = (top +- s) / (2a)
    if ((top + s) % (2 * q.a) == 0) ++count;
    if (s != 0 && (top - s) % (2 * q.a) == 0) ++count;
  }
  return count;
}

long long r_formula(long long d, uint64_t n) {
  if (n == 0) throw std::domain_error("r_formula: n must be >= 1");
  const RegistryEntry& entry = registry_entry(d);  // rejects h(D) != 1
  return entry.w * character_divisor_sum(d, n);
}

std::vector<int64_t> r_formula_table(long long d, uint32_t limit, const FactorTable& table) {
  const RegistryEntry& entry = registry_entry(d);
  std::vector<int32_t> rstar = character_divisor_sum_table(d, limit, table);
  std::vector<int64_t> out(limit + 1, 0);
  out[0] = 1;
  for (uint32_t n = 1; n <= limit; ++n) out[n] = static_cast<int64_t>(entry.w) * rstar[n];
  return out;
}

std::vector<uint64_t> theta_coefficients(const QuadForm& q, uint32_t limit, unsigned workers) {
  if (!q.is_positive_definite())
    throw std::domain_error("theta_coefficients: form must be positive definite");
  const long long dd = -q.discriminant();
  const long long x = static_cast<long long>(limit);
  const long long x2max = isqrt_ll(4 * q.a * x / dd);

  // Sweep rows x2 = -x2max..x2max; row r of the partition is offset r - x2max.
  const uint64_t rows = static_cast<uint64_t>(2 * x2max + 1);
  if (workers == 0) workers = 1;
  const unsigned nw = static_cast<unsigned>(std::min<uint64_t>(workers, rows));
  std::vector<std::vector<uint64_t>> buckets(nw, std::vector<uint64_t>(limit + 1, 0));

  parallel_blocks(nw, nw, [&](uint64_t w) {
    std::vector<uint64_t>& bucket = buckets[w];
    const uint64_t lo = rows * w / nw;
    const uint64_t hi = rows * (w + 1) / nw;
    for (uint64_t row = lo; row < hi; ++row) {
      const long long x2 = static_cast<long long>(row) - x2max;
      const long long disc = 4 * q.a * x - dd * x2 * x2;
      if (disc < 0) continue;
      const double sq = std::sqrt(static_cast<double>(disc));
      const double mid = static_cast<double>(-q.b * x2);
      long long lo1 = static_cast<long long>(std::ceil((mid - sq) / (2.0 * q.a))) - 2;
      long long hi1 = static_cast<long long>(std::floor((mid + sq) / (2.0 * q.a))) + 2;
      // Exact boundary fix-up: Q is convex in x1, so trimming both ends to
      // Q <= limit validates the whole range.
      while (lo1 <= hi1 && q.eval(lo1, x2) > x) ++lo1;
      while (lo1 <= hi1 && q.eval(hi1, x2) > x) --hi1;
      if (lo1 > hi1) continue;
      while (q.eval(lo1 - 1, x2) <= x) --lo1;
      while (q.eval(hi1 + 1, x2) <= x) ++hi1;
      for (long long x1 = lo1; x1 <= hi1; ++x1) {
        ++bucket[static_cast<uint64_t>(q.eval(x1, x2))];
      }
    }
  });

  std::vector<uint64_t> out(limit + 1, 0);
  for (const auto& bucket : buckets)
    for (uint32_t n = 0; n <= limit; ++n) out[n] += bucket[n];
  return out;
}

}  // namespace heckeqf
