#include "heckeqf/arith.hpp"

#include <stdexcept>

namespace heckeqf {

FactorTable::FactorTable(uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit < 1) throw std::domain_error("FactorTable: limit must be >= 1");
  // Linear sieve: each composite is struck exactly once by its smallest prime.
  for (uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (uint32_t p : primes_) {
      if (p > spf_[i] || static_cast<uint64_t>(p) * i > limit) break;
      spf_[p * i] = p;
    }
  }
}

std::vector<std::pair<uint32_t, uint32_t>> FactorTable::factorize(uint32_t n) const {
  if (n == 0 || n > limit_) throw std::out_of_range("FactorTable::factorize: n outside [1, limit]");
  std::vector<std::pair<uint32_t, uint32_t>> out;
  while (n > 1) {
    uint32_t p = spf_[n];
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

int kronecker(long long a, unsigned long long n) {
  if (n == 0) return a == 1 ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;

  // Strip 2s from n; (a/2) depends on a mod 8.
  int twos = 0;
  while ((n & 1ULL) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos & 1) {
    long long m8 = ((a % 8) + 8) % 8;
    if (m8 == 3 || m8 == 5) {
      result = -result;
    } else if (m8 != 1 && m8 != 7) {
      return 0;  // a even
    }
  }

  // Jacobi (a/n) for odd n via reciprocity; reduction mod n absorbs the sign of a.
  unsigned long long b =
      static_cast<unsigned long long>(((a % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                      static_cast<long long>(n));
  while (b != 0) {
    int t = 0;
    while ((b & 1ULL) == 0) {
      b >>= 1;
      ++t;
    }
    if (t & 1) {
      unsigned long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    if ((b % 4 == 3) && (n % 4 == 3)) result = -result;
    unsigned long long r = n % b;
    n = b;
    b = r;
  }
  return n == 1 ? result : 0;
}

namespace {

// Trial division; fine for the sizes this library meets (n <= 10^6-ish).
template <typename Visitor>
void for_each_prime_power(uint64_t n, Visitor&& visit) {
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    visit(p, e);
  }
  if (n > 1) visit(n, 1u);
}

}  // namespace

uint64_t divisor_count(uint64_t n) {
  if (n == 0) throw std::domain_error("divisor_count: n must be >= 1");
  uint64_t d = 1;
  for_each_prime_power(n, [&](uint64_t, uint32_t e) { d *= (e + 1); });
  return d;
}

BigInt sigma(unsigned k, uint64_t n) {
  if (n == 0) throw std::domain_error("sigma: n must be >= 1");
  BigInt total = 1;
  for_each_prime_power(n, [&](uint64_t p, uint32_t e) {
    if (k == 0) {
      total *= (e + 1);
      return;
    }
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
    BigInt term = 1;
    BigInt power = 1;
    for (uint32_t j = 0; j < e; ++j) {
      power *= pk;
      term += power;
    }
    total *= term;
  });
  return total;
}

long long character_divisor_sum(long long d, uint64_t n) {
  if (n == 0) throw std::domain_error("character_divisor_sum: n must be >= 1");
  long long total = 1;
  for_each_prime_power(n, [&](uint64_t p, uint32_t e) {
    int c = kronecker(d, p);
    if (c == 1) {
      total *= (e + 1);
    } else if (c == -1 && (e & 1)) {
      total = 0;
    }
    // c == 0 or (c == -1, e even): factor is 1.
  });
  return total;
}

std::vector<int8_t> chi_table(long long d, uint32_t limit, const FactorTable& table) {
  if (limit > table.limit()) throw std::out_of_range("chi_table: limit exceeds factor table");
  std::vector<int8_t> chi(limit + 1, 0);
  chi[0] = static_cast<int8_t>(kronecker(d, 0));
  if (limit >= 1) chi[1] = 1;
  for (uint32_t n = 2; n <= limit; ++n) {
    uint32_t p = table.smallest_prime_factor(n);
    if (p == n) {
      chi[n] = static_cast<int8_t>(kronecker(d, p));
    } else {
      chi[n] = static_cast<int8_t>(chi[p] * chi[n / p]);
    }
  }
  return chi;
}

std::vector<int32_t> character_divisor_sum_table(long long d, uint32_t limit,
                                                 const FactorTable& table) {
  std::vector<int8_t> chi = chi_table(d, limit, table);
  std::vector<int32_t> out(limit + 1, 0);
  for (uint32_t dd = 1; dd <= limit; ++dd) {
    int c = chi[dd];
    if (c == 0) continue;
    for (uint32_t m = dd; m <= limit; m += dd) out[m] += c;
  }
  return out;
}

std::vector<uint32_t> divisor_count_table(uint32_t limit) {
  std::vector<uint32_t> out(limit + 1, 0);
  for (uint32_t dd = 1; dd <= limit; ++dd) {
    for (uint32_t m = dd; m <= limit; m += dd) ++out[m];
  }
  return out;
}

}  // namespace heckeqf
