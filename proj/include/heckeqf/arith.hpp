#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace heckeqf {

using BigInt = mpz_class;

// Smallest-prime-factor sieve, built once per run and shared by everything
// downstream that factors integers below the configured limit.
class FactorTable {
 public:
  explicit FactorTable(uint32_t limit);

  uint32_t limit() const { return limit_; }

  // n in [2, limit]
  uint32_t smallest_prime_factor(uint32_t n) const { return spf_[n]; }
  bool is_prime(uint32_t n) const { return n >= 2 && spf_[n] == n; }
  const std::vector<uint32_t>& primes() const { return primes_; }

  // (prime, exponent) pairs with strictly increasing primes; factorize(1) = {}.
  std::vector<std::pair<uint32_t, uint32_t>> factorize(uint32_t n) const;

 private:
  uint32_t limit_;
  std::vector<uint32_t> spf_;
  std::vector<uint32_t> primes_;
};

// Kronecker symbol (a/n).  Total: n = 0 maps to [a == 1].
int kronecker(long long a, unsigned long long n);

uint64_t divisor_count(uint64_t n);

// sigma_k(n) = sum_{d | n} d^k, exact.  sigma_11(n) overflows 64 bits near
// n ~ 2000, hence the bigint return type.
BigInt sigma(unsigned k, uint64_t n);

// sum_{d | n} chi_D(d) with chi_D = (D/.); multiplicative in n.
long long character_divisor_sum(long long d, uint64_t n);

// chi_D(n) for n = 0..limit, filled multiplicatively off the sieve.
std::vector<int8_t> chi_table(long long d, uint32_t limit, const FactorTable& table);

// sum_{d | n} chi_D(d) for n = 0..limit in one divisor-sieve pass.
std::vector<int32_t> character_divisor_sum_table(long long d, uint32_t limit,
                                                 const FactorTable& table);

std::vector<uint32_t> divisor_count_table(uint32_t limit);

}  // namespace heckeqf
