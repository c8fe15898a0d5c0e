#include <doctest.h>

#include <gmpxx.h>

#include <numeric>

#include "heckeqf/arith.hpp"

using namespace heckeqf;

namespace {

constexpr long long kClassNumberOneDiscs[] = {-3, -4, -7, -8, -11, -12, -16,
                                              -19, -27, -28, -43, -67, -163};

// Oracle: (D/p) for an odd prime p via brute-force solvability of x^2 = D (mod p).
int legendre_bruteforce(long long d, uint32_t p) {
  long long dm = ((d % p) + p) % p;
  if (dm == 0) return 0;
  for (uint32_t x = 0; x < p; ++x) {
    if ((static_cast<uint64_t>(x) * x) % p == static_cast<uint64_t>(dm)) return 1;
  }
  return -1;
}

}  // namespace

TEST_SUITE_BEGIN("arith");

TEST_CASE("kronecker pinned values") {
  CHECK(kronecker(-3, 1) == 1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-4, 3) == -1);
  // chi_{-4}(n) = (-1)^{(n-1)/2} for odd n
  for (unsigned long long n = 1; n <= 99; n += 2) {
    int expected = (n % 4 == 1) ? 1 : -1;
    CHECK(kronecker(-4, n) == expected);
  }
  // n = 0 completion
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-3, 0) == 0);
  CHECK(kronecker(5, 0) == 0);
}

TEST_CASE("kronecker agrees with the GMP implementation") {
  for (long long a = -60; a <= 60; ++a) {
    for (unsigned long long n = 1; n <= 120; ++n) {
      mpz_class am(static_cast<long>(a)), nm(static_cast<unsigned long>(n));
      CHECK(kronecker(a, n) == mpz_kronecker(am.get_mpz_t(), nm.get_mpz_t()));
    }
  }
  for (long long d : kClassNumberOneDiscs) {
    for (unsigned long long n = 1; n <= 5000; ++n) {
      mpz_class am(static_cast<long>(d)), nm(static_cast<unsigned long>(n));
      CHECK(kronecker(d, n) == mpz_kronecker(am.get_mpz_t(), nm.get_mpz_t()));
    }
  }
}

TEST_CASE("kronecker at odd primes matches brute-force solvability") {
  FactorTable table(300);
  for (long long d : kClassNumberOneDiscs) {
    for (uint32_t p : table.primes()) {
      if (p == 2) continue;
      CHECK(kronecker(d, p) == legendre_bruteforce(d, p));
    }
  }
}

TEST_CASE("kronecker complete multiplicativity") {
  const uint32_t limit = 1000000;
  FactorTable table(limit);
  for (long long d : kClassNumberOneDiscs) {
    // chi built multiplicatively off the sieve must match the direct symbol;
    // this pins chi(mn) = chi(m) chi(n) for every factorization below the limit.
    std::vector<int8_t> chi = chi_table(d, limit, table);
    bool all_match = true;
    for (uint32_t n = 1; n <= limit; ++n) {
      if (chi[n] != kronecker(d, n)) {
        all_match = false;
        break;
      }
    }
    CHECK(all_match);
  }
  // and exhaustively on small pairs, without the sieve
  for (long long d : {-3LL, -4LL, -163LL}) {
    for (unsigned long long m = 1; m <= 300; ++m) {
      for (unsigned long long n = 1; n <= 300; ++n) {
        CHECK(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
      }
    }
  }
}

TEST_CASE("factorize") {
  FactorTable table(1000);
  CHECK(table.factorize(1).empty());
  std::vector<std::pair<uint32_t, uint32_t>> expected{{2, 2}, {3, 1}};
  CHECK(table.factorize(12) == expected);
  std::vector<std::pair<uint32_t, uint32_t>> expected691{{691, 1}};
  CHECK(table.factorize(691) == expected691);
  CHECK_THROWS_AS(table.factorize(0), std::out_of_range);
  CHECK_THROWS_AS(table.factorize(1001), std::out_of_range);

  // product of p^e recovers n; primes strictly increasing
  for (uint32_t n = 1; n <= 1000; ++n) {
    uint64_t prod = 1;
    uint32_t last = 0;
    for (const auto& [p, e] : table.factorize(n)) {
      CHECK(p > last);
      CHECK(table.is_prime(p));
      last = p;
      for (uint32_t i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("divisor_count and sigma") {
  CHECK(divisor_count(1) == 1);
  CHECK(sigma(3, 2) == 9);
  CHECK(sigma(11, 2) == 2049);

  // sigma(0, n) = d(n), and both match the naive divisor scan
  for (uint64_t n = 1; n <= 10000; ++n) {
    CHECK(sigma(0, n) == divisor_count(n));
  }
  for (uint64_t n = 1; n <= 500; ++n) {
    uint64_t d_naive = 0;
    mpz_class s3_naive = 0;
    for (uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        ++d_naive;
        mpz_class dd(static_cast<unsigned long>(d));
        s3_naive += dd * dd * dd;
      }
    }
    CHECK(divisor_count(n) == d_naive);
    CHECK(sigma(3, n) == s3_naive);
  }
}

TEST_CASE("character_divisor_sum") {
  CHECK(character_divisor_sum(-4, 1) == 1);
  CHECK(character_divisor_sum(-4, 5) == 2);
  CHECK(character_divisor_sum(-4, 3) == 0);

  // against the naive divisor scan
  for (long long d : {-3LL, -4LL, -28LL}) {
    for (uint64_t n = 1; n <= 2000; ++n) {
      long long naive = 0;
      for (uint64_t dd = 1; dd <= n; ++dd) {
        if (n % dd == 0) naive += kronecker(d, dd);
      }
      CHECK(character_divisor_sum(d, n) == naive);
    }
  }
}

TEST_CASE("character_divisor_sum is multiplicative on coprime pairs") {
  const uint32_t limit = 500 * 500;
  FactorTable table(limit);
  for (long long d : kClassNumberOneDiscs) {
    std::vector<int32_t> rstar = character_divisor_sum_table(d, limit, table);
    bool ok = true;
    for (uint64_t m = 1; m <= 500 && ok; ++m) {
      for (uint64_t n = 1; n <= 500; ++n) {
        if (std::gcd(m, n) != 1) continue;
        if (rstar[m * n] != rstar[m] * rstar[n]) {
          ok = false;
          break;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("character_divisor_sum_table matches the scalar path") {
  FactorTable table(3000);
  for (long long d : {-3LL, -163LL}) {
    std::vector<int32_t> rstar = character_divisor_sum_table(d, 3000, table);
    for (uint64_t n = 1; n <= 3000; ++n) CHECK(rstar[n] == character_divisor_sum(d, n));
  }
}

TEST_CASE("divisor_count_table matches divisor_count") {
  std::vector<uint32_t> d = divisor_count_table(2000);
  for (uint64_t n = 1; n <= 2000; ++n) CHECK(d[n] == divisor_count(n));
}

TEST_SUITE_END();
