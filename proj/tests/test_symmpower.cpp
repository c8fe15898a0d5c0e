#include <doctest.h>

#include <cmath>
#include <random>

#include "heckeqf/arith.hpp"
#include "heckeqf/eigenform.hpp"
#include "heckeqf/symmpower.hpp"

using namespace heckeqf;

namespace {

double binomial(unsigned n, unsigned k) {
  double v = 1.0;
  for (unsigned i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("symmpower");

TEST_CASE("satake") {
  CHECK(satake(2.0).theta == doctest::Approx(0.0));
  CHECK(satake(0.0).theta == doctest::Approx(M_PI / 2));
  CHECK(satake(-2.0).theta == doctest::Approx(M_PI));

  SatakeParams sp = satake(-0.5303300858899107, 2);
  CHECK(sp.theta == doctest::Approx(1.8392).epsilon(1e-3));
  CHECK(2.0 * std::cos(sp.theta) == doctest::Approx(-0.5303300858899107).epsilon(1e-12));
  CHECK(sp.p == 2);

  CHECK_THROWS_AS(satake(2.1), std::domain_error);
  CHECK_THROWS_AS(satake(-2.0000001), std::domain_error);
  CHECK(satake(2.0 + 0.5e-9).theta == doctest::Approx(0.0));  // clamped within tolerance
}

TEST_CASE("chebyshev_u") {
  CHECK(chebyshev_u(0, 0.37) == 1.0);
  CHECK(chebyshev_u(1, 0.5) == doctest::Approx(1.0));
  CHECK(chebyshev_u(2, std::cos(M_PI / 2)) == doctest::Approx(-1.0));
  // U_r(cos t) = sin((r+1)t) / sin(t)
  for (unsigned r = 0; r <= 10; ++r) {
    for (double t : {0.3, 1.1, 2.0, 2.9}) {
      CHECK(chebyshev_u(r, std::cos(t)) ==
            doctest::Approx(std::sin((r + 1) * t) / std::sin(t)).epsilon(1e-10));
    }
  }
}

TEST_CASE("lambda_sym pinned examples") {
  SatakeParams sp = satake(-0.5303300858899107, 2);  // p = 2, weight 12
  for (unsigned m = 0; m <= 4; ++m) CHECK(lambda_sym(m, sp, 0) == doctest::Approx(1.0));

  // m = 1 reproduces lambda(p^r) = U_r(cos theta)
  for (unsigned r = 0; r <= 9; ++r) {
    CHECK(lambda_sym(1, sp, r) == doctest::Approx(chebyshev_u(r, std::cos(sp.theta))).epsilon(1e-10));
  }

  // m = 2, j = 1: lambda(2)^2 - 1 with lambda(2)^2 = 576/2048 exactly
  CHECK(lambda_sym(2, sp, 1) == doctest::Approx(0.28125 - 1.0).epsilon(1e-10));

  CHECK_THROWS_AS(lambda_sym(5, sp, 1), std::domain_error);
}

TEST_CASE("lambda_rankin_selberg pinned examples") {
  SatakeParams sp = satake(-0.5303300858899107, 2);
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned j = 0; j <= 6; ++j) {
      CHECK(lambda_rankin_selberg(m, 0, sp, j) == doctest::Approx(lambda_sym(m, sp, j)).epsilon(1e-9));
    }
  }
  CHECK(lambda_rankin_selberg(1, 1, sp, 1) == doctest::Approx(0.28125).epsilon(1e-10));
  CHECK(lambda_rankin_selberg(4, 4, sp, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(lambda_rankin_selberg(5, 0, sp, 1), std::domain_error);
  CHECK_THROWS_AS(lambda_rankin_selberg(2, 3, sp, 1), std::domain_error);
}

TEST_CASE("prime value identity") {
  CHECK(prime_value_identity_check(satake(2.0)));       // theta = 0: m + 1
  CHECK(prime_value_identity_check(satake(0.0)));       // theta = pi/2
  CHECK(prime_value_identity_check(satake(-2.0)));      // theta = pi
  CHECK(prime_value_identity_check(satake(1.23456)));

  SatakeParams right_angle = satake(0.0);
  CHECK(lambda_sym(2, right_angle, 1) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(lambda_sym(3, right_angle, 1) == doctest::Approx(0.0).epsilon(1e-10));
  SatakeParams zero_angle = satake(2.0);
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(lambda_sym(m, zero_angle, 1) == doctest::Approx(m + 1.0).epsilon(1e-10));
  }
}

TEST_CASE("|lambda_sym(m, p, j)| <= C(j + m, m)") {
  Eigenform f = make_eigenform(12, 100);
  FactorTable table(100);
  for (uint32_t p : table.primes()) {
    SatakeParams sp = satake(f.lambda[p], p);
    for (unsigned m = 0; m <= 4; ++m) {
      for (unsigned j = 0; j <= 10; ++j) {
        CHECK(std::abs(lambda_sym(m, sp, j)) <= binomial(j + m, m) + 1e-9);
      }
    }
  }
}

TEST_CASE("Hecke factorization consistency: lambda(p^2) vs sym expansion") {
  Eigenform f = make_eigenform(12, 10000);
  FactorTable table(100);
  for (uint32_t p : table.primes()) {
    SatakeParams sp = satake(f.lambda[p], p);
    CHECK(lambda_sym(1, sp, 2) == doctest::Approx(f.lambda[p * p]).epsilon(1e-9));
  }
}

TEST_CASE("Clebsch-Gordan at j = 1") {
  // RS(M, N) at a prime decomposes as sym^{M+N} + sym^{M+N-2} + .. + sym^{M-N};
  // the prime coefficient of sym^m is U_m(cos theta), which also covers the
  // m > 4 pieces on the right-hand side.
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> angle(0.0, M_PI);
  for (int trial = 0; trial < 100; ++trial) {
    SatakeParams sp{angle(rng), 0};
    const double c = std::cos(sp.theta);
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned n = 0; n <= m; ++n) {
        double lhs = lambda_rankin_selberg(m, n, sp, 1);
        double rhs = 0.0;
        for (unsigned i = 0; i <= n; ++i) rhs += chebyshev_u(m + n - 2 * i, c);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
      }
    }
  }
  // where both sides stay within the cap, lambda_sym agrees with chebyshev_u
  SatakeParams sp{1.234, 0};
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(lambda_sym(m, sp, 1) == doctest::Approx(chebyshev_u(m, std::cos(sp.theta))).epsilon(1e-10));
  }
}

TEST_SUITE_END();
