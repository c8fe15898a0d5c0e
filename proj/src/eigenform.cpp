#include "heckeqf/eigenform.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace heckeqf {

bool is_supported_weight(int k) {
  for (int w : kEigenformWeights)
    if (w == k) return true;
  return false;
}

namespace {

constexpr std::size_t kNaiveCutoff = 64;

std::vector<BigInt> multiply_naive(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t n = a.size();
  std::vector<BigInt> out(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::size_t max_coeff_bits(const std::vector<BigInt>& v) {
  std::size_t bits = 0;
  for (const BigInt& x : v) {
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

// Kronecker substitution: evaluate both series at 2^slot_bits, multiply the
// resulting integers once, and slice the product back into coefficients.
// slot_bits leaves 1 bit of sign headroom plus log2(n) for carry growth, so
// each convolution coefficient c satisfies |c| < 2^{slot_bits - 1} and the
// balanced base-2^slot_bits digits recover it exactly.
std::vector<BigInt> multiply_kronecker(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t n = a.size();
  const std::size_t abits = max_coeff_bits(a);
  const std::size_t bbits = max_coeff_bits(b);
  if (abits == 0 || bbits == 0) return std::vector<BigInt>(n, BigInt(0));

  std::size_t guard = 1;
  while ((std::size_t{1} << guard) < 2 * n) ++guard;
  std::size_t slot_bits = abits + bbits + guard + 2;
  slot_bits = (slot_bits + 63) & ~std::size_t{63};
  const std::size_t slot_words = slot_bits / 64;

  auto pack = [&](const std::vector<BigInt>& v) {
    std::vector<uint64_t> pos(n * slot_words + 1, 0);
    std::vector<uint64_t> neg(n * slot_words + 1, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < n; ++i) {
      int s = sgn(v[i]);
      if (s == 0) continue;
      uint64_t* dst = (s > 0) ? &pos[i * slot_words] : &neg[i * slot_words];
      if (s < 0) any_neg = true;
      mpz_export(dst, nullptr, -1, sizeof(uint64_t), 0, 0, v[i].get_mpz_t());
    }
    BigInt packed;
    mpz_import(packed.get_mpz_t(), pos.size(), -1, sizeof(uint64_t), 0, 0, pos.data());
    if (any_neg) {
      BigInt packed_neg;
      mpz_import(packed_neg.get_mpz_t(), neg.size(), -1, sizeof(uint64_t), 0, 0, neg.data());
      packed -= packed_neg;
    }
    return packed;
  };

  BigInt product = pack(a) * pack(b);
  const bool negate = sgn(product) < 0;
  if (negate) mpz_neg(product.get_mpz_t(), product.get_mpz_t());

  std::vector<uint64_t> buf(2 * n * slot_words + 2, 0);
  if (sgn(product) != 0) {
    mpz_export(buf.data(), nullptr, -1, sizeof(uint64_t), 0, 0, product.get_mpz_t());
  }

  const BigInt full = BigInt(1) << slot_bits;
  const BigInt half = BigInt(1) << (slot_bits - 1);
  std::vector<BigInt> out(n);
  BigInt window;
  int carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_import(window.get_mpz_t(), slot_words, -1, sizeof(uint64_t), 0, 0, &buf[i * slot_words]);
    if (carry) window += 1;
    if (window >= half) {
      out[i] = window - full;
      carry = 1;
    } else {
      out[i] = window;
      carry = 0;
    }
    if (negate) mpz_neg(out[i].get_mpz_t(), out[i].get_mpz_t());
  }
  return out;
}

}  // namespace

std::vector<BigInt> power_series_multiply(const std::vector<BigInt>& a,
                                          const std::vector<BigInt>& b) {
  if (a.size() != b.size()) throw std::out_of_range("power_series_multiply: length mismatch");
  if (a.empty()) return {};
  if (a.size() <= kNaiveCutoff) return multiply_naive(a, b);
  return multiply_kronecker(a, b);
}

std::vector<BigInt> expand_delta(uint32_t x) {
  if (x < 1) throw std::domain_error("expand_delta: X must be >= 1");
  // eta = sum_k (-1)^k q^{k(3k-1)/2} (pentagonal numbers), truncated at q^{x-1};
  // Delta = q * eta^24 so a(n) is the (n-1)-st coefficient of eta^24.
  std::vector<BigInt> eta(x, BigInt(0));
  eta[0] = 1;
  for (long long k = 1;; ++k) {
    long long g1 = k * (3 * k - 1) / 2;
    long long g2 = k * (3 * k + 1) / 2;
    if (g1 >= static_cast<long long>(x) && g2 >= static_cast<long long>(x)) break;
    int s = (k & 1) ? -1 : 1;
    if (g1 < static_cast<long long>(x)) eta[g1] = s;
    if (g2 < static_cast<long long>(x)) eta[g2] = s;
  }
  std::vector<BigInt> e2 = power_series_multiply(eta, eta);
  std::vector<BigInt> e4 = power_series_multiply(e2, e2);
  std::vector<BigInt> e8 = power_series_multiply(e4, e4);
  std::vector<BigInt> e16 = power_series_multiply(e8, e8);
  std::vector<BigInt> e24 = power_series_multiply(e16, e8);

  std::vector<BigInt> tau(x + 1, BigInt(0));
  for (uint32_t n = 1; n <= x; ++n) tau[n] = e24[n - 1];
  return tau;
}

std::vector<BigInt> eisenstein(int k, uint32_t x) {
  long scale;
  switch (k) {
    case 4: scale = 240; break;
    case 6: scale = -504; break;
    case 8: scale = 480; break;
    case 10: scale = -264; break;
    case 14: scale = -24; break;
    default: throw std::domain_error("eisenstein: k must be one of {4, 6, 8, 10, 14}");
  }
  std::vector<BigInt> series(x + 1, BigInt(0));
  series[0] = 1;
  // sigma_{k-1} table by a divisor sieve.
  BigInt dk;
  for (uint32_t d = 1; d <= x; ++d) {
    mpz_ui_pow_ui(dk.get_mpz_t(), d, static_cast<unsigned long>(k - 1));
    for (uint32_t m = d; m <= x; m += d) series[m] += dk;
  }
  for (uint32_t n = 1; n <= x; ++n) series[n] *= scale;
  return series;
}

Eigenform make_eigenform(int weight, uint32_t limit) {
  if (!is_supported_weight(weight))
    throw std::domain_error("make_eigenform: weight must be in {12, 16, 18, 20, 22, 26}");
  if (limit < 1) throw std::domain_error("make_eigenform: limit must be >= 1");

  Eigenform f;
  f.weight = weight;
  f.limit = limit;
  if (weight == 12) {
    f.a = expand_delta(limit);
  } else {
    std::vector<BigInt> delta = expand_delta(limit);  // index n = tau(n), [0] = 0
    std::vector<BigInt> ek = eisenstein(weight - 12, limit);
    f.a = power_series_multiply(delta, ek);
  }

  f.lambda.assign(limit + 1, 0.0);
  const double half_wm1 = 0.5 * (weight - 1);
  for (uint32_t n = 1; n <= limit; ++n) {
    double denom = std::exp(half_wm1 * std::log(static_cast<double>(n)));
    f.lambda[n] = mpz_get_d(f.a[n].get_mpz_t()) / denom;
  }
  return f;
}

bool verify_hecke(const Eigenform& f, uint32_t m, uint32_t n) {
  uint64_t mn = static_cast<uint64_t>(m) * n;
  if (m == 0 || n == 0 || mn > f.limit) throw std::out_of_range("verify_hecke: mn outside [1, limit]");
  BigInt lhs = f.a[m] * f.a[n];
  BigInt rhs = 0;
  uint32_t g = std::gcd(m, n);
  BigInt dk;
  for (uint32_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, static_cast<unsigned long>(f.weight - 1));
    rhs += dk * f.a[mn / (static_cast<uint64_t>(d) * d)];
  }
  return lhs == rhs;
}

std::optional<uint32_t> verify_deligne(const Eigenform& f, double tol) {
  std::vector<uint32_t> d = divisor_count_table(f.limit);
  for (uint32_t n = 1; n <= f.limit; ++n) {
    if (std::abs(f.lambda[n]) > static_cast<double>(d[n]) + tol) return n;
  }
  return std::nullopt;
}

std::vector<BigInt> hecke_reconstruct(const Eigenform& f, const FactorTable& table) {
  if (table.limit() < f.limit) throw std::out_of_range("hecke_reconstruct: factor table too small");
  std::vector<BigInt> b(f.limit + 1, BigInt(0));
  b[1] = 1;
  BigInt pk;
  for (uint32_t n = 2; n <= f.limit; ++n) {
    uint32_t p = table.smallest_prime_factor(n);
    uint32_t q = p;  // p-power part of n
    uint32_t m = n / p;
    while (m % p == 0) {
      q *= p;
      m /= p;
    }
    if (m > 1) {
      b[n] = b[q] * b[m];  // q, m < n and coprime
    } else if (q == p) {
      b[n] = f.a[p];  // seed: prime values taken from the series expansion
    } else {
      mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(f.weight - 1));
      b[n] = b[p] * b[n / p] - pk * b[n / p / p];
    }
  }
  return b;
}

}  // namespace heckeqf
