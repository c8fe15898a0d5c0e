#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heckeqf/arith.hpp"

namespace heckeqf {

// Weights k with dim S_k(SL_2(Z)) = 1; the unique normalized eigenform is
// Delta for k = 12 and Delta * E_{k-12} otherwise.
inline constexpr int kEigenformWeights[] = {12, 16, 18, 20, 22, 26};
bool is_supported_weight(int k);

// Level-1 normalized Hecke eigenform: exact integer Fourier coefficients a(n)
// and normalized lambda(n) = a(n) / n^{(k-1)/2}, both indexed 1..limit.
struct Eigenform {
  int weight = 0;
  uint32_t limit = 0;
  std::vector<BigInt> a;       // a[0] unused
  std::vector<double> lambda;  // lambda[0] unused
};

// Truncated Cauchy product of two integer series on q^0..q^X (equal lengths),
// exact.  Large inputs go through Kronecker-substitution packing onto a single
// GMP integer; small ones use the schoolbook product.
std::vector<BigInt> power_series_multiply(const std::vector<BigInt>& a,
                                          const std::vector<BigInt>& b);

// tau(1..X) via q * prod_{n>=1} (1 - q^n)^24; index n holds tau(n), [0] = 0.
std::vector<BigInt> expand_delta(uint32_t x);

// Integer-normalized Eisenstein series E_k = 1 + c_k sum sigma_{k-1}(n) q^n
// for k in {4, 6, 8, 10, 14} (c_k = 240, -504, 480, -264, -24).
std::vector<BigInt> eisenstein(int k, uint32_t x);

Eigenform make_eigenform(int weight, uint32_t limit);

// Exact unnormalized Hecke relation a(m) a(n) = sum_{d | (m,n)} d^{k-1} a(mn/d^2).
bool verify_hecke(const Eigenform& f, uint32_t m, uint32_t n);

// Scans n <= limit for |lambda(n)| > d(n) + tol; returns the first offender.
std::optional<uint32_t> verify_deligne(const Eigenform& f, double tol = 1e-9);

// Rebuilds a(1..limit) from the prime values a(p) alone, via
// a(p^{j+1}) = a(p) a(p^j) - p^{k-1} a(p^{j-1}) and multiplicativity.
std::vector<BigInt> hecke_reconstruct(const Eigenform& f, const FactorTable& table);

}  // namespace heckeqf
