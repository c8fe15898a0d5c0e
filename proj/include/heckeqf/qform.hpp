#pragma once

#include <cstdint>
#include <vector>

#include "heckeqf/arith.hpp"

namespace heckeqf {

// Integral binary quadratic form a x1^2 + b x1 x2 + c x2^2.
struct QuadForm {
  long long a = 1;
  long long b = 0;
  long long c = 1;

  long long discriminant() const { return b * b - 4 * a * c; }
  long long eval(long long x1, long long x2) const { return a * x1 * x1 + b * x1 * x2 + c * x2 * x2; }
  bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
  bool is_primitive() const;
  bool is_reduced() const;  // |b| <= a <= c, with b >= 0 when |b| = a or a = c

  bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

// d < 0 and d = 0 or 1 (mod 4).
bool is_valid_discriminant(long long d);

// All primitive reduced forms of discriminant d, ordered by (a, b).
std::vector<QuadForm> reduced_forms(long long d);

uint32_t class_number(long long d);

// w_D: 6 for D = -3, 4 for D = -4, 2 for D < -4.
int automorph_weight(long long d);

struct RegistryEntry {
  long long d;
  QuadForm form;  // the unique reduced form
  int w;
};

// The thirteen negative discriminants with h(D) = 1:
// -3, -4, -7, -8, -11, -19, -43, -67, -163 and -12, -16, -27, -28.
const std::vector<RegistryEntry>& class_number_one_registry();
bool in_class_number_one_registry(long long d);
const RegistryEntry& registry_entry(long long d);  // domain_error if absent

// #{(x1, x2) in Z^2 : Q(x1, x2) = n} by bounded enumeration, exact.
uint64_t r_enumerate(const QuadForm& q, uint64_t n);

// w_D sum_{d | n} chi_D(d); only valid as a representation count when
// h(D) = 1, so any d outside the registry is rejected.
long long r_formula(long long d, uint64_t n);

// r_formula for all n = 0..limit (entry 0 holds 1, the zero vector).
std::vector<int64_t> r_formula_table(long long d, uint32_t limit, const FactorTable& table);

// r_Q(0..limit) by one sweep over the lattice ellipse Q(x) <= limit.
// Workers partition the x2 range with per-worker buckets; the merged result
// is identical to the sequential sweep.
std::vector<uint64_t> theta_coefficients(const QuadForm& q, uint32_t limit, unsigned workers = 1);

}  // namespace heckeqf
