#include "heckeqf/symmpower.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace heckeqf {

namespace {

using Complex = std::complex<double>;

// Coefficient of T^j in 1 / prod_i (1 - roots[i] T): expand the polynomial
// P(T) = prod (1 - roots[i] T), then solve P * C = 1 term by term.
double inverse_product_coefficient(const std::vector<Complex>& roots, unsigned j) {
  std::vector<Complex> poly{1.0};
  for (Complex root : roots) {
    std::vector<Complex> next(poly.size() + 1, Complex(0.0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] * root;
    }
    poly = std::move(next);
  }
  std::vector<Complex> coeff(j + 1, Complex(0.0));
  coeff[0] = 1.0;
  for (unsigned t = 1; t <= j; ++t) {
    Complex s = 0.0;
    const unsigned kmax = std::min<std::size_t>(t, poly.size() - 1);
    for (unsigned k = 1; k <= kmax; ++k) s += poly[k] * coeff[t - k];
    coeff[t] = -s;
  }
  double im = std::abs(coeff[j].imag());
  if (im > 1e-9) throw std::logic_error("local factor expansion: imaginary part did not vanish");
  return coeff[j].real();
}

}  // namespace

SatakeParams satake(double lambda_p, uint32_t p) {
  if (std::abs(lambda_p) > 2.0 + 1e-9)
    throw std::domain_error("satake: |lambda_p| > 2 violates the Deligne bound");
  double c = lambda_p / 2.0;
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return SatakeParams{std::acos(c), p};
}

double chebyshev_u(unsigned r, double x) {
  double prev = 1.0;  // U_0
  if (r == 0) return prev;
  double cur = 2.0 * x;  // U_1
  for (unsigned i = 1; i < r; ++i) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double lambda_sym(unsigned m, const SatakeParams& sp, unsigned j) {
  if (m > 4) throw std::domain_error("lambda_sym: m capped at 4");
  std::vector<Complex> roots;
  roots.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    // alpha^{m-i} beta^i = e^{i (m - 2i) theta}
    double angle = (static_cast<double>(m) - 2.0 * i) * sp.theta;
    roots.push_back(std::polar(1.0, angle));
  }
  return inverse_product_coefficient(roots, j);
}

double lambda_rankin_selberg(unsigned big_m, unsigned big_n, const SatakeParams& sp, unsigned j) {
  if (big_m > 4 || big_m < 1) throw std::domain_error("lambda_rankin_selberg: M must be in 1..4");
  if (big_n > big_m) throw std::domain_error("lambda_rankin_selberg: N must be in 0..M");
  std::vector<Complex> roots;
  roots.reserve((big_m + 1) * (big_n + 1));
  for (unsigned i = 0; i <= big_m; ++i) {
    for (unsigned l = 0; l <= big_n; ++l) {
      double angle = ((static_cast<double>(big_m) - 2.0 * i) + (static_cast<double>(big_n) - 2.0 * l)) *
                     sp.theta;
      roots.push_back(std::polar(1.0, angle));
    }
  }
  return inverse_product_coefficient(roots, j);
}

bool prime_value_identity_check(const SatakeParams& sp, double tol) {
  for (unsigned m = 0; m <= 4; ++m) {
    Complex sum = 0.0;
    for (unsigned j = 0; j <= m; ++j) {
      // alpha^j beta^{m-j} = e^{i (2j - m) theta}
      sum += std::polar(1.0, (2.0 * j - static_cast<double>(m)) * sp.theta);
    }
    if (std::abs(lambda_sym(m, sp, 1) - sum.real()) > tol) return false;
    if (std::abs(sum.imag()) > tol) return false;
  }
  return true;
}

}  // namespace heckeqf
