#pragma once

#include "torusbt/rational.hpp"

#include <string>
#include <vector>

namespace torusbt {

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
/// Computed once per n by dividing x^n - 1 by the lower cyclotomic factors;
/// the cache is shared and safe for concurrent use.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// Element of Q(zeta_n) = Q[x]/(Phi_n), stored as its canonical representative
/// of degree < phi(n) in the power basis.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(unsigned order = 1);

  static CyclotomicNumber from_rational(unsigned order, const Rational& value);
  /// zeta_order^k for any integer k.
  static CyclotomicNumber root_power(unsigned order, long k);
  /// sum_k coeffs[k] zeta_order^k for a coefficient vector of any length.
  static CyclotomicNumber from_power_coefficients(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Degree-0 coefficient; throws Error(NotRational) if a higher coefficient is nonzero.
  Rational rational_value() const;

  /// Same element viewed in Q(zeta_m); m must be a multiple of order().
  CyclotomicNumber lift(unsigned m) const;
  /// Image under the automorphism zeta -> zeta^j, gcd(j, order) = 1.
  CyclotomicNumber galois_conjugate(long j) const;
  CyclotomicNumber complex_conjugate() const { return galois_conjugate(-1); }

  Rational trace() const;
  Rational norm() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& other);
  CyclotomicNumber& operator-=(const CyclotomicNumber& other);
  CyclotomicNumber& operator*=(const CyclotomicNumber& other);
  CyclotomicNumber& operator*=(const Rational& scalar);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
  CyclotomicNumber operator-() const;
  CyclotomicNumber pow(unsigned long e) const;

  /// Equality as field elements (orders may differ).
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// e.g. "1/2 + 3*z^2" with z = zeta_order; rational values print as a rational.
  std::string to_string() const;

 private:
  void reduce(std::vector<Rational> raw);

  unsigned order_;
  std::vector<Rational> coeffs_;
};

}  // namespace torusbt
