#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jmwg/scalar.hpp"

namespace jmwg {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// ascending degree. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(Integer c);
  /// c * x^k
  static IntPolynomial monomial(Integer c, int k);
  /// x + c
  static IntPolynomial linear(Integer c);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Integer& leading() const;
  Integer coefficient(int k) const;

  /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
  Integer content() const;
  IntPolynomial primitive_part() const;
  /// Throws std::domain_error if some coefficient is not divisible by `c`.
  IntPolynomial divide_exact(const Integer& c) const;

  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Descending powers of `var`, e.g. "d^3-d", "2d^2-3", "0".
  std::string to_string(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b. Throws std::domain_error if b is zero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over Z[x] when b divides a, else std::nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Z[x] via the subresultant remainder sequence;
/// normalized to a positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient of integer polynomials in canonical form: no common polynomial
/// factor, no common integer content, positive leading denominator coefficient.
class RationalFunction {
 public:
  RationalFunction() : den_(IntPolynomial::constant(1)) {}
  /// Throws std::domain_error if `den` is zero.
  RationalFunction(IntPolynomial num, IntPolynomial den);
  explicit RationalFunction(IntPolynomial num) : RationalFunction(std::move(num), IntPolynomial::constant(1)) {}

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws PoleError at a root of the denominator.
  Rational evaluate(const Rational& x) const;

  /// Coefficients of x^{-m} for m = first, ..., first + count - 1 in the
  /// expansion at infinity. Throws std::domain_error if the expansion has
  /// nonzero terms of order below `first`.
  std::vector<Rational> series_at_infinity(int first, int count) const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "-1/(d^3-d)"; the denominator fully expanded.
  std::string to_string(const std::string& var = "d") const;
  /// "-1/(d(d^2-1))"; linear integer-root factors of the denominator split
  /// out and paired as (d^2-k^2) when both signs occur.
  std::string to_factored_string(const std::string& var = "d") const;

 private:
  void canonicalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace jmwg
