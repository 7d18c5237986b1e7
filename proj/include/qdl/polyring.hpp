#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qdl {

using BigInt = mpz_class;

/// Raised when a division is attempted by a zero or non-monic modulus.
class ModulusError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Dense univariate polynomial over Z in the indeterminate q.
 *
 * Coefficients are stored ascending by degree and are always normalized:
 * the last stored coefficient is nonzero, and the zero polynomial has no
 * coefficients at all.
 */
class IntPoly {
public:
  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = -1;

  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt &c);
  /// c * q^e
  static IntPoly monomial(std::size_t e, const BigInt &c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigInt> &coeffs() const { return coeffs_; }

  /// Coefficient of q^i; zero beyond the stored range.
  BigInt coeff(std::size_t i) const;
  const BigInt &leading() const;

  IntPoly &operator+=(const IntPoly &rhs);
  IntPoly &operator-=(const IntPoly &rhs);
  IntPoly &operator*=(const IntPoly &rhs);
  IntPoly &operator*=(const BigInt &c);

  /// Adds c * q^shift * rhs in place without building the shifted temporary.
  IntPoly &add_shifted(const IntPoly &rhs, std::size_t shift, const BigInt &c = 1);
  IntPoly shifted(std::size_t shift) const;

  friend IntPoly operator+(IntPoly a, const IntPoly &b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly &b) { return a -= b; }
  friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
  friend IntPoly operator*(IntPoly a, const BigInt &c) { return a *= c; }
  friend IntPoly operator*(const BigInt &c, IntPoly a) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly &a, const IntPoly &b) { return a.coeffs_ == b.coeffs_; }

  /// "1 + 2*q - q^3"; the zero polynomial prints as "0".
  std::string to_string() const;
  /// Decimal coefficient strings, ascending by degree.
  std::vector<std::string> to_decimal_strings() const;
  static IntPoly from_decimal_strings(const std::vector<std::string> &coeffs);

private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly poly_add(const IntPoly &a, const IntPoly &b);
IntPoly poly_mul(const IntPoly &a, const IntPoly &b);

/// Quotient and remainder of a by a monic m: a = quotient * m + remainder,
/// deg(remainder) < deg(m). Throws ModulusError when m is zero or not monic.
std::pair<IntPoly, IntPoly> poly_divrem_monic(const IntPoly &a, const IntPoly &m);

/// Horner evaluation at an integer point.
BigInt poly_eval(const IntPoly &a, const BigInt &x);

} // namespace qdl
