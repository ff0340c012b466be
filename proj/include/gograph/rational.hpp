// rational.hpp -- arbitrary-precision rational scalars.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_RATIONAL_HPP
#define GOGRAPH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gograph {

/// Exact rational number with canonical representation: always stored in
/// lowest terms with positive denominator.  Backed by GMP's mpq_class, which
/// canonicalises on construction and keeps results reduced.
///
/// Construction from a zero denominator and parsing of malformed strings
/// throw; arithmetic never overflows.
class Rational {
public:
  /// Zero.
  Rational() : m_value(0) {}

  /// Integer value.
  Rational(long n) : m_value(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : m_value(n) {}   // NOLINT(google-explicit-constructor)

  /// Fraction num/den, reduced; throws DivisionByZeroError if den == 0.
  Rational(long num, long den);

  /// Parses "p", "-p", "p/q" or "-p/q" with decimal digits; throws
  /// ParseError on malformed input and DivisionByZeroError on q == 0.
  static Rational parse(const std::string& text);

  /// Wraps an existing GMP rational (canonicalised).
  explicit Rational(const mpq_class& value);

  bool is_zero() const { return m_value == 0; }
  bool is_one() const { return m_value == 1; }
  bool is_negative() const { return m_value < 0; }
  bool is_integer() const { return m_value.get_den() == 1; }

  /// Numerator as a decimal string (sign included).
  std::string numerator_string() const { return m_value.get_num().get_str(); }

  /// Denominator as a decimal string (always positive).
  std::string denominator_string() const { return m_value.get_den().get_str(); }

  /// Canonical text: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  /// Nearest double; exact when representable.
  double to_double() const { return m_value.get_d(); }

  /// Access to the underlying GMP value.
  const mpq_class& value() const { return m_value; }

  Rational operator-() const { return Rational(mpq_class(-m_value)); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DivisionByZeroError when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.m_value == rhs.m_value;
  }
  friend bool operator!=(const Rational& lhs, const Rational& rhs) {
    return lhs.m_value != rhs.m_value;
  }
  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return lhs.m_value < rhs.m_value;
  }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) {
    return lhs.m_value <= rhs.m_value;
  }
  friend bool operator>(const Rational& lhs, const Rational& rhs) {
    return lhs.m_value > rhs.m_value;
  }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) {
    return lhs.m_value >= rhs.m_value;
  }

  /// Multiplicative inverse; throws DivisionByZeroError on zero.
  Rational inverse() const;

  /// Absolute value.
  Rational abs() const { return Rational(mpq_class(::abs(m_value))); }

  friend std::ostream& operator<<(std::ostream& out, const Rational& r);

private:
  mpq_class m_value;
};

}  // namespace gograph

#endif  // GOGRAPH_RATIONAL_HPP
