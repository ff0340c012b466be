// ratfunc.hpp -- rational functions in canonical reduced form.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_RATFUNC_HPP
#define GOGRAPH_RATFUNC_HPP

#include <optional>
#include <string>
#include <vector>

#include "gograph/poly.hpp"

namespace gograph {

/// Quotient of two polynomials kept in canonical form: numerator and
/// denominator coprime (their gcd is constant) and the denominator's leading
/// coefficient equal to one under graded-lexicographic order.  Because the
/// form is unique, structural equality coincides with equality of rational
/// functions, and equal values print identically.
class RatFunc {
public:
  /// Ring-less zero; adopts a ring on first combination, like Poly.
  RatFunc() = default;

  /// A polynomial viewed as a rational function (denominator one).
  RatFunc(Poly numerator);  // NOLINT(google-explicit-constructor)

  /// Reduces numerator/denominator to canonical form; throws
  /// DivisionByZeroError when denominator is zero.
  RatFunc(Poly numerator, Poly denominator);

  static RatFunc zero(const RingPtr& ring) { return RatFunc(Poly::zero(ring)); }
  static RatFunc constant(const RingPtr& ring, const Rational& value) {
    return RatFunc(Poly::constant(ring, value));
  }
  static RatFunc variable(const RingPtr& ring, const std::string& name) {
    return RatFunc(Poly::variable(ring, name));
  }

  const Poly& numerator() const { return m_num; }
  const Poly& denominator() const { return m_den; }
  const RingPtr& ring() const { return m_num.ring(); }

  bool is_zero() const { return m_num.is_zero(); }
  bool is_polynomial() const { return m_den.is_constant(); }
  bool is_constant() const { return m_num.is_constant() && m_den.is_constant(); }
  /// Value of a constant rational function; throws Error otherwise.
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator*=(const Rational& rhs);
  /// Throws DivisionByZeroError when rhs is zero.
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator*(RatFunc lhs, const Rational& rhs) { return lhs *= rhs; }
  friend RatFunc operator*(const Rational& lhs, RatFunc rhs) { return rhs *= lhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }

  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.m_num == rhs.m_num && lhs.m_den == rhs.m_den;
  }
  friend bool operator!=(const RatFunc& lhs, const RatFunc& rhs) {
    return !(lhs == rhs);
  }

  /// Multiplicative inverse; throws DivisionByZeroError on zero.
  RatFunc inverse() const;

  /// Replaces a variable by a rational constant; throws DivisionByZeroError
  /// when the denominator vanishes identically after substitution.
  RatFunc substitute_value(std::size_t var, const Rational& value) const;

  /// Replaces a variable by a polynomial in numerator and denominator; throws
  /// DivisionByZeroError when the denominator vanishes identically after
  /// substitution.
  RatFunc substitute(std::size_t var, const Poly& replacement) const;

  /// Full evaluation; throws DomainError when the denominator evaluates to
  /// zero at the given point.
  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;

  /// Canonical text: the numerator alone when the denominator is one, else
  /// "(numerator)/(denominator)".
  std::string str() const;

private:
  void reduce();
  void make_monic();

  Poly m_num;
  Poly m_den = Poly();  // canonical one once a ring is attached
};

}  // namespace gograph

#endif  // GOGRAPH_RATFUNC_HPP
