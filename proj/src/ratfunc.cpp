// ratfunc.cpp -- rational functions in canonical reduced form.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/ratfunc.hpp"

#include "gograph/errors.hpp"

namespace gograph {

namespace {

// Resolves the ring of a mixed pair, treating ring-less operands as zero.
RingPtr resolve_ring(const RatFunc& a, const RatFunc& b) {
  if (a.ring() && b.ring()) {
    if (a.ring() != b.ring()) {
      throw RingMismatchError("rational functions belong to different rings");
    }
    return a.ring();
  }
  return a.ring() ? a.ring() : b.ring();
}

}  // namespace

RatFunc::RatFunc(Poly numerator) : m_num(std::move(numerator)) {
  if (m_num.ring()) m_den = Poly::constant(m_num.ring(), Rational(1));
}

RatFunc::RatFunc(Poly numerator, Poly denominator)
    : m_num(std::move(numerator)), m_den(std::move(denominator)) {
  if (m_den.is_zero()) {
    throw DivisionByZeroError("rational function with zero denominator");
  }
  const RingPtr ring = common_ring(m_num, m_den);
  if (ring && !m_num.ring()) m_num = Poly::zero(ring);
  reduce();
}

void RatFunc::reduce() {
  if (m_num.is_zero()) {
    if (m_num.ring()) {
      m_den = Poly::constant(m_num.ring(), Rational(1));
    } else if (m_den.ring()) {
      m_num = Poly::zero(m_den.ring());
      m_den = Poly::constant(m_den.ring(), Rational(1));
    }
    return;
  }
  const Poly divisor = gcd(m_num, m_den);
  if (!divisor.is_constant()) {
    auto num = m_num.try_divide(divisor);
    auto den = m_den.try_divide(divisor);
    if (!num || !den) throw Error("internal: gcd does not divide its arguments");
    m_num = std::move(*num);
    m_den = std::move(*den);
  }
  make_monic();
}

void RatFunc::make_monic() {
  const Rational lead = m_den.leading_coefficient();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    m_num *= inv;
    m_den *= inv;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error("constant_value of a non-constant rational function");
  if (m_num.is_zero()) return Rational(0);
  return m_num.constant_value() / m_den.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc result = *this;
  result.m_num = -result.m_num;
  return result;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  const RingPtr ring = resolve_ring(*this, rhs);
  if (!ring) return *this;  // zero plus zero
  if (!this->ring()) *this = zero(ring);
  if (!rhs.ring() || rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;

  // Both operands are reduced, so the only possible cancellation against the
  // product denominator runs through the denominators' common factor.
  const Poly common = gcd(m_den, rhs.m_den);
  if (common.is_constant()) {
    Poly num = m_num * rhs.m_den + rhs.m_num * m_den;
    if (num.is_zero()) return *this = zero(ring);
    m_num = std::move(num);
    m_den *= rhs.m_den;
  } else {
    const Poly q1 = *m_den.try_divide(common);
    const Poly q2 = *rhs.m_den.try_divide(common);
    Poly num = m_num * q2 + rhs.m_num * q1;
    if (num.is_zero()) return *this = zero(ring);
    const Poly cancel = gcd(num, common);
    if (cancel.is_constant()) {
      m_num = std::move(num);
      m_den = common * q1 * q2;
    } else {
      m_num = *num.try_divide(cancel);
      m_den = *common.try_divide(cancel) * q1 * q2;
    }
  }
  make_monic();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  return *this += -rhs;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  const RingPtr ring = resolve_ring(*this, rhs);
  if (!ring) return *this;
  if (!this->ring()) *this = zero(ring);
  if (!rhs.ring() || rhs.is_zero() || is_zero()) return *this = zero(ring);

  // Cross-cancel before multiplying: the factors remaining afterwards are
  // pairwise coprime, so no further reduction is needed.
  const Poly g1 = gcd(m_num, rhs.m_den);
  const Poly g2 = gcd(rhs.m_num, m_den);
  const Poly num1 = g1.is_constant() ? m_num : *m_num.try_divide(g1);
  const Poly den2 = g1.is_constant() ? rhs.m_den : *rhs.m_den.try_divide(g1);
  const Poly num2 = g2.is_constant() ? rhs.m_num : *rhs.m_num.try_divide(g2);
  const Poly den1 = g2.is_constant() ? m_den : *m_den.try_divide(g2);
  m_num = num1 * num2;
  m_den = den1 * den2;
  make_monic();
  return *this;
}

RatFunc& RatFunc::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    if (ring()) return *this = zero(ring());
    return *this = RatFunc();
  }
  m_num *= rhs;  // the denominator stays monic
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZeroError("division of rational function by zero");
  }
  const RingPtr ring = resolve_ring(*this, rhs);
  if (!this->ring()) *this = zero(ring);
  *this = RatFunc(m_num * rhs.m_den, m_den * rhs.m_num);
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
  return RatFunc(m_den, m_num);
}

RatFunc RatFunc::substitute_value(std::size_t var, const Rational& value) const {
  if (!ring()) throw RingMismatchError("substitution on a ring-less rational function");
  Poly den = m_den.substitute_value(var, value);
  if (den.is_zero()) {
    throw DivisionByZeroError("substitution makes the denominator vanish");
  }
  return RatFunc(m_num.substitute_value(var, value), std::move(den));
}

RatFunc RatFunc::substitute(std::size_t var, const Poly& replacement) const {
  if (!ring()) throw RingMismatchError("substitution on a ring-less rational function");
  Poly den = m_den.substitute(var, replacement);
  if (den.is_zero()) {
    throw DivisionByZeroError("substitution makes the denominator vanish");
  }
  return RatFunc(m_num.substitute(var, replacement), std::move(den));
}

Rational RatFunc::evaluate(const std::vector<Rational>& values) const {
  const Rational den = m_den.evaluate(values);
  if (den.is_zero()) {
    throw DomainError("rational function evaluated at a denominator zero");
  }
  return m_num.evaluate(values) / den;
}

double RatFunc::evaluate(const std::vector<double>& values) const {
  const double den = m_den.evaluate(values);
  if (den == 0.0) {
    throw DomainError("rational function evaluated at a denominator zero");
  }
  return m_num.evaluate(values) / den;
}

std::string RatFunc::str() const {
  if (is_polynomial()) {
    if (m_den.is_zero() || m_den.constant_value().is_one()) return m_num.str();
    // Canonical form keeps the denominator monic, so a constant denominator
    // is exactly one; this branch only serves the ring-less default.
  }
  return "(" + m_num.str() + ")/(" + m_den.str() + ")";
}

}  // namespace gograph
