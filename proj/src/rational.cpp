// rational.cpp -- arbitrary-precision rational scalars.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/rational.hpp"

#include <cctype>
#include <ostream>

#include "gograph/errors.hpp"

namespace gograph {

namespace {

// Accepts an optional leading '-' followed by one or more decimal digits.
bool is_integer_token(const std::string& text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw DivisionByZeroError("rational with zero denominator");
  }
  m_value = mpq_class(num, den);
  m_value.canonicalize();
}

Rational::Rational(const mpq_class& value) : m_value(value) {
  m_value.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw ParseError("malformed rational: '" + text + "'");
    }
    return Rational(mpq_class(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
    throw ParseError("malformed rational: '" + text + "'");
  }
  mpz_class den_z(den);
  if (den_z == 0) {
    throw DivisionByZeroError("rational with zero denominator: '" + text + "'");
  }
  return Rational(mpq_class(mpz_class(num), den_z));
}

std::string Rational::str() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
  m_value += rhs.m_value;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  m_value -= rhs.m_value;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  m_value *= rhs.m_value;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZeroError("division of rational by zero");
  }
  m_value /= rhs.m_value;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw DivisionByZeroError("inverse of zero rational");
  }
  return Rational(mpq_class(1) / m_value);
}

std::ostream& operator<<(std::ostream& out, const Rational& r) {
  return out << r.str();
}

}  // namespace gograph
