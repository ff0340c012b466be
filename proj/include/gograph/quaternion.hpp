// quaternion.hpp -- exact quaternions and quaternionic matrices.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_QUATERNION_HPP
#define GOGRAPH_QUATERNION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gograph/rational.hpp"

namespace gograph {

/// Quaternion w + x i + y j + z k with exact rational components.  Complex
/// numbers embed as quaternions with y = z = 0, so one type serves the
/// unitary and symplectic matrix groups alike.
class Quaternion {
public:
  Quaternion() = default;
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : m_w(std::move(w)), m_x(std::move(x)), m_y(std::move(y)), m_z(std::move(z)) {}

  static Quaternion real(const Rational& value) {
    return Quaternion(value, Rational(0), Rational(0), Rational(0));
  }
  static Quaternion i(const Rational& value = Rational(1)) {
    return Quaternion(Rational(0), value, Rational(0), Rational(0));
  }
  static Quaternion j(const Rational& value = Rational(1)) {
    return Quaternion(Rational(0), Rational(0), value, Rational(0));
  }
  static Quaternion k(const Rational& value = Rational(1)) {
    return Quaternion(Rational(0), Rational(0), Rational(0), value);
  }

  const Rational& w() const { return m_w; }
  const Rational& x() const { return m_x; }
  const Rational& y() const { return m_y; }
  const Rational& z() const { return m_z; }

  bool is_zero() const {
    return m_w.is_zero() && m_x.is_zero() && m_y.is_zero() && m_z.is_zero();
  }

  Quaternion operator-() const { return Quaternion(-m_w, -m_x, -m_y, -m_z); }
  Quaternion& operator+=(const Quaternion& rhs);
  Quaternion& operator-=(const Quaternion& rhs);
  Quaternion& operator*=(const Quaternion& rhs);
  Quaternion& operator*=(const Rational& rhs);

  friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) {
    return lhs += rhs;
  }
  friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) {
    return lhs -= rhs;
  }
  friend Quaternion operator*(Quaternion lhs, const Quaternion& rhs) {
    return lhs *= rhs;
  }
  friend Quaternion operator*(Quaternion lhs, const Rational& rhs) {
    return lhs *= rhs;
  }

  friend bool operator==(const Quaternion& lhs, const Quaternion& rhs) {
    return lhs.m_w == rhs.m_w && lhs.m_x == rhs.m_x && lhs.m_y == rhs.m_y &&
           lhs.m_z == rhs.m_z;
  }
  friend bool operator!=(const Quaternion& lhs, const Quaternion& rhs) {
    return !(lhs == rhs);
  }

  std::string str() const;

private:
  Rational m_w, m_x, m_y, m_z;
};

/// Dense matrix of quaternions; the common representation for the compact
/// matrix groups whose quotients the toolkit analyses.
class QMatrix {
public:
  QMatrix(std::size_t rows, std::size_t cols);

  /// Builds from rows; all rows must have equal length.
  static QMatrix from_rows(const std::vector<std::vector<Quaternion>>& rows);

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }

  Quaternion& at(std::size_t row, std::size_t col);
  const Quaternion& at(std::size_t row, std::size_t col) const;

  bool is_zero() const;

  QMatrix operator-() const;
  QMatrix& operator+=(const QMatrix& rhs);
  QMatrix& operator-=(const QMatrix& rhs);
  QMatrix& operator*=(const Rational& rhs);
  friend QMatrix operator+(QMatrix lhs, const QMatrix& rhs) { return lhs += rhs; }
  friend QMatrix operator-(QMatrix lhs, const QMatrix& rhs) { return lhs -= rhs; }
  friend QMatrix operator*(QMatrix lhs, const Rational& rhs) { return lhs *= rhs; }
  QMatrix operator*(const QMatrix& rhs) const;

  friend bool operator==(const QMatrix& lhs, const QMatrix& rhs);
  friend bool operator!=(const QMatrix& lhs, const QMatrix& rhs) {
    return !(lhs == rhs);
  }

  /// Flattens to a rational vector of length 4 * rows * cols, entry-major
  /// with components ordered (w, x, y, z); matrices are linearly independent
  /// over the rationals exactly when their flattenings are.
  std::vector<Rational> realify() const;

private:
  std::size_t m_rows;
  std::size_t m_cols;
  std::vector<Quaternion> m_data;
};

/// Matrix commutator a b - b a.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

}  // namespace gograph

#endif  // GOGRAPH_QUATERNION_HPP
