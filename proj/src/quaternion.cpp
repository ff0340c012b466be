// quaternion.cpp -- exact quaternions and quaternionic matrices.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/quaternion.hpp"

#include <sstream>

#include "gograph/errors.hpp"

namespace gograph {

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
  m_w += rhs.m_w;
  m_x += rhs.m_x;
  m_y += rhs.m_y;
  m_z += rhs.m_z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
  m_w -= rhs.m_w;
  m_x -= rhs.m_x;
  m_y -= rhs.m_y;
  m_z -= rhs.m_z;
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& rhs) {
  const Rational w = m_w * rhs.m_w - m_x * rhs.m_x - m_y * rhs.m_y - m_z * rhs.m_z;
  const Rational x = m_w * rhs.m_x + m_x * rhs.m_w + m_y * rhs.m_z - m_z * rhs.m_y;
  const Rational y = m_w * rhs.m_y - m_x * rhs.m_z + m_y * rhs.m_w + m_z * rhs.m_x;
  const Rational z = m_w * rhs.m_z + m_x * rhs.m_y - m_y * rhs.m_x + m_z * rhs.m_w;
  m_w = w;
  m_x = x;
  m_y = y;
  m_z = z;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& rhs) {
  m_w *= rhs;
  m_x *= rhs;
  m_y *= rhs;
  m_z *= rhs;
  return *this;
}

std::string Quaternion::str() const {
  std::ostringstream out;
  bool first = true;
  const auto append = [&out, &first](const Rational& value, const char* unit) {
    if (value.is_zero()) return;
    const bool negative = value.is_negative();
    const Rational magnitude = negative ? -value : value;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (unit[0] == '\0') {
      out << magnitude.str();
    } else if (magnitude.is_one()) {
      out << unit;
    } else {
      out << magnitude.str() << "*" << unit;
    }
  };
  append(m_w, "");
  append(m_x, "i");
  append(m_y, "j");
  append(m_z, "k");
  if (first) return "0";
  return out.str();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Quaternion>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  QMatrix result(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("matrix rows have unequal lengths");
    for (std::size_t j = 0; j < c; ++j) result.at(i, j) = rows[i][j];
  }
  return result;
}

Quaternion& QMatrix::at(std::size_t row, std::size_t col) {
  if (row >= m_rows || col >= m_cols) throw ShapeError("matrix index out of range");
  return m_data[row * m_cols + col];
}

const Quaternion& QMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= m_rows || col >= m_cols) throw ShapeError("matrix index out of range");
  return m_data[row * m_cols + col];
}

bool QMatrix::is_zero() const {
  for (const Quaternion& q : m_data) {
    if (!q.is_zero()) return false;
  }
  return true;
}

QMatrix QMatrix::operator-() const {
  QMatrix result = *this;
  for (Quaternion& q : result.m_data) q = -q;
  return result;
}

QMatrix& QMatrix::operator+=(const QMatrix& rhs) {
  if (rhs.m_rows != m_rows || rhs.m_cols != m_cols) {
    throw ShapeError("matrix sum with mismatched shapes");
  }
  for (std::size_t idx = 0; idx < m_data.size(); ++idx) m_data[idx] += rhs.m_data[idx];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& rhs) {
  if (rhs.m_rows != m_rows || rhs.m_cols != m_cols) {
    throw ShapeError("matrix difference with mismatched shapes");
  }
  for (std::size_t idx = 0; idx < m_data.size(); ++idx) m_data[idx] -= rhs.m_data[idx];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& rhs) {
  for (Quaternion& q : m_data) q *= rhs;
  return *this;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (m_cols != rhs.m_rows) {
    throw ShapeError("matrix product with mismatched shapes");
  }
  QMatrix result(m_rows, rhs.m_cols);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t k = 0; k < m_cols; ++k) {
      const Quaternion& left = at(i, k);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.m_cols; ++j) {
        result.at(i, j) += left * rhs.at(k, j);
      }
    }
  }
  return result;
}

bool operator==(const QMatrix& lhs, const QMatrix& rhs) {
  return lhs.m_rows == rhs.m_rows && lhs.m_cols == rhs.m_cols &&
         lhs.m_data == rhs.m_data;
}

std::vector<Rational> QMatrix::realify() const {
  std::vector<Rational> result;
  result.reserve(4 * m_data.size());
  for (const Quaternion& q : m_data) {
    result.push_back(q.w());
    result.push_back(q.x());
    result.push_back(q.y());
    result.push_back(q.z());
  }
  return result;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
  return a * b - b * a;
}

}  // namespace gograph
