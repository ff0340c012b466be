// linalg.hpp -- matrices and exact linear solving over rational functions.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_LINALG_HPP
#define GOGRAPH_LINALG_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "gograph/ratfunc.hpp"

namespace gograph {

/// Dense matrix over the field of rational functions, row-major.
class FieldMatrix {
public:
  /// Zero matrix of the given shape, all entries in `ring`.
  FieldMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  /// Builds from rows; all rows must have equal length and a consistent
  /// ring.  Throws ShapeError / RingMismatchError otherwise.
  static FieldMatrix from_rows(RingPtr ring,
                               const std::vector<std::vector<RatFunc>>& rows);

  static FieldMatrix identity(const RingPtr& ring, std::size_t n);

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }
  const RingPtr& ring() const { return m_ring; }

  RatFunc& at(std::size_t row, std::size_t col);
  const RatFunc& at(std::size_t row, std::size_t col) const;

  /// Horizontal concatenation [*this | right].
  FieldMatrix augment(const FieldMatrix& right) const;
  /// Columns [first, last) as a new matrix.
  FieldMatrix column_slice(std::size_t first, std::size_t last) const;
  FieldMatrix transpose() const;

  FieldMatrix& operator+=(const FieldMatrix& rhs);
  FieldMatrix& operator-=(const FieldMatrix& rhs);
  friend FieldMatrix operator+(FieldMatrix lhs, const FieldMatrix& rhs) {
    return lhs += rhs;
  }
  friend FieldMatrix operator-(FieldMatrix lhs, const FieldMatrix& rhs) {
    return lhs -= rhs;
  }
  FieldMatrix operator*(const FieldMatrix& rhs) const;
  std::vector<RatFunc> apply(const std::vector<RatFunc>& vec) const;

  friend bool operator==(const FieldMatrix& lhs, const FieldMatrix& rhs);
  friend bool operator!=(const FieldMatrix& lhs, const FieldMatrix& rhs) {
    return !(lhs == rhs);
  }

  bool is_zero() const;

  /// Multi-line text, one row per line: "[a, b, c]".
  std::string str() const;

private:
  RingPtr m_ring;
  std::size_t m_rows = 0;
  std::size_t m_cols = 0;
  std::vector<RatFunc> m_data;
};

/// Reduced row echelon form together with rank and pivot columns.  Columns
/// are processed left to right; within a column, the pivot row is chosen
/// among eligible rows by the smallest numerator total degree, ties broken
/// by the lowest row index.  (The reduced form itself is unique either way;
/// the rule only fixes the elimination path deterministically.)
struct RrefResult {
  FieldMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const FieldMatrix& matrix);

/// Consistent outcome of solve_linear: one particular solution (free
/// variables set to zero) plus a basis of the homogeneous nullspace.
struct LinearSolution {
  std::vector<RatFunc> particular;
  std::vector<std::vector<RatFunc>> nullspace;
};

/// Inconsistency certificate: a row combination y with y^T A = 0 but
/// y^T rhs = value != 0, scaled to polynomial entries.  `value` is the
/// obstruction the combination exhibits.
struct LinearWitness {
  std::vector<RatFunc> combination;
  RatFunc value;
};

using SolveOutcome = std::variant<LinearSolution, LinearWitness>;

/// Solves A x = rhs exactly over the rational-function field.
SolveOutcome solve_linear(const FieldMatrix& a, const std::vector<RatFunc>& rhs);

/// Solves A X = B column by column; returns one outcome per column of B.
std::vector<SolveOutcome> solve_columns(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace gograph

#endif  // GOGRAPH_LINALG_HPP
