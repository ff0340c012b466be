// linalg.cpp -- matrices and exact linear solving over rational functions.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "gograph/errors.hpp"

namespace gograph {

FieldMatrix::FieldMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : m_ring(std::move(ring)), m_rows(rows), m_cols(cols),
      m_data(rows * cols, RatFunc::zero(m_ring)) {}

FieldMatrix FieldMatrix::from_rows(RingPtr ring,
                                   const std::vector<std::vector<RatFunc>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  FieldMatrix result(std::move(ring), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw ShapeError("matrix rows have unequal lengths");
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].ring() && rows[i][j].ring() != result.m_ring) {
        throw RingMismatchError("matrix entry belongs to a different ring");
      }
      result.at(i, j) = rows[i][j];
    }
  }
  return result;
}

FieldMatrix FieldMatrix::identity(const RingPtr& ring, std::size_t n) {
  FieldMatrix result(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    result.at(i, i) = RatFunc::constant(ring, Rational(1));
  }
  return result;
}

RatFunc& FieldMatrix::at(std::size_t row, std::size_t col) {
  if (row >= m_rows || col >= m_cols) throw ShapeError("matrix index out of range");
  return m_data[row * m_cols + col];
}

const RatFunc& FieldMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= m_rows || col >= m_cols) throw ShapeError("matrix index out of range");
  return m_data[row * m_cols + col];
}

FieldMatrix FieldMatrix::augment(const FieldMatrix& right) const {
  if (right.m_rows != m_rows) {
    throw ShapeError("augment requires matching row counts");
  }
  FieldMatrix result(m_ring, m_rows, m_cols + right.m_cols);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t j = 0; j < m_cols; ++j) result.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.m_cols; ++j) {
      result.at(i, m_cols + j) = right.at(i, j);
    }
  }
  return result;
}

FieldMatrix FieldMatrix::column_slice(std::size_t first, std::size_t last) const {
  if (first > last || last > m_cols) throw ShapeError("invalid column slice");
  FieldMatrix result(m_ring, m_rows, last - first);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t j = first; j < last; ++j) {
      result.at(i, j - first) = at(i, j);
    }
  }
  return result;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix result(m_ring, m_cols, m_rows);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t j = 0; j < m_cols; ++j) result.at(j, i) = at(i, j);
  }
  return result;
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& rhs) {
  if (m_rows != rhs.m_rows || m_cols != rhs.m_cols) {
    throw ShapeError("matrix sum with mismatched shapes");
  }
  for (std::size_t i = 0; i < m_data.size(); ++i) m_data[i] += rhs.m_data[i];
  return *this;
}

FieldMatrix& FieldMatrix::operator-=(const FieldMatrix& rhs) {
  if (m_rows != rhs.m_rows || m_cols != rhs.m_cols) {
    throw ShapeError("matrix difference with mismatched shapes");
  }
  for (std::size_t i = 0; i < m_data.size(); ++i) m_data[i] -= rhs.m_data[i];
  return *this;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (m_cols != rhs.m_rows) {
    throw ShapeError("matrix product with mismatched shapes");
  }
  FieldMatrix result(m_ring, m_rows, rhs.m_cols);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t k = 0; k < m_cols; ++k) {
      const RatFunc& left = at(i, k);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.m_cols; ++j) {
        result.at(i, j) += left * rhs.at(k, j);
      }
    }
  }
  return result;
}

std::vector<RatFunc> FieldMatrix::apply(const std::vector<RatFunc>& vec) const {
  if (vec.size() != m_cols) {
    throw ShapeError("matrix-vector product with mismatched shapes");
  }
  std::vector<RatFunc> result(m_rows, RatFunc::zero(m_ring));
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t j = 0; j < m_cols; ++j) {
      if (!at(i, j).is_zero() && !vec[j].is_zero()) {
        result[i] += at(i, j) * vec[j];
      }
    }
  }
  return result;
}

bool operator==(const FieldMatrix& lhs, const FieldMatrix& rhs) {
  if (lhs.m_rows != rhs.m_rows || lhs.m_cols != rhs.m_cols) return false;
  return lhs.m_data == rhs.m_data;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(m_data.begin(), m_data.end(),
                     [](const RatFunc& e) { return e.is_zero(); });
}

std::string FieldMatrix::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < m_rows; ++i) {
    out << "[";
    for (std::size_t j = 0; j < m_cols; ++j) {
      if (j > 0) out << ", ";
      out << at(i, j).str();
    }
    out << "]";
    if (i + 1 < m_rows) out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

namespace {

struct EliminationResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// In-place reduced row echelon form, restricted to pivots in columns
// [0, pivot_limit); row operations act on all columns, so trailing columns
// can carry right-hand sides or a transformation-tracking identity block.
EliminationResult eliminate(FieldMatrix& work, std::size_t pivot_limit) {
  EliminationResult result;
  for (std::size_t col = 0; col < pivot_limit && result.rank < work.rows(); ++col) {
    std::optional<std::size_t> best;
    int best_degree = 0;
    for (std::size_t row = result.rank; row < work.rows(); ++row) {
      const RatFunc& entry = work.at(row, col);
      if (entry.is_zero()) continue;
      const int degree = entry.numerator().total_degree();
      if (!best || degree < best_degree) {
        best = row;
        best_degree = degree;
      }
    }
    if (!best) continue;
    if (*best != result.rank) {
      for (std::size_t j = 0; j < work.cols(); ++j) {
        std::swap(work.at(result.rank, j), work.at(*best, j));
      }
    }
    const RatFunc inv = work.at(result.rank, col).inverse();
    for (std::size_t j = 0; j < work.cols(); ++j) work.at(result.rank, j) *= inv;
    for (std::size_t row = 0; row < work.rows(); ++row) {
      if (row == result.rank) continue;
      const RatFunc factor = work.at(row, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < work.cols(); ++j) {
        work.at(row, j) -= factor * work.at(result.rank, j);
      }
    }
    result.pivot_columns.push_back(col);
    ++result.rank;
  }
  return result;
}

// Scales a row-combination vector to coprime polynomial entries.
std::vector<RatFunc> normalize_combination(const std::vector<RatFunc>& y) {
  Poly common_denominator;
  for (const RatFunc& entry : y) {
    if (entry.is_zero()) continue;
    const Poly& den = entry.denominator();
    if (common_denominator.is_zero()) {
      common_denominator = den;
    } else {
      const Poly g = gcd(common_denominator, den);
      common_denominator = *(common_denominator * den).try_divide(g);
    }
  }
  if (common_denominator.is_zero()) return y;
  std::vector<RatFunc> scaled;
  scaled.reserve(y.size());
  Poly numerator_gcd;
  for (const RatFunc& entry : y) {
    RatFunc value = entry * RatFunc(common_denominator);
    if (!value.is_zero()) numerator_gcd = gcd(numerator_gcd, value.numerator());
    scaled.push_back(std::move(value));
  }
  if (!numerator_gcd.is_zero() && !numerator_gcd.is_constant()) {
    const RatFunc divisor{numerator_gcd};
    for (RatFunc& value : scaled) value /= divisor;
  }
  return scaled;
}

}  // namespace

RrefResult rref(const FieldMatrix& matrix) {
  FieldMatrix work = matrix;
  const EliminationResult elim = eliminate(work, work.cols());
  return RrefResult{std::move(work), elim.rank, elim.pivot_columns};
}

std::vector<SolveOutcome> solve_columns(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) {
    throw ShapeError("solve requires matching row counts");
  }
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  FieldMatrix work = a.augment(b).augment(FieldMatrix::identity(a.ring(), a.rows()));
  const EliminationResult elim = eliminate(work, n);

  std::vector<SolveOutcome> outcomes;
  outcomes.reserve(k);
  for (std::size_t col = 0; col < k; ++col) {
    const std::size_t rhs_col = n + col;
    std::optional<std::size_t> bad_row;
    for (std::size_t row = elim.rank; row < work.rows(); ++row) {
      if (!work.at(row, rhs_col).is_zero()) {
        bad_row = row;
        break;
      }
    }
    if (bad_row) {
      std::vector<RatFunc> combination;
      combination.reserve(a.rows());
      for (std::size_t j = 0; j < a.rows(); ++j) {
        combination.push_back(work.at(*bad_row, n + k + j));
      }
      combination = normalize_combination(combination);
      RatFunc value;
      for (std::size_t j = 0; j < a.rows(); ++j) {
        value += combination[j] * b.at(j, col);
      }
      outcomes.emplace_back(LinearWitness{std::move(combination), std::move(value)});
      continue;
    }
    LinearSolution solution;
    solution.particular.assign(n, RatFunc::zero(a.ring()));
    for (std::size_t r = 0; r < elim.rank; ++r) {
      solution.particular[elim.pivot_columns[r]] = work.at(r, rhs_col);
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : elim.pivot_columns) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<RatFunc> basis(n, RatFunc::zero(a.ring()));
      basis[free_col] = RatFunc::constant(a.ring(), Rational(1));
      for (std::size_t r = 0; r < elim.rank; ++r) {
        basis[elim.pivot_columns[r]] = -work.at(r, free_col);
      }
      solution.nullspace.push_back(std::move(basis));
    }
    outcomes.emplace_back(std::move(solution));
  }
  return outcomes;
}

SolveOutcome solve_linear(const FieldMatrix& a, const std::vector<RatFunc>& rhs) {
  if (rhs.size() != a.rows()) {
    throw ShapeError("solve requires matching row counts");
  }
  FieldMatrix b(a.ring(), a.rows(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b.at(i, 0) = rhs[i];
  return solve_columns(a, b).front();
}

}  // namespace gograph
