// lie_algebra.cpp -- finite-dimensional Lie algebras by structure constants.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "gograph/errors.hpp"
#include "gograph/linalg.hpp"

namespace gograph {

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : m_labels(std::move(labels)) {
  for (std::size_t i = 0; i < m_labels.size(); ++i) {
    if (m_labels[i].empty()) throw ParseError("empty basis label");
    for (std::size_t j = i + 1; j < m_labels.size(); ++j) {
      if (m_labels[i] == m_labels[j]) {
        throw ParseError("duplicate basis label: '" + m_labels[i] + "'");
      }
    }
  }
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j,
                             std::vector<std::pair<std::size_t, Rational>> value) {
  if (i >= j || j >= dim()) {
    throw ShapeError("bracket indices must satisfy i < j < dim");
  }
  std::vector<std::pair<std::size_t, Rational>> cleaned;
  for (auto& [k, coeff] : value) {
    if (k >= dim()) throw ShapeError("bracket component index out of range");
    if (!coeff.is_zero()) cleaned.emplace_back(k, std::move(coeff));
  }
  std::sort(cleaned.begin(), cleaned.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t t = 1; t < cleaned.size(); ++t) {
    if (cleaned[t - 1].first == cleaned[t].first) {
      throw ShapeError("duplicate bracket component index");
    }
  }
  if (cleaned.empty()) {
    m_brackets.erase({i, j});
  } else {
    m_brackets[{i, j}] = std::move(cleaned);
  }
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j,
                                        std::size_t k) const {
  if (i >= dim() || j >= dim() || k >= dim()) {
    throw ShapeError("structure constant index out of range");
  }
  if (i == j) return Rational(0);
  const bool flipped = i > j;
  const auto it = m_brackets.find(flipped ? std::make_pair(j, i)
                                          : std::make_pair(i, j));
  if (it == m_brackets.end()) return Rational(0);
  for (const auto& [index, coeff] : it->second) {
    if (index == k) return flipped ? -coeff : coeff;
  }
  return Rational(0);
}

std::vector<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  std::vector<Rational> result(dim(), Rational(0));
  if (i == j) return result;
  const bool flipped = i > j;
  const auto it = m_brackets.find(flipped ? std::make_pair(j, i)
                                          : std::make_pair(i, j));
  if (it == m_brackets.end()) return result;
  for (const auto& [index, coeff] : it->second) {
    result[index] = flipped ? -coeff : coeff;
  }
  return result;
}

namespace {

template <typename Scalar>
std::vector<Scalar> bracket_impl(
    const std::map<std::pair<std::size_t, std::size_t>,
                   std::vector<std::pair<std::size_t, Rational>>>& table,
    std::size_t dim, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  if (x.size() != dim || y.size() != dim) {
    throw ShapeError("bracket operand length does not match dimension");
  }
  std::vector<Scalar> result(dim);
  for (const auto& [pair, combination] : table) {
    const auto& [i, j] = pair;
    const Scalar coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff.is_zero()) continue;
    for (const auto& [k, constant] : combination) {
      result[k] += coeff * constant;
    }
  }
  return result;
}

}  // namespace

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  return bracket_impl(m_brackets, dim(), x, y);
}

std::vector<RatFunc> LieAlgebra::bracket(const std::vector<RatFunc>& x,
                                         const std::vector<RatFunc>& y) const {
  return bracket_impl(m_brackets, dim(), x, y);
}

std::vector<double> LieAlgebra::bracket(const std::vector<double>& x,
                                        const std::vector<double>& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw ShapeError("bracket operand length does not match dimension");
  }
  std::vector<double> result(dim(), 0.0);
  for (const auto& [pair, combination] : m_brackets) {
    const auto& [i, j] = pair;
    const double coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff == 0.0) continue;
    for (const auto& [k, constant] : combination) {
      result[k] += coeff * constant.to_double();
    }
  }
  return result;
}

std::optional<LieAlgebra::JacobiViolation> LieAlgebra::jacobi_violation() const {
  const std::size_t n = dim();
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = Rational(1);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<Rational> defect =
            bracket(bracket(basis[i], basis[j]), basis[k]);
        const std::vector<Rational> second =
            bracket(bracket(basis[j], basis[k]), basis[i]);
        const std::vector<Rational> third =
            bracket(bracket(basis[k], basis[i]), basis[j]);
        bool nonzero = false;
        for (std::size_t t = 0; t < n; ++t) {
          defect[t] += second[t] + third[t];
          nonzero = nonzero || !defect[t].is_zero();
        }
        if (nonzero) {
          return JacobiViolation{i, j, k, std::move(defect)};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Rational>> LieAlgebra::center() const {
  const std::size_t n = dim();
  const RingPtr constants = PolyRing::create({}, {}, false);
  // Rows are indexed by pairs (j, k): the e_k component of [x, e_j] must
  // vanish; columns carry the coordinates of x.
  FieldMatrix system(constants, n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const Rational c = structure_constant(i, j, k);
        if (!c.is_zero()) {
          system.at(j * n + k, i) = RatFunc::constant(constants, c);
        }
      }
    }
  }
  const auto outcome =
      solve_linear(system, std::vector<RatFunc>(n * n, RatFunc::zero(constants)));
  const auto& solution = std::get<LinearSolution>(outcome);
  std::vector<std::vector<Rational>> result;
  result.reserve(solution.nullspace.size());
  for (const auto& basis : solution.nullspace) {
    std::vector<Rational> vec;
    vec.reserve(n);
    for (const RatFunc& entry : basis) vec.push_back(entry.constant_value());
    result.push_back(std::move(vec));
  }
  return result;
}

std::string format_linear_combination(const std::vector<Rational>& coefficients,
                                      const std::vector<std::string>& labels) {
  if (coefficients.size() != labels.size()) {
    throw ShapeError("combination length does not match label count");
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Rational& coeff = coefficients[i];
    if (coeff.is_zero()) continue;
    const bool negative = coeff.is_negative();
    const Rational magnitude = negative ? -coeff : coeff;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (magnitude.is_one()) {
      out << labels[i];
    } else {
      out << magnitude.str() << "*" << labels[i];
    }
  }
  if (first) return "0";
  return out.str();
}

std::string LieAlgebra::bracket_table_text() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [pair, combination] : m_brackets) {
    std::vector<Rational> dense(dim(), Rational(0));
    for (const auto& [k, coeff] : combination) dense[k] = coeff;
    if (!first) out << "\n";
    first = false;
    out << "[" << m_labels[pair.first] << ", " << m_labels[pair.second]
        << "] = " << format_linear_combination(dense, m_labels);
  }
  return out.str();
}

LieAlgebra bracket_table(const std::vector<QMatrix>& basis,
                         const std::vector<std::string>& labels) {
  if (basis.size() != labels.size()) {
    throw ShapeError("basis and label counts differ");
  }
  if (basis.empty()) return LieAlgebra({});
  const std::size_t n = basis.size();
  const std::size_t rows = basis.front().rows();
  const std::size_t cols = basis.front().cols();
  for (const QMatrix& m : basis) {
    if (m.rows() != rows || m.cols() != cols) {
      throw ShapeError("basis matrices have mismatched shapes");
    }
  }

  const RingPtr constants = PolyRing::create({}, {}, false);
  const std::size_t length = 4 * rows * cols;
  FieldMatrix span(constants, length, n);
  for (std::size_t index = 0; index < n; ++index) {
    const std::vector<Rational> flat = basis[index].realify();
    for (std::size_t r = 0; r < length; ++r) {
      span.at(r, index) = RatFunc::constant(constants, flat[r]);
    }
  }
  if (rref(span).rank < n) {
    throw DependentBasisError("matrices are linearly dependent over the rationals");
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  FieldMatrix rhs(constants, length, n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::vector<Rational> flat = commutator(basis[i], basis[j]).realify();
      for (std::size_t r = 0; r < length; ++r) {
        rhs.at(r, pairs.size()) = RatFunc::constant(constants, flat[r]);
      }
      pairs.emplace_back(i, j);
    }
  }

  LieAlgebra algebra(labels);
  const auto outcomes = solve_columns(span, rhs);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (std::holds_alternative<LinearWitness>(outcomes[p])) {
      const auto [i, j] = pairs[p];
      throw NotClosedError(i, j, "commutator of '" + labels[i] + "' and '" +
                                     labels[j] +
                                     "' is outside the rational span");
    }
    const auto& solution = std::get<LinearSolution>(outcomes[p]);
    std::vector<std::pair<std::size_t, Rational>> combination;
    for (std::size_t k = 0; k < n; ++k) {
      const Rational value = solution.particular[k].constant_value();
      if (!value.is_zero()) combination.emplace_back(k, value);
    }
    const auto [i, j] = pairs[p];
    algebra.set_bracket(i, j, std::move(combination));
  }
  return algebra;
}

}  // namespace gograph
