// lie_algebra.hpp -- finite-dimensional Lie algebras by structure constants.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_LIE_ALGEBRA_HPP
#define GOGRAPH_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gograph/quaternion.hpp"
#include "gograph/ratfunc.hpp"

namespace gograph {

/// Real Lie algebra presented by a labelled basis and exact rational
/// structure constants.  Brackets are stored sparsely for index pairs
/// i < j; the rest follow by antisymmetry.
class LieAlgebra {
public:
  /// Creates an abelian algebra over the given basis labels (unique,
  /// non-empty; throws ParseError otherwise).
  explicit LieAlgebra(std::vector<std::string> labels);

  std::size_t dim() const { return m_labels.size(); }
  const std::string& label(std::size_t index) const { return m_labels.at(index); }
  const std::vector<std::string>& labels() const { return m_labels; }

  /// Defines [e_i, e_j] for i < j as a sparse combination of basis vectors;
  /// replaces any previous value.  Throws ShapeError on bad indices.
  void set_bracket(std::size_t i, std::size_t j,
                   std::vector<std::pair<std::size_t, Rational>> value);

  /// Structure constant: the e_k coefficient of [e_i, e_j], any i, j.
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Dense coordinates of [e_i, e_j], any i, j.
  std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;

  /// Bracket of two coordinate vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  /// Bracket of two vectors with rational-function coordinates.
  std::vector<RatFunc> bracket(const std::vector<RatFunc>& x,
                               const std::vector<RatFunc>& y) const;
  /// Bracket of two vectors with floating-point coordinates.
  std::vector<double> bracket(const std::vector<double>& x,
                              const std::vector<double>& y) const;

  /// First basis triple violating the Jacobi identity, if any, together
  /// with the nonzero cyclic defect.
  struct JacobiViolation {
    std::size_t i, j, k;
    std::vector<Rational> defect;
  };
  std::optional<JacobiViolation> jacobi_violation() const;

  /// Basis of the center {x : [x, y] = 0 for all y}.
  std::vector<std::vector<Rational>> center() const;

  /// One line per nonzero basis bracket, pairs in index order:
  /// "[X1, X2] = H1 - 2*Z".
  std::string bracket_table_text() const;

private:
  std::vector<std::string> m_labels;
  std::map<std::pair<std::size_t, std::size_t>,
           std::vector<std::pair<std::size_t, Rational>>>
      m_brackets;
};

/// Formats a dense coefficient vector against labels: "H1 - 2*Z"; "0" when
/// every coefficient vanishes.
std::string format_linear_combination(const std::vector<Rational>& coefficients,
                                      const std::vector<std::string>& labels);

/// Computes the Lie algebra spanned by the given matrices: expresses every
/// pairwise commutator in the basis again.  Throws DependentBasisError when
/// the matrices are linearly dependent and NotClosedError (carrying the
/// offending pair) when a commutator leaves the rational span.
LieAlgebra bracket_table(const std::vector<QMatrix>& basis,
                         const std::vector<std::string>& labels);

}  // namespace gograph

#endif  // GOGRAPH_LIE_ALGEBRA_HPP
