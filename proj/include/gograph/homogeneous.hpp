// homogeneous.hpp -- reductive decompositions of homogeneous spaces.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_HOMOGENEOUS_HPP
#define GOGRAPH_HOMOGENEOUS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gograph/lie_algebra.hpp"
#include "gograph/linalg.hpp"

namespace gograph {

/// A decomposition g = h + m of a Lie algebra, with both summands given by
/// frames: matrices whose columns express the h- and m-basis vectors in the
/// algebra's coordinates.  Frame entries live in a polynomial ring, so a
/// complement may depend on metric parameters while the structure constants
/// of the algebra itself stay rational.
///
/// The ring's leading coordinate variables are identified with the m-frame
/// columns: coordinate i is the coefficient of the i-th m-basis vector.
class Decomposition {
public:
  /// Throws ShapeError on inconsistent shapes, NotComplementError when the
  /// combined frame fails to span, and DecompositionError when the ring has
  /// fewer coordinate variables than m has dimensions.
  Decomposition(LieAlgebra algebra, RingPtr ring, FieldMatrix h_frame,
                FieldMatrix m_frame, std::vector<std::string> h_labels,
                std::vector<std::string> m_labels);

  /// The decomposition whose h is spanned by the first h_dim basis vectors
  /// of the algebra and whose m is spanned by the rest.
  static Decomposition standard(LieAlgebra algebra, RingPtr ring,
                                std::size_t h_dim);

  const LieAlgebra& algebra() const { return m_algebra; }
  const RingPtr& ring() const { return m_ring; }
  std::size_t h_dim() const { return m_h_frame.cols(); }
  std::size_t m_dim() const { return m_m_frame.cols(); }
  const std::vector<std::string>& h_labels() const { return m_h_labels; }
  const std::vector<std::string>& m_labels() const { return m_m_labels; }
  const FieldMatrix& h_frame() const { return m_h_frame; }
  const FieldMatrix& m_frame() const { return m_m_frame; }
  /// Inverse of [h_frame | m_frame]: its rows give h- and then m-coordinates.
  const FieldMatrix& inverse_frame() const { return m_inverse; }

  /// Column vectors of the frames, in algebra coordinates.
  std::vector<RatFunc> h_column(std::size_t index) const;
  std::vector<RatFunc> m_column(std::size_t index) const;

  /// Splits an algebra vector into (h-frame, m-frame) coordinates.
  std::pair<std::vector<RatFunc>, std::vector<RatFunc>> split(
      const std::vector<RatFunc>& vector) const;
  /// The m-frame coordinates of an algebra vector (projection along h).
  std::vector<RatFunc> project_m(const std::vector<RatFunc>& vector) const;
  /// The h-frame coordinates of an algebra vector (projection along m).
  std::vector<RatFunc> project_h(const std::vector<RatFunc>& vector) const;

  /// Embeds m-frame coordinates as an algebra vector.
  std::vector<RatFunc> embed_m(const std::vector<RatFunc>& coords) const;
  /// Embeds h-frame coordinates as an algebra vector.
  std::vector<RatFunc> embed_h(const std::vector<RatFunc>& coords) const;

  /// The generic tangent vector: m-coordinates (x_1, ..., x_m) given by the
  /// ring's leading coordinate variables.
  std::vector<RatFunc> generic_m_coords() const;

  /// Whether h is a subalgebra and [h, m] stays in m; on failure returns a
  /// description of the first violation.
  std::optional<std::string> reductivity_defect() const;
  bool is_reductive() const { return !reductivity_defect().has_value(); }

  /// Matrix of ad(H_a) restricted to m in the m-frame (columns index m).
  FieldMatrix adjoint_on_m(std::size_t h_index) const;
  /// Matrix of X -> [v, X]_m on m for an arbitrary algebra vector v.
  FieldMatrix ad_on_m(const std::vector<RatFunc>& v) const;

  /// Basis of {V in m : [h, V] = 0}, as m-coordinate vectors.
  std::vector<std::vector<RatFunc>> invariant_vectors() const;

  /// Same algebra and h, with m-frame column `index` replaced by the given
  /// algebra vector (and optionally a new label).
  Decomposition with_m_column_replaced(
      std::size_t index, const std::vector<RatFunc>& column,
      const std::optional<std::string>& label = std::nullopt) const;

private:
  LieAlgebra m_algebra;
  RingPtr m_ring;
  FieldMatrix m_h_frame;
  FieldMatrix m_m_frame;
  std::vector<std::string> m_h_labels;
  std::vector<std::string> m_m_labels;
  FieldMatrix m_inverse;  // of [h_frame | m_frame]
};

/// Value of a bilinear form with Gram matrix `gram` on m-coordinate vectors.
RatFunc bilinear(const FieldMatrix& gram, const std::vector<RatFunc>& u,
                 const std::vector<RatFunc>& v);

/// Checks that `gram` is symmetric and invariant under the isotropy action
/// (every ad(H_a)|_m skew-symmetric for it); describes the first failure.
std::optional<std::string> metric_invariance_defect(const Decomposition& space,
                                                    const FieldMatrix& gram);

/// First m-basis triple (i, j, k) violating the natural-reductivity
/// identity  <[X_i,X_j]_m, X_k> + <X_j, [X_i,X_k]_m> = 0, if any.
std::optional<std::array<std::size_t, 3>> natural_reductivity_defect(
    const Decomposition& space, const FieldMatrix& gram);

/// Moves the complement by an equivariant linear map: the new m is spanned
/// by M_j + sum_i map(i, j) H_i.  `map` is h_dim x m_dim over the ring.
Decomposition change_complement(const Decomposition& space, const FieldMatrix& map);

/// Result of adjoining formal isotropy generators W_i = ad(V_i)|_m to the
/// algebra: the extended algebra and decomposition (same m, larger h), the
/// indices of the new generators in the extended h-frame, and the elements
/// Zbar_i = V_i - W_i together with their centrality in the extension.
struct IsotropyExtension {
  LieAlgebra extended;
  Decomposition space;
  std::vector<std::size_t> w_indices;
  std::vector<std::vector<Rational>> zbar;
  std::vector<bool> zbar_central;
};

/// Extends the isotropy of `space` by the operators ad(V_i)|_m for the given
/// m-coordinate directions.  Each V_i must be rational, isotropy-invariant,
/// and skew-symmetric for `gram`; products [W_i, W_j] must close in the span
/// of the isotropy operators and the W_k.  Throws DecompositionError,
/// NotInvariantError, or JacobiError when the construction degenerates.
IsotropyExtension extend_isotropy(const Decomposition& space,
                                  const FieldMatrix& gram,
                                  const std::vector<std::vector<Rational>>& directions,
                                  const std::vector<std::string>& labels);

}  // namespace gograph

#endif  // GOGRAPH_HOMOGENEOUS_HPP
