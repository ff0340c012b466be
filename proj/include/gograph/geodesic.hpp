// geodesic.hpp -- geodesic graphs and the geodesic-orbit test.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_GEODESIC_HPP
#define GOGRAPH_GEODESIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gograph/homogeneous.hpp"
#include "gograph/linalg.hpp"
#include "gograph/metric.hpp"

namespace gograph {

/// Which norm drives the geodesic equations: the invariant quadratic form
/// alone, or the quadratic form deformed by an invariant one-form through a
/// norm profile (the norm-ratio variable "zeta" carries the profile's
/// contribution symbolically).
enum class GraphMode { Riemannian, Finsler };

/// The linear system  A(X) xi = B(X) + C(X)  whose solutions are the
/// connecting maps xi: every geodesic through the origin with initial
/// velocity X is the orbit of exp(t(X + xi(X))) exactly when xi solves it.
/// Rows are indexed by the m-basis, columns of `a` by the isotropy basis;
/// entries are linear in the coordinates, `b` is the quadratic-form part of
/// the right-hand side and `c` the one-form part (zero in Riemannian mode).
struct GeodesicSystem {
  FieldMatrix a;
  std::vector<RatFunc> b;
  std::vector<RatFunc> c;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  GraphMode mode = GraphMode::Riemannian;

  /// The full right-hand side b + c.
  std::vector<RatFunc> rhs() const;

  /// Rows "label: [a...] | b | c" for inspection.
  std::string str() const;
};

/// Builds the geodesic system of an invariant metric on a reductive space.
///
/// `gram` is the Gram matrix of the invariant quadratic form on the m-frame;
/// `one_form` gives the metric dual of the invariant one-form in m-frame
/// coordinates (empty or zero for a pure quadratic norm; must be empty or
/// zero in Riemannian mode).  The one-form direction must be fixed by the
/// isotropy, and its pairing with every bracket [E_a, U_j]_m must vanish
/// identically; both are verified symbolically.  Throws NotInvariantError
/// when a check fails, DomainError on a mode/ring mismatch.
GeodesicSystem build_system(const Decomposition& space, const FieldMatrix& gram,
                            const std::vector<RatFunc>& one_form,
                            GraphMode mode);

/// Shape of a solved connecting map: polynomial of degree at most one in the
/// coordinates and the norm-ratio variable (Linear), a genuine ratio of
/// polynomials (Rational), or no solution at all (Unsolvable).
enum class GraphKind { Linear, Rational, Unsolvable };

/// A connecting map xi(X) in isotropy coordinates, with its classification
/// and the degrees of its shared-denominator form: every component equals
/// a polynomial over one common monic denominator, and the reported degrees
/// are the largest numerator degree and the denominator degree (coordinate
/// and norm-ratio variables count, parameters do not).
struct GeodesicGraphResult {
  GraphMode mode = GraphMode::Riemannian;
  GraphKind kind = GraphKind::Unsolvable;
  std::vector<RatFunc> components;
  int numerator_degree = -1;
  int denominator_degree = -1;
  std::size_t nullity = 0;
  std::string witness_text;  ///< inconsistency certificate when Unsolvable

  std::string str() const;
};

/// Solves the geodesic system over the rational-function field.  When the
/// solution set is a coset of a nontrivial nullspace, the representative is
/// chosen by greedily zeroing whole components while the total degree of the
/// remaining numerators and denominators drops, preferring to zero
/// higher-index isotropy generators on ties.
GeodesicGraphResult solve_graph(const GeodesicSystem& system);

/// Outcome of the geodesic-orbit test: the system is solvable for generic X
/// exactly when augmenting the right-hand side does not raise the rank.
struct GoVerdict {
  bool go = false;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
  std::string witness_text;  ///< row combination exhibiting the obstruction

  std::string str() const;
};

GoVerdict check_go(const GeodesicSystem& system);

/// The residual A xi - (b + c) of a candidate connecting map; the candidate
/// solves the system exactly when every entry is identically zero.
std::vector<RatFunc> graph_residual(const GeodesicSystem& system,
                                    const std::vector<RatFunc>& components);

/// Replaces one m-frame column so that the given m-direction embeds as a
/// central element of the algebra.  Requires a central element projecting
/// onto the direction (DecompositionError otherwise); throws
/// NotReductiveError when the realigned complement stops being reductive.
Decomposition centered_complement(const Decomposition& space,
                                  const std::vector<Rational>& direction);

/// Derives the one-form connecting map from a quadratic-mode graph by the
/// tangent shift X -> X + zeta * coefficient * direction.  `space` must make
/// the direction central (use centered_complement), `riemannian_graph` must
/// be a solved quadratic-mode graph on that space, and `coefficient` must be
/// polynomial.  The substituted map is verified symbolically against the
/// one-form system, and against the directly solved graph whenever that one
/// is unique; mismatches throw DecompositionError.
GeodesicGraphResult graph_via_t2(const Decomposition& space,
                                 const FieldMatrix& gram,
                                 const std::vector<Rational>& direction,
                                 const RatFunc& coefficient,
                                 const GeodesicGraphResult& riemannian_graph);

/// Derives the one-form connecting map on a naturally reductive complement
/// from a central element C of the algebra: with the one-form along the
/// m-part of C, the map is  xi(X) = -zeta * coefficient * C_h.  Requires C
/// central with nonzero m-part and the complement naturally reductive; the
/// result is verified symbolically against the one-form system.
GeodesicGraphResult graph_via_pnr(const Decomposition& space,
                                  const FieldMatrix& gram,
                                  const std::vector<Rational>& central,
                                  const RatFunc& coefficient);

/// Outcome of the randomized numeric check of a connecting map.
struct NumericVerification {
  std::size_t samples = 0;
  double max_scaled_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  std::string str() const;
};

/// Checks a connecting map numerically: for seeded random tangent vectors X
/// the full velocity Y = X + xi(X) must satisfy  g_X(X, [Y, U]_m) = 0  for
/// every m-basis vector U, where g is the fundamental form of the norm
/// built from `gram`, `one_form`, and `family` at the given parameter
/// values.  Residuals are scaled by max(1, F(X)^2).  Throws DomainError when
/// a parameter value is missing or the evaluated quadratic form fails to be
/// positive on a sample.
NumericVerification verify_graph_numeric(
    const Decomposition& space, const FieldMatrix& gram,
    const std::vector<RatFunc>& one_form, const PhiFamily& family,
    const std::vector<RatFunc>& components,
    const std::map<std::string, double>& parameters, std::size_t samples = 50,
    std::uint64_t seed = 20240815, double tolerance = 1.0e-6);

}  // namespace gograph

#endif  // GOGRAPH_GEODESIC_HPP
