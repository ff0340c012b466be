// poly.hpp -- sparse multivariate polynomials over the rationals.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_POLY_HPP
#define GOGRAPH_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gograph/rational.hpp"

namespace gograph {

/// Role a ring variable plays in the geometry.  Coordinate variables and the
/// norm-ratio variable carry geometric degree; parameters (metric
/// coefficients, one-form lengths) are degree-free bookkeeping symbols.
enum class VarKind : std::uint8_t { Coordinate, Parameter, NormRatio };

/// Exponent vector of one monomial; entry i is the power of ring variable i.
using Monomial = std::vector<std::uint32_t>;

/// Graded-lexicographic comparison: lower total degree first, ties broken so
/// that earlier ring variables are more significant.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Shared descriptor of a polynomial ring: an ordered list of named
/// variables, each tagged with its kind.  Order is coordinates, then
/// parameters, then (optionally) the norm-ratio variable "zeta" last.
/// Rings are compared by identity: polynomials interoperate only when they
/// hold the same ring pointer.
class PolyRing {
public:
  /// Builds a ring with the given coordinate and parameter names, appending
  /// the distinguished variable "zeta" when with_norm_ratio is set.  Throws
  /// ParseError on duplicate or empty names.
  static std::shared_ptr<const PolyRing> create(
      const std::vector<std::string>& coordinates,
      const std::vector<std::string>& parameters, bool with_norm_ratio);

  std::size_t size() const { return m_names.size(); }
  const std::string& name(std::size_t index) const { return m_names.at(index); }
  VarKind kind(std::size_t index) const { return m_kinds.at(index); }

  /// Index of a variable by name, or nullopt when absent.
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Index of the norm-ratio variable; nullopt when the ring has none.
  std::optional<std::size_t> norm_ratio_index() const { return m_norm_ratio; }

private:
  PolyRing() = default;
  std::vector<std::string> m_names;
  std::vector<VarKind> m_kinds;
  std::optional<std::size_t> m_norm_ratio;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Sparse multivariate polynomial with Rational coefficients, stored as a
/// monomial -> coefficient map under graded-lexicographic order.  Zero
/// coefficients are never stored.
///
/// A default-constructed Poly is the ring-less zero; it combines with any
/// operand by adopting the operand's ring, which keeps accumulation loops
/// free of explicit ring plumbing.
class Poly {
public:
  Poly() = default;

  static Poly zero(const RingPtr& ring);
  static Poly constant(const RingPtr& ring, const Rational& value);
  static Poly variable(const RingPtr& ring, std::size_t index);
  /// Throws ParseError when the ring has no variable of that name.
  static Poly variable(const RingPtr& ring, const std::string& name);
  static Poly term(const RingPtr& ring, const Monomial& monomial,
                   const Rational& coefficient);

  const RingPtr& ring() const { return m_ring; }
  bool is_zero() const { return m_terms.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero included); throws Error otherwise.
  Rational constant_value() const;

  /// Total degree over all variables; -1 for the zero polynomial.
  int total_degree() const;
  /// Degree counting only coordinate and norm-ratio variables; -1 for zero.
  int graded_degree() const;
  /// Whether every term has the same graded degree (true for zero).
  bool is_homogeneous_graded() const;
  /// Degree in a single variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;

  /// Leading coefficient under graded-lexicographic order; zero for zero.
  Rational leading_coefficient() const;
  /// Leading monomial; throws Error for the zero polynomial.
  const Monomial& leading_monomial() const;

  /// Sum of all terms whose exponent of `var` equals `power`, with that
  /// exponent removed.
  Poly coefficient_of(std::size_t var, std::uint32_t power) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }

  Poly pow(std::uint32_t exponent) const;

  friend bool operator==(const Poly& lhs, const Poly& rhs);
  friend bool operator!=(const Poly& lhs, const Poly& rhs) {
    return !(lhs == rhs);
  }

  /// Exact quotient *this / divisor, or nullopt when the division leaves a
  /// remainder.  Throws DivisionByZeroError when divisor is zero.
  std::optional<Poly> try_divide(const Poly& divisor) const;

  /// Replaces a variable by a polynomial of the same ring.
  Poly substitute(std::size_t var, const Poly& replacement) const;
  /// Replaces a variable by a rational constant.
  Poly substitute_value(std::size_t var, const Rational& value) const;

  /// Full evaluation; `values` is indexed by ring variable.
  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;

  /// Canonical text: terms in descending graded-lexicographic order, e.g.
  /// "3/2*x2*z - 2*c".  The zero polynomial prints as "0".
  std::string str() const;

  const std::map<Monomial, Rational, MonomialLess>& terms() const {
    return m_terms;
  }

private:
  void insert_term(const Monomial& monomial, const Rational& coefficient);
  void require_ring() const;

  RingPtr m_ring;
  std::map<Monomial, Rational, MonomialLess> m_terms;
};

/// Resolves the common ring of two polynomials, letting the ring-less zero
/// adopt the other operand's ring; throws RingMismatchError on conflict.
RingPtr common_ring(const Poly& a, const Poly& b);

/// Greatest common divisor, unit-normalised: integer-primitive coefficients
/// with a positive leading coefficient.  gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

/// Scales a nonzero polynomial to integer-primitive coefficients with a
/// positive leading coefficient; returns zero unchanged.
Poly unit_normalize(const Poly& p);

}  // namespace gograph

#endif  // GOGRAPH_POLY_HPP
