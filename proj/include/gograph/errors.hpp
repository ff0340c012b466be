// errors.hpp -- exception types shared by the gograph library.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_ERRORS_HPP
#define GOGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gograph {

/// Base class for all gograph errors.  Input and precondition failures are
/// reported through exceptions; expected mathematical verdicts (inconsistent
/// systems, non-g.o. spaces) are returned as values instead.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by an exact zero scalar, polynomial or rational function.
class DivisionByZeroError : public Error {
public:
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (rational strings, expressions, space files).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Two operands live in different polynomial rings.
class RingMismatchError : public Error {
public:
  explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// Matrix shapes are incompatible for the requested operation.
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// A commutator of basis matrices left the rational span of the basis.
class NotClosedError : public Error {
public:
  NotClosedError(std::size_t i, std::size_t j, const std::string& what)
      : Error(what), i(i), j(j) {}
  std::size_t i;
  std::size_t j;
};

/// The supplied matrices are linearly dependent and cannot form a basis.
class DependentBasisError : public Error {
public:
  explicit DependentBasisError(const std::string& what) : Error(what) {}
};

/// The Jacobi identity fails for a triple of basis indices.
class JacobiError : public Error {
public:
  JacobiError(std::size_t i, std::size_t j, std::size_t k, const std::string& what)
      : Error(what), i(i), j(j), k(k) {}
  std::size_t i;
  std::size_t j;
  std::size_t k;
};

/// A claimed reductive split violates [h,h] in h or [h,m] in m.
class NotReductiveError : public Error {
public:
  explicit NotReductiveError(const std::string& what) : Error(what) {}
};

/// A bilinear form is not invariant under the isotropy representation.
class NotInvariantError : public Error {
public:
  explicit NotInvariantError(const std::string& what) : Error(what) {}
};

/// A linear map fails the Ad(H)-equivariance required of complement shifts.
class NotEquivariantError : public Error {
public:
  explicit NotEquivariantError(const std::string& what) : Error(what) {}
};

/// A candidate complement fails to span a complement of the isotropy.
class NotComplementError : public Error {
public:
  explicit NotComplementError(const std::string& what) : Error(what) {}
};

/// A precondition on the decomposition for a derived-graph route fails
/// (missing center element, non-central one-form direction, and so on).
class DecompositionError : public Error {
public:
  explicit DecompositionError(const std::string& what) : Error(what) {}
};

/// A numeric routine left the admissible domain (degenerate zeta
/// denominator, norm bound violation, non-positive norm argument).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace gograph

#endif  // GOGRAPH_ERRORS_HPP
