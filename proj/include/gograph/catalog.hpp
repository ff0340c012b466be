// catalog.hpp -- built-in homogeneous spaces and space-definition files.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_CATALOG_HPP
#define GOGRAPH_CATALOG_HPP

#include <string>
#include <vector>

#include "gograph/homogeneous.hpp"

namespace gograph {

/// Canonical-text regression fixtures attached to a catalog entry.  Each
/// non-empty field must reproduce exactly when recomputed from the entry's
/// construction; empty fields are simply not stored.
struct CatalogFixtures {
  /// Bracket table of the full algebra, one line per nonzero basis bracket.
  std::string bracket_table;
  /// The operators ad(H_a)|_m, one labelled matrix block per isotropy
  /// generator.
  std::string adjoint_operators;
  /// Geodesic system on the primary complement without a one-form.
  std::string riemannian_system;
  /// Geodesic system with the entry's invariant one-form ("" when the entry
  /// has none).
  std::string finsler_system;
  /// Solver output for the two systems above.
  std::string riemannian_graph;
  std::string finsler_graph;
};

/// A fully constructed catalog space: reductive decomposition, invariant
/// metric (entries may involve the ring's parameters), and the general
/// invariant one-form direction when one exists.
struct CatalogSpace {
  std::string id;
  /// One-line summary naming the presenting group.
  std::string description;
  /// Human-readable construction recipe (matrix basis, or base entry plus
  /// extension steps).
  std::string construction;
  Decomposition space;
  FieldMatrix gram;
  /// General isotropy-invariant direction in m-coordinates, written with the
  /// ring's coefficient parameters; empty when no nonzero invariant
  /// direction exists.
  std::vector<RatFunc> one_form;
  /// Ring parameters entering the metric (e.g. "c" or "c1", "c2") and the
  /// one-form coefficients (e.g. "v"); constraints such as "c > 0" are kept
  /// as display text.
  std::vector<std::string> metric_parameters;
  std::vector<std::string> form_parameters;
  std::vector<std::string> parameter_constraints;
  CatalogFixtures fixtures;
};

struct CatalogEntryInfo {
  std::string id;
  std::string description;
};

/// The built-in spaces, in stable order.
std::vector<CatalogEntryInfo> catalog_list();

/// Builds a built-in space by id; throws ParseError for unknown ids.
CatalogSpace catalog_load(const std::string& id);

/// Canonical text of every operator ad(H_a)|_m of the space: a labelled
/// matrix block per isotropy generator.
std::string adjoint_operator_text(const Decomposition& space);

/// Recomputes all fixture texts of an entry from its construction.  Fields
/// that the entry does not store come back non-empty here as well; equality
/// is only required where the entry stores text.
CatalogFixtures recompute_fixtures(const CatalogSpace& entry);

/// Parses a space-definition document.  The format is line-oriented:
///
///   name: berger-line
///   h_dim: 1
///   m_dim: 3
///   basis_labels: H X Y Z
///   params: c > 0
///   structure_constants:
///     [0, 1, 2, 1]
///     [0, 2, 1, -1]
///     ...
///   metric:
///     1 0 0
///     0 1 0
///     0 0 c
///
/// Basis indices refer to the full basis (h first, then m); each
/// structure-constant row [i, j, k, q] adds q * e_k to [e_i, e_j] and
/// requires i < j.  Metric entries are products of rational numbers and
/// declared parameter names joined by '*'.  The coordinate variables of the
/// resulting ring are named x1..x{m_dim}.  Throws ParseError on malformed
/// input; `origin` names the document in diagnostics.
CatalogSpace parse_space_definition(const std::string& text,
                                    const std::string& origin);

/// Reads and parses a space-definition file; throws ParseError when the
/// file cannot be read.
CatalogSpace read_space_file(const std::string& path);

}  // namespace gograph

#endif  // GOGRAPH_CATALOG_HPP
