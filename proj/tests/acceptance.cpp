// acceptance.cpp -- end-to-end acceptance run for the toolkit.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT
//
// Every check below compares library output against hand-entered reference
// data: bracket tables, extended system matrices, closed-form connecting
// maps, ranks, verdicts, and numeric margins.  One line is printed per
// criterion; the process exits zero only when all of them pass.

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gograph/catalog.hpp"
#include "gograph/geodesic.hpp"
#include "gograph/homogeneous.hpp"
#include "gograph/lie_algebra.hpp"
#include "gograph/linalg.hpp"
#include "gograph/metric.hpp"
#include "gograph/poly.hpp"
#include "gograph/ratfunc.hpp"

namespace gograph {
namespace {

struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure(message);
}

/// Small expression builder over a space's ring.
struct Sym {
  RingPtr ring;

  RatFunc operator()(const std::string& name) const {
    return RatFunc::variable(ring, name);
  }
  RatFunc num(long n, long d = 1) const {
    return RatFunc::constant(ring, Rational(n, d));
  }
};

// --------------------------------------------------------------------------
// Criterion 1: bracket tables.

struct BracketSpec {
  const char* left;
  const char* right;
  std::vector<std::pair<const char*, Rational>> value;
};

void check_bracket_table(const LieAlgebra& algebra,
                         const std::vector<BracketSpec>& specs,
                         const std::string& id) {
  const std::size_t n = algebra.dim();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[algebra.label(i)] = i;

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> expected;
  for (const BracketSpec& spec : specs) {
    std::vector<Rational> coords(n, Rational(0));
    for (const auto& [label, weight] : spec.value)
      coords.at(index.at(label)) = weight;
    expected[{index.at(spec.left), index.at(spec.right)}] = coords;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> want(n, Rational(0));
      if (auto it = expected.find({i, j}); it != expected.end())
        want = it->second;
      require(algebra.bracket_basis(i, j) == want,
              id + ": [" + algebra.label(i) + ", " + algebra.label(j) +
                  "] differs from the reference table");
    }
  }
}

void criterion_brackets() {
  const Rational one(1), two(2), half3(3, 2);
  check_bracket_table(
      catalog_load("s5-su3").space.algebra(),
      {
          {"H1", "H2", {{"H3", -two}}},
          {"H1", "H3", {{"H2", two}}},
          {"H2", "H3", {{"H1", -two}}},
          {"H1", "X1", {{"X2", one}}},
          {"H1", "X2", {{"X1", -one}}},
          {"H1", "Y1", {{"Y2", -one}}},
          {"H1", "Y2", {{"Y1", one}}},
          {"H2", "X1", {{"Y2", one}}},
          {"H2", "X2", {{"Y1", -one}}},
          {"H2", "Y1", {{"X2", one}}},
          {"H2", "Y2", {{"X1", -one}}},
          {"H3", "X1", {{"Y1", -one}}},
          {"H3", "X2", {{"Y2", -one}}},
          {"H3", "Y1", {{"X1", one}}},
          {"H3", "Y2", {{"X2", one}}},
          {"X1", "X2", {{"H1", one}, {"Z", -two}}},
          {"X1", "Y1", {{"H3", -one}}},
          {"X1", "Y2", {{"H2", one}}},
          {"X2", "Y1", {{"H2", -one}}},
          {"X2", "Y2", {{"H3", -one}}},
          {"Y1", "Y2", {{"H1", -one}, {"Z", -two}}},
          {"X1", "Z", {{"X2", half3}}},
          {"X2", "Z", {{"X1", -half3}}},
          {"Y1", "Z", {{"Y2", half3}}},
          {"Y2", "Z", {{"Y1", -half3}}},
      },
      "s5-su3");

  check_bracket_table(
      catalog_load("s7-sp2").space.algebra(),
      {
          {"H1", "H2", {{"H3", two}}},
          {"H1", "H3", {{"H2", -two}}},
          {"H2", "H3", {{"H1", two}}},
          {"H1", "X1", {{"X2", one}}},
          {"H1", "X2", {{"X1", -one}}},
          {"H1", "X3", {{"X4", one}}},
          {"H1", "X4", {{"X3", -one}}},
          {"H2", "X1", {{"X3", one}}},
          {"H2", "X2", {{"X4", -one}}},
          {"H2", "X3", {{"X1", -one}}},
          {"H2", "X4", {{"X2", one}}},
          {"H3", "X1", {{"X4", one}}},
          {"H3", "X2", {{"X3", one}}},
          {"H3", "X3", {{"X2", -one}}},
          {"H3", "X4", {{"X1", -one}}},
          {"X1", "X2", {{"H1", two}, {"Z1", -two}}},
          {"X1", "X3", {{"H2", two}, {"Z2", -two}}},
          {"X2", "X3", {{"H3", two}, {"Z3", two}}},
          {"X1", "X4", {{"H3", two}, {"Z3", -two}}},
          {"X2", "X4", {{"H2", -two}, {"Z2", -two}}},
          {"X3", "X4", {{"H1", two}, {"Z1", two}}},
          {"X1", "Z1", {{"X2", one}}},
          {"X2", "Z1", {{"X1", -one}}},
          {"X3", "Z1", {{"X4", -one}}},
          {"X4", "Z1", {{"X3", one}}},
          {"X1", "Z2", {{"X3", one}}},
          {"X2", "Z2", {{"X4", one}}},
          {"X3", "Z2", {{"X1", -one}}},
          {"X4", "Z2", {{"X2", -one}}},
          {"X1", "Z3", {{"X4", one}}},
          {"X2", "Z3", {{"X3", -one}}},
          {"X3", "Z3", {{"X2", one}}},
          {"X4", "Z3", {{"X1", -one}}},
          {"Z1", "Z2", {{"Z3", two}}},
          {"Z1", "Z3", {{"Z2", -two}}},
          {"Z2", "Z3", {{"Z1", two}}},
      },
      "s7-sp2");
}

// --------------------------------------------------------------------------
// Criterion 2: extended system matrices, compared by row space.

struct SystemRow {
  std::vector<RatFunc> a;
  RatFunc b;
  RatFunc c;
};

FieldMatrix stack_rows(const RingPtr& ring, const std::vector<SystemRow>& rows,
                       bool with_form) {
  const std::size_t h = rows.front().a.size();
  FieldMatrix out(ring, rows.size(), h + 1 + (with_form ? 1 : 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t col = 0; col < h; ++col) out.at(r, col) = rows[r].a[col];
    out.at(r, h) = rows[r].b;
    if (with_form) out.at(r, h + 1) = rows[r].c;
  }
  return out;
}

FieldMatrix stack_system(const GeodesicSystem& system) {
  const bool with_form = system.mode == GraphMode::Finsler;
  const RingPtr& ring = system.a.ring();
  FieldMatrix out(ring, system.a.rows(),
                  system.a.cols() + 1 + (with_form ? 1 : 0));
  for (std::size_t r = 0; r < system.a.rows(); ++r) {
    for (std::size_t col = 0; col < system.a.cols(); ++col)
      out.at(r, col) = system.a.at(r, col);
    out.at(r, system.a.cols()) = system.b.at(r);
    if (with_form) out.at(r, system.a.cols() + 1) = system.c.at(r);
  }
  return out;
}

void compare_row_spaces(const CatalogSpace& entry,
                        const std::vector<SystemRow>& rows, bool has_form) {
  const RingPtr ring = entry.space.ring();
  if (has_form) {
    const GeodesicSystem finsler =
        build_system(entry.space, entry.gram, entry.one_form,
                     GraphMode::Finsler);
    require(rref(stack_system(finsler)).reduced ==
                rref(stack_rows(ring, rows, true)).reduced,
            entry.id + ": one-form-mode system spans a different row space");
  }
  std::vector<SystemRow> riemannian = rows;
  const GeodesicSystem quad =
      build_system(entry.space, entry.gram, {}, GraphMode::Riemannian);
  require(rref(stack_system(quad)).reduced ==
              rref(stack_rows(ring, riemannian, false)).reduced,
          entry.id + ": quadratic-mode system spans a different row space");
}

std::vector<SystemRow> five_sphere_rows(const Sym& S, bool with_h0) {
  const RatFunc q = S("z") * (S.num(3, 2) - S.num(2) * S("c"));
  const RatFunc r = S.num(2) * S("c") * S("zeta") * S("v");
  const RatFunc o = S.num(0);
  std::vector<SystemRow> rows = {
      {{S("x2"), S("x4"), -S("x3")}, S("x2") * q, -S("x2") * r},
      {{-S("x1"), -S("x3"), -S("x4")}, -S("x1") * q, S("x1") * r},
      {{-S("x4"), S("x2"), S("x1")}, S("x4") * q, -S("x4") * r},
      {{S("x3"), -S("x1"), S("x2")}, -S("x3") * q, S("x3") * r},
      {{o, o, o}, o, o},
  };
  if (with_h0) {
    const std::vector<RatFunc> extra = {S("x2"), -S("x1"), S("x4"), -S("x3"),
                                        o};
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2)
      rows[r2].a.insert(rows[r2].a.begin(), extra[r2]);
  }
  return rows;
}

void criterion_systems() {
  {
    const CatalogSpace entry = catalog_load("s5-su3");
    compare_row_spaces(entry, five_sphere_rows(Sym{entry.space.ring()}, false),
                       true);
  }
  {
    const CatalogSpace entry = catalog_load("s5-u3");
    compare_row_spaces(entry, five_sphere_rows(Sym{entry.space.ring()}, true),
                       true);
  }
  {
    const CatalogSpace entry = catalog_load("s7-sp2");
    const Sym S{entry.space.ring()};
    const RatFunc k1 = S.num(1) - S.num(2) * S("c1");
    const RatFunc k2 = S.num(1) - S.num(2) * S("c2");
    const RatFunc k3 = S.num(1) - S.num(2) * S("c3");
    const RatFunc t = S.num(2) * S("zeta");
    const RatFunc o = S.num(0);
    const std::vector<SystemRow> rows = {
        {{S("x2"), S("x3"), S("x4")},
         k1 * S("z1") * S("x2") + k2 * S("z2") * S("x3") +
             k3 * S("z3") * S("x4"),
         -t * (S("c1") * S("v1") * S("x2") + S("c2") * S("v2") * S("x3") +
               S("c3") * S("v3") * S("x4"))},
        {{-S("x1"), -S("x4"), S("x3")},
         -k1 * S("z1") * S("x1") + k2 * S("z2") * S("x4") -
             k3 * S("z3") * S("x3"),
         t * (S("c1") * S("v1") * S("x1") - S("c2") * S("v2") * S("x4") +
              S("c3") * S("v3") * S("x3"))},
        {{S("x4"), -S("x1"), -S("x2")},
         -k1 * S("z1") * S("x4") - k2 * S("z2") * S("x1") +
             k3 * S("z3") * S("x2"),
         t * (S("c1") * S("v1") * S("x4") + S("c2") * S("v2") * S("x1") -
              S("c3") * S("v3") * S("x2"))},
        {{-S("x3"), S("x2"), -S("x1")},
         k1 * S("z1") * S("x3") - k2 * S("z2") * S("x2") -
             k3 * S("z3") * S("x1"),
         t * (-S("c1") * S("v1") * S("x3") + S("c2") * S("v2") * S("x2") +
              S("c3") * S("v3") * S("x1"))},
        {{o, o, o},
         S.num(2) * S("z2") * S("z3") * (S("c3") - S("c2")),
         t * (S("z2") * S("c3") * S("v3") - S("z3") * S("c2") * S("v2"))},
        {{o, o, o},
         S.num(2) * S("z1") * S("z3") * (S("c1") - S("c3")),
         t * (S("z3") * S("c1") * S("v1") - S("z1") * S("c3") * S("v3"))},
        {{o, o, o},
         S.num(2) * S("z1") * S("z2") * (S("c2") - S("c1")),
         t * (S("z1") * S("c2") * S("v2") - S("z2") * S("c1") * S("v1"))},
    };
    compare_row_spaces(entry, rows, true);
  }
  {
    const CatalogSpace entry = catalog_load("s7-sp2u1");
    const Sym S{entry.space.ring()};
    const RatFunc k1 = S.num(1) - S.num(2) * S("c1");
    const RatFunc k2 = S.num(1) - S.num(2) * S("c2");
    const RatFunc t = S.num(2) * S("zeta") * S("c1") * S("v");
    const RatFunc o = S.num(0);
    const std::vector<SystemRow> rows = {
        {{S("x2"), S("x3"), S("x4"), -S("x2")},
         k1 * S("z1") * S("x2") +
             k2 * (S("z2") * S("x3") + S("z3") * S("x4")),
         -t * S("x2")},
        {{-S("x1"), -S("x4"), S("x3"), S("x1")},
         -k1 * S("z1") * S("x1") +
             k2 * (S("z2") * S("x4") - S("z3") * S("x3")),
         t * S("x1")},
        {{S("x4"), -S("x1"), -S("x2"), S("x4")},
         -k1 * S("z1") * S("x4") +
             k2 * (-S("z2") * S("x1") + S("z3") * S("x2")),
         t * S("x4")},
        {{-S("x3"), S("x2"), -S("x1"), -S("x3")},
         k1 * S("z1") * S("x3") -
             k2 * (S("z2") * S("x2") + S("z3") * S("x1")),
         -t * S("x3")},
        {{o, o, o, o}, o, o},
        {{o, o, o, S.num(2) * S("z3") * S("c2")},
         S.num(2) * S("z1") * S("z3") * (S("c1") - S("c2")),
         t * S("z3")},
        {{o, o, o, -S.num(2) * S("z2") * S("c2")},
         S.num(2) * S("z1") * S("z2") * (S("c2") - S("c1")),
         -t * S("z2")},
    };
    compare_row_spaces(entry, rows, true);
  }
  {
    const CatalogSpace entry = catalog_load("s7-sp2sp1");
    const Sym S{entry.space.ring()};
    const RatFunc k = S.num(1) - S.num(2) * S("c");
    const RatFunc o = S.num(0);
    const RatFunc c2 = S.num(2) * S("c");
    const std::vector<SystemRow> rows = {
        {{S("x2"), S("x3"), S("x4"), -S("x2"), -S("x3"), -S("x4")},
         k * (S("z1") * S("x2") + S("z2") * S("x3") + S("z3") * S("x4")), o},
        {{-S("x1"), -S("x4"), S("x3"), S("x1"), -S("x4"), S("x3")},
         k * (-S("z1") * S("x1") + S("z2") * S("x4") - S("z3") * S("x3")), o},
        {{S("x4"), -S("x1"), -S("x2"), S("x4"), S("x1"), -S("x2")},
         k * (-S("z1") * S("x4") - S("z2") * S("x1") + S("z3") * S("x2")), o},
        {{-S("x3"), S("x2"), -S("x1"), -S("x3"), S("x2"), S("x1")},
         k * (S("z1") * S("x3") - S("z2") * S("x2") - S("z3") * S("x1")), o},
        {{o, o, o, o, -c2 * S("z3"), c2 * S("z2")}, o, o},
        {{o, o, o, c2 * S("z3"), o, -c2 * S("z1")}, o, o},
        {{o, o, o, -c2 * S("z2"), c2 * S("z1"), o}, o, o},
    };
    compare_row_spaces(entry, rows, false);
  }
}

// --------------------------------------------------------------------------
// Criterion 3: system ranks.

void criterion_ranks() {
  const CatalogSpace five = catalog_load("s5-su3");
  const GoVerdict v5 = check_go(
      build_system(five.space, five.gram, five.one_form, GraphMode::Finsler));
  require(v5.rank == 3, "s5-su3: system rank is not 3");

  const CatalogSpace seven = catalog_load("s7-sp2u1");
  const GoVerdict v7 = check_go(build_system(seven.space, seven.gram,
                                             seven.one_form,
                                             GraphMode::Finsler));
  require(v7.rank == 4, "s7-sp2u1: system rank is not 4");
}

// --------------------------------------------------------------------------
// Criterion 4: closed-form connecting maps.

void criterion_graphs() {
  // (a) the circle-extended five-sphere: linear in both modes.
  {
    const CatalogSpace entry = catalog_load("s5-u3");
    const Sym S{entry.space.ring()};
    const RatFunc o = S.num(0);
    const GeodesicGraphResult riemannian = solve_graph(
        build_system(entry.space, entry.gram, {}, GraphMode::Riemannian));
    require(riemannian.kind == GraphKind::Linear,
            "s5-u3: quadratic-mode graph is not linear");
    const std::vector<RatFunc> expected_r = {
        S("z") * (S.num(3, 2) - S.num(2) * S("c")), o, o, o};
    require(riemannian.components == expected_r,
            "s5-u3: quadratic-mode graph differs from z*(3/2 - 2c)*H0");

    // One-form mode on the reductive-realigned complement: the connecting
    // map collapses to the pure one-form correction -2*c*v*zeta*H0.
    FieldMatrix shift(entry.space.ring(), entry.space.h_dim(),
                      entry.space.m_dim());
    shift.at(0, 4) = S.num(3, 2) - S.num(2) * S("c");
    const Decomposition realigned = change_complement(entry.space, shift);
    require(!natural_reductivity_defect(realigned, entry.gram).has_value(),
            "s5-u3: realigned complement is not naturally reductive");
    const std::vector<Rational> central = {Rational(3, 2), Rational(0),
                                           Rational(0),    Rational(0),
                                           Rational(0),    Rational(0),
                                           Rational(0),    Rational(0),
                                           Rational(1)};
    const GeodesicGraphResult product =
        graph_via_pnr(realigned, entry.gram, central, S("v"));
    const RatFunc head = -S.num(2) * S("c") * S("v") * S("zeta");
    require(product.components == std::vector<RatFunc>{head, o, o, o},
            "s5-u3: one-form graph on the realigned complement differs from "
            "-2*c*v*zeta*H0");
    const std::size_t v_index = *entry.space.ring()->index_of("v");
    require(product.components[0].substitute_value(v_index, Rational(1)) ==
                -S.num(2) * S("c") * S("zeta"),
            "s5-u3: unit-coefficient graph differs from -2*c*zeta*H0");
  }

  // (b) the fully extended seven-sphere: linear with weight (2c - 1).
  {
    const CatalogSpace entry = catalog_load("s7-sp2sp1");
    const Sym S{entry.space.ring()};
    const RatFunc o = S.num(0);
    const GeodesicGraphResult graph = solve_graph(
        build_system(entry.space, entry.gram, {}, GraphMode::Riemannian));
    require(graph.kind == GraphKind::Linear,
            "s7-sp2sp1: graph is not linear");
    const RatFunc w = S.num(2) * S("c") - S.num(1);
    const std::vector<RatFunc> expected = {o,
                                           o,
                                           o,
                                           w * S("z1"),
                                           w * S("z2"),
                                           w * S("z3")};
    require(graph.components == expected,
            "s7-sp2sp1: graph differs from (2c-1)*(z1*W1 + z2*W2 + z3*W3)");
  }

  // (c) the circle-extended seven-sphere on the centered complement: the
  // rational connecting map with common denominator |x|^2.
  {
    const CatalogSpace entry = catalog_load("s7-sp2u1");
    const Sym S{entry.space.ring()};
    const std::vector<Rational> direction = {Rational(0), Rational(0),
                                             Rational(0), Rational(0),
                                             Rational(1), Rational(0),
                                             Rational(0)};
    const Decomposition centered =
        centered_complement(entry.space, direction);
    const GeodesicGraphResult graph = solve_graph(build_system(
        centered, entry.gram, entry.one_form, GraphMode::Finsler));
    require(graph.kind == GraphKind::Rational,
            "s7-sp2u1: centered one-form graph is not rational");

    const RatFunc x1 = S("x1"), x2 = S("x2"), x3 = S("x3"), x4 = S("x4");
    const RatFunc z2 = S("z2"), z3 = S("z3");
    const RatFunc w = S("z1") + S("zeta") * S("v");
    const RatFunc k1 = S("c1") / S("c2") - S.num(2) * S("c1");
    const RatFunc k2 = S.num(1) - S.num(2) * S("c2");
    const RatFunc n = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4;
    const RatFunc two = S.num(2);
    const std::vector<RatFunc> expected = {
        (k1 * (x1 * x1 + x2 * x2 - x3 * x3 - x4 * x4) * w +
         two * k2 * (x2 * x3 - x1 * x4) * z2 +
         two * k2 * (x1 * x3 + x2 * x4) * z3) /
            n,
        (two * k1 * (x2 * x3 + x1 * x4) * w +
         k2 * (x1 * x1 - x2 * x2 + x3 * x3 - x4 * x4) * z2 +
         two * k2 * (x3 * x4 - x1 * x2) * z3) /
            n,
        (two * k1 * (x2 * x4 - x1 * x3) * w +
         two * k2 * (x1 * x2 + x3 * x4) * z2 +
         k2 * (x1 * x1 - x2 * x2 - x3 * x3 + x4 * x4) * z3) /
            n,
        (S("c1") / S("c2")) * w,
    };
    require(graph.components == expected,
            "s7-sp2u1: centered one-form graph differs from the reference "
            "components over |x|^2");
  }
}

// --------------------------------------------------------------------------
// Criterion 5: degree pattern.

void criterion_degrees() {
  const CatalogSpace entry = catalog_load("s5-su3");
  require(Poly::variable(entry.space.ring(), "zeta").graded_degree() == 1,
          "the norm-ratio variable does not have graded degree 1");
  for (const GraphMode mode : {GraphMode::Riemannian, GraphMode::Finsler}) {
    const GeodesicGraphResult graph = solve_graph(build_system(
        entry.space, entry.gram,
        mode == GraphMode::Finsler ? entry.one_form : std::vector<RatFunc>{},
        mode));
    require(graph.denominator_degree == 2 &&
                graph.numerator_degree - 1 == graph.denominator_degree,
            "s5-su3: graph degrees are not numerator 3 over denominator 2");
  }
}

// --------------------------------------------------------------------------
// Criterion 6: positive and negative orbit verdicts.

GeodesicSystem map_entries(GeodesicSystem system,
                           const std::function<RatFunc(const RatFunc&)>& fn) {
  for (std::size_t r = 0; r < system.a.rows(); ++r)
    for (std::size_t col = 0; col < system.a.cols(); ++col)
      system.a.at(r, col) = fn(system.a.at(r, col));
  for (RatFunc& entry : system.b) entry = fn(entry);
  for (RatFunc& entry : system.c) entry = fn(entry);
  return system;
}

void criterion_verdicts() {
  const CatalogSpace entry = catalog_load("s7-sp2");
  const RingPtr ring = entry.space.ring();
  const std::size_t c2 = *ring->index_of("c2");
  const std::size_t c3 = *ring->index_of("c3");
  const Poly c1 = Poly::variable(ring, "c1");
  const auto equalize = [&](const RatFunc& f) {
    return f.substitute(c2, c1).substitute(c3, c1);
  };

  const GeodesicSystem quad =
      build_system(entry.space, entry.gram, {}, GraphMode::Riemannian);
  require(!check_go(quad).go,
          "s7-sp2: distinct fibre scales unexpectedly pass the orbit test");
  require(check_go(map_entries(quad, equalize)).go,
          "s7-sp2: equal fibre scales fail the orbit test");

  const GeodesicSystem form = map_entries(
      build_system(entry.space, entry.gram, entry.one_form, GraphMode::Finsler),
      equalize);
  require(!check_go(form).go,
          "s7-sp2: a symbolic one-form deformation passes the orbit test");
  const std::size_t v2 = *ring->index_of("v2");
  const std::size_t v3 = *ring->index_of("v3");
  const GeodesicSystem axis = map_entries(form, [&](const RatFunc& f) {
    return f.substitute_value(v2, Rational(0))
        .substitute_value(v3, Rational(0));
  });
  require(!check_go(axis).go,
          "s7-sp2: the axis one-form deformation passes the orbit test");
}

// --------------------------------------------------------------------------
// Criterion 7: invariant-vector dimensions.

void criterion_invariant_vectors() {
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"s5-su3", 1},   {"s5-u3", 1},   {"s7-sp2", 3},  {"s7-sp2u1", 1},
      {"s7-sp2sp1", 0}, {"cp2-su3", 0}, {"cp3-sp2", 0}, {"hp1-sp2", 0},
  };
  for (const auto& [id, dim] : expected) {
    const CatalogSpace entry = catalog_load(id);
    require(entry.space.invariant_vectors().size() == dim,
            std::string(id) + ": invariant-vector dimension is not " +
                std::to_string(dim));
  }
}

// --------------------------------------------------------------------------
// Criterion 8: algebra centers.

void criterion_centers() {
  const CatalogSpace circle = catalog_load("s5-u3");
  const LieAlgebra& u3 = circle.space.algebra();
  const std::vector<std::vector<Rational>> center = u3.center();
  require(center.size() == 1, "u(3): center dimension is not 1");
  std::vector<Rational> expected(u3.dim(), Rational(0));
  expected[0] = Rational(3, 2);  // H0 weight
  expected[8] = Rational(1);     // Z weight
  std::vector<Rational> scaled = center[0];
  require(!scaled[8].is_zero(), "u(3): central element has no Z component");
  for (Rational& coord : scaled) coord = coord / center[0][8];
  require(scaled == expected,
          "u(3): center is not spanned by 3/2*H0 + Z");

  for (const char* id : {"s5-su3", "s7-sp2", "s7-sp2sp1"}) {
    require(catalog_load(id).space.algebra().center().empty(),
            std::string(id) + ": algebra center is unexpectedly nontrivial");
  }
}

// --------------------------------------------------------------------------
// Criterion 9: seeded numeric verification with corrupted controls.

void criterion_numeric() {
  struct Case {
    const char* id;
    std::map<std::string, double> values;
  };
  const std::vector<Case> cases = {
      {"s5-su3", {{"c", 0.62}, {"v", 0.35}}},
      {"s5-u3", {{"c", 0.62}, {"v", 0.35}}},
      {"s7-sp2u1", {{"c1", 0.55}, {"c2", 0.4}, {"v", 0.3}}},
      {"s7-sp2sp1", {{"c", 0.45}}},
      {"cp2-su3", {{"a", 0.8}}},
      {"cp3-sp2", {{"a", 0.9}, {"c", 0.5}}},
      {"hp1-sp2", {{"a", 1.2}}},
  };
  for (const Case& item : cases) {
    const CatalogSpace entry = catalog_load(item.id);
    const bool has_form = !entry.one_form.empty();
    const GeodesicGraphResult graph = solve_graph(build_system(
        entry.space, entry.gram, entry.one_form,
        has_form ? GraphMode::Finsler : GraphMode::Riemannian));
    require(graph.kind != GraphKind::Unsolvable,
            std::string(item.id) + ": expected a solvable system");
    for (const std::string& name : PhiFamily::names()) {
      const PhiFamily family = PhiFamily::by_name(name);
      const NumericVerification good = verify_graph_numeric(
          entry.space, entry.gram, entry.one_form, family, graph.components,
          item.values);
      require(good.pass && good.max_scaled_residual < 1.0e-6,
              std::string(item.id) + " with the " + name +
                  " profile: residual " +
                  std::to_string(good.max_scaled_residual) +
                  " exceeds 1e-6");
      std::vector<RatFunc> corrupted = graph.components;
      corrupted[0] += RatFunc::variable(entry.space.ring(), "x1");
      const NumericVerification bad = verify_graph_numeric(
          entry.space, entry.gram, entry.one_form, family, corrupted,
          item.values);
      require(!bad.pass && bad.max_scaled_residual > 1.0e-3,
              std::string(item.id) + " with the " + name +
                  " profile: corrupted control stays below 1e-3");
    }
  }
}

// --------------------------------------------------------------------------
// Criterion 10: substitution route versus direct solve.

void criterion_substitution_route() {
  const CatalogSpace entry = catalog_load("s7-sp2u1");
  const Sym S{entry.space.ring()};
  const std::vector<Rational> direction = {Rational(0), Rational(0),
                                           Rational(0), Rational(0),
                                           Rational(1), Rational(0),
                                           Rational(0)};
  const Decomposition centered = centered_complement(entry.space, direction);
  const GeodesicGraphResult riemannian = solve_graph(
      build_system(centered, entry.gram, {}, GraphMode::Riemannian));
  const GeodesicGraphResult shifted =
      graph_via_t2(centered, entry.gram, direction, S("v"), riemannian);
  const GeodesicGraphResult direct = solve_graph(build_system(
      centered, entry.gram, entry.one_form, GraphMode::Finsler));
  require(shifted.components == direct.components,
          "s7-sp2u1: substitution route and direct solve disagree");

  const std::map<std::string, double> values = {
      {"c1", 0.55}, {"c2", 0.4}, {"v", 0.3}};
  for (const std::string& name : PhiFamily::names()) {
    const NumericVerification check = verify_graph_numeric(
        centered, entry.gram, entry.one_form, PhiFamily::by_name(name),
        shifted.components, values);
    require(check.pass,
            "s7-sp2u1: substituted graph fails numerically for the " + name +
                " profile");
  }
}

// --------------------------------------------------------------------------
// Criterion 11: admissibility margins.

void criterion_admissibility() {
  for (double b = 0.05; b < 1.0; b += 0.05) {
    const AdmissibilityReport report =
        admissibility_check(PhiFamily::randers(), b, 1001);
    require(report.pass && report.margin >= 1.0 - 1.0e-9,
            "randers profile at b = " + std::to_string(b) +
                ": margin drops below 1");
  }
  const AdmissibilityReport close =
      admissibility_check(PhiFamily::randers(), 0.999, 1001);
  require(close.pass && close.margin >= 1.0 - 1.0e-9 && close.min_phi > 0.0,
          "randers profile at b = 0.999: conditions fail");

  for (const double b : {0.5, 1.0, 2.0, 10.0}) {
    const AdmissibilityReport report =
        admissibility_check(PhiFamily::riemannian(), b, 1001);
    require(report.pass && report.margin == 1.0,
            "riemannian profile at b = " + std::to_string(b) +
                ": margin is not exactly 1");
  }
}

}  // namespace
}  // namespace gograph

int main() {
  using gograph::CheckFailure;
  struct Criterion {
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"bracket tables of s5-su3 and s7-sp2 match the hand-entered references",
       gograph::criterion_brackets},
      {"geodesic systems of all five sphere presentations span the "
       "hand-entered row spaces",
       gograph::criterion_systems},
      {"system ranks: s5-su3 has rank 3, s7-sp2u1 has rank 4",
       gograph::criterion_ranks},
      {"closed-form graphs: s5-u3 linear, s7-sp2sp1 linear, s7-sp2u1 "
       "rational over |x|^2",
       gograph::criterion_graphs},
      {"degree pattern on s5-su3: numerators 3, denominator 2, norm-ratio "
       "degree 1",
       gograph::criterion_degrees},
      {"orbit verdicts on s7-sp2: distinct scales fail, equal scales pass, "
       "one-form deformations fail",
       gograph::criterion_verdicts},
      {"invariant-vector dimensions across the catalog are 1,1,3,1,0,0,0,0",
       gograph::criterion_invariant_vectors},
      {"centers: u(3) is spanned by 3/2*H0 + Z; su(3), sp(2), and "
       "sp(2)+sp(1) are centerless",
       gograph::criterion_centers},
      {"numeric check: every solvable graph passes 50 seeded samples per "
       "norm profile, corrupted controls fail",
       gograph::criterion_numeric},
      {"substitution route matches the direct solve on the centered "
       "s7-sp2u1 complement for every profile",
       gograph::criterion_substitution_route},
      {"admissibility margins: randers stays at 1 for every b < 1, "
       "riemannian is exactly 1",
       gograph::criterion_admissibility},
  };

  std::size_t passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string failure;
    try {
      criteria[i].run();
    } catch (const std::exception& error) {
      failure = error.what();
    }
    std::ostringstream line;
    line << "[" << (i + 1 < 10 ? " " : "") << (i + 1) << "] "
         << (failure.empty() ? "PASS" : "FAIL") << "  " << criteria[i].name;
    if (!failure.empty()) line << ": " << failure;
    std::cout << line.str() << std::endl;
    if (failure.empty()) ++passed;
  }
  std::cout << "acceptance: " << passed << "/" << criteria.size()
            << " criteria pass\n";
  return passed == criteria.size() ? 0 : 1;
}
