// test_catalog.cpp -- tests for the built-in space catalog and space files.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gograph/errors.hpp"
#include "gograph/geodesic.hpp"

namespace gograph {
namespace {

const std::vector<std::string> kIds = {
    "s5-su3",    "s5-u3",   "s7-sp2",  "s7-sp2u1",
    "s7-sp2sp1", "cp2-su3", "cp3-sp2", "hp1-sp2"};

/// A plane rotation on the complement: e_from -> scale e_to,
/// e_to -> -scale e_from, zero elsewhere.
FieldMatrix plane_map(const RingPtr& ring, std::size_t dim, std::size_t from,
                      std::size_t to, const Rational& scale) {
  FieldMatrix result(ring, dim, dim);
  result.at(to, from) = RatFunc::constant(ring, scale);
  result.at(from, to) = RatFunc::constant(ring, -scale);
  return result;
}

/// Renames one ring parameter to another throughout a geodesic system.
GeodesicSystem rename_parameter(GeodesicSystem system, const std::string& from,
                                const std::string& to) {
  const RingPtr& ring = system.a.ring();
  const std::size_t source = *ring->index_of(from);
  const Poly target = Poly::variable(ring, *ring->index_of(to));
  for (std::size_t r = 0; r < system.a.rows(); ++r) {
    for (std::size_t c = 0; c < system.a.cols(); ++c) {
      system.a.at(r, c) = system.a.at(r, c).substitute(source, target);
    }
    system.b[r] = system.b[r].substitute(source, target);
    if (!system.c.empty()) {
      system.c[r] = system.c[r].substitute(source, target);
    }
  }
  return system;
}

/// Substitutes 2 * variable for every coordinate and the norm-ratio
/// variable, leaving parameters alone.
RatFunc double_arguments(const RatFunc& f) {
  const RingPtr& ring = f.ring();
  RatFunc result = f;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (ring->kind(i) == VarKind::Parameter) continue;
    const Poly doubled =
        Poly::constant(ring, Rational(2)) * Poly::variable(ring, i);
    result = result.substitute(i, doubled);
  }
  return result;
}

/// exp(t ad_h) applied to a full-algebra vector by a truncated series.
std::vector<double> exp_adjoint(const LieAlgebra& algebra,
                                const std::vector<double>& h, double t,
                                std::vector<double> x) {
  std::vector<double> sum = x;
  for (int k = 1; k <= 30; ++k) {
    x = algebra.bracket(h, x);
    for (double& entry : x) entry *= t / k;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += x[i];
  }
  return sum;
}

/// Renders a parseable space-definition document for a catalog entry whose
/// Gram matrix uses only plain parameter and rational entries.
std::string definition_text(const CatalogSpace& entry) {
  const LieAlgebra& algebra = entry.space.algebra();
  std::ostringstream out;
  out << "name: " << entry.id << "-file\n";
  out << "h_dim: " << entry.space.h_dim() << "\n";
  out << "m_dim: " << entry.space.m_dim() << "\n";
  out << "basis_labels:";
  for (const std::string& label : algebra.labels()) out << " " << label;
  out << "\n";
  if (!entry.parameter_constraints.empty()) {
    out << "params: ";
    for (std::size_t i = 0; i < entry.parameter_constraints.size(); ++i) {
      if (i > 0) out << ", ";
      out << entry.parameter_constraints[i];
    }
    out << "\n";
  }
  out << "structure_constants:\n";
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      const std::vector<Rational> value = algebra.bracket_basis(i, j);
      for (std::size_t k = 0; k < value.size(); ++k) {
        if (value[k].is_zero()) continue;
        out << "  [" << i << ", " << j << ", " << k << ", "
            << value[k].str() << "]\n";
      }
    }
  }
  out << "metric:\n";
  for (std::size_t r = 0; r < entry.gram.rows(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < entry.gram.cols(); ++c) {
      out << " " << entry.gram.at(r, c).str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("the listing is stable and every entry loads") {
  const std::vector<CatalogEntryInfo> listing = catalog_list();
  REQUIRE(listing.size() == kIds.size());
  const std::vector<std::string> groups = {"SU(3)", "U(3)",  "Sp(2)", "Sp(2)",
                                           "Sp(2)", "SU(3)", "Sp(2)", "Sp(2)"};
  for (std::size_t i = 0; i < listing.size(); ++i) {
    CAPTURE(kIds[i]);
    CHECK(listing[i].id == kIds[i]);
    CHECK(listing[i].description.find(groups[i]) != std::string::npos);
    const CatalogSpace entry = catalog_load(kIds[i]);
    CHECK(entry.id == kIds[i]);
    CHECK(entry.description == listing[i].description);
    CHECK(!entry.construction.empty());
  }
  CHECK_THROWS_AS(catalog_load("s9-spin7"), ParseError);
}

TEST_CASE("every entry is a reductive space with an invariant metric") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> dims = {
      {"s5-su3", {3, 5}},    {"s5-u3", {4, 5}},   {"s7-sp2", {3, 7}},
      {"s7-sp2u1", {4, 7}},  {"s7-sp2sp1", {6, 7}}, {"cp2-su3", {4, 4}},
      {"cp3-sp2", {4, 6}},   {"hp1-sp2", {6, 4}}};
  for (const std::string& id : kIds) {
    CAPTURE(id);
    const CatalogSpace entry = catalog_load(id);
    CHECK(entry.space.h_dim() == dims.at(id).first);
    CHECK(entry.space.m_dim() == dims.at(id).second);
    CHECK(!entry.space.algebra().jacobi_violation().has_value());
    CHECK(entry.space.is_reductive());
    CHECK(!metric_invariance_defect(entry.space, entry.gram).has_value());
    if (!entry.one_form.empty()) {
      // The one-form direction must be fixed by every isotropy generator.
      for (std::size_t a = 0; a < entry.space.h_dim(); ++a) {
        const FieldMatrix action = entry.space.adjoint_on_m(a);
        for (std::size_t r = 0; r < action.rows(); ++r) {
          RatFunc moved = RatFunc::zero(entry.space.ring());
          for (std::size_t c = 0; c < action.cols(); ++c) {
            moved = moved + action.at(r, c) * entry.one_form[c];
          }
          CHECK(moved.is_zero());
        }
      }
    }
  }
}

TEST_CASE("stored fixture text reproduces exactly from the construction") {
  for (const std::string& id : kIds) {
    CAPTURE(id);
    const CatalogSpace entry = catalog_load(id);
    const CatalogFixtures fresh = recompute_fixtures(entry);
    CHECK(fresh.bracket_table == entry.fixtures.bracket_table);
    CHECK(fresh.adjoint_operators == entry.fixtures.adjoint_operators);
    CHECK(fresh.riemannian_system == entry.fixtures.riemannian_system);
    CHECK(fresh.finsler_system == entry.fixtures.finsler_system);
    CHECK(fresh.riemannian_graph == entry.fixtures.riemannian_graph);
    CHECK(fresh.finsler_graph == entry.fixtures.finsler_graph);
    CHECK(!entry.fixtures.bracket_table.empty());
    CHECK(!entry.fixtures.riemannian_graph.empty());
    CHECK(entry.fixtures.finsler_graph.empty() == entry.one_form.empty());
  }
}

TEST_CASE("invariant directions have the documented dimensions") {
  const std::map<std::string, std::size_t> expected = {
      {"s5-su3", 1},    {"s5-u3", 1},   {"s7-sp2", 3}, {"s7-sp2u1", 1},
      {"s7-sp2sp1", 0}, {"cp2-su3", 0}, {"cp3-sp2", 0}, {"hp1-sp2", 0}};
  for (const std::string& id : kIds) {
    CAPTURE(id);
    const CatalogSpace entry = catalog_load(id);
    const std::vector<std::vector<RatFunc>> fixed =
        entry.space.invariant_vectors();
    CHECK(fixed.size() == expected.at(id));
    CHECK(entry.one_form.empty() == (expected.at(id) == 0));
    // Invariant directions of the sphere entries lie in the fibre block:
    // the first four complement coordinates always move under isotropy.
    for (const std::vector<RatFunc>& vector : fixed) {
      for (std::size_t i = 0; i < 4 && i < vector.size(); ++i) {
        CHECK(vector[i].is_zero());
      }
    }
  }
}

TEST_CASE("centers locate the elements behind the product routes") {
  SUBCASE("the circle-extended five-sphere group has a one-line center") {
    const CatalogSpace entry = catalog_load("s5-u3");
    const std::vector<std::vector<Rational>> center =
        entry.space.algebra().center();
    REQUIRE(center.size() == 1);
    // Basis order is H0, H1, H2, H3, X1, X2, Y1, Y2, Z; the center is the
    // ray through Z + 3/2 H0.
    const std::vector<Rational>& element = center[0];
    REQUIRE(element.size() == 9);
    CHECK(!element[8].is_zero());
    CHECK(element[0] == Rational(3, 2) * element[8]);
    for (std::size_t i = 1; i < 8; ++i) CHECK(element[i].is_zero());
  }
  SUBCASE("the extended seven-sphere algebra centralises Z1 - W1") {
    const CatalogSpace entry = catalog_load("s7-sp2u1");
    const LieAlgebra& algebra = entry.space.algebra();
    REQUIRE(algebra.dim() == 11);
    const std::vector<std::vector<Rational>> center = algebra.center();
    REQUIRE(center.size() == 1);
    // Basis order is H1, H2, H3, W1, X1..X4, Z1, Z2, Z3 with h first; find
    // the Z1 and W1 slots by label to stay robust.
    std::size_t z1 = algebra.dim(), w1 = algebra.dim();
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
      if (algebra.label(i) == "Z1") z1 = i;
      if (algebra.label(i) == "W1") w1 = i;
    }
    REQUIRE(z1 < algebra.dim());
    REQUIRE(w1 < algebra.dim());
    const std::vector<Rational>& element = center[0];
    CHECK(!element[z1].is_zero());
    CHECK(element[w1] == -element[z1]);
    for (std::size_t i = 0; i < element.size(); ++i) {
      if (i == z1 || i == w1) continue;
      CHECK(element[i].is_zero());
    }
  }
  SUBCASE("the simple presenting groups are centerless") {
    for (const std::string& id : {"s5-su3", "s7-sp2", "s7-sp2sp1"}) {
      CAPTURE(id);
      CHECK(catalog_load(id).space.algebra().center().empty());
    }
  }
}

TEST_CASE("adjoint operators act by the documented plane rotations") {
  const Rational one(1), half3(3, 2);
  SUBCASE("s5-su3") {
    const CatalogSpace entry = catalog_load("s5-su3");
    const RingPtr& ring = entry.space.ring();
    const std::size_t n = 5;
    CHECK(entry.space.adjoint_on_m(0) ==
          plane_map(ring, n, 0, 1, one) + plane_map(ring, n, 2, 3, -one));
    CHECK(entry.space.adjoint_on_m(1) ==
          plane_map(ring, n, 0, 3, one) + plane_map(ring, n, 1, 2, -one));
    CHECK(entry.space.adjoint_on_m(2) ==
          plane_map(ring, n, 0, 2, -one) + plane_map(ring, n, 1, 3, -one));
  }
  SUBCASE("s5-u3 adds the Hopf rotation H0") {
    const CatalogSpace entry = catalog_load("s5-u3");
    const RingPtr& ring = entry.space.ring();
    CHECK(entry.space.adjoint_on_m(0) ==
          plane_map(ring, 5, 0, 1, one) + plane_map(ring, 5, 2, 3, one));
  }
  SUBCASE("s7-sp2") {
    const CatalogSpace entry = catalog_load("s7-sp2");
    const RingPtr& ring = entry.space.ring();
    const std::size_t n = 7;
    CHECK(entry.space.adjoint_on_m(0) ==
          plane_map(ring, n, 0, 1, one) + plane_map(ring, n, 2, 3, one));
    CHECK(entry.space.adjoint_on_m(1) ==
          plane_map(ring, n, 0, 2, one) + plane_map(ring, n, 1, 3, -one));
    CHECK(entry.space.adjoint_on_m(2) ==
          plane_map(ring, n, 0, 3, one) + plane_map(ring, n, 1, 2, one));
  }
  SUBCASE("the adjoined generators rotate base and fibre together") {
    const CatalogSpace entry = catalog_load("s7-sp2sp1");
    const RingPtr& ring = entry.space.ring();
    const std::size_t n = 7;
    const FieldMatrix w1 = plane_map(ring, n, 0, 1, -one) +
                           plane_map(ring, n, 2, 3, one) +
                           plane_map(ring, n, 5, 6, Rational(2));
    const FieldMatrix w2 = plane_map(ring, n, 0, 2, -one) +
                           plane_map(ring, n, 1, 3, -one) +
                           plane_map(ring, n, 4, 6, Rational(-2));
    const FieldMatrix w3 = plane_map(ring, n, 0, 3, -one) +
                           plane_map(ring, n, 1, 2, one) +
                           plane_map(ring, n, 4, 5, Rational(2));
    CHECK(entry.space.adjoint_on_m(3) == w1);
    CHECK(entry.space.adjoint_on_m(4) == w2);
    CHECK(entry.space.adjoint_on_m(5) == w3);
    const CatalogSpace circle = catalog_load("s7-sp2u1");
    const RingPtr& circle_ring = circle.space.ring();
    CHECK(circle.space.adjoint_on_m(3) ==
          plane_map(circle_ring, n, 0, 1, -one) +
              plane_map(circle_ring, n, 2, 3, one) +
              plane_map(circle_ring, n, 5, 6, Rational(2)));
  }
  SUBCASE("projective-space stabiliser flows") {
    const CatalogSpace cp2 = catalog_load("cp2-su3");
    CHECK(cp2.space.adjoint_on_m(3) ==
          plane_map(cp2.space.ring(), 4, 0, 1, -half3) +
              plane_map(cp2.space.ring(), 4, 2, 3, -half3));
    const CatalogSpace cp3 = catalog_load("cp3-sp2");
    CHECK(cp3.space.adjoint_on_m(3) ==
          plane_map(cp3.space.ring(), 6, 0, 1, -one) +
              plane_map(cp3.space.ring(), 6, 2, 3, one) +
              plane_map(cp3.space.ring(), 6, 4, 5, Rational(2)));
    const CatalogSpace hp1 = catalog_load("hp1-sp2");
    const RingPtr& ring = hp1.space.ring();
    CHECK(hp1.space.adjoint_on_m(3) ==
          plane_map(ring, 4, 0, 1, -one) + plane_map(ring, 4, 2, 3, one));
    CHECK(hp1.space.adjoint_on_m(4) ==
          plane_map(ring, 4, 0, 2, -one) + plane_map(ring, 4, 1, 3, -one));
    CHECK(hp1.space.adjoint_on_m(5) ==
          plane_map(ring, 4, 0, 3, -one) + plane_map(ring, 4, 1, 2, one));
  }
}

TEST_CASE("solved graphs satisfy their systems identically") {
  const std::vector<std::pair<std::string, bool>> cases = {
      {"s5-su3", true},  {"s5-u3", true},   {"s7-sp2u1", true},
      {"s7-sp2sp1", false}, {"cp2-su3", false}, {"cp3-sp2", false},
      {"hp1-sp2", false}};
  for (const auto& [id, with_form] : cases) {
    CAPTURE(id);
    const CatalogSpace entry = catalog_load(id);
    const GeodesicSystem riemannian = build_system(
        entry.space, entry.gram, {}, GraphMode::Riemannian);
    const GeodesicGraphResult solved = solve_graph(riemannian);
    CHECK(solved.kind != GraphKind::Unsolvable);
    for (const RatFunc& residual :
         graph_residual(riemannian, solved.components)) {
      CHECK(residual.is_zero());
    }
    if (!with_form) continue;
    const GeodesicSystem finsler = build_system(
        entry.space, entry.gram, entry.one_form, GraphMode::Finsler);
    const GeodesicGraphResult finsler_graph = solve_graph(finsler);
    CHECK(finsler_graph.kind != GraphKind::Unsolvable);
    for (const RatFunc& residual :
         graph_residual(finsler, finsler_graph.components)) {
      CHECK(residual.is_zero());
    }
  }
}

TEST_CASE("the three-parameter seven-sphere is orbit-friendly only when "
          "round") {
  const CatalogSpace entry = catalog_load("s7-sp2");
  const GeodesicSystem riemannian =
      build_system(entry.space, entry.gram, {}, GraphMode::Riemannian);
  CHECK(!check_go(riemannian).go);
  CHECK(solve_graph(riemannian).kind == GraphKind::Unsolvable);

  // Equal fibre scales: the quadratic metric becomes orbit-friendly.
  const GeodesicSystem equal = rename_parameter(
      rename_parameter(riemannian, "c2", "c1"), "c3", "c1");
  const GoVerdict round = check_go(equal);
  CHECK(round.go);
  const GeodesicGraphResult graph = solve_graph(equal);
  CHECK(graph.kind != GraphKind::Unsolvable);
  for (const RatFunc& residual : graph_residual(equal, graph.components)) {
    CHECK(residual.is_zero());
  }

  // A generic invariant one-form breaks the property even at equal scales.
  const GeodesicSystem finsler = build_system(
      entry.space, entry.gram, entry.one_form, GraphMode::Finsler);
  const GeodesicSystem equal_finsler = rename_parameter(
      rename_parameter(finsler, "c2", "c1"), "c3", "c1");
  CHECK(!check_go(equal_finsler).go);
  CHECK(solve_graph(equal_finsler).kind == GraphKind::Unsolvable);
}

TEST_CASE("graph components scale linearly in the raw arguments") {
  for (const std::string& id : {"s5-su3", "s7-sp2u1", "s7-sp2sp1", "cp3-sp2"}) {
    CAPTURE(id);
    const CatalogSpace entry = catalog_load(id);
    const bool with_form = !entry.one_form.empty();
    const GeodesicSystem system = build_system(
        entry.space, entry.gram, with_form ? entry.one_form : std::vector<RatFunc>{},
        with_form ? GraphMode::Finsler : GraphMode::Riemannian);
    const GeodesicGraphResult graph = solve_graph(system);
    REQUIRE(graph.kind != GraphKind::Unsolvable);
    const RatFunc two =
        RatFunc::constant(entry.space.ring(), Rational(2));
    for (const RatFunc& component : graph.components) {
      CHECK(double_arguments(component) == two * component);
    }
  }
}

TEST_CASE("rotating the argument rotates the connecting map") {
  const CatalogSpace entry = catalog_load("s5-su3");
  const LieAlgebra& algebra = entry.space.algebra();
  const RingPtr& ring = entry.space.ring();
  const double t = 0.3;
  // Rotate by the isotropy generator H2 (algebra index 1): the isotropy
  // representation is nonabelian, so this genuinely mixes the solution.
  std::vector<double> generator(algebra.dim(), 0.0);
  generator[1] = 1.0;

  for (const GraphMode mode : {GraphMode::Riemannian, GraphMode::Finsler}) {
    CAPTURE(mode == GraphMode::Finsler);
    const GeodesicSystem system = build_system(
        entry.space, entry.gram,
        mode == GraphMode::Finsler ? entry.one_form : std::vector<RatFunc>{},
        mode);
    const GeodesicGraphResult graph = solve_graph(system);
    REQUIRE(graph.kind != GraphKind::Unsolvable);
    REQUIRE(graph.nullity == 0);

    // Ring layout: x1..x4, z, then c, v, zeta.
    const std::vector<double> sample = {0.7, -0.4, 1.1, 0.5, -0.9};
    std::vector<double> values(ring->size(), 0.0);
    for (std::size_t i = 0; i < 5; ++i) values[i] = sample[i];
    values[*ring->index_of("c")] = 0.7;
    values[*ring->index_of("v")] = 0.4;
    values[*ring->index_of("zeta")] = 0.83;

    // Rotate the argument inside the algebra (h block first, m block after).
    std::vector<double> embedded(algebra.dim(), 0.0);
    for (std::size_t i = 0; i < 5; ++i) embedded[3 + i] = sample[i];
    const std::vector<double> rotated =
        exp_adjoint(algebra, generator, t, embedded);
    std::vector<double> rotated_values = values;
    for (std::size_t i = 0; i < 5; ++i) rotated_values[i] = rotated[3 + i];
    // The rotation fixes the invariant direction, the quadratic form, and
    // the one-form, so the norm-ratio value is unchanged.

    std::vector<double> at_sample(3), at_rotated(3);
    for (std::size_t a = 0; a < 3; ++a) {
      at_sample[a] = graph.components[a].evaluate(values);
      at_rotated[a] = graph.components[a].evaluate(rotated_values);
    }
    std::vector<double> image(algebra.dim(), 0.0);
    for (std::size_t a = 0; a < 3; ++a) image[a] = at_sample[a];
    const std::vector<double> rotated_image =
        exp_adjoint(algebra, generator, t, image);
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(std::abs(at_rotated[a] - rotated_image[a]) < 1e-9);
    }
  }
}

TEST_CASE("definition documents round-trip a catalog construction") {
  const CatalogSpace entry = catalog_load("s5-su3");
  const std::string text = definition_text(entry);
  const CatalogSpace parsed = parse_space_definition(text, "round-trip");

  CHECK(parsed.id == "s5-su3-file");
  CHECK(parsed.space.algebra().bracket_table_text() ==
        entry.space.algebra().bracket_table_text());
  CHECK(parsed.space.h_dim() == 3);
  CHECK(parsed.space.m_dim() == 5);
  CHECK(parsed.parameter_constraints == entry.parameter_constraints);

  const GeodesicSystem system =
      build_system(parsed.space, parsed.gram, {}, GraphMode::Riemannian);
  const GoVerdict verdict = check_go(system);
  CHECK(verdict.go);
  CHECK(verdict.rank == 3);
  const GeodesicGraphResult graph = solve_graph(system);
  CHECK(graph.kind == GraphKind::Rational);
  CHECK(graph.numerator_degree == 3);
  CHECK(graph.denominator_degree == 2);
  CHECK(graph.nullity == 0);
  for (const RatFunc& residual : graph_residual(system, graph.components)) {
    CHECK(residual.is_zero());
  }
}

TEST_CASE("definition files load from disk and report read failures") {
  const CatalogSpace entry = catalog_load("cp2-su3");
  const std::string path = "gograph_space_test.txt";
  {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << definition_text(entry);
  }
  const CatalogSpace parsed = read_space_file(path);
  CHECK(parsed.space.algebra().bracket_table_text() ==
        entry.space.algebra().bracket_table_text());
  CHECK(parsed.description.find(path) != std::string::npos);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_space_file("no/such/definition.txt"), ParseError);
}

TEST_CASE("malformed definition documents are rejected with diagnostics") {
  const std::string base =
      "name: tiny\n"
      "h_dim: 1\n"
      "m_dim: 2\n"
      "basis_labels: A E1 E2\n"
      "params: c > 0\n"
      "structure_constants:\n"
      "  [0, 1, 2, 1]\n"
      "  [0, 2, 1, -1]\n"
      "  [1, 2, 0, 1]\n"
      "metric:\n"
      "  1 0\n"
      "  0 c\n";
  CHECK(parse_space_definition(base, "ok").space.m_dim() == 2);

  const auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS(parse_space_definition(text, "bad"), ParseError);
  };
  SUBCASE("missing required fields") {
    rejects("name: t\nh_dim: 1\nbasis_labels: A\n");
    rejects("h_dim: 1\nm_dim: 1\nbasis_labels: A X\nmetric:\n  1\n");
    // Trivial isotropy is legitimate: a group manifold parses fine.
    const CatalogSpace line = parse_space_definition(
        "name: line\nh_dim: 0\nm_dim: 1\nbasis_labels: X\nmetric:\n  1\n",
        "ok");
    CHECK(line.space.h_dim() == 0);
    CHECK(line.space.m_dim() == 1);
  }
  SUBCASE("duplicate and unknown lines") {
    rejects("name: t\n" + base);
    rejects(base + "mystery: 3\n");
    rejects(base + "free text\n");
  }
  SUBCASE("bad structure constants") {
    rejects(base + "structure_constants:\n");  // duplicate section
    const std::string stem =
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1 E2\n"
        "structure_constants:\n";
    const std::string metric = "metric:\n  1 0\n  0 1\n";
    rejects(stem + "  [0, 1, 2, 1//2]\n" + metric);
    rejects(stem + "  [1, 1, 2, 1]\n" + metric);
    rejects(stem + "  [1, 0, 2, 1]\n" + metric);
    rejects(stem + "  [0, 7, 2, 1]\n" + metric);
    rejects(stem + "  [0, 1, 2]\n" + metric);
    rejects(stem + "  0, 1, 2, 1\n" + metric);
  }
  SUBCASE("bad labels and parameters") {
    rejects(
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1\n"
        "metric:\n  1 0\n  0 1\n");
    rejects(
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1 E2\n"
        "params: 9bad\nmetric:\n  1 0\n  0 1\n");
    rejects(
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1 E2\n"
        "params: zeta\nmetric:\n  1 0\n  0 1\n");
    rejects(
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1 E2\n"
        "params: x1\nmetric:\n  1 0\n  0 1\n");
    rejects(
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1 E2\n"
        "params: c, c\nmetric:\n  1 0\n  0 1\n");
    rejects(
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1 E2\n"
        "params: c < 0\nmetric:\n  1 0\n  0 1\n");
  }
  SUBCASE("bad metrics") {
    const std::string stem =
        "name: t\nh_dim: 1\nm_dim: 2\nbasis_labels: A E1 E2\nparams: c\n";
    rejects(stem);                                  // missing metric
    rejects(stem + "metric:\n  1 0\n");             // wrong row count
    rejects(stem + "metric:\n  1 0 0\n  0 1 0\n");  // wrong entry count
    rejects(stem + "metric:\n  1 2\n  0 1\n");      // asymmetric
    rejects(stem + "metric:\n  1 0\n  0 b\n");      // undeclared parameter
    rejects(stem + "metric:\n  1 0\n  0 1*\n");     // empty factor
  }
}

}  // TEST_SUITE

}  // namespace gograph
