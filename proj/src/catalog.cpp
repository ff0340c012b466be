// catalog.cpp -- built-in homogeneous spaces and space-definition files.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "gograph/errors.hpp"
#include "gograph/geodesic.hpp"

namespace gograph {

namespace {

#include "catalog_fixtures.inc"

// ---------------------------------------------------------------------------
// Matrix bases of the presenting algebras
// ---------------------------------------------------------------------------

/// Basis of su(3) as complex 3x3 matrices (quaternions with i-part only):
/// an su(2) block H1, H2, H3 in the upper-left corner, the transversal
/// directions X1, X2, Y1, Y2, and the traceless central direction Z.
std::vector<QMatrix> su3_basis() {
  const Rational one(1), minus(-1);
  QMatrix h1(3, 3);
  h1.at(0, 0) = Quaternion::i();
  h1.at(1, 1) = Quaternion::i(minus);
  QMatrix h2(3, 3);
  h2.at(0, 1) = Quaternion::i();
  h2.at(1, 0) = Quaternion::i();
  QMatrix h3(3, 3);
  h3.at(0, 1) = Quaternion::real(one);
  h3.at(1, 0) = Quaternion::real(minus);
  QMatrix x1(3, 3);
  x1.at(0, 2) = Quaternion::real(one);
  x1.at(2, 0) = Quaternion::real(minus);
  QMatrix x2(3, 3);
  x2.at(0, 2) = Quaternion::i();
  x2.at(2, 0) = Quaternion::i();
  QMatrix y1(3, 3);
  y1.at(1, 2) = Quaternion::real(one);
  y1.at(2, 1) = Quaternion::real(minus);
  QMatrix y2(3, 3);
  y2.at(1, 2) = Quaternion::i();
  y2.at(2, 1) = Quaternion::i();
  QMatrix z(3, 3);
  z.at(0, 0) = Quaternion::i(Rational(-1, 2));
  z.at(1, 1) = Quaternion::i(Rational(-1, 2));
  z.at(2, 2) = Quaternion::i();
  return {h1, h2, h3, x1, x2, y1, y2, z};
}

/// Basis of u(3): the central-in-the-isotropy direction H0 followed by the
/// su(3) basis.
std::vector<QMatrix> u3_basis() {
  QMatrix h0(3, 3);
  h0.at(0, 0) = Quaternion::i();
  h0.at(1, 1) = Quaternion::i();
  std::vector<QMatrix> basis = su3_basis();
  basis.insert(basis.begin(), h0);
  return basis;
}

/// Basis of sp(2) as quaternionic 2x2 matrices: an sp(1) block H1, H2, H3
/// in the upper-left corner, the transversal directions X1..X4, and the
/// lower-right sp(1) block Z1, Z2, Z3.
std::vector<QMatrix> sp2_basis() {
  const Rational one(1), minus(-1);
  QMatrix h1(2, 2);
  h1.at(0, 0) = Quaternion::i();
  QMatrix h2(2, 2);
  h2.at(0, 0) = Quaternion::j();
  QMatrix h3(2, 2);
  h3.at(0, 0) = Quaternion::k();
  QMatrix x1(2, 2);
  x1.at(0, 1) = Quaternion::real(one);
  x1.at(1, 0) = Quaternion::real(minus);
  QMatrix x2(2, 2);
  x2.at(0, 1) = Quaternion::i();
  x2.at(1, 0) = Quaternion::i();
  QMatrix x3(2, 2);
  x3.at(0, 1) = Quaternion::j();
  x3.at(1, 0) = Quaternion::j();
  QMatrix x4(2, 2);
  x4.at(0, 1) = Quaternion::k();
  x4.at(1, 0) = Quaternion::k();
  QMatrix z1(2, 2);
  z1.at(1, 1) = Quaternion::i();
  QMatrix z2(2, 2);
  z2.at(1, 1) = Quaternion::j();
  QMatrix z3(2, 2);
  z3.at(1, 1) = Quaternion::k();
  return {h1, h2, h3, x1, x2, x3, x4, z1, z2, z3};
}

/// Picks matrices by index, for presentations that order the same basis
/// differently.
std::vector<QMatrix> reorder(const std::vector<QMatrix>& basis,
                             const std::vector<std::size_t>& order) {
  std::vector<QMatrix> result;
  result.reserve(order.size());
  for (std::size_t index : order) result.push_back(basis.at(index));
  return result;
}

FieldMatrix diagonal_gram(const RingPtr& ring,
                          const std::vector<RatFunc>& entries) {
  FieldMatrix gram(ring, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) gram.at(i, i) = entries[i];
  return gram;
}

// ---------------------------------------------------------------------------
// Entry builders
// ---------------------------------------------------------------------------

const char* const kS5Su3Description =
    "the 5-sphere presented by SU(3) with isotropy SU(2); the metric scales "
    "the central direction Z by c";
const char* const kS5U3Description =
    "the 5-sphere presented by U(3) with isotropy U(2); same metric family "
    "as s5-su3, with an extra central isotropy generator H0";
const char* const kS7Sp2Description =
    "the 7-sphere presented by Sp(2) with isotropy Sp(1); the metric scales "
    "the directions Z1, Z2, Z3 by c1, c2, c3";
const char* const kS7Sp2U1Description =
    "the 7-sphere presented by Sp(2)*U(1) with isotropy Sp(1)*U(1); extends "
    "s7-sp2 by the operator of Z1, which forces c3 = c2";
const char* const kS7Sp2Sp1Description =
    "the 7-sphere presented by Sp(2)*Sp(1) with isotropy Sp(1)*Sp(1); "
    "extends s7-sp2 by the operators of Z1, Z2, Z3, which forces one scale c";
const char* const kCp2Su3Description =
    "the complex projective plane presented by SU(3) with isotropy U(2); "
    "the metric is a times the round form";
const char* const kCp3Sp2Description =
    "complex projective 3-space presented by Sp(2) with isotropy "
    "Sp(1)*U(1); the metric scales X-directions by a and Z2, Z3 by c";
const char* const kHp1Sp2Description =
    "the quaternionic projective line presented by Sp(2) with isotropy "
    "Sp(1)*Sp(1); the metric is a times the round form";

CatalogSpace build_s5_su3() {
  RingPtr ring =
      PolyRing::create({"x1", "x2", "x3", "x4", "z"}, {"c", "v"}, true);
  LieAlgebra algebra = bracket_table(
      su3_basis(), {"H1", "H2", "H3", "X1", "X2", "Y1", "Y2", "Z"});
  Decomposition space = Decomposition::standard(std::move(algebra), ring, 3);
  const RatFunc one = RatFunc::constant(ring, Rational(1));
  FieldMatrix gram = diagonal_gram(
      ring, {one, one, one, one, RatFunc::variable(ring, "c")});
  std::vector<RatFunc> form(5, RatFunc::zero(ring));
  form[4] = RatFunc::variable(ring, "v");
  return CatalogSpace{"s5-su3",
                      kS5Su3Description,
                      "3x3 complex matrix basis of su(3): isotropy H1, H2, "
                      "H3; complement X1, X2, Y1, Y2, Z; metric "
                      "diag(1, 1, 1, 1, c); invariant direction v*Z",
                      std::move(space),
                      std::move(gram),
                      std::move(form),
                      {"c"},
                      {"v"},
                      {"c > 0"},
                      kS5Su3Fixtures};
}

CatalogSpace build_s5_u3() {
  RingPtr ring =
      PolyRing::create({"x1", "x2", "x3", "x4", "z"}, {"c", "v"}, true);
  LieAlgebra algebra = bracket_table(
      u3_basis(), {"H0", "H1", "H2", "H3", "X1", "X2", "Y1", "Y2", "Z"});
  Decomposition space = Decomposition::standard(std::move(algebra), ring, 4);
  const RatFunc one = RatFunc::constant(ring, Rational(1));
  FieldMatrix gram = diagonal_gram(
      ring, {one, one, one, one, RatFunc::variable(ring, "c")});
  std::vector<RatFunc> form(5, RatFunc::zero(ring));
  form[4] = RatFunc::variable(ring, "v");
  return CatalogSpace{"s5-u3",
                      kS5U3Description,
                      "3x3 complex matrix basis of u(3): isotropy H0, H1, "
                      "H2, H3; complement X1, X2, Y1, Y2, Z; metric "
                      "diag(1, 1, 1, 1, c); invariant direction v*Z",
                      std::move(space),
                      std::move(gram),
                      std::move(form),
                      {"c"},
                      {"v"},
                      {"c > 0"},
                      kS5U3Fixtures};
}

const std::vector<std::string>& sp2_labels() {
  static const std::vector<std::string> labels = {
      "H1", "H2", "H3", "X1", "X2", "X3", "X4", "Z1", "Z2", "Z3"};
  return labels;
}

CatalogSpace build_s7_sp2() {
  RingPtr ring = PolyRing::create({"x1", "x2", "x3", "x4", "z1", "z2", "z3"},
                                  {"c1", "c2", "c3", "v1", "v2", "v3"}, true);
  LieAlgebra algebra = bracket_table(sp2_basis(), sp2_labels());
  Decomposition space = Decomposition::standard(std::move(algebra), ring, 3);
  const RatFunc one = RatFunc::constant(ring, Rational(1));
  FieldMatrix gram = diagonal_gram(ring, {one, one, one, one,
                                          RatFunc::variable(ring, "c1"),
                                          RatFunc::variable(ring, "c2"),
                                          RatFunc::variable(ring, "c3")});
  std::vector<RatFunc> form(7, RatFunc::zero(ring));
  form[4] = RatFunc::variable(ring, "v1");
  form[5] = RatFunc::variable(ring, "v2");
  form[6] = RatFunc::variable(ring, "v3");
  return CatalogSpace{"s7-sp2",
                      kS7Sp2Description,
                      "2x2 quaternion matrix basis of sp(2): isotropy H1, "
                      "H2, H3; complement X1..X4, Z1, Z2, Z3; metric "
                      "diag(1, 1, 1, 1, c1, c2, c3); invariant directions "
                      "v1*Z1 + v2*Z2 + v3*Z3",
                      std::move(space),
                      std::move(gram),
                      std::move(form),
                      {"c1", "c2", "c3"},
                      {"v1", "v2", "v3"},
                      {"c1 > 0", "c2 > 0", "c3 > 0"},
                      kS7Sp2Fixtures};
}

CatalogSpace build_s7_sp2u1() {
  RingPtr ring = PolyRing::create({"x1", "x2", "x3", "x4", "z1", "z2", "z3"},
                                  {"c1", "c2", "v"}, true);
  LieAlgebra algebra = bracket_table(sp2_basis(), sp2_labels());
  Decomposition base = Decomposition::standard(std::move(algebra), ring, 3);
  const RatFunc one = RatFunc::constant(ring, Rational(1));
  const RatFunc c2 = RatFunc::variable(ring, "c2");
  FieldMatrix gram = diagonal_gram(
      ring, {one, one, one, one, RatFunc::variable(ring, "c1"), c2, c2});
  const Rational zero(0);
  IsotropyExtension extension = extend_isotropy(
      base, gram, {{zero, zero, zero, zero, Rational(1), zero, zero}}, {"W1"});
  std::vector<RatFunc> form(7, RatFunc::zero(ring));
  form[4] = RatFunc::variable(ring, "v");
  return CatalogSpace{"s7-sp2u1",
                      kS7Sp2U1Description,
                      "extension of s7-sp2: isotropy grown by the operator "
                      "of Z1 (new generator W1); metric "
                      "diag(1, 1, 1, 1, c1, c2, c2); invariant direction "
                      "v*Z1",
                      std::move(extension.space),
                      std::move(gram),
                      std::move(form),
                      {"c1", "c2"},
                      {"v"},
                      {"c1 > 0", "c2 > 0"},
                      kS7Sp2U1Fixtures};
}

CatalogSpace build_s7_sp2sp1() {
  RingPtr ring = PolyRing::create({"x1", "x2", "x3", "x4", "z1", "z2", "z3"},
                                  {"c"}, true);
  LieAlgebra algebra = bracket_table(sp2_basis(), sp2_labels());
  Decomposition base = Decomposition::standard(std::move(algebra), ring, 3);
  const RatFunc one = RatFunc::constant(ring, Rational(1));
  const RatFunc c = RatFunc::variable(ring, "c");
  FieldMatrix gram = diagonal_gram(ring, {one, one, one, one, c, c, c});
  const Rational zero(0), unit(1);
  IsotropyExtension extension =
      extend_isotropy(base, gram,
                      {{zero, zero, zero, zero, unit, zero, zero},
                       {zero, zero, zero, zero, zero, unit, zero},
                       {zero, zero, zero, zero, zero, zero, unit}},
                      {"W1", "W2", "W3"});
  return CatalogSpace{"s7-sp2sp1",
                      kS7Sp2Sp1Description,
                      "extension of s7-sp2: isotropy grown by the operators "
                      "of Z1, Z2, Z3 (new generators W1, W2, W3); metric "
                      "diag(1, 1, 1, 1, c, c, c); no invariant direction",
                      std::move(extension.space),
                      std::move(gram),
                      {},
                      {"c"},
                      {},
                      {"c > 0"},
                      kS7Sp2Sp1Fixtures};
}

CatalogSpace build_cp2_su3() {
  RingPtr ring = PolyRing::create({"x1", "x2", "x3", "x4"}, {"a"}, true);
  LieAlgebra algebra = bracket_table(
      reorder(su3_basis(), {0, 1, 2, 7, 3, 4, 5, 6}),
      {"H1", "H2", "H3", "Z", "X1", "X2", "Y1", "Y2"});
  Decomposition space = Decomposition::standard(std::move(algebra), ring, 4);
  const RatFunc a = RatFunc::variable(ring, "a");
  FieldMatrix gram = diagonal_gram(ring, {a, a, a, a});
  return CatalogSpace{"cp2-su3",
                      kCp2Su3Description,
                      "3x3 complex matrix basis of su(3), reordered: "
                      "isotropy H1, H2, H3, Z; complement X1, X2, Y1, Y2; "
                      "metric diag(a, a, a, a); no invariant direction",
                      std::move(space),
                      std::move(gram),
                      {},
                      {"a"},
                      {},
                      {"a > 0"},
                      kCp2Su3Fixtures};
}

CatalogSpace build_cp3_sp2() {
  RingPtr ring =
      PolyRing::create({"x1", "x2", "x3", "x4", "z2", "z3"}, {"a", "c"}, true);
  LieAlgebra algebra = bracket_table(
      reorder(sp2_basis(), {0, 1, 2, 7, 3, 4, 5, 6, 8, 9}),
      {"H1", "H2", "H3", "Z1", "X1", "X2", "X3", "X4", "Z2", "Z3"});
  Decomposition space = Decomposition::standard(std::move(algebra), ring, 4);
  const RatFunc a = RatFunc::variable(ring, "a");
  const RatFunc c = RatFunc::variable(ring, "c");
  FieldMatrix gram = diagonal_gram(ring, {a, a, a, a, c, c});
  return CatalogSpace{"cp3-sp2",
                      kCp3Sp2Description,
                      "2x2 quaternion matrix basis of sp(2), reordered: "
                      "isotropy H1, H2, H3, Z1; complement X1..X4, Z2, Z3; "
                      "metric diag(a, a, a, a, c, c); no invariant direction",
                      std::move(space),
                      std::move(gram),
                      {},
                      {"a", "c"},
                      {},
                      {"a > 0", "c > 0"},
                      kCp3Sp2Fixtures};
}

CatalogSpace build_hp1_sp2() {
  RingPtr ring = PolyRing::create({"x1", "x2", "x3", "x4"}, {"a"}, true);
  LieAlgebra algebra = bracket_table(
      reorder(sp2_basis(), {0, 1, 2, 7, 8, 9, 3, 4, 5, 6}),
      {"H1", "H2", "H3", "Z1", "Z2", "Z3", "X1", "X2", "X3", "X4"});
  Decomposition space = Decomposition::standard(std::move(algebra), ring, 6);
  const RatFunc a = RatFunc::variable(ring, "a");
  FieldMatrix gram = diagonal_gram(ring, {a, a, a, a});
  return CatalogSpace{"hp1-sp2",
                      kHp1Sp2Description,
                      "2x2 quaternion matrix basis of sp(2), reordered: "
                      "isotropy H1, H2, H3, Z1, Z2, Z3; complement X1..X4; "
                      "metric diag(a, a, a, a); no invariant direction",
                      std::move(space),
                      std::move(gram),
                      {},
                      {"a"},
                      {},
                      {"a > 0"},
                      kHp1Sp2Fixtures};
}

struct EntryRecipe {
  const char* id;
  const char* description;
  CatalogSpace (*build)();
};

const EntryRecipe kEntries[] = {
    {"s5-su3", kS5Su3Description, &build_s5_su3},
    {"s5-u3", kS5U3Description, &build_s5_u3},
    {"s7-sp2", kS7Sp2Description, &build_s7_sp2},
    {"s7-sp2u1", kS7Sp2U1Description, &build_s7_sp2u1},
    {"s7-sp2sp1", kS7Sp2Sp1Description, &build_s7_sp2sp1},
    {"cp2-su3", kCp2Su3Description, &build_cp2_su3},
    {"cp3-sp2", kCp3Sp2Description, &build_cp3_sp2},
    {"hp1-sp2", kHp1Sp2Description, &build_hp1_sp2},
};

}  // namespace

std::vector<CatalogEntryInfo> catalog_list() {
  std::vector<CatalogEntryInfo> entries;
  for (const EntryRecipe& recipe : kEntries) {
    entries.push_back({recipe.id, recipe.description});
  }
  return entries;
}

CatalogSpace catalog_load(const std::string& id) {
  for (const EntryRecipe& recipe : kEntries) {
    if (id == recipe.id) return recipe.build();
  }
  throw ParseError("unknown catalog id '" + id + "'");
}

std::string adjoint_operator_text(const Decomposition& space) {
  std::ostringstream text;
  for (std::size_t a = 0; a < space.h_dim(); ++a) {
    text << "ad(" << space.h_labels().at(a) << ")|m:\n"
         << space.adjoint_on_m(a).str() << "\n";
  }
  return text.str();
}

CatalogFixtures recompute_fixtures(const CatalogSpace& entry) {
  CatalogFixtures out;
  out.bracket_table = entry.space.algebra().bracket_table_text();
  out.adjoint_operators = adjoint_operator_text(entry.space);
  const GeodesicSystem riemannian =
      build_system(entry.space, entry.gram, {}, GraphMode::Riemannian);
  out.riemannian_system = riemannian.str();
  out.riemannian_graph = solve_graph(riemannian).str();
  if (!entry.one_form.empty()) {
    const GeodesicSystem finsler =
        build_system(entry.space, entry.gram, entry.one_form, GraphMode::Finsler);
    out.finsler_system = finsler.str();
    out.finsler_graph = solve_graph(finsler).str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Space-definition documents
// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& text) {
  const char* whitespace = " \t\r\n";
  const std::size_t begin = text.find_first_not_of(whitespace);
  if (begin == std::string::npos) return "";
  const std::size_t end = text.find_last_not_of(whitespace);
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_on(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == separator) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream stream(text);
  std::vector<std::string> words;
  std::string word;
  while (stream >> word) words.push_back(word);
  return words;
}

bool is_identifier(const std::string& text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_') {
    return false;
  }
  for (char ch : text) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      return false;
    }
  }
  return true;
}

std::size_t parse_index(const std::string& text, const std::string& origin,
                        const std::string& what) {
  if (text.empty()) throw ParseError(origin + ": empty " + what);
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(origin + ": bad " + what + " '" + text + "'");
    }
  }
  return static_cast<std::size_t>(std::stoull(text));
}

Poly parse_metric_entry(const RingPtr& ring, const std::string& token,
                        const std::string& origin) {
  Poly result = Poly::constant(ring, Rational(1));
  for (const std::string& raw_factor : split_on(token, '*')) {
    const std::string factor = trim(raw_factor);
    if (factor.empty()) {
      throw ParseError(origin + ": empty factor in metric entry '" + token +
                       "'");
    }
    if (is_identifier(factor)) {
      const auto index = ring->index_of(factor);
      if (!index || ring->kind(*index) != VarKind::Parameter) {
        throw ParseError(origin + ": metric entry uses undeclared parameter '" +
                         factor + "'");
      }
      result = result * Poly::variable(ring, *index);
    } else {
      try {
        result = result * Poly::constant(ring, Rational::parse(factor));
      } catch (const Error&) {
        throw ParseError(origin + ": bad metric entry '" + token + "'");
      }
    }
  }
  return result;
}

}  // namespace

CatalogSpace parse_space_definition(const std::string& text,
                                    const std::string& origin) {
  std::map<std::string, std::string> scalars;
  std::vector<std::string> constant_lines, metric_lines;
  std::string section;
  bool saw_constants = false, saw_metric = false;

  std::istringstream stream(text);
  std::string raw;
  while (std::getline(stream, raw)) {
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    static const char* const kFields[] = {
        "name",   "h_dim",               "m_dim", "basis_labels",
        "params", "structure_constants", "metric"};
    bool is_header = false;
    for (const char* field : kFields) {
      const std::size_t length = std::strlen(field);
      if (line.size() > length && line.compare(0, length, field) == 0 &&
          line[length] == ':') {
        const std::string value = trim(line.substr(length + 1));
        if (std::strcmp(field, "structure_constants") == 0 ||
            std::strcmp(field, "metric") == 0) {
          bool& seen = std::strcmp(field, "metric") == 0 ? saw_metric
                                                         : saw_constants;
          if (seen) {
            throw ParseError(origin + ": duplicate field '" +
                             std::string(field) + "'");
          }
          seen = true;
          section = field;
          if (!value.empty()) {
            throw ParseError(origin + ": " + field +
                             " entries belong on their own lines");
          }
        } else {
          section.clear();
          if (scalars.count(field)) {
            throw ParseError(origin + ": duplicate field '" +
                             std::string(field) + "'");
          }
          scalars[field] = value;
        }
        is_header = true;
        break;
      }
    }
    if (is_header) continue;
    if (section == "structure_constants") {
      constant_lines.push_back(line);
    } else if (section == "metric") {
      metric_lines.push_back(line);
    } else {
      throw ParseError(origin + ": unexpected line '" + line + "'");
    }
  }

  for (const char* required : {"name", "h_dim", "m_dim", "basis_labels"}) {
    if (!scalars.count(required)) {
      throw ParseError(origin + ": missing field '" + std::string(required) +
                       "'");
    }
  }
  const std::string name = scalars["name"];
  if (name.empty()) throw ParseError(origin + ": empty name");
  const std::size_t h_dim = parse_index(scalars["h_dim"], origin, "h_dim");
  const std::size_t m_dim = parse_index(scalars["m_dim"], origin, "m_dim");
  if (m_dim == 0) throw ParseError(origin + ": m_dim must be positive");
  const std::size_t dim = h_dim + m_dim;

  const std::vector<std::string> labels = split_words(scalars["basis_labels"]);
  if (labels.size() != dim) {
    throw ParseError(origin + ": basis_labels must list h_dim + m_dim labels");
  }

  std::vector<std::string> coordinates;
  for (std::size_t i = 0; i < m_dim; ++i) {
    coordinates.push_back("x" + std::to_string(i + 1));
  }

  std::vector<std::string> parameters;
  std::vector<std::string> constraints;
  if (scalars.count("params") && !scalars["params"].empty()) {
    for (const std::string& item : split_on(scalars["params"], ',')) {
      const std::vector<std::string> tokens = split_words(item);
      if (tokens.empty()) {
        throw ParseError(origin + ": empty entry in params");
      }
      const std::string& parameter = tokens[0];
      if (!is_identifier(parameter)) {
        throw ParseError(origin + ": bad parameter name '" + parameter + "'");
      }
      if (parameter == "zeta" ||
          std::find(coordinates.begin(), coordinates.end(), parameter) !=
              coordinates.end()) {
        throw ParseError(origin + ": parameter name '" + parameter +
                         "' collides with a coordinate name");
      }
      if (std::find(parameters.begin(), parameters.end(), parameter) !=
          parameters.end()) {
        throw ParseError(origin + ": duplicate parameter '" + parameter + "'");
      }
      if (tokens.size() == 1) {
        constraints.push_back(parameter);
      } else if (tokens.size() == 3 && tokens[1] == ">" && tokens[2] == "0") {
        constraints.push_back(parameter + " > 0");
      } else {
        throw ParseError(origin + ": parameter constraints must be '> 0' ('" +
                         trim(item) + "')");
      }
      parameters.push_back(parameter);
    }
  }

  RingPtr ring = PolyRing::create(coordinates, parameters, true);

  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>>
      bracket_terms;
  for (const std::string& line : constant_lines) {
    if (line.size() < 2 || line.front() != '[' || line.back() != ']') {
      throw ParseError(origin + ": structure constants look like "
                       "[i, j, k, q] ('" + line + "')");
    }
    const std::vector<std::string> parts =
        split_on(line.substr(1, line.size() - 2), ',');
    if (parts.size() != 4) {
      throw ParseError(origin + ": structure constants look like "
                       "[i, j, k, q] ('" + line + "')");
    }
    const std::size_t i = parse_index(trim(parts[0]), origin, "basis index");
    const std::size_t j = parse_index(trim(parts[1]), origin, "basis index");
    const std::size_t k = parse_index(trim(parts[2]), origin, "basis index");
    if (i >= dim || j >= dim || k >= dim) {
      throw ParseError(origin + ": basis index out of range in '" + line + "'");
    }
    if (i >= j) {
      throw ParseError(origin + ": structure constants need i < j in '" + line +
                       "'");
    }
    Rational value(0);
    try {
      value = Rational::parse(trim(parts[3]));
    } catch (const Error&) {
      throw ParseError(origin + ": bad rational in '" + line + "'");
    }
    bracket_terms[{i, j}][k] += value;
  }

  LieAlgebra algebra(labels);
  for (const auto& [pair, terms] : bracket_terms) {
    std::vector<std::pair<std::size_t, Rational>> value;
    for (const auto& [k, coefficient] : terms) {
      if (!coefficient.is_zero()) value.emplace_back(k, coefficient);
    }
    algebra.set_bracket(pair.first, pair.second, std::move(value));
  }

  if (metric_lines.empty()) {
    throw ParseError(origin + ": missing field 'metric'");
  }
  if (metric_lines.size() != m_dim) {
    throw ParseError(origin + ": metric must have m_dim rows");
  }
  FieldMatrix gram(ring, m_dim, m_dim);
  for (std::size_t r = 0; r < m_dim; ++r) {
    const std::vector<std::string> entries = split_words(metric_lines[r]);
    if (entries.size() != m_dim) {
      throw ParseError(origin + ": metric rows must have m_dim entries");
    }
    for (std::size_t c = 0; c < m_dim; ++c) {
      gram.at(r, c) = RatFunc(parse_metric_entry(ring, entries[c], origin));
    }
  }
  for (std::size_t r = 0; r < m_dim; ++r) {
    for (std::size_t c = r + 1; c < m_dim; ++c) {
      if (!(gram.at(r, c) == gram.at(c, r))) {
        throw ParseError(origin + ": metric must be symmetric");
      }
    }
  }

  Decomposition space = Decomposition::standard(std::move(algebra), ring, h_dim);
  return CatalogSpace{name,
                      "user-defined space (" + origin + ")",
                      "space-definition document " + origin,
                      std::move(space),
                      std::move(gram),
                      {},
                      parameters,
                      {},
                      std::move(constraints),
                      CatalogFixtures{}};
}

CatalogSpace read_space_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot read space definition '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_space_definition(buffer.str(), path);
}

}  // namespace gograph
