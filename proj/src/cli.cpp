// cli.cpp -- command-line front end for the analysis pipeline.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "gograph/catalog.hpp"
#include "gograph/errors.hpp"
#include "gograph/geodesic.hpp"
#include "json.hpp"

namespace gograph {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerdict = 2;

/// Options shared by the space-based subcommands.
struct SpaceOptions {
  std::string space;
  std::vector<std::string> bindings;
  std::string v_spec;
  std::string mode;
};

std::string format_double(double value) {
  std::ostringstream text;
  text << std::setprecision(6) << value;
  return text.str();
}

void emit(std::ostream& out, const std::string& format, const json& report,
          const std::string& text) {
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

/// Loads a space by catalog id, or from disk when the selector names an
/// existing file or looks like a path.
CatalogSpace load_space(const std::string& selector) {
  if (selector.empty()) {
    throw ParseError("--space is required");
  }
  if (std::filesystem::exists(selector) ||
      selector.find('/') != std::string::npos) {
    return read_space_file(selector);
  }
  return catalog_load(selector);
}

/// The rational value of a constant rational function, if it is one.
std::optional<Rational> as_rational(const RatFunc& f) {
  const std::vector<Rational> zeros(f.ring()->size(), Rational(0));
  Rational value(0);
  try {
    value = f.evaluate(zeros);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (f == RatFunc::constant(f.ring(), value)) return value;
  return std::nullopt;
}

/// Applies `name=value` bindings to the metric and one-form; `symbolic`
/// values are accepted and ignored.  Returns the numeric bindings.
std::map<std::string, Rational> apply_bindings(
    CatalogSpace& entry, const std::vector<std::string>& bindings) {
  std::map<std::string, Rational> bound;
  const RingPtr& ring = entry.space.ring();
  for (const std::string& item : bindings) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParseError("parameter binding '" + item + "' is not name=value");
    }
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    const std::optional<std::size_t> index = ring->index_of(name);
    if (!index || ring->kind(*index) != VarKind::Parameter) {
      throw ParseError("unknown parameter '" + name + "' for space '" +
                       entry.id + "'");
    }
    if (value == "symbolic") continue;
    Rational rational(0);
    try {
      rational = Rational::parse(value);
    } catch (const Error&) {
      throw ParseError("parameter value '" + value +
                       "' is not a rational or 'symbolic'");
    }
    for (const std::string& constraint : entry.parameter_constraints) {
      if (constraint == name + " > 0" && !(Rational(0) < rational)) {
        throw DomainError("parameter " + name + " must be positive, got " +
                          rational.str());
      }
    }
    bound[name] = rational;
    const Poly replacement = Poly::constant(ring, rational);
    for (std::size_t r = 0; r < entry.gram.rows(); ++r) {
      for (std::size_t c = 0; c < entry.gram.cols(); ++c) {
        entry.gram.at(r, c) = entry.gram.at(r, c).substitute(*index, replacement);
      }
    }
    for (RatFunc& component : entry.one_form) {
      component = component.substitute(*index, replacement);
    }
  }
  return bound;
}

/// Resolves the one-form to use: the stored invariant direction for
/// `auto`/empty, or explicit comma-separated rational coefficients.
std::vector<RatFunc> resolve_one_form(const CatalogSpace& entry,
                                      const std::string& spec) {
  if (spec.empty() || spec == "auto") {
    if (entry.one_form.empty()) {
      throw DomainError("space '" + entry.id +
                        "' has no invariant direction; pass --v with "
                        "explicit coefficients");
    }
    return entry.one_form;
  }
  const RingPtr& ring = entry.space.ring();
  std::vector<RatFunc> form;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      form.push_back(RatFunc::constant(ring, Rational::parse(token)));
    } catch (const Error&) {
      throw ParseError("--v coefficient '" + token + "' is not a rational");
    }
  }
  if (form.size() != entry.space.m_dim()) {
    throw ParseError("--v needs " + std::to_string(entry.space.m_dim()) +
                     " comma-separated coefficients");
  }
  return form;
}

GraphMode resolve_mode(const std::string& mode, const std::string& v_spec) {
  if (mode == "riemannian") {
    if (!v_spec.empty()) {
      throw ParseError("--v requires --mode finsler");
    }
    return GraphMode::Riemannian;
  }
  if (mode == "finsler") return GraphMode::Finsler;
  if (!mode.empty()) {
    throw ParseError("--mode must be riemannian or finsler");
  }
  return v_spec.empty() ? GraphMode::Riemannian : GraphMode::Finsler;
}

/// A one-form split as  coefficient * rational direction; the coefficient is
/// 1 for constant forms and the declared parameter for parametric ones.
struct FormRay {
  std::vector<Rational> direction;
  RatFunc coefficient;
};

FormRay split_ray(const RingPtr& ring, const std::vector<RatFunc>& form) {
  std::vector<RatFunc> candidates = {RatFunc::constant(ring, Rational(1))};
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (ring->kind(i) == VarKind::Parameter && ring->name(i) != "zeta") {
      candidates.push_back(RatFunc::variable(ring, ring->name(i)));
    }
  }
  for (const RatFunc& coefficient : candidates) {
    std::vector<Rational> direction;
    bool ok = true, nonzero = false;
    for (const RatFunc& component : form) {
      const std::optional<Rational> value = as_rational(component / coefficient);
      if (!value) {
        ok = false;
        break;
      }
      if (!value->is_zero()) nonzero = true;
      direction.push_back(*value);
    }
    if (ok && nonzero) return {std::move(direction), coefficient};
  }
  throw DomainError(
      "the one-form is not a single scaled direction; pass --v with "
      "explicit coefficients");
}

/// The coefficient of coordinate `target` in a polynomial of degree one:
/// every non-parameter variable except `target` is sent to zero.
RatFunc coordinate_coefficient(RatFunc f, std::size_t target) {
  const RingPtr& ring = f.ring();
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (ring->kind(i) == VarKind::Parameter) continue;
    const Rational value = i == target ? Rational(1) : Rational(0);
    f = f.substitute(i, Poly::constant(ring, value));
  }
  return f;
}

/// Realigns the complement by a linear connecting map: the new complement is
/// spanned by the geodesic vectors U_j + xi(U_j).
Decomposition realign_by_graph(const Decomposition& space,
                               const GeodesicGraphResult& graph) {
  FieldMatrix shift(space.ring(), space.h_dim(), space.m_dim());
  for (std::size_t a = 0; a < space.h_dim(); ++a) {
    for (std::size_t j = 0; j < space.m_dim(); ++j) {
      shift.at(a, j) = coordinate_coefficient(graph.components[a], j);
    }
  }
  return change_complement(space, shift);
}

struct NrOutcome {
  bool pass = false;
  bool realigned = false;
  std::string detail;
};

/// Natural reductivity up to complement choice: the stored complement
/// qualifies directly, or a linear connecting map realigns it to one that
/// does.  Any non-linear graph rules the property out.
NrOutcome check_naturally_reductive(const CatalogSpace& entry) {
  if (!natural_reductivity_defect(entry.space, entry.gram).has_value()) {
    return {true, false, "the stored complement is naturally reductive"};
  }
  const GeodesicSystem system =
      build_system(entry.space, entry.gram, {}, GraphMode::Riemannian);
  const GeodesicGraphResult graph = solve_graph(system);
  if (graph.kind == GraphKind::Unsolvable) {
    return {false, false, "not geodesic-orbit: " + graph.witness_text};
  }
  if (graph.kind != GraphKind::Linear) {
    return {false, false,
            "the connecting map is rational of degrees " +
                std::to_string(graph.numerator_degree) + "/" +
                std::to_string(graph.denominator_degree) +
                ", not linear"};
  }
  const Decomposition realigned = realign_by_graph(entry.space, graph);
  if (!natural_reductivity_defect(realigned, entry.gram).has_value()) {
    return {true, true,
            "naturally reductive after realigning the complement by the "
            "linear connecting map"};
  }
  return {false, true,
          "the linear connecting map does not realign to a naturally "
          "reductive complement"};
}

std::string rationals_str(const std::vector<Rational>& values) {
  std::string text = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text += ", ";
    text += values[i].str();
  }
  return text + "]";
}

std::vector<std::string> ratfunc_strs(const std::vector<RatFunc>& values) {
  std::vector<std::string> texts;
  texts.reserve(values.size());
  for (const RatFunc& value : values) texts.push_back(value.str());
  return texts;
}

std::string kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Linear: return "linear";
    case GraphKind::Rational: return "rational";
    default: return "unsolvable";
  }
}

std::string mode_name(GraphMode mode) {
  return mode == GraphMode::Finsler ? "finsler" : "riemannian";
}

// ---------------------------------------------------------------------------
// Subcommand actions.
// ---------------------------------------------------------------------------

int run_catalog_list(const std::string& format, std::ostream& out) {
  const std::vector<CatalogEntryInfo> listing = catalog_list();
  json report;
  report["command"] = "catalog list";
  report["entries"] = json::array();
  std::size_t width = 0;
  for (const CatalogEntryInfo& info : listing) {
    width = std::max(width, info.id.size());
  }
  std::ostringstream text;
  for (const CatalogEntryInfo& info : listing) {
    report["entries"].push_back(
        {{"id", info.id}, {"description", info.description}});
    text << info.id << std::string(width + 2 - info.id.size(), ' ')
         << info.description << "\n";
  }
  emit(out, format, report, text.str());
  return kExitOk;
}

int run_catalog_show(const std::string& id, const std::string& format,
                     std::ostream& out) {
  const CatalogSpace entry = catalog_load(id);
  json report;
  report["command"] = "catalog show";
  report["id"] = entry.id;
  report["description"] = entry.description;
  report["construction"] = entry.construction;
  report["isotropy"] = entry.space.h_labels();
  report["complement"] = entry.space.m_labels();
  report["metric_parameters"] = entry.metric_parameters;
  report["form_parameters"] = entry.form_parameters;
  report["parameter_constraints"] = entry.parameter_constraints;
  report["gram"] = entry.gram.str();
  report["one_form"] = ratfunc_strs(entry.one_form);
  report["fixtures"] = {
      {"bracket_table", entry.fixtures.bracket_table},
      {"adjoint_operators", entry.fixtures.adjoint_operators},
      {"riemannian_system", entry.fixtures.riemannian_system},
      {"finsler_system", entry.fixtures.finsler_system},
      {"riemannian_graph", entry.fixtures.riemannian_graph},
      {"finsler_graph", entry.fixtures.finsler_graph},
  };

  const auto join = [](const std::vector<std::string>& items) {
    std::string text;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) text += ", ";
      text += items[i];
    }
    return text;
  };
  std::ostringstream text;
  text << "id: " << entry.id << "\n";
  text << "description: " << entry.description << "\n";
  text << "construction: " << entry.construction << "\n";
  text << "isotropy: " << join(entry.space.h_labels()) << "\n";
  text << "complement: " << join(entry.space.m_labels()) << "\n";
  text << "parameters: " << join(entry.parameter_constraints);
  if (!entry.form_parameters.empty()) {
    text << "; one-form " << join(entry.form_parameters);
  }
  text << "\n";
  text << "gram:\n" << entry.gram.str() << "\n";
  if (!entry.one_form.empty()) {
    text << "one-form: [" << join(ratfunc_strs(entry.one_form)) << "]\n";
  }
  text << "\nbracket table:\n" << entry.fixtures.bracket_table << "\n";
  text << "\nadjoint operators:\n" << entry.fixtures.adjoint_operators;
  text << "\nquadratic-mode system:\n" << entry.fixtures.riemannian_system;
  if (!entry.fixtures.finsler_system.empty()) {
    text << "\none-form-mode system:\n" << entry.fixtures.finsler_system;
  }
  text << "\nquadratic-mode graph:\n" << entry.fixtures.riemannian_graph
       << "\n";
  if (!entry.fixtures.finsler_graph.empty()) {
    text << "\none-form-mode graph:\n" << entry.fixtures.finsler_graph << "\n";
  }
  emit(out, format, report, text.str());
  return kExitOk;
}

int run_check(const std::string& which, const SpaceOptions& options,
              const std::string& format, std::ostream& out) {
  CatalogSpace entry = load_space(options.space);
  apply_bindings(entry, options.bindings);

  bool pass = false;
  bool realigned = false;
  std::string detail;
  if (which == "jacobi") {
    const std::optional<LieAlgebra::JacobiViolation> violation =
        entry.space.algebra().jacobi_violation();
    pass = !violation.has_value();
    if (violation) {
      const LieAlgebra& algebra = entry.space.algebra();
      detail = "jacobiator of (" + algebra.label(violation->i) + ", " +
               algebra.label(violation->j) + ", " + algebra.label(violation->k) +
               ") is " +
               format_linear_combination(violation->defect, algebra.labels());
    } else {
      detail = "the bracket satisfies the Jacobi identity";
    }
  } else if (which == "reductive") {
    const std::optional<std::string> defect = entry.space.reductivity_defect();
    pass = !defect.has_value();
    detail = defect.value_or("the complement is an isotropy submodule");
  } else if (which == "invariance") {
    std::optional<std::string> defect =
        metric_invariance_defect(entry.space, entry.gram);
    if (!defect && !entry.one_form.empty()) {
      for (std::size_t a = 0; a < entry.space.h_dim() && !defect; ++a) {
        const FieldMatrix action = entry.space.adjoint_on_m(a);
        for (std::size_t r = 0; r < action.rows(); ++r) {
          RatFunc moved = RatFunc::zero(entry.space.ring());
          for (std::size_t c = 0; c < action.cols(); ++c) {
            moved = moved + action.at(r, c) * entry.one_form[c];
          }
          if (!moved.is_zero()) {
            defect = "the one-form moves under " + entry.space.h_labels()[a];
            break;
          }
        }
      }
    }
    pass = !defect.has_value();
    detail = defect.value_or(
        "the metric and one-form are fixed by the isotropy action");
  } else {  // nr
    const NrOutcome outcome = check_naturally_reductive(entry);
    pass = outcome.pass;
    realigned = outcome.realigned;
    detail = outcome.detail;
  }

  json report;
  report["command"] = "check";
  report["check"] = which;
  report["space"] = entry.id;
  report["pass"] = pass;
  report["detail"] = detail;
  if (which == "nr") report["realigned"] = realigned;
  std::ostringstream text;
  text << which << ": " << (pass ? "pass" : "fail") << "\n";
  text << detail << "\n";
  emit(out, format, report, text.str());
  return pass ? kExitOk : kExitVerdict;
}

int run_invariant_vectors(const SpaceOptions& options,
                          const std::string& format, std::ostream& out) {
  const CatalogSpace entry = load_space(options.space);
  const std::vector<std::vector<RatFunc>> vectors =
      entry.space.invariant_vectors();

  json report;
  report["command"] = "invariant-vectors";
  report["space"] = entry.id;
  report["dimension"] = vectors.size();
  report["vectors"] = json::array();
  std::ostringstream text;
  text << "invariant vectors: " << vectors.size() << "\n";
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    std::vector<Rational> coords;
    for (const RatFunc& component : vectors[k]) {
      const std::optional<Rational> value = as_rational(component);
      coords.push_back(value.value_or(Rational(0)));
    }
    const std::string combination =
        format_linear_combination(coords, entry.space.m_labels());
    report["vectors"].push_back(
        {{"coefficients", rationals_str(coords)}, {"combination", combination}});
    text << "V" << k + 1 << " = " << combination << "\n";
  }
  emit(out, format, report, text.str());
  return kExitOk;
}

int run_center(const SpaceOptions& options, const std::string& format,
               std::ostream& out) {
  const CatalogSpace entry = load_space(options.space);
  const LieAlgebra& algebra = entry.space.algebra();
  const std::vector<std::vector<Rational>> center = algebra.center();

  json report;
  report["command"] = "center";
  report["space"] = entry.id;
  report["dimension"] = center.size();
  report["elements"] = json::array();
  std::ostringstream text;
  text << "center dimension: " << center.size() << "\n";
  for (std::size_t k = 0; k < center.size(); ++k) {
    const std::string combination =
        format_linear_combination(center[k], algebra.labels());
    report["elements"].push_back({{"coefficients", rationals_str(center[k])},
                                  {"combination", combination}});
    text << "C" << k + 1 << " = " << combination << "\n";
  }
  emit(out, format, report, text.str());
  return kExitOk;
}

int run_extend(const SpaceOptions& options,
               const std::vector<std::string>& v_specs,
               const std::string& format, std::ostream& out) {
  CatalogSpace entry = load_space(options.space);
  apply_bindings(entry, options.bindings);

  std::vector<std::vector<Rational>> directions;
  for (const std::string& spec : v_specs) {
    if (spec == "auto") {
      for (const std::vector<RatFunc>& vector :
           entry.space.invariant_vectors()) {
        std::vector<Rational> direction;
        for (const RatFunc& component : vector) {
          const std::optional<Rational> value = as_rational(component);
          if (!value) {
            throw DomainError("an invariant direction is not rational");
          }
          direction.push_back(*value);
        }
        directions.push_back(std::move(direction));
      }
      continue;
    }
    std::vector<Rational> direction;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
      try {
        direction.push_back(Rational::parse(token));
      } catch (const Error&) {
        throw ParseError("--v coefficient '" + token + "' is not a rational");
      }
    }
    if (direction.size() != entry.space.m_dim()) {
      throw ParseError("--v needs " + std::to_string(entry.space.m_dim()) +
                       " comma-separated coefficients");
    }
    directions.push_back(std::move(direction));
  }
  if (directions.empty()) {
    throw ParseError("extend needs at least one --v direction (or 'auto')");
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < directions.size(); ++k) {
    labels.push_back("W" + std::to_string(k + 1));
  }
  const IsotropyExtension extension =
      extend_isotropy(entry.space, entry.gram, directions, labels);
  const LieAlgebra& extended = extension.extended;

  json report;
  report["command"] = "extend";
  report["space"] = entry.id;
  report["extended_dimension"] = extended.dim();
  report["isotropy_dimension"] = extension.space.h_dim();
  report["new_generators"] = labels;
  report["zbar"] = json::array();
  std::ostringstream text;
  text << "extended algebra dimension: " << extended.dim() << "\n";
  text << "isotropy dimension: " << extension.space.h_dim() << "\n";
  const auto join = [](const std::vector<std::string>& items) {
    std::string joined;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) joined += ", ";
      joined += items[i];
    }
    return joined;
  };
  text << "new isotropy generators: " << join(labels) << "\n";
  for (std::size_t k = 0; k < extension.zbar.size(); ++k) {
    const std::string combination =
        format_linear_combination(extension.zbar[k], extended.labels());
    report["zbar"].push_back({{"combination", combination},
                              {"central", bool(extension.zbar_central[k])}});
    text << "Zbar" << k + 1 << " = " << combination
         << (extension.zbar_central[k] ? " (central)" : " (not central)")
         << "\n";
  }
  const std::string table = extended.bracket_table_text();
  report["bracket_table"] = table;
  text << "bracket table:\n" << table << "\n";
  emit(out, format, report, text.str());
  return kExitOk;
}

int run_system(const SpaceOptions& options, const std::string& format,
               std::ostream& out) {
  CatalogSpace entry = load_space(options.space);
  apply_bindings(entry, options.bindings);
  const GraphMode mode = resolve_mode(options.mode, options.v_spec);
  const std::vector<RatFunc> form = mode == GraphMode::Finsler
                                        ? resolve_one_form(entry, options.v_spec)
                                        : std::vector<RatFunc>{};
  const GeodesicSystem system = build_system(entry.space, entry.gram, form, mode);

  json report;
  report["command"] = "system";
  report["space"] = entry.id;
  report["mode"] = mode_name(mode);
  report["columns"] = system.column_labels;
  report["rows"] = json::array();
  for (std::size_t r = 0; r < system.a.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < system.a.cols(); ++c) {
      row.push_back(system.a.at(r, c).str());
    }
    json entry_row = {{"label", system.row_labels[r]},
                      {"a", row},
                      {"b", system.b[r].str()}};
    if (mode == GraphMode::Finsler) entry_row["c"] = system.c[r].str();
    report["rows"].push_back(entry_row);
  }
  std::ostringstream text;
  text << "mode: " << mode_name(mode) << "\n";
  text << "columns:";
  for (const std::string& label : system.column_labels) text << " " << label;
  text << "\n" << system.str();
  emit(out, format, report, text.str());
  return kExitOk;
}

/// Shared solve pipeline for `graph`, honoring the optional route.
struct GraphRun {
  GeodesicGraphResult graph;
  GoVerdict verdict;
  std::vector<std::string> column_labels;
  std::vector<std::string> notes;
};

GraphRun solve_direct(const CatalogSpace& entry, GraphMode mode,
                      const std::vector<RatFunc>& form) {
  const GeodesicSystem system = build_system(entry.space, entry.gram, form, mode);
  return {solve_graph(system), check_go(system), system.column_labels, {}};
}

GraphRun solve_via_t2(const CatalogSpace& entry,
                      const std::vector<RatFunc>& form) {
  const FormRay ray = split_ray(entry.space.ring(), form);
  const Decomposition centered = centered_complement(entry.space, ray.direction);
  std::vector<std::string> notes = {
      "complement: center-aligned along " +
      format_linear_combination(ray.direction, entry.space.m_labels())};
  const GeodesicSystem quadratic =
      build_system(centered, entry.gram, {}, GraphMode::Riemannian);
  const GeodesicGraphResult base = solve_graph(quadratic);
  std::vector<RatFunc> aligned_form;
  for (const Rational& value : ray.direction) {
    aligned_form.push_back(ray.coefficient *
                           RatFunc::constant(entry.space.ring(), value));
  }
  const GeodesicSystem finsler =
      build_system(centered, entry.gram, aligned_form, GraphMode::Finsler);
  if (base.kind == GraphKind::Unsolvable) {
    GeodesicGraphResult failed = base;
    failed.mode = GraphMode::Finsler;
    return {failed, check_go(finsler), quadratic.column_labels,
            std::move(notes)};
  }
  const GeodesicGraphResult graph =
      graph_via_t2(centered, entry.gram, ray.direction, ray.coefficient, base);
  return {graph, check_go(finsler), finsler.column_labels, std::move(notes)};
}

GraphRun solve_via_pnr(const CatalogSpace& entry,
                       const std::vector<RatFunc>& form) {
  const FormRay ray = split_ray(entry.space.ring(), form);
  Decomposition basis = entry.space;
  std::vector<std::string> notes;
  if (natural_reductivity_defect(basis, entry.gram).has_value()) {
    const GeodesicSystem quadratic =
        build_system(entry.space, entry.gram, {}, GraphMode::Riemannian);
    const GeodesicGraphResult base = solve_graph(quadratic);
    if (base.kind != GraphKind::Linear) {
      throw DomainError(
          "the product route needs a naturally reductive complement, and "
          "the connecting map is not linear");
    }
    basis = realign_by_graph(entry.space, base);
    if (natural_reductivity_defect(basis, entry.gram).has_value()) {
      throw DomainError(
          "the product route needs a naturally reductive complement, and "
          "the realigned complement still fails");
    }
    notes.push_back("complement: realigned by the linear connecting map");
  } else {
    notes.push_back("complement: stored (naturally reductive)");
  }

  // A central element whose tangent part matches the direction.
  const LieAlgebra& algebra = basis.algebra();
  const std::vector<std::vector<Rational>> center = algebra.center();
  if (center.empty()) {
    throw DomainError("the algebra has no center; the product route needs a "
                      "central element behind the one-form");
  }
  const RingPtr& ring = basis.ring();
  FieldMatrix projections(ring, basis.m_dim(), center.size());
  for (std::size_t k = 0; k < center.size(); ++k) {
    std::vector<RatFunc> embedded;
    for (const Rational& value : center[k]) {
      embedded.push_back(RatFunc::constant(ring, value));
    }
    const std::vector<RatFunc> tangent = basis.split(embedded).second;
    for (std::size_t r = 0; r < basis.m_dim(); ++r) {
      projections.at(r, k) = tangent[r];
    }
  }
  std::vector<RatFunc> target;
  for (const Rational& value : ray.direction) {
    target.push_back(RatFunc::constant(ring, value));
  }
  const SolveOutcome outcome = solve_linear(projections, target);
  const LinearSolution* solution = std::get_if<LinearSolution>(&outcome);
  if (!solution) {
    throw DomainError(
        "no central element projects onto the one-form direction");
  }
  std::vector<Rational> central(algebra.dim(), Rational(0));
  for (std::size_t k = 0; k < center.size(); ++k) {
    const std::optional<Rational> weight = as_rational(solution->particular[k]);
    if (!weight) {
      throw DomainError("the central combination is not rational");
    }
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
      central[i] += *weight * center[k][i];
    }
  }
  notes.push_back("central element: " +
                  format_linear_combination(central, algebra.labels()));

  const GeodesicGraphResult graph =
      graph_via_pnr(basis, entry.gram, central, ray.coefficient);
  std::vector<RatFunc> aligned_form;
  for (const Rational& value : ray.direction) {
    aligned_form.push_back(ray.coefficient * RatFunc::constant(ring, value));
  }
  const GeodesicSystem finsler =
      build_system(basis, entry.gram, aligned_form, GraphMode::Finsler);
  return {graph, check_go(finsler), finsler.column_labels, std::move(notes)};
}

int run_graph(const SpaceOptions& options, const std::string& via,
              const std::string& format, std::ostream& out) {
  CatalogSpace entry = load_space(options.space);
  apply_bindings(entry, options.bindings);
  GraphMode mode = resolve_mode(options.mode, options.v_spec);
  if (!via.empty() && mode == GraphMode::Riemannian) {
    if (!options.mode.empty()) {
      throw ParseError("--via applies to the one-form mode");
    }
    mode = GraphMode::Finsler;
  }
  const std::vector<RatFunc> form = mode == GraphMode::Finsler
                                        ? resolve_one_form(entry, options.v_spec)
                                        : std::vector<RatFunc>{};
  GraphRun run = [&] {
    if (via.empty()) return solve_direct(entry, mode, form);
    if (via == "t2") return solve_via_t2(entry, form);
    if (via == "pnr") return solve_via_pnr(entry, form);
    throw ParseError("--via must be t2 or pnr");
  }();

  json report;
  report["command"] = "graph";
  report["space"] = entry.id;
  report["mode"] = mode_name(mode);
  report["route"] = via.empty() ? "direct" : via;
  report["verdict"] = {{"go", run.verdict.go},
                       {"rank", run.verdict.rank},
                       {"augmented_rank", run.verdict.augmented_rank}};
  report["kind"] = kind_name(run.graph.kind);
  std::ostringstream text;
  text << "space: " << entry.id << "\n";
  text << "mode: " << mode_name(mode) << "\n";
  if (!via.empty()) {
    text << "route: "
         << (via == "t2" ? "tangent-shift substitution"
                         : "central-product reduction")
         << "\n";
  }
  for (const std::string& note : run.notes) text << note << "\n";
  report["notes"] = run.notes;
  text << "verdict: " << run.verdict.str() << "\n";
  text << "graph: " << run.graph.str() << "\n";
  if (run.graph.kind == GraphKind::Unsolvable) {
    report["witness"] = run.graph.witness_text;
    emit(out, format, report, text.str());
    return kExitVerdict;
  }
  report["numerator_degree"] = run.graph.numerator_degree;
  report["denominator_degree"] = run.graph.denominator_degree;
  report["nullity"] = run.graph.nullity;
  report["components"] = json::array();
  for (std::size_t a = 0; a < run.graph.components.size(); ++a) {
    report["components"].push_back({{"label", run.column_labels[a]},
                                    {"value", run.graph.components[a].str()}});
    text << "xi[" << run.column_labels[a]
         << "] = " << run.graph.components[a].str() << "\n";
  }
  emit(out, format, report, text.str());
  return kExitOk;
}

int run_verify(const SpaceOptions& options, const std::string& phi,
               std::size_t samples, std::uint64_t seed,
               const std::string& format, std::ostream& out) {
  CatalogSpace entry = load_space(options.space);
  // Keep the metric symbolic: the numeric values feed the evaluation stage.
  const std::map<std::string, Rational> bound =
      apply_bindings(entry, options.bindings);
  const GraphMode mode = resolve_mode(options.mode, options.v_spec);
  const std::vector<RatFunc> form = mode == GraphMode::Finsler
                                        ? resolve_one_form(entry, options.v_spec)
                                        : std::vector<RatFunc>{};
  const PhiFamily family = PhiFamily::by_name(phi);
  const GeodesicSystem system = build_system(entry.space, entry.gram, form, mode);
  const GeodesicGraphResult graph = solve_graph(system);

  json report;
  report["command"] = "verify";
  report["space"] = entry.id;
  report["mode"] = mode_name(mode);
  report["family"] = family.name;
  report["samples"] = samples;
  report["seed"] = seed;
  report["kind"] = kind_name(graph.kind);
  std::ostringstream text;
  text << "space: " << entry.id << "\n";
  text << "mode: " << mode_name(mode) << "\n";
  text << "family: " << family.name << "\n";
  text << "samples: " << samples << "\n";
  text << "seed: " << seed << "\n";
  if (graph.kind == GraphKind::Unsolvable) {
    report["witness"] = graph.witness_text;
    text << "graph: " << graph.str() << "\n";
    emit(out, format, report, text.str());
    return kExitVerdict;
  }
  std::map<std::string, double> values;
  for (const auto& [name, value] : bound) {
    values[name] = value.to_double();
  }
  const NumericVerification verification =
      verify_graph_numeric(entry.space, entry.gram, form, family,
                           graph.components, values, samples, seed);
  report["pass"] = verification.pass;
  report["max_scaled_residual"] = verification.max_scaled_residual;
  report["tolerance"] = verification.tolerance;
  text << "graph: " << graph.str() << "\n";
  text << "verification: " << verification.str() << "\n";
  emit(out, format, report, text.str());
  return verification.pass ? kExitOk : kExitVerdict;
}

int run_admissibility(const std::string& phi, double b, std::size_t grid,
                      const std::string& format, std::ostream& out) {
  const PhiFamily family = PhiFamily::by_name(phi);
  const AdmissibilityReport result = admissibility_check(family, b, grid);

  json report;
  report["command"] = "admissibility";
  report["family"] = family.name;
  report["b"] = b;
  report["grid"] = grid;
  report["pass"] = result.pass;
  report["margin"] = result.margin;
  report["min_phi"] = result.min_phi;
  report["worst_s"] = result.worst_s;
  std::ostringstream text;
  text << "family: " << family.name << "\n";
  text << "b: " << format_double(b) << "\n";
  text << "admissible: " << (result.pass ? "yes" : "no") << "\n";
  text << "margin: " << format_double(result.margin) << " at s = "
       << format_double(result.worst_s) << "\n";
  text << "min phi: " << format_double(result.min_phi) << "\n";
  emit(out, format, report, text.str());
  return result.pass ? kExitOk : kExitVerdict;
}

void add_space_options(CLI::App* command, SpaceOptions& options,
                       bool with_form = true) {
  command->add_option("--space", options.space,
                      "catalog id or space-definition file");
  command->add_option("--param", options.bindings,
                      "parameter binding name=value (rational or 'symbolic')");
  if (with_form) {
    command->add_option("--v", options.v_spec,
                        "one-form coefficients (comma-separated rationals) or "
                        "'auto' for the stored invariant direction");
    command->add_option("--mode", options.mode, "riemannian or finsler");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact geodesic-orbit analysis on reductive homogeneous "
               "spaces"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--output", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::function<int()> action;

  CLI::App* catalog = app.add_subcommand("catalog", "browse built-in spaces");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "list catalog entries");
  list->callback([&] { action = [&] { return run_catalog_list(format, out); }; });
  std::string show_id;
  CLI::App* show = catalog->add_subcommand("show", "show one entry in full");
  show->add_option("id", show_id, "catalog id")->required();
  show->callback(
      [&] { action = [&] { return run_catalog_show(show_id, format, out); }; });

  SpaceOptions check_options;
  std::string check_kind;
  CLI::App* check = app.add_subcommand("check", "structural checks");
  check->add_option("kind", check_kind, "jacobi, invariance, reductive, or nr")
      ->required()
      ->check(CLI::IsMember({"jacobi", "invariance", "reductive", "nr"}));
  add_space_options(check, check_options, false);
  check->callback([&] {
    action = [&] { return run_check(check_kind, check_options, format, out); };
  });

  SpaceOptions fixed_options;
  CLI::App* fixed = app.add_subcommand("invariant-vectors",
                                       "basis of isotropy-fixed directions");
  add_space_options(fixed, fixed_options, false);
  fixed->callback([&] {
    action = [&] { return run_invariant_vectors(fixed_options, format, out); };
  });

  SpaceOptions center_options;
  CLI::App* center = app.add_subcommand("center", "center of the algebra");
  add_space_options(center, center_options, false);
  center->callback([&] {
    action = [&] { return run_center(center_options, format, out); };
  });

  SpaceOptions extend_options;
  std::vector<std::string> extend_directions;
  CLI::App* extend = app.add_subcommand(
      "extend", "adjoin isotropy generators along invariant directions");
  add_space_options(extend, extend_options, false);
  extend->add_option("--v", extend_directions,
                     "direction coefficients (comma-separated) or 'auto'; "
                     "repeatable");
  extend->callback([&] {
    action = [&] {
      return run_extend(extend_options, extend_directions, format, out);
    };
  });

  SpaceOptions system_options;
  CLI::App* system = app.add_subcommand("system", "print the linear system");
  add_space_options(system, system_options);
  system->callback([&] {
    action = [&] { return run_system(system_options, format, out); };
  });

  SpaceOptions graph_options;
  std::string graph_via;
  CLI::App* graph = app.add_subcommand("graph", "solve the connecting map");
  add_space_options(graph, graph_options);
  graph->add_option("--via", graph_via,
                    "derivation route: t2 (tangent shift) or pnr "
                    "(central product)")
      ->check(CLI::IsMember({"t2", "pnr"}));
  graph->callback([&] {
    action = [&] { return run_graph(graph_options, graph_via, format, out); };
  });

  SpaceOptions verify_options;
  std::string verify_phi = "riemannian";
  std::size_t verify_samples = 50;
  std::uint64_t verify_seed = 20240815;
  CLI::App* verify = app.add_subcommand(
      "verify", "randomized numeric check of the solved map");
  add_space_options(verify, verify_options);
  verify->add_option("--phi", verify_phi, "norm profile name");
  verify->add_option("--samples", verify_samples, "number of random samples");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->callback([&] {
    action = [&] {
      return run_verify(verify_options, verify_phi, verify_samples,
                        verify_seed, format, out);
    };
  });

  std::string adm_phi;
  double adm_b = 0.0;
  std::size_t adm_grid = 1001;
  CLI::App* adm = app.add_subcommand(
      "admissibility", "positivity conditions of a norm profile");
  adm->add_option("--phi", adm_phi, "norm profile name")->required();
  adm->add_option("--b", adm_b, "one-form length")->required();
  adm->add_option("--grid", adm_grid, "grid points");
  adm->callback([&] {
    action = [&] { return run_admissibility(adm_phi, adm_b, adm_grid, format, out); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& parse_error) {
    err << "error: " << parse_error.what() << "\n";
    return kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return kExitInput;
  }
}

}  // namespace gograph
