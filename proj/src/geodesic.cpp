// geodesic.cpp -- geodesic graphs and the geodesic-orbit test.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "gograph/errors.hpp"

namespace gograph {

namespace {

bool all_zero(const std::vector<RatFunc>& entries) {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RatFunc& f) { return f.is_zero(); });
}

/// Monic-free least common multiple, unit-normalised like gcd.
Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(common_ring(a, b));
  const Poly g = gcd(a, b);
  const auto quotient = a.try_divide(g);
  return unit_normalize(*quotient * b);
}

/// Degree cost of one component: zero costs nothing, otherwise the graded
/// degrees of numerator and denominator add up.
int component_cost(const RatFunc& f) {
  if (f.is_zero()) return 0;
  const int num = f.numerator().graded_degree();
  const int den = f.denominator().graded_degree();
  return std::max(num, 0) + std::max(den, 0);
}

int total_cost(const std::vector<RatFunc>& components) {
  int cost = 0;
  for (const RatFunc& f : components) cost += component_cost(f);
  return cost;
}

/// Greedy degree minimisation over the solution coset: repeatedly zero one
/// component with a nullspace shift while the total cost drops strictly,
/// preferring the highest component index among equal improvements.
std::vector<RatFunc> minimize_representative(
    std::vector<RatFunc> xi,
    const std::vector<std::vector<RatFunc>>& nullspace) {
  if (nullspace.empty()) return xi;
  bool improved = true;
  while (improved) {
    improved = false;
    const int current = total_cost(xi);
    int best_cost = current;
    std::size_t best_index = 0;
    std::optional<std::vector<RatFunc>> best;
    for (const auto& direction : nullspace) {
      for (std::size_t i = 0; i < xi.size(); ++i) {
        if (direction[i].is_zero() || xi[i].is_zero()) continue;
        const RatFunc factor = xi[i] / direction[i];
        std::vector<RatFunc> candidate = xi;
        for (std::size_t k = 0; k < xi.size(); ++k) {
          candidate[k] -= factor * direction[k];
        }
        const int cost = total_cost(candidate);
        if (cost >= current) continue;
        if (!best || cost < best_cost || (cost == best_cost && i > best_index)) {
          best_cost = cost;
          best_index = i;
          best = std::move(candidate);
        }
      }
    }
    if (best) {
      xi = std::move(*best);
      improved = true;
    }
  }
  return xi;
}

std::string witness_description(const LinearWitness& witness,
                                const std::vector<std::string>& row_labels) {
  std::ostringstream text;
  text << "row combination ";
  bool first = true;
  for (std::size_t i = 0; i < witness.combination.size(); ++i) {
    if (witness.combination[i].is_zero()) continue;
    if (!first) text << " + ";
    text << "(" << witness.combination[i].str() << ")*" << row_labels.at(i);
    first = false;
  }
  text << " forces 0 = " << witness.value.str();
  return text.str();
}

/// Fills classification and shared-denominator degrees of a solved map.
GeodesicGraphResult finish_result(GraphMode mode,
                                  std::vector<RatFunc> components,
                                  std::size_t nullity, const RingPtr& ring) {
  GeodesicGraphResult result;
  result.mode = mode;
  result.nullity = nullity;

  bool linear = true;
  Poly common_den = Poly::constant(ring, Rational(1));
  for (const RatFunc& f : components) {
    if (!f.is_polynomial() || f.numerator().graded_degree() > 1) linear = false;
    if (!f.is_zero()) common_den = poly_lcm(common_den, f.denominator());
  }
  result.kind = linear ? GraphKind::Linear : GraphKind::Rational;

  int numerator_degree = -1;
  for (const RatFunc& f : components) {
    if (f.is_zero()) continue;
    const auto cofactor = common_den.try_divide(f.denominator());
    const Poly numerator = f.numerator() * *cofactor;
    numerator_degree = std::max(numerator_degree, numerator.graded_degree());
  }
  result.numerator_degree = numerator_degree;
  result.denominator_degree = std::max(common_den.graded_degree(), 0);
  result.components = std::move(components);
  return result;
}

std::vector<std::vector<double>> evaluate_matrix(
    const FieldMatrix& matrix, const std::vector<double>& values) {
  std::vector<std::vector<double>> result(
      matrix.rows(), std::vector<double>(matrix.cols(), 0.0));
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      result[r][c] = matrix.at(r, c).evaluate(values);
    }
  }
  return result;
}

std::vector<RatFunc> to_ratfunc(const RingPtr& ring,
                                const std::vector<Rational>& values) {
  std::vector<RatFunc> result;
  result.reserve(values.size());
  for (const Rational& value : values) {
    result.push_back(RatFunc::constant(ring, value));
  }
  return result;
}

}  // namespace

std::vector<RatFunc> GeodesicSystem::rhs() const {
  std::vector<RatFunc> result = b;
  for (std::size_t i = 0; i < result.size(); ++i) result[i] += c[i];
  return result;
}

std::string GeodesicSystem::str() const {
  std::ostringstream text;
  for (std::size_t j = 0; j < a.rows(); ++j) {
    text << row_labels.at(j) << ": [";
    for (std::size_t col = 0; col < a.cols(); ++col) {
      if (col) text << ", ";
      text << a.at(j, col).str();
    }
    text << "] | " << b[j].str();
    if (mode == GraphMode::Finsler) text << " | " << c[j].str();
    text << "\n";
  }
  return text.str();
}

GeodesicSystem build_system(const Decomposition& space, const FieldMatrix& gram,
                            const std::vector<RatFunc>& one_form,
                            GraphMode mode) {
  const RingPtr& ring = space.ring();
  if (gram.ring() != ring) {
    throw RingMismatchError("metric and decomposition use different rings");
  }
  if (const auto defect = metric_invariance_defect(space, gram)) {
    throw NotInvariantError(*defect);
  }

  const std::size_t m_dim = space.m_dim();
  const std::size_t h_dim = space.h_dim();

  std::vector<RatFunc> v(m_dim, RatFunc::zero(ring));
  if (!one_form.empty()) {
    if (one_form.size() != m_dim) {
      throw ShapeError("one-form length does not match the complement");
    }
    v = one_form;
  }
  const bool has_v = !all_zero(v);
  if (mode == GraphMode::Riemannian && has_v) {
    throw DomainError("a one-form was supplied in quadratic mode");
  }
  if (mode == GraphMode::Finsler && !ring->norm_ratio_index()) {
    throw DomainError("one-form mode needs the norm-ratio variable in the ring");
  }
  if (has_v) {
    for (std::size_t a = 0; a < h_dim; ++a) {
      if (!all_zero(space.adjoint_on_m(a).apply(v))) {
        throw NotInvariantError("the one-form direction is moved by " +
                                space.h_labels().at(a));
      }
    }
  }

  const std::vector<RatFunc> x = space.generic_m_coords();
  const std::vector<RatFunc> x_algebra = space.embed_m(x);
  const RatFunc zeta = mode == GraphMode::Finsler
                           ? RatFunc::variable(ring, "zeta")
                           : RatFunc::zero(ring);

  GeodesicSystem system{FieldMatrix(ring, m_dim, h_dim),
                        std::vector<RatFunc>(m_dim, RatFunc::zero(ring)),
                        std::vector<RatFunc>(m_dim, RatFunc::zero(ring)),
                        space.m_labels(),
                        space.h_labels(),
                        mode};

  for (std::size_t j = 0; j < m_dim; ++j) {
    const std::vector<RatFunc> u = space.m_column(j);
    const std::vector<RatFunc> xu =
        space.project_m(space.algebra().bracket(x_algebra, u));
    system.b[j] = -bilinear(gram, x, xu);
    if (has_v) system.c[j] = -(zeta * bilinear(gram, v, xu));
    for (std::size_t a = 0; a < h_dim; ++a) {
      const std::vector<RatFunc> eu =
          space.project_m(space.algebra().bracket(space.h_column(a), u));
      system.a.at(j, a) = bilinear(gram, x, eu);
      if (has_v && !bilinear(gram, v, eu).is_zero()) {
        throw NotInvariantError(
            "the one-form direction pairs with [" + space.h_labels().at(a) +
            ", " + space.m_labels().at(j) + "] under the metric");
      }
    }
  }
  return system;
}

std::string GeodesicGraphResult::str() const {
  std::ostringstream text;
  switch (kind) {
    case GraphKind::Unsolvable:
      text << "unsolvable: " << witness_text;
      return text.str();
    case GraphKind::Linear:
      text << "linear";
      break;
    case GraphKind::Rational:
      text << "rational (degrees " << numerator_degree << "/"
           << denominator_degree << ")";
      break;
  }
  text << ", components [";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) text << ", ";
    text << components[i].str();
  }
  text << "]";
  if (nullity) text << ", nullity " << nullity;
  return text.str();
}

GeodesicGraphResult solve_graph(const GeodesicSystem& system) {
  const SolveOutcome outcome = solve_linear(system.a, system.rhs());
  if (const auto* witness = std::get_if<LinearWitness>(&outcome)) {
    GeodesicGraphResult result;
    result.mode = system.mode;
    result.kind = GraphKind::Unsolvable;
    result.witness_text = witness_description(*witness, system.row_labels);
    return result;
  }
  const auto& solution = std::get<LinearSolution>(outcome);
  std::vector<RatFunc> xi =
      minimize_representative(solution.particular, solution.nullspace);
  return finish_result(system.mode, std::move(xi), solution.nullspace.size(),
                       system.a.ring());
}

std::string GoVerdict::str() const {
  std::ostringstream text;
  if (go) {
    text << "geodesic-orbit: yes (rank " << rank << ")";
  } else {
    text << "geodesic-orbit: no (rank " << rank << " vs " << augmented_rank
         << "); " << witness_text;
  }
  return text.str();
}

GoVerdict check_go(const GeodesicSystem& system) {
  GoVerdict verdict;
  verdict.rank = rref(system.a).rank;

  const std::vector<RatFunc> rhs = system.rhs();
  FieldMatrix rhs_column(system.a.ring(), system.a.rows(), 1);
  for (std::size_t j = 0; j < rhs.size(); ++j) rhs_column.at(j, 0) = rhs[j];
  verdict.augmented_rank = rref(system.a.augment(rhs_column)).rank;

  verdict.go = verdict.rank == verdict.augmented_rank;
  if (!verdict.go) {
    const SolveOutcome outcome = solve_linear(system.a, rhs);
    verdict.witness_text = witness_description(
        std::get<LinearWitness>(outcome), system.row_labels);
  }
  return verdict;
}

std::vector<RatFunc> graph_residual(const GeodesicSystem& system,
                                    const std::vector<RatFunc>& components) {
  if (components.size() != system.a.cols()) {
    throw ShapeError("component count does not match the isotropy dimension");
  }
  std::vector<RatFunc> residual = system.a.apply(components);
  const std::vector<RatFunc> rhs = system.rhs();
  for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= rhs[j];
  return residual;
}

Decomposition centered_complement(const Decomposition& space,
                                  const std::vector<Rational>& direction) {
  const RingPtr& ring = space.ring();
  if (direction.size() != space.m_dim()) {
    throw ShapeError("direction length does not match the complement");
  }
  std::size_t index = space.m_dim();
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (!direction[i].is_zero()) {
      index = i;
      break;
    }
  }
  if (index == space.m_dim()) {
    throw DomainError("the zero direction cannot be centered");
  }

  const std::vector<std::vector<Rational>> center = space.algebra().center();
  if (center.empty()) {
    throw DecompositionError("the algebra has no center to align with");
  }

  // Solve for a central element whose m-part is the direction.
  FieldMatrix shadows(ring, space.m_dim(), center.size());
  for (std::size_t k = 0; k < center.size(); ++k) {
    const std::vector<RatFunc> m_part =
        space.project_m(to_ratfunc(ring, center[k]));
    for (std::size_t i = 0; i < space.m_dim(); ++i) {
      shadows.at(i, k) = m_part[i];
    }
  }
  const SolveOutcome outcome =
      solve_linear(shadows, to_ratfunc(ring, direction));
  if (std::holds_alternative<LinearWitness>(outcome)) {
    throw DecompositionError(
        "no central element projects onto the given direction");
  }
  const auto& weights = std::get<LinearSolution>(outcome).particular;
  std::vector<RatFunc> central(space.algebra().dim(), RatFunc::zero(ring));
  for (std::size_t k = 0; k < center.size(); ++k) {
    for (std::size_t r = 0; r < central.size(); ++r) {
      central[r] += weights[k] * RatFunc::constant(ring, center[k][r]);
    }
  }

  // New column: embedding the direction in the shifted frame yields exactly
  // the central element found above.
  std::vector<RatFunc> column = central;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (i == index || direction[i].is_zero()) continue;
    const std::vector<RatFunc> other = space.m_column(i);
    for (std::size_t r = 0; r < column.size(); ++r) {
      column[r] -= RatFunc::constant(ring, direction[i]) * other[r];
    }
  }
  const RatFunc scale =
      RatFunc::constant(ring, Rational(1) / direction[index]);
  for (RatFunc& entry : column) entry *= scale;

  Decomposition centered = space.with_m_column_replaced(index, column);
  if (const auto defect = centered.reductivity_defect()) {
    throw NotReductiveError("the centered complement is not reductive: " +
                            *defect);
  }
  return centered;
}

GeodesicGraphResult graph_via_t2(const Decomposition& space,
                                 const FieldMatrix& gram,
                                 const std::vector<Rational>& direction,
                                 const RatFunc& coefficient,
                                 const GeodesicGraphResult& riemannian_graph) {
  const RingPtr& ring = space.ring();
  if (riemannian_graph.mode != GraphMode::Riemannian) {
    throw DomainError("the tangent-shift route starts from a quadratic-mode graph");
  }
  if (riemannian_graph.kind == GraphKind::Unsolvable) {
    throw DomainError("the tangent-shift route needs a solved graph");
  }
  if (!ring->norm_ratio_index()) {
    throw DomainError("the tangent-shift route needs the norm-ratio variable");
  }
  if (!coefficient.is_polynomial()) {
    throw DomainError("the one-form coefficient must be polynomial");
  }
  if (direction.size() != space.m_dim()) {
    throw ShapeError("direction length does not match the complement");
  }

  // The shift is only valid when the direction embeds as a central element.
  const std::vector<RatFunc> embedded =
      space.embed_m(to_ratfunc(ring, direction));
  const std::size_t n = space.algebra().dim();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<RatFunc> basis_vector(n, RatFunc::zero(ring));
    basis_vector[k] = RatFunc::constant(ring, Rational(1));
    if (!all_zero(space.algebra().bracket(embedded, basis_vector))) {
      throw DecompositionError(
          "the complement does not embed the direction centrally");
    }
  }

  // Shift each coordinate along the direction: x_i -> x_i + zeta*coeff*d_i.
  const Poly zeta = Poly::variable(ring, "zeta");
  std::vector<RatFunc> shifted = riemannian_graph.components;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (direction[i].is_zero()) continue;
    const Poly replacement = Poly::variable(ring, i) +
                             zeta * coefficient.numerator() * direction[i];
    for (RatFunc& component : shifted) {
      component = component.substitute(i, replacement);
    }
  }

  std::vector<RatFunc> one_form(space.m_dim(), RatFunc::zero(ring));
  for (std::size_t i = 0; i < direction.size(); ++i) {
    one_form[i] = coefficient * RatFunc::constant(ring, direction[i]);
  }
  const GeodesicSystem system =
      build_system(space, gram, one_form, GraphMode::Finsler);
  if (!all_zero(graph_residual(system, shifted))) {
    throw DecompositionError(
        "the shifted graph fails the one-form geodesic equations");
  }
  const GeodesicGraphResult direct = solve_graph(system);
  if (direct.nullity == 0 && direct.components != shifted) {
    throw DecompositionError(
        "the tangent-shift route disagrees with the direct solution");
  }
  return finish_result(GraphMode::Finsler, std::move(shifted), direct.nullity,
                       ring);
}

GeodesicGraphResult graph_via_pnr(const Decomposition& space,
                                  const FieldMatrix& gram,
                                  const std::vector<Rational>& central,
                                  const RatFunc& coefficient) {
  const RingPtr& ring = space.ring();
  const std::size_t n = space.algebra().dim();
  if (central.size() != n) {
    throw ShapeError("element length does not match the algebra dimension");
  }
  if (!ring->norm_ratio_index()) {
    throw DomainError("the product route needs the norm-ratio variable");
  }
  std::vector<Rational> basis_vector(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    basis_vector.assign(n, Rational(0));
    basis_vector[k] = Rational(1);
    const std::vector<Rational> bracket =
        space.algebra().bracket(central, basis_vector);
    if (!std::all_of(bracket.begin(), bracket.end(),
                     [](const Rational& r) { return r.is_zero(); })) {
      throw DecompositionError("the given element is not central");
    }
  }
  if (const auto triple = natural_reductivity_defect(space, gram)) {
    throw NotReductiveError(
        "the complement is not naturally reductive; offending triple (" +
        space.m_labels().at((*triple)[0]) + ", " +
        space.m_labels().at((*triple)[1]) + ", " +
        space.m_labels().at((*triple)[2]) + ")");
  }

  const std::vector<RatFunc> central_rf = to_ratfunc(ring, central);
  const std::vector<RatFunc> m_part = space.project_m(central_rf);
  if (all_zero(m_part)) {
    throw DecompositionError("the central element has no tangent part");
  }
  const std::vector<RatFunc> h_part = space.project_h(central_rf);

  const RatFunc zeta = RatFunc::variable(ring, "zeta");
  std::vector<RatFunc> components(space.h_dim(), RatFunc::zero(ring));
  for (std::size_t a = 0; a < space.h_dim(); ++a) {
    components[a] = -(zeta * coefficient * h_part[a]);
  }

  std::vector<RatFunc> one_form(space.m_dim(), RatFunc::zero(ring));
  for (std::size_t i = 0; i < space.m_dim(); ++i) {
    one_form[i] = coefficient * m_part[i];
  }
  const GeodesicSystem system =
      build_system(space, gram, one_form, GraphMode::Finsler);
  if (!all_zero(graph_residual(system, components))) {
    throw DecompositionError(
        "the product route fails the one-form geodesic equations");
  }
  const GeodesicGraphResult direct = solve_graph(system);
  return finish_result(GraphMode::Finsler, std::move(components),
                       direct.nullity, ring);
}

std::string NumericVerification::str() const {
  std::ostringstream text;
  text << (pass ? "pass" : "FAIL") << ": max scaled residual "
       << max_scaled_residual << " over " << samples << " samples (tolerance "
       << tolerance << ")";
  return text.str();
}

NumericVerification verify_graph_numeric(
    const Decomposition& space, const FieldMatrix& gram,
    const std::vector<RatFunc>& one_form, const PhiFamily& family,
    const std::vector<RatFunc>& components,
    const std::map<std::string, double>& parameters, std::size_t samples,
    std::uint64_t seed, double tolerance) {
  const RingPtr& ring = space.ring();
  const std::size_t m_dim = space.m_dim();
  const std::size_t h_dim = space.h_dim();
  const std::size_t n = space.algebra().dim();
  if (components.size() != h_dim) {
    throw ShapeError("component count does not match the isotropy dimension");
  }
  if (!one_form.empty() && one_form.size() != m_dim) {
    throw ShapeError("one-form length does not match the complement");
  }

  // Ring layout: leading coordinates are tangent slots, then parameters,
  // then possibly the norm-ratio variable.
  std::vector<std::size_t> coordinate_slots;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (ring->kind(i) == VarKind::Coordinate) coordinate_slots.push_back(i);
  }
  if (coordinate_slots.size() != m_dim) {
    throw ShapeError("ring coordinates do not match the complement dimension");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);

  NumericVerification report;
  report.samples = samples;
  report.tolerance = tolerance;

  for (std::size_t sample = 0; sample < samples; ++sample) {
    std::vector<double> x(m_dim);
    for (double& entry : x) entry = draw(rng);

    std::vector<double> values(ring->size(), 0.0);
    for (std::size_t i = 0; i < m_dim; ++i) values[coordinate_slots[i]] = x[i];
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (ring->kind(i) != VarKind::Parameter) continue;
      const auto found = parameters.find(ring->name(i));
      if (found == parameters.end()) {
        throw DomainError("no value given for parameter " + ring->name(i));
      }
      values[i] = found->second;
    }

    NumericMetric metric{evaluate_matrix(gram, values),
                         std::vector<double>(m_dim, 0.0), family};
    if (!one_form.empty()) {
      for (std::size_t i = 0; i < m_dim; ++i) {
        metric.one_form[i] = one_form[i].evaluate(values);
      }
    }
    const double zeta = zeta_value(metric, x);
    if (const auto slot = ring->norm_ratio_index()) values[*slot] = zeta;

    std::vector<double> xi(h_dim);
    for (std::size_t a = 0; a < h_dim; ++a) {
      xi[a] = components[a].evaluate(values);
    }

    const auto h_frame = evaluate_matrix(space.h_frame(), values);
    const auto m_frame = evaluate_matrix(space.m_frame(), values);
    const auto inverse = evaluate_matrix(space.inverse_frame(), values);

    std::vector<double> y(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t a = 0; a < h_dim; ++a) y[r] += h_frame[r][a] * xi[a];
      for (std::size_t i = 0; i < m_dim; ++i) y[r] += m_frame[r][i] * x[i];
    }

    const double f = norm(metric, x);
    const double scale = std::max(1.0, f * f);

    for (std::size_t j = 0; j < m_dim; ++j) {
      std::vector<double> u(n);
      for (std::size_t r = 0; r < n; ++r) u[r] = m_frame[r][j];
      const std::vector<double> bracket = space.algebra().bracket(y, u);
      std::vector<double> bracket_m(m_dim, 0.0);
      for (std::size_t i = 0; i < m_dim; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
          bracket_m[i] += inverse[h_dim + i][r] * bracket[r];
        }
      }
      const double residual =
          std::abs(tangent_pairing(metric, x, bracket_m)) / scale;
      report.max_scaled_residual = std::max(report.max_scaled_residual, residual);
    }
  }

  report.pass = report.max_scaled_residual < tolerance;
  return report;
}

}  // namespace gograph
