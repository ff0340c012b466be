// homogeneous.cpp -- reductive decompositions of homogeneous spaces.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/homogeneous.hpp"

#include <map>
#include <utility>

#include "gograph/errors.hpp"

namespace gograph {

namespace {

bool all_zero(const std::vector<RatFunc>& entries) {
  for (const RatFunc& entry : entries) {
    if (!entry.is_zero()) return false;
  }
  return true;
}

/// Constant entries of a matrix as rationals; nullopt when any entry is not
/// constant.
std::optional<std::vector<std::vector<Rational>>> to_rational(
    const FieldMatrix& matrix) {
  std::vector<std::vector<Rational>> result(
      matrix.rows(), std::vector<Rational>(matrix.cols(), Rational(0)));
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (!matrix.at(r, c).is_constant()) return std::nullopt;
      result[r][c] = matrix.at(r, c).constant_value();
    }
  }
  return result;
}

std::vector<RatFunc> to_field(const RingPtr& ring,
                              const std::vector<Rational>& entries) {
  std::vector<RatFunc> result;
  result.reserve(entries.size());
  for (const Rational& entry : entries) {
    result.push_back(RatFunc::constant(ring, entry));
  }
  return result;
}

}  // namespace

Decomposition::Decomposition(LieAlgebra algebra, RingPtr ring,
                             FieldMatrix h_frame, FieldMatrix m_frame,
                             std::vector<std::string> h_labels,
                             std::vector<std::string> m_labels)
    : m_algebra(std::move(algebra)),
      m_ring(std::move(ring)),
      m_h_frame(std::move(h_frame)),
      m_m_frame(std::move(m_frame)),
      m_h_labels(std::move(h_labels)),
      m_m_labels(std::move(m_labels)),
      m_inverse(m_ring, 0, 0) {
  const std::size_t n = m_algebra.dim();
  if (m_h_frame.rows() != n || m_m_frame.rows() != n) {
    throw ShapeError("frame columns must have one entry per algebra dimension");
  }
  if (m_h_frame.cols() + m_m_frame.cols() != n) {
    throw ShapeError("h and m frames must together span " + std::to_string(n) +
                     " dimensions");
  }
  if (m_h_labels.size() != m_h_frame.cols() ||
      m_m_labels.size() != m_m_frame.cols()) {
    throw ShapeError("frame labels must match the frame column counts");
  }
  if (m_h_frame.ring() != m_ring || m_m_frame.ring() != m_ring) {
    throw RingMismatchError("frames must live in the decomposition's ring");
  }
  for (std::size_t i = 0; i < m_m_frame.cols(); ++i) {
    if (i >= m_ring->size() || m_ring->kind(i) != VarKind::Coordinate) {
      throw DecompositionError(
          "the ring must lead with one coordinate variable per m-direction");
    }
  }

  const FieldMatrix full = m_h_frame.augment(m_m_frame);
  RrefResult reduced = rref(full.augment(FieldMatrix::identity(m_ring, n)));
  bool invertible = reduced.rank == n;
  for (std::size_t i = 0; invertible && i < n; ++i) {
    invertible = reduced.pivot_columns[i] == i;
  }
  if (!invertible) {
    throw NotComplementError("h and m frames do not span the algebra");
  }
  m_inverse = reduced.reduced.column_slice(n, 2 * n);
}

Decomposition Decomposition::standard(LieAlgebra algebra, RingPtr ring,
                                      std::size_t h_dim) {
  const std::size_t n = algebra.dim();
  if (h_dim > n) {
    throw ShapeError("isotropy dimension exceeds the algebra dimension");
  }
  FieldMatrix h_frame(ring, n, h_dim);
  FieldMatrix m_frame(ring, n, n - h_dim);
  const RatFunc one = RatFunc::constant(ring, Rational(1));
  std::vector<std::string> h_labels, m_labels;
  for (std::size_t i = 0; i < h_dim; ++i) {
    h_frame.at(i, i) = one;
    h_labels.push_back(algebra.label(i));
  }
  for (std::size_t j = 0; j < n - h_dim; ++j) {
    m_frame.at(h_dim + j, j) = one;
    m_labels.push_back(algebra.label(h_dim + j));
  }
  return Decomposition(std::move(algebra), std::move(ring), std::move(h_frame),
                       std::move(m_frame), std::move(h_labels),
                       std::move(m_labels));
}

std::vector<RatFunc> Decomposition::h_column(std::size_t index) const {
  std::vector<RatFunc> column;
  column.reserve(m_algebra.dim());
  for (std::size_t r = 0; r < m_algebra.dim(); ++r) {
    column.push_back(m_h_frame.at(r, index));
  }
  return column;
}

std::vector<RatFunc> Decomposition::m_column(std::size_t index) const {
  std::vector<RatFunc> column;
  column.reserve(m_algebra.dim());
  for (std::size_t r = 0; r < m_algebra.dim(); ++r) {
    column.push_back(m_m_frame.at(r, index));
  }
  return column;
}

std::pair<std::vector<RatFunc>, std::vector<RatFunc>> Decomposition::split(
    const std::vector<RatFunc>& vector) const {
  if (vector.size() != m_algebra.dim()) {
    throw ShapeError("vector length must equal the algebra dimension");
  }
  const std::vector<RatFunc> coords = m_inverse.apply(vector);
  std::vector<RatFunc> h_part(coords.begin(), coords.begin() + h_dim());
  std::vector<RatFunc> m_part(coords.begin() + h_dim(), coords.end());
  return {std::move(h_part), std::move(m_part)};
}

std::vector<RatFunc> Decomposition::project_m(
    const std::vector<RatFunc>& vector) const {
  return split(vector).second;
}

std::vector<RatFunc> Decomposition::project_h(
    const std::vector<RatFunc>& vector) const {
  return split(vector).first;
}

std::vector<RatFunc> Decomposition::embed_m(
    const std::vector<RatFunc>& coords) const {
  return m_m_frame.apply(coords);
}

std::vector<RatFunc> Decomposition::embed_h(
    const std::vector<RatFunc>& coords) const {
  return m_h_frame.apply(coords);
}

std::vector<RatFunc> Decomposition::generic_m_coords() const {
  std::vector<RatFunc> coords;
  coords.reserve(m_dim());
  for (std::size_t i = 0; i < m_dim(); ++i) {
    coords.push_back(RatFunc(Poly::variable(m_ring, i)));
  }
  return coords;
}

std::optional<std::string> Decomposition::reductivity_defect() const {
  for (std::size_t a = 0; a < h_dim(); ++a) {
    for (std::size_t b = a + 1; b < h_dim(); ++b) {
      const auto parts = split(m_algebra.bracket(h_column(a), h_column(b)));
      if (!all_zero(parts.second)) {
        return "[" + m_h_labels[a] + ", " + m_h_labels[b] +
               "] has a component outside h";
      }
    }
  }
  for (std::size_t a = 0; a < h_dim(); ++a) {
    for (std::size_t j = 0; j < m_dim(); ++j) {
      const auto parts = split(m_algebra.bracket(h_column(a), m_column(j)));
      if (!all_zero(parts.first)) {
        return "[" + m_h_labels[a] + ", " + m_m_labels[j] +
               "] has a component outside m";
      }
    }
  }
  return std::nullopt;
}

FieldMatrix Decomposition::adjoint_on_m(std::size_t h_index) const {
  return ad_on_m(h_column(h_index));
}

FieldMatrix Decomposition::ad_on_m(const std::vector<RatFunc>& v) const {
  FieldMatrix result(m_ring, m_dim(), m_dim());
  for (std::size_t j = 0; j < m_dim(); ++j) {
    const std::vector<RatFunc> image = project_m(m_algebra.bracket(v, m_column(j)));
    for (std::size_t i = 0; i < m_dim(); ++i) {
      result.at(i, j) = image[i];
    }
  }
  return result;
}

std::vector<std::vector<RatFunc>> Decomposition::invariant_vectors() const {
  FieldMatrix stacked(m_ring, h_dim() * m_dim(), m_dim());
  for (std::size_t a = 0; a < h_dim(); ++a) {
    const FieldMatrix action = adjoint_on_m(a);
    for (std::size_t i = 0; i < m_dim(); ++i) {
      for (std::size_t j = 0; j < m_dim(); ++j) {
        stacked.at(a * m_dim() + i, j) = action.at(i, j);
      }
    }
  }
  const std::vector<RatFunc> zero_rhs(stacked.rows(), RatFunc::zero(m_ring));
  SolveOutcome outcome = solve_linear(stacked, zero_rhs);
  return std::get<LinearSolution>(outcome).nullspace;
}

Decomposition Decomposition::with_m_column_replaced(
    std::size_t index, const std::vector<RatFunc>& column,
    const std::optional<std::string>& label) const {
  if (index >= m_dim()) {
    throw ShapeError("m-frame column index out of range");
  }
  if (column.size() != m_algebra.dim()) {
    throw ShapeError("replacement column must have one entry per dimension");
  }
  FieldMatrix new_frame = m_m_frame;
  for (std::size_t r = 0; r < m_algebra.dim(); ++r) {
    new_frame.at(r, index) = column[r];
  }
  std::vector<std::string> new_labels = m_m_labels;
  if (label.has_value()) new_labels[index] = *label;
  return Decomposition(m_algebra, m_ring, m_h_frame, std::move(new_frame),
                       m_h_labels, std::move(new_labels));
}

RatFunc bilinear(const FieldMatrix& gram, const std::vector<RatFunc>& u,
                 const std::vector<RatFunc>& v) {
  const std::vector<RatFunc> gv = gram.apply(v);
  if (u.size() != gv.size()) {
    throw ShapeError("bilinear form arguments must match the matrix shape");
  }
  RatFunc sum = RatFunc::zero(gram.ring());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || gv[i].is_zero()) continue;
    sum += u[i] * gv[i];
  }
  return sum;
}

std::optional<std::string> metric_invariance_defect(const Decomposition& space,
                                                    const FieldMatrix& gram) {
  if (gram.rows() != space.m_dim() || gram.cols() != space.m_dim()) {
    throw ShapeError("metric matrix must be square of m's dimension");
  }
  if (gram.ring() != space.ring()) {
    throw RingMismatchError("metric matrix must live in the space's ring");
  }
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = i + 1; j < gram.cols(); ++j) {
      if (!(gram.at(i, j) == gram.at(j, i))) {
        return "metric matrix is not symmetric in entries (" +
               std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      }
    }
  }
  for (std::size_t a = 0; a < space.h_dim(); ++a) {
    const FieldMatrix action = space.adjoint_on_m(a);
    const FieldMatrix defect = action.transpose() * gram + gram * action;
    if (!defect.is_zero()) {
      return "ad(" + space.h_labels()[a] +
             ") is not skew-symmetric for the metric";
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> natural_reductivity_defect(
    const Decomposition& space, const FieldMatrix& gram) {
  const std::size_t m = space.m_dim();
  // m-projected brackets of all ordered m-basis pairs.
  std::vector<std::vector<std::vector<RatFunc>>> table(m);
  for (std::size_t i = 0; i < m; ++i) {
    table[i].resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      table[i][j] = space.project_m(
          space.algebra().bracket(space.m_column(i), space.m_column(j)));
    }
  }
  std::vector<std::vector<RatFunc>> units(m);
  for (std::size_t k = 0; k < m; ++k) {
    units[k].assign(m, RatFunc::zero(space.ring()));
    units[k][k] = RatFunc::constant(space.ring(), Rational(1));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = j; k < m; ++k) {
        // Symmetric in (j, k), so only j <= k is checked.
        RatFunc value = bilinear(gram, table[i][j], units[k]) +
                        bilinear(gram, units[j], table[i][k]);
        if (!value.is_zero()) {
          return std::array<std::size_t, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

Decomposition change_complement(const Decomposition& space,
                                const FieldMatrix& map) {
  if (map.rows() != space.h_dim() || map.cols() != space.m_dim()) {
    throw ShapeError("complement shift must be h_dim x m_dim");
  }
  if (map.ring() != space.ring()) {
    throw RingMismatchError("complement shift must live in the space's ring");
  }
  // Equivariance: ad(H_a)|_h composed with the map must equal the map
  // composed with ad(H_a)|_m, for every isotropy generator.
  for (std::size_t a = 0; a < space.h_dim(); ++a) {
    FieldMatrix ad_h(space.ring(), space.h_dim(), space.h_dim());
    for (std::size_t b = 0; b < space.h_dim(); ++b) {
      const std::vector<RatFunc> image = space.project_h(
          space.algebra().bracket(space.h_column(a), space.h_column(b)));
      for (std::size_t r = 0; r < space.h_dim(); ++r) {
        ad_h.at(r, b) = image[r];
      }
    }
    if (!(ad_h * map == map * space.adjoint_on_m(a))) {
      throw NotEquivariantError("complement shift does not commute with ad(" +
                                space.h_labels()[a] + ")");
    }
  }
  const FieldMatrix new_frame = [&] {
    FieldMatrix frame = space.m_frame();
    const FieldMatrix shift = space.h_frame() * map;
    for (std::size_t r = 0; r < frame.rows(); ++r) {
      for (std::size_t c = 0; c < frame.cols(); ++c) {
        frame.at(r, c) += shift.at(r, c);
      }
    }
    return frame;
  }();
  return Decomposition(space.algebra(), space.ring(), space.h_frame(),
                       new_frame, space.h_labels(), space.m_labels());
}

IsotropyExtension extend_isotropy(
    const Decomposition& space, const FieldMatrix& gram,
    const std::vector<std::vector<Rational>>& directions,
    const std::vector<std::string>& labels) {
  const std::size_t n = space.algebra().dim();
  const std::size_t h = space.h_dim();
  const std::size_t m = space.m_dim();
  const std::size_t r = directions.size();
  const RingPtr& ring = space.ring();
  if (r == 0) {
    throw ShapeError("isotropy extension needs at least one direction");
  }
  if (labels.size() != r) {
    throw ShapeError("isotropy extension needs one label per direction");
  }

  const auto h_frame_q = to_rational(space.h_frame());
  const auto m_frame_q = to_rational(space.m_frame());
  if (!h_frame_q || !m_frame_q) {
    throw DecompositionError("isotropy extension requires a rational frame");
  }

  // The operators W_i = ad(V_i)|_m, with their defining algebra vectors.
  std::vector<std::vector<Rational>> v_algebra(r);
  std::vector<std::vector<std::vector<Rational>>> w(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (directions[i].size() != m) {
      throw ShapeError("direction " + labels[i] +
                       " must have one m-coordinate per dimension");
    }
    bool degenerate = true;
    for (const Rational& entry : directions[i]) {
      if (!entry.is_zero()) {
        degenerate = false;
        break;
      }
    }
    if (degenerate) {
      throw DecompositionError("direction " + labels[i] +
                               " is zero and extends nothing");
    }
    const std::vector<RatFunc> v = space.embed_m(to_field(ring, directions[i]));
    v_algebra[i].reserve(n);
    for (const RatFunc& entry : v) v_algebra[i].push_back(entry.constant_value());
    for (std::size_t a = 0; a < h; ++a) {
      if (!all_zero(space.algebra().bracket(space.h_column(a), v))) {
        throw DecompositionError("direction " + labels[i] +
                                 " is not invariant under the isotropy");
      }
    }
    const auto w_i = to_rational(space.ad_on_m(v));
    if (!w_i) {
      throw DecompositionError("operator of direction " + labels[i] +
                               " is not rational");
    }
    w[i] = *w_i;

    FieldMatrix w_field(ring, m, m);
    for (std::size_t row = 0; row < m; ++row) {
      for (std::size_t col = 0; col < m; ++col) {
        w_field.at(row, col) = RatFunc::constant(ring, w[i][row][col]);
      }
    }
    if (!(w_field.transpose() * gram + gram * w_field).is_zero()) {
      throw NotInvariantError("the metric is not invariant under the operator of " +
                              labels[i]);
    }
  }

  // Expand each commutator [W_i, W_j] in the span of the isotropy operators
  // and the W_k.  All entries are rational, so the solve happens over a
  // variable-free ring.
  const RingPtr qring = PolyRing::create({}, {}, false);
  const auto adjoint_q = [&](std::size_t a) {
    const auto matrix = to_rational(space.adjoint_on_m(a));
    if (!matrix) {
      throw DecompositionError("isotropy extension requires a rational isotropy action");
    }
    return *matrix;
  };
  std::vector<std::vector<std::vector<Rational>>> ad_h(h);
  for (std::size_t a = 0; a < h; ++a) ad_h[a] = adjoint_q(a);

  FieldMatrix span(qring, m * m, h + r);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t row = 0; row < m; ++row) {
      for (std::size_t col = 0; col < m; ++col) {
        span.at(row * m + col, a) = RatFunc::constant(qring, ad_h[a][row][col]);
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t row = 0; row < m; ++row) {
      for (std::size_t col = 0; col < m; ++col) {
        span.at(row * m + col, h + i) = RatFunc::constant(qring, w[i][row][col]);
      }
    }
  }

  // Coefficients (over h then W) of every commutator [W_i, W_j], i < j.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> products;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      std::vector<RatFunc> rhs(m * m, RatFunc::zero(qring));
      for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
          Rational entry(0);
          for (std::size_t k = 0; k < m; ++k) {
            entry += w[i][row][k] * w[j][k][col] - w[j][row][k] * w[i][k][col];
          }
          rhs[row * m + col] = RatFunc::constant(qring, entry);
        }
      }
      SolveOutcome outcome = solve_linear(span, rhs);
      if (std::holds_alternative<LinearWitness>(outcome)) {
        throw DecompositionError("commutator [" + labels[i] + ", " + labels[j] +
                                 "] leaves the span of the isotropy operators");
      }
      const auto& solution = std::get<LinearSolution>(outcome);
      std::vector<Rational> coeffs;
      coeffs.reserve(h + r);
      for (const RatFunc& entry : solution.particular) {
        coeffs.push_back(entry.constant_value());
      }
      products[{i, j}] = std::move(coeffs);
    }
  }

  // Assemble the extended algebra on the original basis plus the W_i.
  std::vector<std::string> ext_labels = space.algebra().labels();
  ext_labels.insert(ext_labels.end(), labels.begin(), labels.end());
  LieAlgebra extended(ext_labels);
  const auto sparsify = [](const std::vector<Rational>& dense) {
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (std::size_t k = 0; k < dense.size(); ++k) {
      if (!dense[k].is_zero()) sparse.emplace_back(k, dense[k]);
    }
    return sparse;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      extended.set_bracket(i, j, sparsify(space.algebra().bracket_basis(i, j)));
    }
  }
  // [e_a, W_i] = -W_i(m-part of e_a): the isotropy part of e_a commutes with
  // W_i because V_i is invariant, and on m the operator acts directly.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<RatFunc> unit(n, RatFunc::zero(ring));
    unit[a] = RatFunc::constant(ring, Rational(1));
    const std::vector<RatFunc> m_part = space.project_m(unit);
    std::vector<Rational> m_coords;
    m_coords.reserve(m);
    for (const RatFunc& entry : m_part) m_coords.push_back(entry.constant_value());
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Rational> image_m(m, Rational(0));
      for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
          image_m[row] += w[i][row][col] * m_coords[col];
        }
      }
      // Back to algebra coordinates, negated: [e_a, W_i] = -[W_i, e_a].
      std::vector<Rational> value(n, Rational(0));
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
          value[row] -= (*m_frame_q)[row][col] * image_m[col];
        }
      }
      extended.set_bracket(a, n + i, sparsify(value));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const std::vector<Rational>& coeffs = products[{i, j}];
      std::vector<Rational> value(n + r, Rational(0));
      for (std::size_t a = 0; a < h; ++a) {
        for (std::size_t row = 0; row < n; ++row) {
          value[row] += (*h_frame_q)[row][a] * coeffs[a];
        }
      }
      for (std::size_t k = 0; k < r; ++k) {
        value[n + k] += coeffs[h + k];
      }
      extended.set_bracket(n + i, n + j, sparsify(value));
    }
  }
  if (const auto violation = extended.jacobi_violation()) {
    throw JacobiError(violation->i, violation->j, violation->k,
                      "isotropy extension violates the Jacobi identity for [" +
                          ext_labels[violation->i] + ", " +
                          ext_labels[violation->j] + ", " +
                          ext_labels[violation->k] + "]");
  }

  // Extended decomposition: same m, isotropy enlarged by the W_i.
  FieldMatrix ext_h_frame(ring, n + r, h + r);
  FieldMatrix ext_m_frame(ring, n + r, m);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t a = 0; a < h; ++a) {
      ext_h_frame.at(row, a) = space.h_frame().at(row, a);
    }
    for (std::size_t j = 0; j < m; ++j) {
      ext_m_frame.at(row, j) = space.m_frame().at(row, j);
    }
  }
  const RatFunc one = RatFunc::constant(ring, Rational(1));
  for (std::size_t i = 0; i < r; ++i) {
    ext_h_frame.at(n + i, h + i) = one;
  }
  std::vector<std::string> ext_h_labels = space.h_labels();
  ext_h_labels.insert(ext_h_labels.end(), labels.begin(), labels.end());

  Decomposition ext_space(extended, ring, std::move(ext_h_frame),
                          std::move(ext_m_frame), std::move(ext_h_labels),
                          space.m_labels());
  IsotropyExtension result{std::move(extended), std::move(ext_space), {}, {}, {}};

  for (std::size_t i = 0; i < r; ++i) {
    result.w_indices.push_back(h + i);
    std::vector<Rational> zbar(n + r, Rational(0));
    for (std::size_t row = 0; row < n; ++row) zbar[row] = v_algebra[i][row];
    zbar[n + i] = Rational(-1);
    bool central = true;
    for (std::size_t a = 0; a < n + r && central; ++a) {
      std::vector<Rational> unit(n + r, Rational(0));
      unit[a] = Rational(1);
      for (const Rational& entry : result.extended.bracket(zbar, unit)) {
        if (!entry.is_zero()) {
          central = false;
          break;
        }
      }
    }
    result.zbar.push_back(std::move(zbar));
    result.zbar_central.push_back(central);
  }
  return result;
}

}  // namespace gograph
