// poly.cpp -- sparse multivariate polynomials over the rationals.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gograph/errors.hpp"

namespace gograph {

namespace {

std::uint64_t monomial_degree(const Monomial& m) {
  std::uint64_t degree = 0;
  for (std::uint32_t e : m) degree += e;
  return degree;
}

}  // namespace

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const std::uint64_t da = monomial_degree(a);
  const std::uint64_t db = monomial_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// PolyRing
// ---------------------------------------------------------------------------

std::shared_ptr<const PolyRing> PolyRing::create(
    const std::vector<std::string>& coordinates,
    const std::vector<std::string>& parameters, bool with_norm_ratio) {
  auto ring = std::shared_ptr<PolyRing>(new PolyRing());
  auto add = [&ring](const std::string& name, VarKind kind) {
    if (name.empty()) throw ParseError("empty ring variable name");
    for (const std::string& existing : ring->m_names) {
      if (existing == name) {
        throw ParseError("duplicate ring variable name: '" + name + "'");
      }
    }
    ring->m_names.push_back(name);
    ring->m_kinds.push_back(kind);
  };
  for (const std::string& name : coordinates) add(name, VarKind::Coordinate);
  for (const std::string& name : parameters) add(name, VarKind::Parameter);
  if (with_norm_ratio) {
    add("zeta", VarKind::NormRatio);
    ring->m_norm_ratio = ring->m_names.size() - 1;
  }
  return ring;
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < m_names.size(); ++i) {
    if (m_names[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Poly construction
// ---------------------------------------------------------------------------

Poly Poly::zero(const RingPtr& ring) {
  Poly p;
  p.m_ring = ring;
  return p;
}

Poly Poly::constant(const RingPtr& ring, const Rational& value) {
  Poly p = zero(ring);
  if (!value.is_zero()) {
    p.m_terms.emplace(Monomial(ring->size(), 0), value);
  }
  return p;
}

Poly Poly::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->size()) {
    throw ParseError("ring variable index out of range");
  }
  Monomial m(ring->size(), 0);
  m[index] = 1;
  return term(ring, m, Rational(1));
}

Poly Poly::variable(const RingPtr& ring, const std::string& name) {
  const auto index = ring->index_of(name);
  if (!index) throw ParseError("unknown ring variable: '" + name + "'");
  return variable(ring, *index);
}

Poly Poly::term(const RingPtr& ring, const Monomial& monomial,
                const Rational& coefficient) {
  if (monomial.size() != ring->size()) {
    throw ParseError("monomial length does not match ring size");
  }
  Poly p = zero(ring);
  if (!coefficient.is_zero()) p.m_terms.emplace(monomial, coefficient);
  return p;
}

void Poly::require_ring() const {
  if (!m_ring) throw RingMismatchError("operation requires a ring-attached polynomial");
}

RingPtr common_ring(const Poly& a, const Poly& b) {
  if (a.ring() && b.ring()) {
    if (a.ring() != b.ring()) {
      throw RingMismatchError("polynomials belong to different rings");
    }
    return a.ring();
  }
  if (a.ring()) {
    if (!b.is_zero()) throw RingMismatchError("ring-less polynomial is not zero");
    return a.ring();
  }
  if (b.ring()) {
    if (!a.is_zero()) throw RingMismatchError("ring-less polynomial is not zero");
    return b.ring();
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

bool Poly::is_constant() const {
  if (m_terms.empty()) return true;
  return m_terms.size() == 1 && monomial_degree(m_terms.begin()->first) == 0;
}

Rational Poly::constant_value() const {
  if (m_terms.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value of a non-constant polynomial");
  return m_terms.begin()->second;
}

int Poly::total_degree() const {
  if (m_terms.empty()) return -1;
  return static_cast<int>(monomial_degree(m_terms.rbegin()->first));
}

int Poly::graded_degree() const {
  if (m_terms.empty()) return -1;
  int best = 0;
  for (const auto& [mono, coeff] : m_terms) {
    int degree = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (m_ring->kind(i) != VarKind::Parameter) degree += static_cast<int>(mono[i]);
    }
    best = std::max(best, degree);
  }
  return best;
}

bool Poly::is_homogeneous_graded() const {
  if (m_terms.empty()) return true;
  std::optional<int> expected;
  for (const auto& [mono, coeff] : m_terms) {
    int degree = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (m_ring->kind(i) != VarKind::Parameter) degree += static_cast<int>(mono[i]);
    }
    if (!expected) {
      expected = degree;
    } else if (*expected != degree) {
      return false;
    }
  }
  return true;
}

int Poly::degree_in(std::size_t var) const {
  if (m_terms.empty()) return -1;
  std::uint32_t best = 0;
  for (const auto& [mono, coeff] : m_terms) {
    best = std::max(best, mono.at(var));
  }
  return static_cast<int>(best);
}

Rational Poly::leading_coefficient() const {
  if (m_terms.empty()) return Rational(0);
  return m_terms.rbegin()->second;
}

const Monomial& Poly::leading_monomial() const {
  if (m_terms.empty()) throw Error("leading monomial of the zero polynomial");
  return m_terms.rbegin()->first;
}

Poly Poly::coefficient_of(std::size_t var, std::uint32_t power) const {
  require_ring();
  Poly result = zero(m_ring);
  for (const auto& [mono, coeff] : m_terms) {
    if (mono.at(var) == power) {
      Monomial reduced = mono;
      reduced[var] = 0;
      result.insert_term(reduced, coeff);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

void Poly::insert_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = m_terms.emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) m_terms.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly result = *this;
  for (auto& [mono, coeff] : result.m_terms) coeff = -coeff;
  return result;
}

Poly& Poly::operator+=(const Poly& rhs) {
  m_ring = common_ring(*this, rhs);
  for (const auto& [mono, coeff] : rhs.m_terms) insert_term(mono, coeff);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  m_ring = common_ring(*this, rhs);
  for (const auto& [mono, coeff] : rhs.m_terms) insert_term(mono, -coeff);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  m_ring = common_ring(*this, rhs);
  Poly result = Poly::zero(m_ring);
  for (const auto& [ma, ca] : m_terms) {
    for (const auto& [mb, cb] : rhs.m_terms) {
      Monomial product = ma;
      for (std::size_t i = 0; i < product.size(); ++i) product[i] += mb[i];
      result.insert_term(product, ca * cb);
    }
  }
  m_terms = std::move(result.m_terms);
  return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    m_terms.clear();
    return *this;
  }
  for (auto& [mono, coeff] : m_terms) coeff *= rhs;
  return *this;
}

Poly Poly::pow(std::uint32_t exponent) const {
  require_ring();
  Poly result = constant(m_ring, Rational(1));
  for (std::uint32_t i = 0; i < exponent; ++i) result *= *this;
  return result;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) return true;
  if (lhs.m_ring && rhs.m_ring && lhs.m_ring != rhs.m_ring) return false;
  return lhs.m_terms == rhs.m_terms;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
  if (divisor.is_zero()) {
    throw DivisionByZeroError("polynomial division by zero");
  }
  const RingPtr ring = common_ring(*this, divisor);
  Poly quotient = Poly::zero(ring);
  Poly remainder = *this;
  remainder.m_ring = ring;
  const Monomial& lead_divisor = divisor.leading_monomial();
  const Rational lead_coeff = divisor.leading_coefficient();
  while (!remainder.is_zero()) {
    const Monomial& lead = remainder.leading_monomial();
    Monomial ratio(lead.size(), 0);
    bool divides = true;
    for (std::size_t i = 0; i < lead.size(); ++i) {
      if (lead[i] < lead_divisor[i]) {
        divides = false;
        break;
      }
      ratio[i] = lead[i] - lead_divisor[i];
    }
    if (!divides) return std::nullopt;
    const Rational coeff = remainder.m_terms.rbegin()->second / lead_coeff;
    const Poly step = Poly::term(ring, ratio, coeff);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

Poly Poly::substitute(std::size_t var, const Poly& replacement) const {
  require_ring();
  if (replacement.ring() && replacement.ring() != m_ring) {
    throw RingMismatchError("substitution value belongs to a different ring");
  }
  Poly result = zero(m_ring);
  std::vector<Poly> powers = {constant(m_ring, Rational(1))};
  for (const auto& [mono, coeff] : m_terms) {
    const std::uint32_t exponent = mono.at(var);
    while (powers.size() <= exponent) {
      Poly next = powers.back();
      next *= replacement;
      powers.push_back(next);
    }
    Monomial rest = mono;
    rest[var] = 0;
    result += Poly::term(m_ring, rest, coeff) * powers[exponent];
  }
  return result;
}

Poly Poly::substitute_value(std::size_t var, const Rational& value) const {
  require_ring();
  return substitute(var, constant(m_ring, value));
}

Rational Poly::evaluate(const std::vector<Rational>& values) const {
  require_ring();
  if (values.size() != m_ring->size()) {
    throw ShapeError("evaluation vector length does not match ring size");
  }
  Rational result(0);
  for (const auto& [mono, coeff] : m_terms) {
    Rational term = coeff;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      for (std::uint32_t k = 0; k < mono[i]; ++k) term *= values[i];
    }
    result += term;
  }
  return result;
}

double Poly::evaluate(const std::vector<double>& values) const {
  require_ring();
  if (values.size() != m_ring->size()) {
    throw ShapeError("evaluation vector length does not match ring size");
  }
  double result = 0.0;
  for (const auto& [mono, coeff] : m_terms) {
    double term = coeff.to_double();
    for (std::size_t i = 0; i < mono.size(); ++i) {
      for (std::uint32_t k = 0; k < mono[i]; ++k) term *= values[i];
    }
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string Poly::str() const {
  if (m_terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
    const Rational& coeff = it->second;
    const Monomial& mono = it->first;
    const bool negative = coeff.is_negative();
    const Rational magnitude = negative ? -coeff : coeff;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string factors;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += m_ring->name(i);
      if (mono[i] > 1) factors += "^" + std::to_string(mono[i]);
    }
    if (factors.empty()) {
      out << magnitude.str();
    } else if (magnitude.is_one()) {
      out << factors;
    } else {
      out << magnitude.str() << "*" << factors;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Gcd machinery
// ---------------------------------------------------------------------------

namespace {

Poly exact_divide(const Poly& a, const Poly& b) {
  auto quotient = a.try_divide(b);
  if (!quotient) throw Error("internal: inexact division during gcd");
  return *quotient;
}

// Componentwise minimum exponent over all terms: the monomial content.
Monomial monomial_content(const Poly& p) {
  Monomial result;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    if (first) {
      result = mono;
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = std::min(result[i], mono[i]);
    }
  }
  return result;
}

Poly strip_monomial(const Poly& p, const Monomial& content) {
  Poly result = Poly::zero(p.ring());
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial reduced = mono;
    for (std::size_t i = 0; i < reduced.size(); ++i) reduced[i] -= content[i];
    result += Poly::term(p.ring(), reduced, coeff);
  }
  return result;
}

// Maximum exponent of every variable over all terms of p.
std::vector<std::uint32_t> variable_degrees(const Poly& p, std::size_t nvars) {
  std::vector<std::uint32_t> degrees(nvars, 0);
  for (const auto& [mono, coeff] : p.terms()) {
    for (std::size_t i = 0; i < nvars; ++i) {
      degrees[i] = std::max(degrees[i], mono[i]);
    }
  }
  return degrees;
}

// Gcd of the coefficients of p as a polynomial in `var`; the result does not
// involve `var`.
Poly content_in(const Poly& p, std::size_t var) {
  Poly result;
  const int degree = p.degree_in(var);
  for (int k = 0; k <= degree; ++k) {
    const Poly coeff = p.coefficient_of(var, static_cast<std::uint32_t>(k));
    if (!coeff.is_zero()) {
      result = gcd(result, coeff);
      if (result.is_constant()) break;  // cannot shrink further
    }
  }
  return result;
}

// Full pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g with respect to
// `var`; the exact power matters for the subresultant divisions below.
Poly pseudo_remainder(const Poly& f, const Poly& g, std::size_t var) {
  const int dg = g.degree_in(var);
  const int df = f.degree_in(var);
  const Poly lead_g = g.coefficient_of(var, static_cast<std::uint32_t>(dg));
  Poly r = f;
  int multiplications = 0;
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    const int dr = r.degree_in(var);
    const Poly lead_r = r.coefficient_of(var, static_cast<std::uint32_t>(dr));
    Monomial shift(r.ring()->size(), 0);
    shift[var] = static_cast<std::uint32_t>(dr - dg);
    r = lead_g * r - Poly::term(r.ring(), shift, Rational(1)) * lead_r * g;
    ++multiplications;
  }
  for (int k = multiplications; k < df - dg + 1; ++k) r = lead_g * r;
  return r;
}

// Last nonzero member of the subresultant polynomial-remainder sequence of
// f and g in `var`; similar to their gcd up to content.
Poly subresultant_prs(Poly f, Poly g, std::size_t var) {
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  const RingPtr ring = f.ring();
  Poly h = Poly::constant(ring, Rational(1));
  Poly scale = h;
  while (!g.is_zero()) {
    const int delta = f.degree_in(var) - g.degree_in(var);
    Poly remainder = pseudo_remainder(f, g, var);
    if (!remainder.is_zero()) {
      remainder = exact_divide(remainder, scale * h.pow(static_cast<std::uint32_t>(delta)));
    }
    f = std::move(g);
    g = std::move(remainder);
    scale = f.coefficient_of(var, static_cast<std::uint32_t>(f.degree_in(var)));
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = scale;
    } else {
      h = exact_divide(scale.pow(static_cast<std::uint32_t>(delta)),
                       h.pow(static_cast<std::uint32_t>(delta - 1)));
    }
  }
  return f;
}

}  // namespace

Poly unit_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  // Scale so all coefficients become coprime integers.
  mpz_class den_lcm(1);
  mpz_class num_gcd(0);
  for (const auto& [mono, coeff] : p.terms()) {
    mpz_class den = coeff.value().get_den();
    mpz_class num = ::abs(coeff.value().get_num());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    den_lcm = den_lcm / g * den;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale{mpq_class(den_lcm, num_gcd)};
  if (p.leading_coefficient().is_negative()) scale = -scale;
  Poly result = p;
  result *= scale;
  return result;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  const RingPtr ring = common_ring(a, b);
  const std::size_t nvars = ring->size();

  // Split off the common monomial factor first; afterwards no variable
  // divides both operands outright.
  const Monomial content_a = monomial_content(a);
  const Monomial content_b = monomial_content(b);
  Monomial shared(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) {
    shared[i] = std::min(content_a[i], content_b[i]);
  }
  const Poly stripped_a = strip_monomial(a, content_a);
  const Poly stripped_b = strip_monomial(b, content_b);

  // Work in a variable both stripped operands contain; pick the one with the
  // smallest combined degree to keep the remainder sequence short.  With no
  // shared variable the non-monomial part of the gcd is trivial.
  const auto deg_a = variable_degrees(stripped_a, nvars);
  const auto deg_b = variable_degrees(stripped_b, nvars);
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (deg_a[i] == 0 || deg_b[i] == 0) continue;
    if (!var || deg_a[i] + deg_b[i] < deg_a[*var] + deg_b[*var]) var = i;
  }
  Poly core = Poly::constant(ring, Rational(1));
  if (var) {
    const Poly cont_a = content_in(stripped_a, *var);
    const Poly cont_b = content_in(stripped_b, *var);
    const Poly content = gcd(cont_a, cont_b);
    const Poly prs = subresultant_prs(exact_divide(stripped_a, cont_a),
                                      exact_divide(stripped_b, cont_b), *var);
    core = (prs.degree_in(*var) <= 0)
               ? content
               : content * exact_divide(prs, content_in(prs, *var));
  }
  return unit_normalize(Poly::term(ring, shared, Rational(1)) * core);
}

}  // namespace gograph
