// metric.cpp -- invariant metrics built from a quadratic form and a one-form.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include "gograph/metric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gograph/errors.hpp"

namespace gograph {

PhiFamily PhiFamily::riemannian() {
  return {"riemannian",
          std::numeric_limits<double>::infinity(),
          [](double) { return 1.0; },
          [](double) { return 0.0; },
          [](double) { return 0.0; }};
}

PhiFamily PhiFamily::randers() {
  return {"randers",
          1.0,
          [](double s) { return 1.0 + s; },
          [](double) { return 1.0; },
          [](double) { return 0.0; }};
}

PhiFamily PhiFamily::quadratic() {
  return {"quadratic",
          1.0,
          [](double s) { return (1.0 + s) * (1.0 + s); },
          [](double s) { return 2.0 * (1.0 + s); },
          [](double) { return 2.0; }};
}

PhiFamily PhiFamily::by_name(const std::string& name) {
  if (name == "riemannian") return riemannian();
  if (name == "randers") return randers();
  if (name == "quadratic") return quadratic();
  throw ParseError("unknown norm profile '" + name + "'");
}

const std::vector<std::string>& PhiFamily::names() {
  static const std::vector<std::string> all{"riemannian", "randers",
                                            "quadratic"};
  return all;
}

AdmissibilityReport admissibility_check(const PhiFamily& family, double b,
                                        std::size_t grid) {
  if (b < 0.0) throw DomainError("one-form length must be non-negative");
  if (b >= family.b0) {
    throw DomainError("one-form length " + std::to_string(b) +
                      " reaches the bound of the '" + family.name +
                      "' profile");
  }
  if (grid < 3) throw DomainError("admissibility grid needs at least three points");
  AdmissibilityReport report;
  report.margin = std::numeric_limits<double>::infinity();
  report.min_phi = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid; ++k) {
    const double s =
        -b + 2.0 * b * static_cast<double>(k) / static_cast<double>(grid - 1);
    const double phi = family.phi(s);
    const double positivity = family.phi(s) - s * family.dphi(s) +
                              (b * b - s * s) * family.ddphi(s);
    if (phi < report.min_phi) report.min_phi = phi;
    if (positivity < report.margin) {
      report.margin = positivity;
      report.worst_s = s;
    }
  }
  report.pass = report.margin > 0.0 && report.min_phi > 0.0;
  return report;
}

double quadratic_form(const NumericMetric& metric, const std::vector<double>& u,
                      const std::vector<double>& w) {
  const std::size_t n = metric.gram.size();
  if (u.size() != n || w.size() != n) {
    throw ShapeError("vectors must match the Gram matrix dimension");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (metric.gram[i].size() != n) {
      throw ShapeError("Gram matrix must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      sum += u[i] * metric.gram[i][j] * w[j];
    }
  }
  return sum;
}

namespace {

/// sqrt-norm and ratio s at y; throws when the quadratic part degenerates.
struct NormData {
  double root_alpha;
  double s;
};

NormData norm_data(const NumericMetric& metric, const std::vector<double>& y) {
  const double alpha = quadratic_form(metric, y, y);
  if (!(alpha > 0.0)) {
    throw DomainError("squared norm requires a positive quadratic part");
  }
  const double root = std::sqrt(alpha);
  return {root, quadratic_form(metric, metric.one_form, y) / root};
}

}  // namespace

double norm(const NumericMetric& metric, const std::vector<double>& y) {
  const NormData data = norm_data(metric, y);
  return data.root_alpha * metric.family.phi(data.s);
}

double norm_squared(const NumericMetric& metric, const std::vector<double>& y) {
  const double value = norm(metric, y);
  return value * value;
}

double zeta_value(const NumericMetric& metric, const std::vector<double>& y) {
  const NormData data = norm_data(metric, y);
  const double denom =
      metric.family.phi(data.s) - data.s * metric.family.dphi(data.s);
  if (std::abs(denom) < 1e-12) {
    throw DomainError("zeta is undefined where phi - s phi' vanishes");
  }
  return data.root_alpha * metric.family.dphi(data.s) / denom;
}

namespace {

std::vector<double> displaced(const std::vector<double>& y,
                              const std::vector<double>& u, double cu,
                              const std::vector<double>& w, double cw) {
  std::vector<double> point(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    point[i] = y[i] + cu * u[i] + cw * w[i];
  }
  return point;
}

double first_difference(const NumericMetric& metric, const std::vector<double>& y,
                        const std::vector<double>& w, double h) {
  const std::vector<double> zero(y.size(), 0.0);
  const double plus = norm_squared(metric, displaced(y, w, h, zero, 0.0));
  const double minus = norm_squared(metric, displaced(y, w, -h, zero, 0.0));
  return (plus - minus) / (4.0 * h);
}

double mixed_difference(const NumericMetric& metric, const std::vector<double>& y,
                        const std::vector<double>& u, const std::vector<double>& w,
                        double h) {
  const double pp = norm_squared(metric, displaced(y, u, h, w, h));
  const double pm = norm_squared(metric, displaced(y, u, h, w, -h));
  const double mp = norm_squared(metric, displaced(y, u, -h, w, h));
  const double mm = norm_squared(metric, displaced(y, u, -h, w, -h));
  return (pp - pm - mp + mm) / (8.0 * h * h);
}

}  // namespace

double tangent_pairing(const NumericMetric& metric, const std::vector<double>& y,
                       const std::vector<double>& w, double step,
                       bool richardson) {
  if (!(step > 0.0)) throw DomainError("difference step must be positive");
  const double coarse = first_difference(metric, y, w, step);
  if (!richardson) return coarse;
  const double fine = first_difference(metric, y, w, step / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

double fundamental_form(const NumericMetric& metric, const std::vector<double>& y,
                        const std::vector<double>& u, const std::vector<double>& w,
                        double step, bool richardson) {
  if (!(step > 0.0)) throw DomainError("difference step must be positive");
  const double coarse = mixed_difference(metric, y, u, w, step);
  if (!richardson) return coarse;
  const double fine = mixed_difference(metric, y, u, w, step / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace gograph
