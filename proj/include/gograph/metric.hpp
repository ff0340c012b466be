// metric.hpp -- invariant metrics built from a quadratic form and a one-form.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_METRIC_HPP
#define GOGRAPH_METRIC_HPP

#include <functional>
#include <string>
#include <vector>

namespace gograph {

/// A norm profile phi: the norm is sqrt(a(y,y)) * phi(s) with
/// s = a(v,y) / sqrt(a(y,y)) for a fixed one-form direction v.  The profile
/// is usable for one-form lengths b strictly below b0.
struct PhiFamily {
  std::string name;
  double b0;  // infinity when every length is admissible
  std::function<double(double)> phi;
  std::function<double(double)> dphi;
  std::function<double(double)> ddphi;

  /// phi(s) = 1: the norm is the Euclidean norm of the quadratic form.
  static PhiFamily riemannian();
  /// phi(s) = 1 + s.
  static PhiFamily randers();
  /// phi(s) = (1 + s)^2.
  static PhiFamily quadratic();

  /// Looks a family up by name; throws ParseError for unknown names.
  static PhiFamily by_name(const std::string& name);
  static const std::vector<std::string>& names();
};

/// Result of sampling the positivity conditions of a norm profile over
/// |s| <= b: the norm requires phi(s) > 0 and
/// (phi - s phi') + (b^2 - s^2) phi'' > 0 throughout.  `margin` is the
/// smallest value of the second expression, attained at `worst_s`, and
/// `min_phi` the smallest value of phi; the check passes when both are
/// strictly positive.
struct AdmissibilityReport {
  bool pass = false;
  double margin = 0.0;
  double min_phi = 0.0;
  double worst_s = 0.0;
};

/// Samples both positivity conditions on a uniform grid of `grid` points
/// covering [-b, b].  Throws DomainError when b is negative or reaches the
/// profile's bound b0, or when the grid has fewer than three points.
AdmissibilityReport admissibility_check(const PhiFamily& family, double b,
                                        std::size_t grid = 1001);

/// A metric on m in numeric form: the Gram matrix of the quadratic form, the
/// vector paired by it into the one-form, and the norm profile.
struct NumericMetric {
  std::vector<std::vector<double>> gram;
  std::vector<double> one_form;
  PhiFamily family;
};

/// Value of the quadratic form a(u, w).
double quadratic_form(const NumericMetric& metric, const std::vector<double>& u,
                      const std::vector<double>& w);

/// The norm sqrt(a(y,y)) * phi(s); throws DomainError when a(y,y) <= 0.
double norm(const NumericMetric& metric, const std::vector<double>& y);
double norm_squared(const NumericMetric& metric, const std::vector<double>& y);

/// The scale zeta(y) = sqrt(a(y,y)) phi'(s) / (phi(s) - s phi'(s)) relating
/// the one-form correction to the quadratic part; throws DomainError when
/// a(y,y) <= 0 or the denominator vanishes.
double zeta_value(const NumericMetric& metric, const std::vector<double>& y);

/// g_y(y, w): half the directional derivative of the squared norm at y along
/// w, by central differences of width `step` (fourth-order when `richardson`
/// is set).
double tangent_pairing(const NumericMetric& metric, const std::vector<double>& y,
                       const std::vector<double>& w, double step = 1e-3,
                       bool richardson = true);

/// g_y(u, w): the fundamental form of the norm at y, by mixed central
/// differences of width `step` (fourth-order when `richardson` is set).
double fundamental_form(const NumericMetric& metric, const std::vector<double>& y,
                        const std::vector<double>& u, const std::vector<double>& w,
                        double step = 1e-3, bool richardson = true);

}  // namespace gograph

#endif  // GOGRAPH_METRIC_HPP
