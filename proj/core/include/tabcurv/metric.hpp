#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tabcurv/jet.hpp"

namespace tabcurv {

using JetPoint = std::array<Jet2, kSpacetimeDim>;
using JetMetric = std::array<std::array<Jet2, kSpacetimeDim>, kSpacetimeDim>;

// A metric g_{mu nu}(x) with signature (+,-,-,-), evaluated on Taylor jets so
// that first and second coordinate derivatives come out exactly.
struct MetricProvider {
  std::string name;
  std::map<std::string, double> parameters;
  std::array<std::string, kSpacetimeDim> coordinates;
  Vec4 default_point{};
  // Declares g independent of x^0, so xi = d_t is a Killing field.
  bool stationary = false;
  std::function<JetMetric(const JetPoint&)> evaluator;

  // Seeds x as jet variables and evaluates. Throws std::domain_error if the
  // result is not symmetric or does not have signature (+,-,-,-).
  JetMetric evaluate(const Vec4& x) const;
};

// Catalog:
//   minkowski                      ds^2 = dt^2 - dx^2 - dy^2 - dz^2
//   schwarzschild  m (1)           (1-2m/r)dt^2 - (1-2m/r)^-1 dr^2 - r^2 dth^2 - r^2 sin^2 th dph^2
//   langevin       omega (0.1)     (1-w^2 r^2)dt^2 - 2 w r^2 dph dt - dr^2 - r^2 dph^2 - dz^2
//   flrw           p (1)           dt^2 - t^(2p) (dx^2 + dy^2 + dz^2)
// Unknown names or parameter keys throw std::invalid_argument.
MetricProvider make_metric(std::string_view name, const std::map<std::string, double>& parameters = {});
std::vector<std::string> metric_names();

Mat4 values_of(const JetMetric& g);
bool has_lorentz_signature(const Mat4& g);

}  // namespace tabcurv
