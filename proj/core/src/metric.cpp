#include "tabcurv/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace tabcurv {

namespace {

JetMetric zero_metric() {
  JetMetric g;
  for (auto& row : g) row.fill(Jet2(0.0));
  return g;
}

double param(const std::map<std::string, double>& given, const std::string& key) {
  return given.at(key);
}

std::map<std::string, double> merge_params(std::string_view metric, std::map<std::string, double> defaults,
                                           const std::map<std::string, double>& given) {
  for (const auto& [key, value] : given) {
    const auto it = defaults.find(key);
    if (it == defaults.end()) {
      throw std::invalid_argument("metric '" + std::string(metric) + "' has no parameter '" + key + "'");
    }
    it->second = value;
  }
  return defaults;
}

}  // namespace

Mat4 values_of(const JetMetric& g) {
  Mat4 out{};
  for (std::size_t i = 0; i < kSpacetimeDim; ++i)
    for (std::size_t j = 0; j < kSpacetimeDim; ++j) out[i][j] = g[i][j].value();
  return out;
}

bool has_lorentz_signature(const Mat4& g) {
  // Leading principal minors of a (+,-,-,-) metric alternate in sign: +,-,+,-.
  std::array<double, kSpacetimeDim> minors{};
  for (std::size_t k = 1; k <= kSpacetimeDim; ++k) {
    std::array<std::array<double, kSpacetimeDim>, kSpacetimeDim> m{};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = g[i][j];
    double det = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t pivot = c;
      for (std::size_t r = c + 1; r < k; ++r)
        if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
      if (m[pivot][c] == 0.0) return false;
      if (pivot != c) {
        std::swap(m[pivot], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        const double f = m[r][c] / m[c][c];
        for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
      }
    }
    minors[k - 1] = det;
  }
  return minors[0] > 0 && minors[1] < 0 && minors[2] > 0 && minors[3] < 0;
}

JetMetric MetricProvider::evaluate(const Vec4& x) const {
  JetPoint coords;
  for (std::size_t k = 0; k < kSpacetimeDim; ++k) coords[k] = Jet2::variable(x[k], k);
  JetMetric g = evaluator(coords);
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Jet2& a = g[i][j];
      const Jet2& b = g[j][i];
      if (a.value() != b.value() || a.grad() != b.grad() || a.hess() != b.hess()) {
        throw std::domain_error("metric '" + name + "' is not symmetric");
      }
    }
  }
  if (!has_lorentz_signature(values_of(g))) {
    throw std::domain_error("metric '" + name + "' does not have signature (+,-,-,-) at this point");
  }
  return g;
}

MetricProvider make_metric(std::string_view name, const std::map<std::string, double>& given) {
  MetricProvider p;
  p.name = std::string(name);
  if (name == "minkowski") {
    p.parameters = merge_params(name, {}, given);
    p.coordinates = {"t", "x", "y", "z"};
    p.default_point = {0.0, 1.0, 1.0, 1.0};
    p.stationary = true;
    p.evaluator = [](const JetPoint&) {
      JetMetric g = zero_metric();
      g[0][0] = 1.0;
      g[1][1] = g[2][2] = g[3][3] = -1.0;
      return g;
    };
  } else if (name == "schwarzschild") {
    p.parameters = merge_params(name, {{"m", 1.0}}, given);
    p.coordinates = {"t", "r", "theta", "phi"};
    p.default_point = {0.0, 6.0, 1.0, 0.5};
    p.stationary = true;
    const double m = param(p.parameters, "m");
    p.evaluator = [m](const JetPoint& x) {
      const Jet2& r = x[1];
      const Jet2 f = Jet2(1.0) - Jet2(2.0 * m) / r;
      const Jet2 s = sin(x[2]);
      JetMetric g = zero_metric();
      g[0][0] = f;
      g[1][1] = -(Jet2(1.0) / f);
      g[2][2] = -(r * r);
      g[3][3] = -(r * r * s * s);
      return g;
    };
  } else if (name == "langevin") {
    p.parameters = merge_params(name, {{"omega", 0.1}}, given);
    p.coordinates = {"t", "rho", "phi", "z"};
    p.default_point = {0.0, 2.0, 0.5, 0.3};
    p.stationary = true;
    const double w = param(p.parameters, "omega");
    p.evaluator = [w](const JetPoint& x) {
      const Jet2 rho2 = x[1] * x[1];
      JetMetric g = zero_metric();
      g[0][0] = Jet2(1.0) - Jet2(w * w) * rho2;
      g[0][2] = g[2][0] = -(Jet2(w) * rho2);
      g[1][1] = -1.0;
      g[2][2] = -rho2;
      g[3][3] = -1.0;
      return g;
    };
  } else if (name == "flrw") {
    p.parameters = merge_params(name, {{"p", 1.0}}, given);
    p.coordinates = {"t", "x", "y", "z"};
    p.default_point = {2.0, 0.3, 0.4, 0.5};
    p.stationary = false;
    const double power = param(p.parameters, "p");
    p.evaluator = [power](const JetPoint& x) {
      const Jet2 a2 = pow(x[0], 2.0 * power);
      JetMetric g = zero_metric();
      g[0][0] = 1.0;
      g[1][1] = g[2][2] = g[3][3] = -a2;
      return g;
    };
  } else {
    throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
  }
  return p;
}

std::vector<std::string> metric_names() { return {"minkowski", "schwarzschild", "langevin", "flrw"}; }

}  // namespace tabcurv
