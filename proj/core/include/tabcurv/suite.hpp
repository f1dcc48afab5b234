#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabcurv/curvature.hpp"
#include "tabcurv/jet.hpp"
#include "tabcurv/json_io.hpp"
#include "tabcurv/random.hpp"

namespace tabcurv {

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::map<std::string, double> tolerances;  // keys: see tolerance_keys()
  std::string metric = "schwarzschild";
  std::map<std::string, double> metric_parameters;
  std::optional<Vec4> point;
  std::string output_path;

  // Overridden value or the default; throws std::invalid_argument for unknown
  // keys or non-positive values.
  double tolerance(const std::string& key) const;
  void validate() const;
};

// "formula", "ystar", "static", "geometry", "theta", "flat", "derivative"
const std::map<std::string, double>& default_tolerances();

// Reads seed, tolerances, metric, parameters, point and output from a JSON
// object; keys that are absent keep their current value.
void merge_config(RunConfig& config, const Json& j);

struct SuiteResult {
  Json doc = Json::object();
  std::vector<std::string> lines;  // human-readable summary
  bool pass = true;
};

SuiteResult run_lr(const Partition& left, const Partition& right);
SuiteResult run_symmetrizer(const YoungTableau& t);
SuiteResult run_idempotents(const std::vector<Rational>& nus);

enum class SpanGenerator { gamma, alpha, thm13 };
SpanGenerator parse_span_generator(const std::string& name);

struct SpanRequest {
  SpanGenerator generator = SpanGenerator::gamma;
  Rational nu = -1;
  std::size_t dim = 4;
  std::size_t samples = 0;  // 0: three times the target dimension
  std::vector<FactorOrder> orders = {FactorOrder::u_then_w, FactorOrder::w_then_u};
};
SuiteResult run_span(const SpanRequest& request, const RunConfig& config);

// An empty `formulas` list checks every table.
SuiteResult run_verify(const RunConfig& config, const std::vector<std::string>& formulas = {});
SuiteResult run_decompose(const std::vector<int>& degrees);
SuiteResult run_cancellation(const RunConfig& config, std::size_t trials = 20);
// Every suite above with the reference inputs, in a fixed order.
SuiteResult run_report(const RunConfig& config);

std::string to_string(FactorOrder order);

}  // namespace tabcurv
