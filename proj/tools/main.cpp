// tabcurv: group-ring, Young tableau and curvature-formula experiments.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage error.
// The default seed comes from TABCURV_SEED when set.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tabcurv/formula_table.hpp"
#include "tabcurv/metric.hpp"
#include "tabcurv/suite.hpp"

namespace {

using namespace tabcurv;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

Vec4 parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad coordinate '" + item + "' in --point");
    }
  }
  if (v.size() != 4) throw UsageError("--point needs four comma-separated coordinates");
  return {v[0], v[1], v[2], v[3]};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad seed '") + text + "' from " + origin);
  }
}

struct Options {
  std::string config_path;
  std::string seed_text;
  std::string output;
  bool json = false;

  std::string left = "1,1", right = "1";
  std::string tableau = "1,3;2,4";
  std::vector<std::string> nus;
  std::string generator = "gamma";
  std::string nu = "-1";
  std::size_t dim = 4;
  std::size_t samples = 0;
  std::string order = "both";
  std::string metric;
  std::vector<std::string> params;
  std::string point;
  std::string formulas;
  bool print_terms = false;
  std::vector<int> degrees;
};

RunConfig build_config(const Options& o) {
  RunConfig c;
  if (const char* env = std::getenv("TABCURV_SEED"); env && *env) c.seed = parse_seed(env, "TABCURV_SEED");
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw UsageError("cannot open config file '" + o.config_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError("config file '" + o.config_path + "': " + e.what());
    }
    merge_config(c, j);
  }
  if (!o.seed_text.empty()) c.seed = parse_seed(o.seed_text, "--seed");
  if (!o.output.empty()) c.output_path = o.output;
  if (!o.metric.empty()) c.metric = o.metric;
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
    try {
      c.metric_parameters[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--param value in '" + kv + "' is not a number");
    }
  }
  if (!o.point.empty()) c.point = parse_point(o.point);
  c.validate();
  return c;
}

int emit(const SuiteResult& r, const RunConfig& config, bool json) {
  std::ostringstream text;
  if (json) {
    text << r.doc.dump(2) << '\n';
  } else {
    for (const auto& l : r.lines) text << l << '\n';
    text << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  if (config.output_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + config.output_path + "'");
    out << text.str();
  }
  return r.pass ? kExitPass : kExitFail;
}

std::vector<FactorOrder> parse_orders(const std::string& s) {
  if (s == "u-w") return {FactorOrder::u_then_w};
  if (s == "w-u") return {FactorOrder::w_then_u};
  if (s == "both") return {FactorOrder::u_then_w, FactorOrder::w_then_u};
  throw UsageError("--order must be u-w, w-u or both");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry classes, Young symmetrizers and curvature projection formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "JSON config merged under explicit flags")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed_text, "master seed (default: $TABCURV_SEED or 20240607)");
  app.add_option("--output,-o", o.output, "write output to this file");
  app.add_flag("--json", o.json, "machine-readable output");

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product of two partitions");
  lr->add_option("--left", o.left, "first partition, e.g. 2,1")->required();
  lr->add_option("--right", o.right, "second partition")->required();

  auto* sym = app.add_subcommand("symmetrizer", "Young symmetrizer of a tableau");
  sym->add_option("--tableau", o.tableau, "rows separated by ';', e.g. 1,3;2,4");

  auto* idem = app.add_subcommand("idempotents", "relations between zeta_nu, eta, rho and f0");
  idem->add_option("--nu", o.nus, "values of nu (default -1,-1/2,0,1/2,1,2)");

  auto* span = app.add_subcommand("span", "rank of curvature-tensor generators");
  span->add_option("--generator", o.generator, "gamma | alpha | thm13")
      ->check(CLI::IsMember({"gamma", "alpha", "thm13"}));
  span->add_option("--nu", o.nu, "nu for thm13");
  span->add_option("--dim", o.dim, "dimension of V")->check(CLI::Range(2, 4));
  span->add_option("--samples", o.samples, "number of random generators (default 3x the target dimension)")->check(CLI::PositiveNumber);
  span->add_option("--order", o.order, "u-w | w-u | both (thm13)");
  span->add_option("--seed", o.seed_text, "master seed");

  auto* verify = app.add_subcommand("verify", "curvature formulas on a metric at one point");
  std::string metric_help = "metric:";
  for (const auto& n : metric_names()) metric_help += " " + n;
  verify->add_option("--metric", o.metric, metric_help);
  verify->add_option("--param", o.params, "metric parameter key=value (repeatable)");
  verify->add_option("--point", o.point, "coordinates t,x1,x2,x3");
  verify->add_option("--formulas", o.formulas, "comma-separated formula ids");
  verify->add_flag("--print-terms", o.print_terms, "print the term tables and exit");
  verify->add_flag("--json", o.json, "machine-readable output");

  auto* dec = app.add_subcommand("decompose", "sum of f^2 and the span of p*y_t in Q[S_r]");
  dec->add_option("--degree", o.degrees, "r, 1..5 (repeatable; default 1..5)")->check(CLI::Range(1, 5));

  auto* report = app.add_subcommand("report", "run every suite and emit one JSON verdict");
  report->add_option("--seed", o.seed_text, "master seed");

  for (auto* sub : {lr, sym, idem, span, dec}) sub->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const RunConfig config = build_config(o);
    if (*lr) {
      return emit(run_lr(Partition(parse_int_list(o.left)), Partition(parse_int_list(o.right))), config, o.json);
    }
    if (*sym) return emit(run_symmetrizer(parse_tableau(o.tableau)), config, o.json);
    if (*idem) {
      std::vector<Rational> nus;
      for (const auto& s : o.nus)
        for (const auto& part : split(s, ',')) nus.push_back(parse_rational(part));
      if (nus.empty()) nus = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
      return emit(run_idempotents(nus), config, o.json);
    }
    if (*span) {
      SpanRequest q;
      q.generator = parse_span_generator(o.generator);
      q.nu = parse_rational(o.nu);
      q.dim = o.dim;
      q.samples = o.samples;
      q.orders = parse_orders(o.order);
      return emit(run_span(q, config), config, o.json);
    }
    if (*verify) {
      if (o.print_terms) {
        std::cout << "# left-hand side: -Z with the listed index order\n";
        for (const auto& t : formula_tables()) std::cout << format_table(t) << '\n';
        return kExitPass;
      }
      return emit(run_verify(config, split(o.formulas, ',')), config, o.json);
    }
    if (*dec) return emit(run_decompose(o.degrees.empty() ? std::vector<int>{1, 2, 3, 4, 5} : o.degrees), config, o.json);
    if (*report) return emit(run_report(config), config, true);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
