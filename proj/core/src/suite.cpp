#include "tabcurv/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "tabcurv/formula_table.hpp"
#include "tabcurv/lr.hpp"
#include "tabcurv/metric.hpp"
#include "tabcurv/spacetime.hpp"

namespace tabcurv {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }

struct Expectation {
  std::string name;
  double value;
  double bound;
  bool upper;  // value <= bound, otherwise value > bound
  bool ok() const { return upper ? value <= bound : value > bound; }
};

void record(SuiteResult& r, Json& list, const Expectation& e) {
  list.push_back({{"check", e.name},
                  {"value", e.value},
                  {"bound", e.bound},
                  {"relation", e.upper ? "<=" : ">"},
                  {"pass", e.ok()}});
  r.lines.push_back(e.name + ": " + sci(e.value) + (e.upper ? " <= " : " > ") + sci(e.bound) + "  " +
                    verdict(e.ok()));
  r.pass = r.pass && e.ok();
}

void record_flag(SuiteResult& r, Json& list, const std::string& name, bool ok) {
  list.push_back({{"check", name}, {"pass", ok}});
  r.lines.push_back(name + ": " + verdict(ok));
  r.pass = r.pass && ok;
}

void absorb(SuiteResult& into, const std::string& key, SuiteResult part) {
  into.doc[key] = std::move(part.doc);
  into.doc[key]["pass"] = part.pass;
  into.lines.push_back("[" + key + "] " + verdict(part.pass));
  for (auto& l : part.lines) into.lines.push_back("  " + l);
  into.pass = into.pass && part.pass;
}

Json vec_json(const Vec4& v) { return Json(std::vector<double>(v.begin(), v.end())); }

Json check_json(const FormulaCheck& c) {
  Json j = {{"id", c.id},
            {"applicable", c.applicable},
            {"abs_residual", c.abs_residual},
            {"rel_residual", c.rel_residual},
            {"tolerance", c.tolerance},
            {"pass", c.pass}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = {
      {"formula", kFormulaTolerance}, {"ystar", kYstarTolerance}, {"static", kStaticTolerance},
      {"geometry", 1e-10},            {"theta", 1e-12},           {"flat", 1e-14},
      {"derivative", 1e-6},
  };
  return t;
}

double RunConfig::tolerance(const std::string& key) const {
  const auto& defaults = default_tolerances();
  if (!defaults.contains(key)) throw std::invalid_argument("unknown tolerance '" + key + "'");
  const auto it = tolerances.find(key);
  return it == tolerances.end() ? defaults.at(key) : it->second;
}

void RunConfig::validate() const {
  for (const auto& [key, value] : tolerances) {
    if (!default_tolerances().contains(key)) throw std::invalid_argument("unknown tolerance '" + key + "'");
    if (!(value > 0)) throw std::invalid_argument("tolerance '" + key + "' must be positive");
  }
}

void merge_config(RunConfig& config, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "tolerances") {
      for (const auto& [k, v] : value.items()) config.tolerances[k] = v.get<double>();
    } else if (key == "metric") {
      config.metric = value.get<std::string>();
    } else if (key == "parameters") {
      for (const auto& [k, v] : value.items()) config.metric_parameters[k] = v.get<double>();
    } else if (key == "point") {
      const auto p = value.get<std::vector<double>>();
      if (p.size() != kSpacetimeDim) throw std::invalid_argument("config point needs 4 coordinates");
      config.point = Vec4{p[0], p[1], p[2], p[3]};
    } else if (key == "output") {
      config.output_path = value.get<std::string>();
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  config.validate();
}

std::string to_string(FactorOrder order) { return order == FactorOrder::u_then_w ? "U(x)w" : "w(x)U"; }

SuiteResult run_lr(const Partition& left, const Partition& right) {
  SuiteResult r;
  const auto product = lr_product(left, right);
  r.doc = {{"left", to_json(left)},
           {"right", to_json(right)},
           {"product", to_json(product)},
           {"text", format_product(left, right, product)}};
  r.lines.push_back(format_product(left, right, product));
  return r;
}

SuiteResult run_symmetrizer(const YoungTableau& t) {
  SuiteResult r;
  const auto y = young_symmetrizer(t);
  const auto [essential, mu] = essential_idempotency_factor(y);
  r.doc = {{"tableau", to_json(t)},
           {"standard", t.is_standard()},
           {"term_count", y.size()},
           {"element", to_json(y)},
           {"essentially_idempotent", essential},
           {"factor", essential ? to_string(mu) : "none"}};
  r.lines.push_back("y_t for " + to_string(t) + ": " + std::to_string(y.size()) + " terms");
  r.lines.push_back(to_string(y));
  r.lines.push_back(essential ? "y_t * y_t = " + to_string(mu) + " y_t" : "y_t * y_t is not a multiple of y_t");
  r.pass = essential && mu != 0;
  return r;
}

SuiteResult run_idempotents(const std::vector<Rational>& nus) {
  SuiteResult r;
  Json checks = Json::array();
  const auto rho = make_rho();
  const auto eta = make_eta();
  const auto f0 = make_f0();
  record_flag(r, checks, "rho*rho = rho", rho * rho == rho);
  record_flag(r, checks, "eta*eta = eta", eta * eta == eta);
  record_flag(r, checks, "f0*f0 = f0", f0 * f0 == f0);
  record_flag(r, checks, "eta*rho != rho", eta * rho != rho);
  record_flag(r, checks, "rho*eta != eta", rho * eta != eta);
  Json table = Json::array();
  for (const auto& nu : nus) {
    const auto z = make_zeta(nu);
    const bool idem = z * z == z;
    const bool zr = z * rho == rho;
    const bool rz = rho * z == z;
    const bool expected = nu == -1;
    const bool ok = idem && (zr && rz) == expected;
    table.push_back({{"nu", to_string(nu)},
                     {"idempotent", idem},
                     {"zeta_rho_eq_rho", zr},
                     {"rho_zeta_eq_zeta", rz},
                     {"same_class_as_rho_expected", expected},
                     {"pass", ok}});
    r.lines.push_back("nu = " + to_string(nu) + ": zeta^2 = zeta " + verdict(idem) + ", zeta*rho = rho " +
                      (zr ? "yes" : "no") + ", rho*zeta = zeta " + (rz ? "yes" : "no") + "  " + verdict(ok));
    r.pass = r.pass && ok;
  }
  r.doc = {{"checks", checks}, {"zeta", table}};
  return r;
}

SpanGenerator parse_span_generator(const std::string& name) {
  if (name == "gamma") return SpanGenerator::gamma;
  if (name == "alpha") return SpanGenerator::alpha;
  if (name == "thm13") return SpanGenerator::thm13;
  throw std::invalid_argument("unknown generator '" + name + "' (gamma, alpha, thm13)");
}

SuiteResult run_span(const SpanRequest& q, const RunConfig& config) {
  SuiteResult r;
  const std::uint64_t seed = derive_seed(config.seed, "span");
  if (q.generator == SpanGenerator::thm13) {
    if (q.dim != 4) throw std::invalid_argument("thm13 is defined on dimension 4 only");
    const std::size_t target = acr_dimension(4);
    const std::size_t samples = q.samples ? q.samples : 3 * target;
    Json runs = Json::array();
    for (auto order : q.orders) {
      ProductSpanOptions opt;
      opt.samples = samples;
      opt.order = order;
      opt.seed = seed;
      const std::size_t rank = product_generator_span_rank(make_zeta(q.nu), opt);
      runs.push_back({{"order", to_string(order)}, {"rank", rank}});
      r.lines.push_back("thm13 nu=" + to_string(q.nu) + " " + to_string(order) + ": rank " + std::to_string(rank) +
                        " / " + std::to_string(target));
      r.pass = r.pass && rank == target;
    }
    r.doc = {{"generator", "thm13"}, {"nu", to_string(q.nu)}, {"dim", q.dim}, {"samples", samples},
             {"target", target}, {"runs", runs}, {"pass", r.pass}};
    if (runs.size() == 1) r.doc["rank"] = runs[0]["rank"];
    return r;
  }
  const bool is_gamma = q.generator == SpanGenerator::gamma;
  const std::size_t target = acr_dimension(q.dim);
  const std::size_t samples = q.samples ? q.samples : 3 * target;
  const std::size_t rank =
      generator_span_rank(q.dim, samples, is_gamma ? FormGenerator::gamma : FormGenerator::alpha, seed);
  r.pass = rank == target;
  r.doc = {{"generator", is_gamma ? "gamma" : "alpha"}, {"dim", q.dim}, {"samples", samples},
           {"rank", rank}, {"target", target}, {"pass", r.pass}};
  r.lines.push_back(std::string(is_gamma ? "gamma" : "alpha") + " span rank " + std::to_string(rank) + " / " +
                    std::to_string(target));
  return r;
}

SuiteResult run_verify(const RunConfig& config, const std::vector<std::string>& formulas) {
  config.validate();
  SuiteResult r;
  const MetricProvider provider = make_metric(config.metric, config.metric_parameters);
  const Vec4 x = config.point.value_or(provider.default_point);
  const PointFrame f = build_point_frame(provider, x);
  const StaticityReport st = staticity_test(provider, x);
  CurvatureFormulaReport rep = verify_curvature_formulas(f, st.stationary, formulas);
  const double tol = config.tolerance("formula");
  Json formula_list = Json::array();
  for (auto& c : rep.formulas) {
    c.tolerance = tol;
    c.pass = c.applicable && c.rel_residual <= tol;
    formula_list.push_back(check_json(c));
    r.lines.push_back(c.id + ": " + (c.applicable ? "rel " + sci(c.rel_residual) + "  " + verdict(c.pass)
                                                  : "not applicable (" + c.note + ")"));
    if (c.applicable) r.pass = r.pass && c.pass;
  }
  Json agreement_list = Json::array();
  for (auto& c : rep.agreements) {
    c.tolerance = tol;
    c.pass = c.applicable && c.rel_residual <= tol;
    agreement_list.push_back(check_json(c));
    if (c.applicable) {
      r.lines.push_back("agreement " + c.id + ": rel " + sci(c.rel_residual) + "  " + verdict(c.pass));
      r.pass = r.pass && c.pass;
    }
  }
  rep.ystar_tail.tolerance = config.tolerance("ystar");
  rep.ystar_tail.pass = rep.ystar_tail.abs_residual <= rep.ystar_tail.tolerance;
  r.lines.push_back("theta tail vs 1/2 y_t*(theta (x) F): abs " + sci(rep.ystar_tail.abs_residual) + "  " +
                    verdict(rep.ystar_tail.pass));
  r.pass = r.pass && rep.ystar_tail.pass;

  const auto inv = frame_invariants(f);
  const auto h = check_h_identities(f);
  const auto theta = theta_decompose(f);
  const auto fd = finite_difference_check(provider, x);
  Json params = Json::object();
  for (const auto& [k, v] : provider.parameters) params[k] = v;
  r.doc = {
      {"metric", provider.name},
      {"parameters", params},
      {"point", vec_json(x)},
      {"stationary", st.stationary},
      {"scale", rep.scale},
      {"formulas", formula_list},
      {"agreements", agreement_list},
      {"ystar_tail", check_json(rep.ystar_tail)},
      {"fields",
       {{"max_abs_Z", f.Z_dn.max_abs()},
        {"max_abs_P", f.P_dn.max_abs()},
        {"max_abs_F", f.F.max_abs()},
        {"max_abs_A", f.A.max_abs()},
        {"max_abs_D", f.D.max_abs()},
        {"max_abs_Y", f.Y.max_abs()},
        {"max_abs_X", f.X.max_abs()},
        {"max_abs_theta", f.theta.max_abs()}}},
      {"staticity",
       {{"time_derivative", st.time_derivative},
        {"killing_residual", st.killing_residual},
        {"xi_alternation", st.xi_alternation},
        {"tau_alternation", st.tau_alternation},
        {"ratio_residual", st.ratio_residual},
        {"is_static", st.is_static}}},
      {"identities",
       {{"metric_inverse", inv.metric_inverse},
        {"tau_norm", inv.tau_norm},
        {"tau_cov_tau", inv.tau_cov_tau},
        {"A_antisymmetry", inv.A_antisymmetry},
        {"D_symmetry", inv.D_symmetry},
        {"Z_orthogonality", inv.Z_orthogonality},
        {"h_projector", h.max()},
        {"A_decomposition", check_A_decomposition(f)},
        {"gamma_decomposition", check_gamma_decomposition(f)},
        {"riemann_convention", riemann_convention_residual(f)},
        {"curvature_symmetries", curvature_symmetry_residuals(f.R_dn).max()}}},
      {"theta",
       {{"alternation_cross_check", theta.alternation_cross_check},
        {"relations", theta.identity_residuals},
        {"index_commutation", inv.theta_commutation},
        {"zeta_minus_one_membership", theta.zeta_membership}}},
      {"derivatives", {{"gradient_rel", fd.gradient_rel}, {"hessian_rel", fd.hessian_rel}}},
  };
  if (!st.warning.empty()) {
    r.doc["warning"] = st.warning;
    r.lines.push_back("warning: " + st.warning);
  }
  r.lines.insert(r.lines.begin(), provider.name + " at (" + std::to_string(x[0]) + ", " + std::to_string(x[1]) +
                                      ", " + std::to_string(x[2]) + ", " + std::to_string(x[3]) + ")" +
                                      (st.stationary ? ", stationary" : ""));
  r.doc["pass"] = r.pass;
  return r;
}

SuiteResult run_decompose(const std::vector<int>& degrees) {
  SuiteResult r;
  Json list = Json::array();
  for (int d : degrees) {
    const auto rep = verify_ring_decomposition(d);
    Json counts = Json::array();
    for (const auto& [lambda, f] : rep.standard_counts) counts.push_back({{"partition", to_json(lambda)}, {"f", f}});
    const bool ok = rep.sum_matches() && rep.rank_matches();
    list.push_back({{"degree", d},
                    {"group_order", rep.group_order},
                    {"standard_counts", counts},
                    {"sum_of_squares", rep.sum_of_squares},
                    {"span_rank", rep.left_ideal_span_rank},
                    {"pass", ok}});
    r.lines.push_back("r = " + std::to_string(d) + ": sum f^2 = " + std::to_string(rep.sum_of_squares) +
                      ", span rank " + std::to_string(rep.left_ideal_span_rank) + " / " +
                      std::to_string(rep.group_order) + "  " + verdict(ok));
    r.pass = r.pass && ok;
  }
  r.doc = {{"degrees", list}};
  return r;
}

SuiteResult run_cancellation(const RunConfig& config, std::size_t trials) {
  SuiteResult r;
  const std::uint64_t base = derive_seed(config.seed, "cancellation");
  std::size_t zero = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    if (cancellation_experiment(derive_seed(base, std::to_string(i))).is_zero()) ++zero;
  }
  const auto generic = cancellation_experiment(derive_seed(base, "generic"), true);
  Json checks = Json::array();
  record_flag(r, checks, std::to_string(zero) + "/" + std::to_string(trials) + " alternating inputs cancel exactly",
              zero == trials);
  record_flag(r, checks, "generic input leaves max |sum| = " + to_string(generic.max_abs), !generic.is_zero());
  r.doc = {{"trials", trials},
           {"exact_zero", zero},
           {"generic_max_abs", to_string(generic.max_abs)},
           {"checks", checks}};
  return r;
}

namespace {

SuiteResult group_algebra_section() {
  std::vector<Rational> nus = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  return run_idempotents(nus);
}

SuiteResult young_section() {
  SuiteResult r;
  Json checks = Json::array();
  const auto y = young_symmetrizer(curvature_tableau());
  GroupRingElement twelve_y = y;
  twelve_y *= Rational(12);
  record_flag(r, checks, "y_t for 1 3 / 2 4 has 16 terms", y.size() == 16);
  record_flag(r, checks, "y_t * y_t = 12 y_t", y * y == twelve_y);
  auto dec = run_decompose({1, 2, 3, 4, 5});
  for (auto& l : dec.lines) r.lines.push_back(l);
  r.pass = r.pass && dec.pass;
  r.doc = {{"checks", checks}, {"decomposition", dec.doc}};
  return r;
}

SuiteResult lr_section() {
  SuiteResult r;
  Json checks = Json::array();
  const auto p16 = lr_product({1, 1}, {1});
  const auto p14a = lr_product({2, 1}, {1});
  const auto p14b = lr_product({1, 1, 1}, {1});
  PartitionMultiset e16, e14a, e14b;
  e16.add({2, 1});
  e16.add({1, 1, 1});
  e14a.add({3, 1});
  e14a.add({2, 2});
  e14a.add({2, 1, 1});
  e14b.add({2, 1, 1});
  e14b.add({1, 1, 1, 1});
  record_flag(r, checks, format_product({1, 1}, {1}, p16), p16 == e16);
  record_flag(r, checks, format_product({2, 1}, {1}, p14a), p14a == e14a);
  record_flag(r, checks, format_product({1, 1, 1}, {1}, p14b), p14b == e14b);
  record_flag(r, checks, "[2 2] occurs in [2 1][1] and not in [1 1 1][1]",
              contains_partition(p14a, {2, 2}) == 1 && contains_partition(p14b, {2, 2}) == 0);
  r.doc = {{"checks", checks}};
  return r;
}

SuiteResult generator_section(const RunConfig& config) {
  SuiteResult r;
  Json checks = Json::array();
  const std::size_t expected[] = {1, 6, 20};
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto d = acr_dimension(n);
    record_flag(r, checks, "acr_dimension(" + std::to_string(n) + ") = " + std::to_string(d),
                d == expected[n - 2]);
  }
  for (auto g : {SpanGenerator::gamma, SpanGenerator::alpha}) {
    SpanRequest q;
    q.generator = g;
    q.samples = 40;
    auto s = run_span(q, config);
    record_flag(r, checks, s.lines.front(), s.pass);
  }
  for (const Rational& nu : {Rational(-1), Rational(0), Rational(2), Rational(1, 2)}) {
    SpanRequest q;
    q.generator = SpanGenerator::thm13;
    q.nu = nu;
    auto s = run_span(q, config);
    const bool deficient = nu == Rational(1, 2);
    for (const auto& run : s.doc["runs"]) {
      const auto rank = run["rank"].get<std::size_t>();
      const bool ok = deficient ? rank < 20 : rank == 20;
      record_flag(r, checks,
                  "thm13 nu=" + to_string(nu) + " " + run["order"].get<std::string>() + " rank " +
                      std::to_string(rank) + (deficient ? " < 20" : " = 20"),
                  ok);
    }
  }
  r.doc = {{"checks", checks}};
  return r;
}

SuiteResult geometry_section(const RunConfig& config) {
  SuiteResult r;
  const double geo = config.tolerance("geometry");
  const double formula = config.tolerance("formula");
  const double flat = config.tolerance("flat");
  const double deriv = config.tolerance("derivative");
  Json metrics = Json::object();
  auto verify = [&](const std::string& name) {
    RunConfig c = config;
    c.metric = name;
    c.metric_parameters.clear();
    c.point.reset();
    return run_verify(c);
  };

  {
    Json checks = Json::array();
    auto v = verify("schwarzschild");
    const auto& d = v.doc;
    record(r, checks, {"schwarzschild killing", d["staticity"]["killing_residual"], geo, true});
    record(r, checks, {"schwarzschild D", d["fields"]["max_abs_D"], geo, true});
    record(r, checks, {"schwarzschild tau alternation", d["staticity"]["tau_alternation"], geo, true});
    record(r, checks, {"schwarzschild Z orthogonal to tau", d["identities"]["Z_orthogonality"], geo, true});
    for (const auto& fm : d["formulas"]) {
      if (fm["id"] == "sync") continue;
      record(r, checks, {"schwarzschild " + fm["id"].get<std::string>(), fm["rel_residual"], formula, true});
    }
    record(r, checks, {"schwarzschild jet vs finite differences", d["derivatives"]["hessian_rel"], deriv, true});
    metrics["schwarzschild"] = {{"checks", checks}, {"verify", v.doc}};
  }
  {
    Json checks = Json::array();
    auto v = verify("langevin");
    const auto& d = v.doc;
    record_flag(r, checks, "langevin is not static", !d["staticity"]["is_static"].get<bool>());
    record(r, checks, {"langevin tau alternation", d["staticity"]["tau_alternation"], 1e-3, false});
    for (const auto& a : d["agreements"]) {
      record(r, checks, {"langevin agreement " + a["id"].get<std::string>(), a["rel_residual"], formula, true});
    }
    record(r, checks, {"langevin xi/tau alternation ratio", d["staticity"]["ratio_residual"], geo, true});
    metrics["langevin"] = {{"checks", checks}, {"verify", v.doc}};
  }
  {
    Json checks = Json::array();
    auto v = verify("flrw");
    const auto& d = v.doc;
    record(r, checks, {"flrw F", d["fields"]["max_abs_F"], geo, true});
    record(r, checks, {"flrw A", d["fields"]["max_abs_A"], geo, true});
    const auto sync = synchronized_reduction_check(make_metric("flrw"), make_metric("flrw").default_point);
    record(r, checks, {"flrw synchronized reduction", sync.formula_rel_residual, formula, true});
    metrics["flrw"] = {{"checks", checks}, {"verify", v.doc}};
  }
  {
    Json checks = Json::array();
    auto v = verify("minkowski");
    double worst = 0;
    auto scan = [&](const Json& j, auto&& self) -> void {
      if (j.is_number_float()) {
        worst = std::max(worst, std::abs(j.get<double>()));
      } else if (j.is_structured()) {
        for (const auto& x : j) self(x, self);
      }
    };
    for (const char* key : {"fields", "staticity", "identities", "theta", "derivatives"}) scan(v.doc[key], scan);
    for (const auto& fm : v.doc["formulas"]) worst = std::max(worst, fm["abs_residual"].get<double>());
    worst = std::max(worst, v.doc["ystar_tail"]["abs_residual"].get<double>());
    record(r, checks, {"minkowski every residual", worst, flat, true});
    metrics["minkowski"] = {{"checks", checks}, {"verify", v.doc}};
  }
  r.doc = {{"metrics", metrics}};
  return r;
}

SuiteResult theta_section(const RunConfig& config) {
  SuiteResult r;
  Json checks = Json::array();
  const auto provider = make_metric("langevin");
  const auto f = build_point_frame(provider, provider.default_point);
  const auto th = theta_decompose(f);
  const double worst = *std::max_element(th.identity_residuals.begin(), th.identity_residuals.end());
  record(r, checks, {"theta linear relations", worst, config.tolerance("theta"), true});
  record(r, checks, {"theta index commutation", frame_invariants(f).theta_commutation, config.tolerance("theta"), true});
  record(r, checks, {"theta in the zeta(-1) class", th.zeta_membership, config.tolerance("geometry"), true});
  record(r, checks, {"theta alternation cross-check", th.alternation_cross_check, config.tolerance("theta"), true});
  const auto rep = verify_curvature_formulas(f, true, {"1.20"});
  record(r, checks, {"F theta tail = 1/2 y_t*(theta (x) F)", rep.ystar_tail.abs_residual, config.tolerance("ystar"), true});
  record(r, checks, {"theta is nonzero", th.theta.max_abs(), 1e-3, false});
  r.doc = {{"metric", "langevin"}, {"theta", to_json(th.theta)}, {"checks", checks}};
  return r;
}

}  // namespace

SuiteResult run_report(const RunConfig& config) {
  config.validate();
  SuiteResult r;
  r.doc["seed"] = config.seed;
  absorb(r, "group_algebra", group_algebra_section());
  absorb(r, "young", young_section());
  absorb(r, "littlewood_richardson", lr_section());
  absorb(r, "curvature_generators", generator_section(config));
  absorb(r, "cancellation", run_cancellation(config));
  absorb(r, "geometry", geometry_section(config));
  absorb(r, "theta", theta_section(config));
  r.doc["pass"] = r.pass;
  return r;
}

}  // namespace tabcurv
