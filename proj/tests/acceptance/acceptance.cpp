// Usage: acceptance <path to tabcurv executable>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "tabcurv/curvature.hpp"
#include "tabcurv/lr.hpp"
#include "tabcurv/metric.hpp"
#include "tabcurv/spacetime.hpp"
#include "tabcurv/young.hpp"

using namespace tabcurv;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome group_algebra() {
  Outcome o;
  const auto rho = make_rho();
  const auto eta = make_eta();
  o.expect(rho * rho == rho, "rho^2");
  o.expect(eta * eta == eta, "eta^2");
  o.expect(eta * rho != rho, "eta*rho != rho");
  for (const auto& nu : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    const auto z = make_zeta(nu);
    o.expect(z * z == z, "zeta^2 for nu=" + to_string(nu));
    const bool same = z * rho == rho && rho * z == z;
    o.expect(same == (nu == -1), "class relation for nu=" + to_string(nu));
  }
  return o;
}

Outcome young_suite() {
  Outcome o;
  const auto y = young_symmetrizer(parse_tableau("1,3;2,4"));
  o.expect(y.size() == 16, "16 terms");
  o.expect(y * y == Rational(12) * y, "y*y = 12y");
  for (int r = 1; r <= 5; ++r) {
    const auto rep = verify_ring_decomposition(r);
    o.expect(rep.sum_matches(), "sum of squares r=" + std::to_string(r));
    if (r == 3 || r == 4) o.expect(rep.rank_matches(), "ideal span rank r=" + std::to_string(r));
  }
  return o;
}

Outcome lr_suite() {
  Outcome o;
  const auto expect_product = [&](const Partition& a, const Partition& b, std::initializer_list<Partition> nus) {
    PartitionMultiset m;
    for (const auto& nu : nus) m.add(nu);
    o.expect(lr_product(a, b) == m, format_product(a, b, lr_product(a, b)));
  };
  expect_product({1, 1}, {1}, {{2, 1}, {1, 1, 1}});
  expect_product({2, 1}, {1}, {{3, 1}, {2, 2}, {2, 1, 1}});
  expect_product({1, 1, 1}, {1}, {{2, 1, 1}, {1, 1, 1, 1}});
  for (const auto& lambda : partitions_of(3)) {
    const int c = contains_partition(lr_product(lambda, {1}), {2, 2});
    o.expect(c == (lambda == Partition({2, 1}) ? 1 : 0), "[2 2] in " + to_string(lambda) + "[1]");
  }
  return o;
}

Outcome generator_suite() {
  Outcome o;
  o.expect(acr_dimension(2) == 1 && acr_dimension(3) == 6 && acr_dimension(4) == 20, "acr dimensions");
  o.expect(generator_span_rank(4, 40, FormGenerator::gamma, derive_seed(kDefaultSeed, "gamma")) == 20, "gamma span");
  o.expect(generator_span_rank(4, 40, FormGenerator::alpha, derive_seed(kDefaultSeed, "alpha")) == 20, "alpha span");
  for (auto order : {FactorOrder::u_then_w, FactorOrder::w_then_u}) {
    ProductSpanOptions opt;
    opt.order = order;
    opt.seed = derive_seed(kDefaultSeed, "thm13");
    for (const auto& nu : {Rational(-1), Rational(0), Rational(2)}) {
      o.expect(product_generator_span_rank(make_zeta(nu), opt) == 20, "thm13 nu=" + to_string(nu));
    }
    o.expect(product_generator_span_rank(make_zeta(Rational(1, 2)), opt) < 20, "thm13 nu=1/2 deficient");
  }
  return o;
}

Outcome cancellation_suite() {
  Outcome o;
  for (std::uint64_t k = 0; k < 20; ++k) {
    o.expect(cancellation_experiment(derive_seed(kDefaultSeed, "cancel-" + std::to_string(k))).is_zero(),
             "seed " + std::to_string(k));
  }
  o.expect(!cancellation_experiment(kDefaultSeed, true).is_zero(), "generic input nonzero");
  return o;
}

Outcome geometry_suite() {
  Outcome o;
  const auto check = [&](double v, double bound, const std::string& what) {
    o.expect(v <= bound, what + " = " + fmt(v));
  };

  const auto s = make_metric("schwarzschild", {{"m", 1.0}});
  const Vec4 sx{0.0, 6.0, 1.0, 0.5};
  const auto sf = build_point_frame(s, sx);
  const auto sst = staticity_test(s, sx);
  check(frame_invariants(sf).killing, 1e-10, "schwarzschild killing");
  check(sf.D.max_abs(), 1e-10, "schwarzschild D");
  check(sst.tau_alternation, 1e-10, "schwarzschild staticity");
  const auto srep = verify_curvature_formulas(sf, true, {"2.30", "3.5", "1.5", "1.18", "1.20"});
  for (const auto& c : srep.formulas) {
    o.expect(c.applicable, "schwarzschild " + c.id + " applicable");
    check(c.rel_residual, 1e-7, "schwarzschild " + c.id);
  }

  const auto l = make_metric("langevin", {{"omega", 0.1}});
  const Vec4 lx{0.0, 2.0, 0.5, 0.3};
  const auto lst = staticity_test(l, lx);
  o.expect(!lst.is_static && lst.tau_alternation > 1e-3, "langevin not static");
  check(lst.ratio_residual, 1e-10, "langevin ratio");
  const auto lrep = verify_curvature_formulas(build_point_frame(l, lx), true, {"1.5", "1.18", "1.20"});
  o.expect(lrep.agreements.size() == 3, "langevin pairwise agreements");
  for (const auto& c : lrep.agreements) check(c.rel_residual, 1e-7, "langevin " + c.id);

  const auto f = make_metric("flrw");
  const auto sync = synchronized_reduction_check(f, f.default_point);
  check(sync.F_residual, 1e-10, "flrw F");
  check(sync.A_residual, 1e-10, "flrw A");
  check(sync.formula_rel_residual, 1e-7, "flrw reduced formula");

  const auto m = make_metric("minkowski");
  const auto mf = build_point_frame(m, m.default_point);
  const auto inv = frame_invariants(mf);
  double worst = std::max({inv.metric_inverse, inv.tau_norm, inv.tau_cov_tau, inv.killing, inv.A_antisymmetry,
                           inv.D_symmetry, inv.Z_orthogonality, inv.theta_commutation,
                           check_h_identities(mf).max(), check_A_decomposition(mf), check_gamma_decomposition(mf),
                           riemann_convention_residual(mf), mf.R_dn.max_abs(), mf.Z_dn.max_abs()});
  for (const auto& c : verify_curvature_formulas(mf, true).formulas) worst = std::max(worst, c.abs_residual);
  check(worst, 1e-14, "minkowski worst residual");
  return o;
}

Outcome theta_suite() {
  Outcome o;
  const auto l = make_metric("langevin", {{"omega", 0.1}});
  const auto frame = build_point_frame(l, {0.0, 2.0, 0.5, 0.3});
  const auto d = theta_decompose(frame);
  for (double r : d.identity_residuals) o.expect(r <= 1e-12, "identity residual " + fmt(r));
  o.expect(class_membership_residual(make_zeta(-1), d.theta) <= 1e-10, "zeta(-1) membership");
  const auto rep = verify_curvature_formulas(frame, true, {"1.20"});
  o.expect(rep.ystar_tail.abs_residual <= 1e-9, "y* tail " + fmt(rep.ystar_tail.abs_residual));
  return o;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.expect(false, "no executable given");
    return o;
  }
  const auto dir = std::filesystem::temp_directory_path() / ("tabcurv-accept-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string outputs[2];
  for (int k = 0; k < 2; ++k) {
    const auto path = dir / ("report" + std::to_string(k) + ".json");
    const std::string cmd = "\"" + cli + "\" report --seed 42 --output \"" + path.string() + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    o.expect(rc == 0, "report run " + std::to_string(k) + " exit status " + std::to_string(rc));
    outputs[k] = read_file(path);
  }
  std::filesystem::remove_all(dir);
  o.expect(!outputs[0].empty(), "report is empty");
  o.expect(outputs[0] == outputs[1], "report bytes differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"group algebra idempotents and zeta/rho relation", group_algebra},
      {"Young symmetrizer of 1,3;2,4 and ring decomposition", young_suite},
      {"Littlewood-Richardson products", lr_suite},
      {"curvature generator span ranks", generator_suite},
      {"exact cancellation of alternating terms", cancellation_suite},
      {"geometry on Schwarzschild, Langevin, FLRW, Minkowski", geometry_suite},
      {"theta identities, class membership and y* tail", theta_suite},
      {"report --seed 42 is byte-identical across runs", [&] { return determinism(cli); }},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " (" << fmt(secs) << " s)";
    for (const auto& f : o.failures) std::cout << "\n    " << f;
    std::cout << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
