#include "tabcurv/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tabcurv/curvature.hpp"
#include "tabcurv/formula_table.hpp"
#include "tabcurv/young.hpp"

namespace tabcurv {

namespace {

constexpr std::size_t N = kSpacetimeDim;

template <class T>
using Grid2 = std::array<std::array<T, N>, N>;
template <class T>
using Grid3 = std::array<Grid2<T>, N>;

template <class T>
T det3(const Grid2<T>& m, std::size_t skip_row, std::size_t skip_col) {
  std::array<std::size_t, 3> r{}, c{};
  for (std::size_t i = 0, k = 0; i < N; ++i)
    if (i != skip_row) r[k++] = i;
  for (std::size_t j = 0, k = 0; j < N; ++j)
    if (j != skip_col) c[k++] = j;
  auto at = [&](std::size_t i, std::size_t j) -> const T& { return m[r[i]][c[j]]; };
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

double value_of(const Jet2& x) { return x.value(); }

// Adjugate inverse; works for any field-like T.
template <class T>
Grid2<T> inverse4(const Grid2<T>& m) {
  Grid2<T> cof;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      T d = det3(m, i, j);
      cof[i][j] = ((i + j) % 2 == 0) ? d : -d;
    }
  T det = T(0.0);
  for (std::size_t j = 0; j < N; ++j) det += m[0][j] * cof[0][j];
  const double dv = value_of(det);
  if (!std::isfinite(dv) || std::abs(dv) < 1e-300) throw std::domain_error("metric is singular at this point");
  Grid2<T> inv;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) inv[i][j] = cof[j][i] / det;
  return inv;
}

template <class Fn>
RealTensor tabulate(std::size_t order, Fn&& fn, std::size_t dim = N) {
  RealTensor t(order, dim);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = fn(t.multi_index(f));
  return t;
}

// out[.. a ..] = sum_b m(b, a) t[.. b ..] in position `slot`.
RealTensor contract_slot(const RealTensor& t, std::size_t slot, const RealTensor& m) {
  RealTensor out(t.order(), t.dim());
  const std::size_t n = t.dim();
  std::size_t stride = 1;
  for (std::size_t k = slot + 1; k < t.order(); ++k) stride *= n;
  for (std::size_t f = 0; f < out.size(); ++f) {
    const std::size_t a = (f / stride) % n;
    const std::size_t base = f - a * stride;
    double s = 0;
    for (std::size_t b = 0; b < n; ++b) s += m(b, a) * t[base + b * stride];
    out[f] = s;
  }
  return out;
}

RealTensor transpose(const RealTensor& m) {
  return tabulate(2, [&](const auto& i) { return m(i[1], i[0]); });
}

// Projects every covariant slot with h_a^m and, if `last_contravariant`, the
// last slot with h_d^l.
RealTensor project(RealTensor t, const RealTensor& h_mixed, bool last_contravariant) {
  const RealTensor hT = transpose(h_mixed);
  for (std::size_t s = 0; s < t.order(); ++s) {
    const bool up = last_contravariant && s + 1 == t.order();
    t = contract_slot(t, s, up ? hT : h_mixed);
  }
  return t;
}

RealTensor lower_last(const RealTensor& t, const RealTensor& g_dn) {
  return contract_slot(t, t.order() - 1, g_dn);
}

double max_abs_diff(const RealTensor& a, const RealTensor& b) { return (a - b).max_abs(); }

RealTensor vector_of(const std::array<Jet2, N>& v) {
  return tabulate(1, [&](const auto& i) { return v[i[0]].value(); });
}

}  // namespace

RealTensor alternation3(const RealTensor& t) {
  if (t.order() != 3) throw std::invalid_argument("alternation3 needs an order-3 tensor");
  return tabulate(
      3,
      [&](const auto& i) {
        const auto l = i[0], m = i[1], n = i[2];
        return (t(l, m, n) + t(m, n, l) + t(n, l, m) - t(m, l, n) - t(l, n, m) - t(n, m, l)) / 6.0;
      },
      t.dim());
}

PointFrame build_point_frame(const MetricProvider& provider, const Vec4& x) {
  const JetMetric g = provider.evaluate(x);
  const Grid2<Jet2> gi = inverse4<Jet2>(g);

  PointFrame f;
  f.metric = provider.name;
  f.point = x;
  f.g_dn = tabulate(2, [&](const auto& i) { return g[i[0]][i[1]].value(); });
  f.g_up = tabulate(2, [&](const auto& i) { return gi[i[0]][i[1]].value(); });
  f.dg = tabulate(3, [&](const auto& i) { return g[i[0]][i[1]].grad()[i[2]]; });
  f.ddg = tabulate(4, [&](const auto& i) { return g[i[0]][i[1]].hess()[i[2]][i[3]]; });

  // Christoffels as first-order jets, so their derivatives come for free.
  Grid3<Jet1> gam;
  for (std::size_t l = 0; l < N; ++l)
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t n = 0; n < N; ++n) {
        Jet1 s;
        for (std::size_t c = 0; c < N; ++c) {
          s += gi[l][c].first_order() * (g[n][c].partial(m) + g[m][c].partial(n) - g[m][n].partial(c));
        }
        gam[l][m][n] = Jet1(0.5) * s;
      }
  f.Gamma = tabulate(3, [&](const auto& i) { return gam[i[0]][i[1]][i[2]].value; });
  f.dGamma = tabulate(4, [&](const auto& i) { return gam[i[0]][i[1]][i[2]].grad[i[3]]; });
  f.R_mixed = tabulate(4, [&](const auto& i) {
    const auto m = i[0], n = i[1], a = i[2], l = i[3];
    double r = gam[l][n][a].grad[m] - gam[l][m][a].grad[n];
    for (std::size_t e = 0; e < N; ++e) {
      r += gam[e][n][a].value * gam[l][m][e].value - gam[e][m][a].value * gam[l][n][e].value;
    }
    return r;
  });
  f.R_dn = lower_last(f.R_mixed, f.g_dn);

  if (g[0][0].value() <= 0) throw std::domain_error("d_t is not timelike at this point");
  const Jet2 phi = sqrt(g[0][0]);
  std::array<Jet2, N> tau_dn, tau_up;
  for (std::size_t m = 0; m < N; ++m) {
    tau_dn[m] = g[m][0] / phi;
    tau_up[m] = Jet2(m == 0 ? 1.0 : 0.0) / phi;
  }
  f.phi = phi.value();
  f.xi_up = tabulate(1, [](const auto& i) { return i[0] == 0 ? 1.0 : 0.0; });
  f.xi_dn = tabulate(1, [&](const auto& i) { return g[i[0]][0].value(); });
  f.xi_cov = tabulate(2, [&](const auto& i) {
    double s = g[i[0]][0].grad()[i[1]];
    for (std::size_t l = 0; l < N; ++l) s -= f.Gamma(l, i[0], i[1]) * f.xi_dn(l);
    return s;
  });
  f.tau_dn = vector_of(tau_dn);
  f.tau_up = vector_of(tau_up);
  f.dtau = tabulate(2, [&](const auto& i) { return tau_dn[i[0]].grad()[i[1]]; });
  f.dtau_up = tabulate(2, [&](const auto& i) { return tau_up[i[0]].grad()[i[1]]; });
  f.tau_cov = tabulate(2, [&](const auto& i) {
    double s = f.dtau(i[0], i[1]);
    for (std::size_t l = 0; l < N; ++l) s -= f.Gamma(l, i[0], i[1]) * f.tau_dn(l);
    return s;
  });
  f.tau_curl = tabulate(2, [&](const auto& i) { return 0.5 * (f.dtau(i[0], i[1]) - f.dtau(i[1], i[0])); });

  Grid2<Jet2> h_dn, h_mixed, h_up;
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) h_dn[m][n] = tau_dn[m] * tau_dn[n] - g[m][n];
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      Jet2 s;
      for (std::size_t a = 0; a < N; ++a) s += gi[m][a] * h_dn[a][n];
      h_mixed[m][n] = s;
    }
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      Jet2 s;
      for (std::size_t a = 0; a < N; ++a) s += h_mixed[m][a] * gi[a][n];
      h_up[m][n] = s;
    }
  f.h_dn = tabulate(2, [&](const auto& i) { return h_dn[i[0]][i[1]].value(); });
  f.h_mixed = tabulate(2, [&](const auto& i) { return h_mixed[i[0]][i[1]].value(); });
  f.h_up = tabulate(2, [&](const auto& i) { return h_up[i[0]][i[1]].value(); });
  f.dh_mixed = tabulate(3, [&](const auto& i) { return h_mixed[i[0]][i[1]].grad()[i[2]]; });

  const RealTensor curl = 2.0 * f.tau_curl;
  f.F = tabulate(1, [&](const auto& i) {
    double s = 0;
    for (std::size_t n = 0; n < N; ++n) s += curl(i[0], n) * f.tau_up(n);
    return s;
  });
  f.A = project(0.5 * curl, f.h_mixed, false);
  f.D = project(-0.5 * (f.tau_cov + transpose(f.tau_cov)), f.h_mixed, false);

  Grid3<Jet1> L, Lt;
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        Jet1 s;
        for (std::size_t e = 0; e < N; ++e) {
          s += h_up[m][e].first_order() *
               (h_dn[a][e].partial(b) + h_dn[b][e].partial(a) - h_dn[a][b].partial(e));
        }
        L[m][a][b] = Jet1(0.5) * s;
      }
  for (std::size_t e = 0; e < N; ++e)
    for (std::size_t s = 0; s < N; ++s)
      for (std::size_t n = 0; n < N; ++n) Lt[e][s][n] = L[e][s][n] + h_mixed[e][s].partial(n);
  f.L = tabulate(3, [&](const auto& i) { return L[i[0]][i[1]][i[2]].value; });
  f.Ltilde = tabulate(3, [&](const auto& i) { return Lt[i[0]][i[1]][i[2]].value; });

  const RealTensor inner = tabulate(4, [&](const auto& i) {
    const auto mu = i[0], nu = i[1], s = i[2], e = i[3];
    double r = Lt[e][s][nu].grad[mu] - Lt[e][s][mu].grad[nu];
    for (std::size_t k = 0; k < N; ++k) {
      r += Lt[e][k][mu].value * Lt[k][s][nu].value - Lt[e][k][nu].value * Lt[k][s][mu].value;
    }
    return r;
  });
  f.P_mixed = -1.0 * project(inner, f.h_mixed, true);
  f.P_dn = lower_last(f.P_mixed, f.g_dn);

  f.Z_mixed = project(f.R_mixed, f.h_mixed, true);
  f.Z_dn = lower_last(f.Z_mixed, f.g_dn);
  {
    RealTensor rt(3, N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t c = 0; c < N; ++c) {
          double s = 0;
          for (std::size_t d = 0; d < N; ++d) s += f.R_mixed(a, b, c, d) * f.tau_dn(d);
          rt(a, b, c) = s;
        }
    f.Y = project(rt, f.h_mixed, false);
    RealTensor xt(2, N);
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        double s = 0;
        for (std::size_t a = 0; a < N; ++a) s += f.tau_up(a) * rt(a, b, c);
        xt(b, c) = -s;
      }
    f.X = project(xt, f.h_mixed, false);
  }

  f.tau_tau_curl = tabulate(3, [&](const auto& i) { return f.tau_dn(i[0]) * f.tau_curl(i[1], i[2]); });
  f.alt_part = alternation3(f.tau_tau_curl);
  f.theta = f.tau_tau_curl - f.alt_part;
  return f;
}

double HIdentityResiduals::max() const {
  return std::max({h_dn_tau, h_mixed_tau, h_up_tau, h_square, h_trace});
}

HIdentityResiduals check_h_identities(const PointFrame& f) {
  HIdentityResiduals r;
  for (std::size_t m = 0; m < N; ++m) {
    double a = 0, b = 0, c = 0;
    for (std::size_t n = 0; n < N; ++n) {
      a += f.h_dn(m, n) * f.tau_up(n);
      b += f.h_mixed(m, n) * f.tau_up(n);
      c += f.h_up(m, n) * f.tau_dn(n);
    }
    r.h_dn_tau = std::max(r.h_dn_tau, std::abs(a));
    r.h_mixed_tau = std::max(r.h_mixed_tau, std::abs(b));
    r.h_up_tau = std::max(r.h_up_tau, std::abs(c));
  }
  double trace = 0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      double s = f.h_dn(a, b);
      for (std::size_t m = 0; m < N; ++m) s += f.h_mixed(m, a) * f.h_dn(m, b);
      r.h_square = std::max(r.h_square, std::abs(s));
      trace += f.h_dn(a, b) * f.h_up(a, b);
    }
  r.h_trace = std::abs(trace - 3.0);
  return r;
}

double check_A_decomposition(const PointFrame& f) {
  const RealTensor rhs = tabulate(2, [&](const auto& i) {
    const auto a = i[0], b = i[1];
    return f.tau_curl(a, b) + 0.5 * (f.tau_dn(a) * f.F(b) - f.tau_dn(b) * f.F(a));
  });
  return max_abs_diff(f.A, rhs);
}

double check_gamma_decomposition(const PointFrame& f) {
  const RealTensor F_up = contract_slot(f.F, 0, f.g_up);
  const RealTensor A_mixed = contract_slot(transpose(f.A), 1, f.g_up);  // (b, m) = A^m_b
  const RealTensor rhs = tabulate(3, [&](const auto& i) {
    const auto m = i[0], a = i[1], b = i[2];
    double s = f.L(m, a, b) + f.dh_mixed(m, a, b);
    s -= f.tau_up(m) * (f.A(a, b) - f.D(a, b) + f.F(a) * f.tau_dn(b));
    s += F_up(m) * f.tau_dn(a) * f.tau_dn(b);
    s += f.tau_dn(a) * A_mixed(b, m) + f.tau_dn(b) * A_mixed(a, m);
    s -= f.tau_dn(a) * f.dtau_up(m, b);
    return s;
  });
  return max_abs_diff(f.Gamma, rhs);
}

double riemann_convention_residual(const PointFrame& f) {
  // Rv^l_{anm} = d_n G^l_{am} - d_m G^l_{an} + G^e_{am} G^l_{en} - G^e_{an} G^l_{em}
  const RealTensor other = tabulate(4, [&](const auto& i) {
    const auto m = i[0], n = i[1], a = i[2], l = i[3];
    double r = f.dGamma(l, a, m, n) - f.dGamma(l, a, n, m);
    for (std::size_t e = 0; e < N; ++e) r += f.Gamma(e, a, m) * f.Gamma(l, e, n) - f.Gamma(e, a, n) * f.Gamma(l, e, m);
    return r;
  });
  return (f.R_mixed + other).max_abs();
}

FrameInvariants frame_invariants(const PointFrame& f) {
  FrameInvariants v;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      double s = 0, t = 0;
      for (std::size_t c = 0; c < N; ++c) {
        s += f.g_dn(a, c) * f.g_up(c, b);
        t += f.tau_cov(c, b) * f.tau_up(c);
      }
      v.metric_inverse = std::max(v.metric_inverse, std::abs(s - (a == b ? 1.0 : 0.0)));
      if (a == 0) v.tau_cov_tau = std::max(v.tau_cov_tau, std::abs(t));
      v.killing = std::max(v.killing, std::abs(f.xi_cov(a, b) + f.xi_cov(b, a)));
      v.A_antisymmetry = std::max(v.A_antisymmetry, std::abs(f.A(a, b) + f.A(b, a)));
      v.D_symmetry = std::max(v.D_symmetry, std::abs(f.D(a, b) - f.D(b, a)));
    }
  double norm = 0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) norm += f.g_dn(a, b) * f.tau_up(a) * f.tau_up(b);
  v.tau_norm = std::abs(norm - 1.0);
  RealTensor tau_rows(2, N);
  for (std::size_t b = 0; b < N; ++b)
    for (std::size_t a = 0; a < N; ++a) tau_rows(b, a) = f.tau_up(b);
  for (std::size_t s = 0; s < 4; ++s) {
    v.Z_orthogonality = std::max(v.Z_orthogonality, contract_slot(f.Z_dn, s, tau_rows).max_abs());
  }
  for (std::size_t l = 0; l < N; ++l)
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t n = 0; n < N; ++n)
        v.theta_commutation = std::max(v.theta_commutation, std::abs(f.theta(l, n, m) + f.theta(l, m, n)));
  return v;
}

StaticityReport staticity_test(const MetricProvider& provider, const Vec4& x) {
  const PointFrame f = build_point_frame(provider, x);
  StaticityReport r;
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) r.time_derivative = std::max(r.time_derivative, std::abs(f.dg(m, n, 0)));
  r.stationary = provider.stationary && r.time_derivative <= 1e-12;
  if (!provider.stationary) {
    r.warning = "metric '" + provider.name + "' is not stationary; d_t is not a Killing field";
  } else if (!r.stationary) {
    r.warning = "metric '" + provider.name + "' is declared stationary but d_t g != 0 here";
  }
  r.killing_residual = frame_invariants(f).killing;

  const RealTensor xi_xi = tabulate(3, [&](const auto& i) { return f.xi_dn(i[0]) * f.xi_cov(i[1], i[2]); });
  const RealTensor xi_alt = alternation3(xi_xi);
  r.xi_alternation = xi_alt.max_abs();
  r.tau_alternation = f.alt_part.max_abs();
  r.ratio_residual = (xi_alt - (f.phi * f.phi) * f.alt_part).max_abs() / std::max(1.0, r.xi_alternation);
  r.is_static = r.tau_alternation <= kStaticTolerance;
  return r;
}

std::vector<double> theta_identity_residuals(const RealTensor& th) {
  std::vector<double> out(4, 0.0);
  const std::size_t n = th.dim();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        out[0] = std::max(out[0], std::abs(th(l, m, v) + th(l, v, m)));
        out[1] = std::max(out[1], std::abs(-th(l, m, v) + th(v, m, l) + th(m, l, v)));
        out[2] = std::max(out[2], std::abs(th(l, m, v) - th(v, m, l) + th(m, v, l)));
        out[3] = std::max(out[3], std::abs(th(v, m, l) + th(v, l, m)));
      }
  return out;
}

ThetaDecomposition theta_decompose(const PointFrame& f) {
  ThetaDecomposition d;
  d.alt_part = alternation3(f.tau_tau_curl);
  d.theta = f.tau_tau_curl - d.alt_part;
  GroupRingElement column = young_symmetrizer(YoungTableau({{1}, {2}, {3}}));
  column *= Rational(1, 6);
  d.alternation_cross_check = max_abs_diff(apply_operator(column, f.tau_tau_curl), d.alt_part);
  d.identity_residuals = theta_identity_residuals(d.theta);
  d.zeta_membership = class_membership_residual(make_zeta(Rational(-1)), d.theta);
  return d;
}

bool CurvatureFormulaReport::all_pass() const {
  auto ok = [](const FormulaCheck& c) { return !c.applicable || c.pass; };
  return std::all_of(formulas.begin(), formulas.end(), ok) && std::all_of(agreements.begin(), agreements.end(), ok) &&
         ok(ystar_tail);
}

const FormulaCheck* CurvatureFormulaReport::find(const std::string& id) const {
  for (const auto& c : formulas)
    if (c.id == id) return &c;
  for (const auto& c : agreements)
    if (c.id == id) return &c;
  if (ystar_tail.id == id) return &ystar_tail;
  return nullptr;
}

namespace {

FieldValues<double> frame_fields(const PointFrame& f) {
  return {{Field::P, f.P_dn}, {Field::F, f.F},         {Field::tau, f.tau_dn}, {Field::W, f.tau_curl},
          {Field::theta, f.theta}, {Field::A, f.A}, {Field::D, f.D}};
}

FormulaCheck make_check(std::string id, double abs, double scale, double tol) {
  FormulaCheck c;
  c.id = std::move(id);
  c.abs_residual = abs;
  c.rel_residual = abs / scale;
  c.tolerance = tol;
  c.pass = c.rel_residual <= tol;
  return c;
}

}  // namespace

CurvatureFormulaReport verify_curvature_formulas(const PointFrame& f, bool tau_is_killing,
                                                 const std::vector<std::string>& ids) {
  CurvatureFormulaReport rep;
  rep.scale = std::max({1.0, f.Z_dn.max_abs(), f.P_dn.max_abs()});
  const auto fields = frame_fields(f);
  const RealTensor lhs = -1.0 * f.Z_dn;
  const bool a_vanishes = f.F.max_abs() <= 1e-10 && f.A.max_abs() <= 1e-10;

  const auto wanted = ids.empty() ? formula_ids() : ids;
  std::map<std::string, RealTensor> rhs;
  for (const auto& id : wanted) {
    const FormulaTable& table = formula_table(id);
    RealTensor value = evaluate(table, fields, N);
    FormulaCheck c = make_check(id, max_abs_diff(lhs, value), rep.scale, kFormulaTolerance);
    if (id == "sync") {
      c.applicable = a_vanishes;
      if (!c.applicable) c.note = "requires F = A = 0 at the point";
    } else if (id != "2.30") {
      c.applicable = tau_is_killing;
      if (!c.applicable) c.note = "requires tau to be proportional to a Killing field";
    }
    if (!c.applicable) c.pass = false;
    rhs.emplace(id, std::move(value));
    rep.formulas.push_back(std::move(c));
  }

  const std::vector<std::string> family = {"1.5", "1.18", "1.20"};
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto a = rhs.find(family[i]);
      auto b = rhs.find(family[j]);
      if (a == rhs.end() || b == rhs.end()) continue;
      FormulaCheck c = make_check(family[i] + "~" + family[j], max_abs_diff(a->second, b->second), rep.scale,
                                  kFormulaTolerance);
      c.applicable = tau_is_killing;
      if (!c.applicable) {
        c.note = "requires tau to be proportional to a Killing field";
        c.pass = false;
      }
      rep.agreements.push_back(std::move(c));
    }

  const FormulaTable tail = select_terms(formula_table("1.20"), {Field::F, Field::theta});
  const RealTensor tail_value = evaluate(tail, fields, N);
  GroupRingElement half_ystar = star(young_symmetrizer(curvature_tableau()));
  half_ystar *= Rational(1, 2);
  const RealTensor product = apply_operator(half_ystar, tensor_product(f.theta, f.F));
  rep.ystar_tail = make_check("1.20-tail", max_abs_diff(tail_value, product), 1.0, kYstarTolerance);
  return rep;
}

CancellationResult cancellation_experiment(std::uint64_t seed, bool generic_input, bool zero_input) {
  SplitMix64 rng(seed);
  const FormulaTable mixed =
      substitute_tau_curl(select_terms(formula_table("1.5"), {Field::F, Field::tau, Field::W}), Field::a);
  RationalTensor F = random_tensor(1, N, rng);
  RationalTensor a(3, N);
  if (!zero_input) {
    const RationalTensor x = random_tensor(3, N, rng);
    a = generic_input ? x : apply_operator(signed_sum(3), x);
  }
  FieldValues<Rational> fields{{Field::F, F}, {Field::a, a}};
  CancellationResult r;
  r.sum = evaluate(mixed, fields, N);
  for (const auto& c : r.sum.components()) r.max_abs = std::max(r.max_abs, Rational(abs(c)));
  return r;
}

SynchronizedReport synchronized_reduction_check(const MetricProvider& provider, const Vec4& x) {
  const JetMetric g = provider.evaluate(x);
  for (std::size_t m = 0; m < N; ++m) {
    const Jet2& c = g[0][m];
    const double want = m == 0 ? 1.0 : 0.0;
    bool flat = std::abs(c.value() - want) <= 1e-12;
    for (double d : c.grad()) flat = flat && std::abs(d) <= 1e-12;
    if (!flat) {
      throw std::invalid_argument("metric '" + provider.name +
                                  "' is not in synchronized form (g_00 = 1, g_0a = 0) near this point");
    }
  }
  const PointFrame f = build_point_frame(provider, x);
  SynchronizedReport r;
  r.F_residual = f.F.max_abs();
  r.A_residual = f.A.max_abs();
  r.scale = std::max({1.0, f.Z_dn.max_abs(), f.P_dn.max_abs()});
  const RealTensor value = evaluate(formula_table("sync"), frame_fields(f), N);
  r.formula_abs_residual = max_abs_diff(-1.0 * f.Z_dn, value);
  r.formula_rel_residual = r.formula_abs_residual / r.scale;
  return r;
}

DerivativeCheck finite_difference_check(const MetricProvider& provider, const Vec4& x) {
  constexpr double hg = 1e-4;
  constexpr double hh = 1e-4;
  auto values_at = [&](Vec4 p, std::size_t i, double di, std::size_t j, double dj) {
    p[i] += di;
    p[j] += dj;
    return values_of(provider.evaluate(p));
  };
  const JetMetric g = provider.evaluate(x);
  DerivativeCheck out;
  auto rel = [](double jet, double fd) { return std::abs(jet - fd) / std::max(1.0, std::abs(jet)); };
  for (std::size_t i = 0; i < N; ++i) {
    const Mat4 plus = values_at(x, i, hg, i, 0.0);
    const Mat4 minus = values_at(x, i, -hg, i, 0.0);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        out.gradient_rel = std::max(out.gradient_rel, rel(g[a][b].grad()[i], (plus[a][b] - minus[a][b]) / (2 * hg)));
    for (std::size_t j = i; j < N; ++j) {
      const Mat4 pp = values_at(x, i, hh, j, hh);
      const Mat4 pm = values_at(x, i, hh, j, -hh);
      const Mat4 mp = values_at(x, i, -hh, j, hh);
      const Mat4 mm = values_at(x, i, -hh, j, -hh);
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
          const double fd = (pp[a][b] - pm[a][b] - mp[a][b] + mm[a][b]) / (4 * hh * hh);
          out.hessian_rel = std::max(out.hessian_rel, rel(g[a][b].hess()[i][j], fd));
        }
    }
  }
  return out;
}

}  // namespace tabcurv
