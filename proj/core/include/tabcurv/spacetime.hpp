#pragma once

#include <string>
#include <vector>

#include "tabcurv/metric.hpp"
#include "tabcurv/tensor.hpp"

namespace tabcurv {

// Every geometric field at one point x, in coordinate-basis components with
// 0-based indices. Derivative indices always come last, and lowering always
// acts on the last index with g_{l s}.
struct PointFrame {
  std::string metric;
  Vec4 point{};

  RealTensor g_dn{2, 4};    // g_{mn}
  RealTensor g_up{2, 4};    // g^{mn}
  RealTensor dg{3, 4};      // (m,n,l) = d_l g_{mn}
  RealTensor ddg{4, 4};     // (m,n,l,s) = d_l d_s g_{mn}
  RealTensor Gamma{3, 4};   // (l,m,n) = Gamma^l_{mn}
  RealTensor dGamma{4, 4};  // (l,m,n,s) = d_s Gamma^l_{mn}
  RealTensor R_mixed{4, 4}; // (m,n,a,l) = R_{mna}^l = d_m Gamma^l_{na} - d_n Gamma^l_{ma} + ...
  RealTensor R_dn{4, 4};    // R_{mnal} = g_{ld} R_{mna}^d

  RealTensor xi_up{1, 4};   // xi^m = delta^m_0
  RealTensor xi_dn{1, 4};
  RealTensor xi_cov{2, 4};  // (m,n) = xi_{m;n}
  double phi = 0;           // sqrt(xi_a xi^a)
  RealTensor tau_up{1, 4};
  RealTensor tau_dn{1, 4};
  RealTensor dtau{2, 4};     // (m,n) = d_n tau_m
  RealTensor dtau_up{2, 4};  // (m,n) = d_n tau^m
  RealTensor tau_cov{2, 4};  // (m,n) = tau_{m;n}
  RealTensor tau_curl{2, 4}; // (m,n) = tau_[m;n] = (d_n tau_m - d_m tau_n)/2

  RealTensor h_dn{2, 4};     // h_{mn} = tau_m tau_n - g_{mn}
  RealTensor h_mixed{2, 4};  // (m,n) = h^m_n = g^{ma} h_{an}
  RealTensor h_up{2, 4};
  RealTensor dh_mixed{3, 4}; // (m,n,s) = d_s h^m_n

  RealTensor F{1, 4};
  RealTensor A{2, 4};
  RealTensor D{2, 4};

  RealTensor L{3, 4};        // (m,a,b) = L^m_{ab}
  RealTensor Ltilde{3, 4};   // (e,s,n) = L^e_{sn} + d_n h^e_s
  RealTensor P_mixed{4, 4};  // (a,b,r,l) = P_{abr}^l
  RealTensor P_dn{4, 4};

  RealTensor Z_mixed{4, 4};
  RealTensor Z_dn{4, 4};
  RealTensor Y{3, 4};
  RealTensor X{2, 4};

  RealTensor tau_tau_curl{3, 4};  // (l,m,n) = tau_l tau_[m;n]
  RealTensor alt_part{3, 4};      // tau_[l tau_m;n]
  RealTensor theta{3, 4};         // tau_l tau_[m;n] - tau_[l tau_m;n]
};

// Throws std::domain_error when xi = d_t is not timelike at x or g is
// singular there.
PointFrame build_point_frame(const MetricProvider& provider, const Vec4& x);

// Total alternation of an order-3 tensor, computed from the definition.
RealTensor alternation3(const RealTensor& t);

struct HIdentityResiduals {
  double h_dn_tau = 0;      // h_{mn} tau^n
  double h_mixed_tau = 0;   // h^m_n tau^n
  double h_up_tau = 0;      // h^{mn} tau_n
  double h_square = 0;      // h_a^m h_{mb} + h_{ab}
  double h_trace = 0;       // h_{mn} h^{mn} - 3
  double max() const;
};
HIdentityResiduals check_h_identities(const PointFrame& f);

// A_{ab} - [ (tau_{a,b} - tau_{b,a})/2 + (tau_a F_b - tau_b F_a)/2 ]
double check_A_decomposition(const PointFrame& f);

// Gamma^m_{ab} against its expansion in tau, h, F, A, D.
double check_gamma_decomposition(const PointFrame& f);

// R_{mna}^l + Rv^l_{anm}, with Rv the curvature tensor of the opposite
// index convention built from the same Christoffels.
double riemann_convention_residual(const PointFrame& f);

struct FrameInvariants {
  double metric_inverse = 0;   // g_dn g_up - delta
  double tau_norm = 0;         // g_{mn} tau^m tau^n - 1
  double tau_cov_tau = 0;      // tau_{m;n} tau^m
  double killing = 0;          // xi_{m;n} + xi_{n;m}
  double A_antisymmetry = 0;
  double D_symmetry = 0;
  double Z_orthogonality = 0;  // any slot of Z_dn contracted with tau^
  double theta_commutation = 0; // theta_{lnm} + theta_{lmn}
};
FrameInvariants frame_invariants(const PointFrame& f);

struct StaticityReport {
  bool stationary = false;     // declared and measured d_0 g = 0
  double time_derivative = 0;  // max |d_0 g_{mn}|
  double killing_residual = 0;
  double xi_alternation = 0;   // max |xi_[l xi_m;n]|
  double tau_alternation = 0;  // max |tau_[l tau_m;n]|
  double ratio_residual = 0;   // |xi-alt - phi^2 tau-alt| / max(1, |xi-alt|)
  bool is_static = false;      // tau_alternation <= static_tolerance
  std::string warning;
};
inline constexpr double kStaticTolerance = 1e-10;
StaticityReport staticity_test(const MetricProvider& provider, const Vec4& x);

struct ThetaDecomposition {
  RealTensor theta{3, 4};
  RealTensor alt_part{3, 4};
  double alternation_cross_check = 0;  // definition vs (1/6) y of the column tableau
  std::vector<double> identity_residuals;  // the four linear relations of theta
  double zeta_membership = 0;              // |zeta_{-1} theta - theta|
};
ThetaDecomposition theta_decompose(const PointFrame& f);

// Residuals of the four linear relations satisfied by theta.
std::vector<double> theta_identity_residuals(const RealTensor& theta);

struct FormulaCheck {
  std::string id;
  bool applicable = true;
  std::string note;
  double abs_residual = 0;
  double rel_residual = 0;
  double tolerance = 0;
  bool pass = false;
};

struct CurvatureFormulaReport {
  double scale = 1;  // max(1, max|Z_dn|, max|P_dn|)
  std::vector<FormulaCheck> formulas;
  std::vector<FormulaCheck> agreements;  // pairwise agreement of right-hand sides
  FormulaCheck ystar_tail;               // last group of terms = 1/2 y_t^*(theta (x) F)
  bool all_pass() const;
  const FormulaCheck* find(const std::string& id) const;
};

inline constexpr double kFormulaTolerance = 1e-7;
inline constexpr double kYstarTolerance = 1e-9;

// `tau_is_killing` enables the D = 0 formulas; without it they are reported
// as not applicable.
CurvatureFormulaReport verify_curvature_formulas(const PointFrame& f, bool tau_is_killing,
                                                 const std::vector<std::string>& ids = {});

struct CancellationResult {
  RationalTensor sum{4, 4};
  Rational max_abs = 0;
  bool is_zero() const { return sum.is_zero(); }
};

// The twelve F*tau*tau_[;] summands of the expanded formula with every
// tau_l tau_[m;n] replaced by a_{lmn}: a random alternating tensor, or a
// generic random tensor when `generic_input` is set.
CancellationResult cancellation_experiment(std::uint64_t seed, bool generic_input = false,
                                           bool zero_input = false);

struct SynchronizedReport {
  double F_residual = 0;
  double A_residual = 0;
  double formula_abs_residual = 0;
  double formula_rel_residual = 0;
  double scale = 1;
};

// Throws std::invalid_argument unless g_00 = 1 and g_0a = 0 at x.
SynchronizedReport synchronized_reduction_check(const MetricProvider& provider, const Vec4& x);

struct DerivativeCheck {
  double gradient_rel = 0;
  double hessian_rel = 0;
};
// Jet derivatives of every metric component vs central differences, as
// max |jet - fd| / max(1, |jet|).
DerivativeCheck finite_difference_check(const MetricProvider& provider, const Vec4& x);

}  // namespace tabcurv
