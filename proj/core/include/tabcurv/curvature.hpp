#pragma once

#include <cstddef>
#include <cstdint>

#include "tabcurv/tensor.hpp"
#include "tabcurv/young.hpp"

namespace tabcurv {

// Order-2 tensor with S_ij = S_ji, checked exactly on construction.
template <class Scalar>
class SymmetricForm {
 public:
  explicit SymmetricForm(DenseTensor<Scalar> t);
  static SymmetricForm random(std::size_t dim, SplitMix64& rng);
  const DenseTensor<Scalar>& tensor() const noexcept { return t_; }
  std::size_t dim() const noexcept { return t_.dim(); }

 private:
  DenseTensor<Scalar> t_;
};

// Order-2 tensor with A_ij = -A_ji, checked exactly on construction.
template <class Scalar>
class AlternatingForm {
 public:
  explicit AlternatingForm(DenseTensor<Scalar> t);
  static AlternatingForm random(std::size_t dim, SplitMix64& rng);
  const DenseTensor<Scalar>& tensor() const noexcept { return t_; }
  std::size_t dim() const noexcept { return t_.dim(); }

 private:
  DenseTensor<Scalar> t_;
};

// gamma(S)_{klmn} = S_kn S_lm - S_km S_ln
template <class Scalar>
DenseTensor<Scalar> gamma(const SymmetricForm<Scalar>& s);

// alpha(A)_{klmn} = 2 A_kl A_mn + A_km A_ln - A_kn A_lm
template <class Scalar>
DenseTensor<Scalar> alpha(const AlternatingForm<Scalar>& a);

struct CurvatureSymmetryResiduals {
  double last_pair = 0;      // R(w,x,y,z) + R(w,x,z,y)
  double pair_exchange = 0;  // R(w,x,y,z) - R(y,z,w,x)
  double bianchi = 0;        // R(w,x,y,z) + R(w,y,z,x) + R(w,z,x,y)
  double first_pair = 0;     // R(w,x,y,z) + R(x,w,y,z), implied by the others

  double max() const;
};

template <class Scalar>
CurvatureSymmetryResiduals curvature_symmetry_residuals(const DenseTensor<Scalar>& t);

// Antisymmetry in the last pair, pair exchange and the first Bianchi identity,
// each within tol (tol is ignored for rational tensors: comparison is exact).
template <class Scalar>
bool is_algebraic_curvature(const DenseTensor<Scalar>& t, double tol = 0.0);

// The standard tableau 1 3 / 2 4.
const YoungTableau& curvature_tableau();

// (1/12) y_t^* for t = curvature_tableau(); idempotent, and eT = T exactly
// for algebraic curvature tensors.
const GroupRingElement& curvature_projector();

template <class Scalar>
DenseTensor<Scalar> acr_projector(const DenseTensor<Scalar>& t);

// Exact rank of acr_projector on T_4 of an n-dimensional space, 2 <= n <= 4.
std::size_t acr_dimension(std::size_t n);

enum class FormGenerator { gamma, alpha };

// Rank of {gamma(S_i)} (or {alpha(A_i)}) for `samples` seeded random forms.
std::size_t generator_span_rank(std::size_t dim, std::size_t samples, FormGenerator generator,
                                std::uint64_t seed);

enum class FactorOrder { u_then_w, w_then_u };

struct ProductSpanOptions {
  std::size_t samples = 60;
  FactorOrder order = FactorOrder::u_then_w;
  std::uint64_t seed = kDefaultSeed;
  bool zero_vector = false;  // force w = 0
};

// Rank of { y_t^*(U (x) w) } (or y_t^*(w (x) U)) over dim = 4, where
// U = e X for random order-3 X, w random, and e is the idempotent generating
// the order-3 symmetry class.
std::size_t product_generator_span_rank(const GroupRingElement& class_idempotent,
                                        const ProductSpanOptions& options);

extern template class SymmetricForm<Rational>;
extern template class SymmetricForm<double>;
extern template class AlternatingForm<Rational>;
extern template class AlternatingForm<double>;

}  // namespace tabcurv
