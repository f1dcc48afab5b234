#include "tabcurv/curvature.hpp"

#include <algorithm>
#include <vector>

namespace tabcurv {

template <class Scalar>
SymmetricForm<Scalar>::SymmetricForm(DenseTensor<Scalar> t) : t_(std::move(t)) {
  if (t_.order() != 2) throw std::invalid_argument("SymmetricForm needs an order-2 tensor");
  for (std::size_t i = 0; i < t_.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t_(i, j) != t_(j, i)) throw std::invalid_argument("SymmetricForm: S_ij != S_ji");
    }
  }
}

template <class Scalar>
SymmetricForm<Scalar> SymmetricForm<Scalar>::random(std::size_t dim, SplitMix64& rng) {
  DenseTensor<Scalar> t(2, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      t(i, j) = t(j, i) = Scalar(rng.uniform_int(-9, 9));
    }
  }
  return SymmetricForm(std::move(t));
}

template <class Scalar>
AlternatingForm<Scalar>::AlternatingForm(DenseTensor<Scalar> t) : t_(std::move(t)) {
  if (t_.order() != 2) throw std::invalid_argument("AlternatingForm needs an order-2 tensor");
  for (std::size_t i = 0; i < t_.dim(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (t_(i, j) != -t_(j, i)) throw std::invalid_argument("AlternatingForm: A_ij != -A_ji");
    }
  }
}

template <class Scalar>
AlternatingForm<Scalar> AlternatingForm<Scalar>::random(std::size_t dim, SplitMix64& rng) {
  DenseTensor<Scalar> t(2, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Scalar v(rng.uniform_int(-9, 9));
      t(i, j) = v;
      t(j, i) = -v;
    }
  }
  return AlternatingForm(std::move(t));
}

template class SymmetricForm<Rational>;
template class SymmetricForm<double>;
template class AlternatingForm<Rational>;
template class AlternatingForm<double>;

template <class Scalar>
DenseTensor<Scalar> gamma(const SymmetricForm<Scalar>& form) {
  const auto& s = form.tensor();
  const std::size_t n = s.dim();
  DenseTensor<Scalar> out(4, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v)
          out(k, l, m, v) = s(k, v) * s(l, m) - s(k, m) * s(l, v);
  return out;
}

template <class Scalar>
DenseTensor<Scalar> alpha(const AlternatingForm<Scalar>& form) {
  const auto& a = form.tensor();
  const std::size_t n = a.dim();
  DenseTensor<Scalar> out(4, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v)
          out(k, l, m, v) = Scalar(2) * a(k, l) * a(m, v) + a(k, m) * a(l, v) - a(k, v) * a(l, m);
  return out;
}

template DenseTensor<Rational> gamma(const SymmetricForm<Rational>&);
template DenseTensor<double> gamma(const SymmetricForm<double>&);
template DenseTensor<Rational> alpha(const AlternatingForm<Rational>&);
template DenseTensor<double> alpha(const AlternatingForm<double>&);

double CurvatureSymmetryResiduals::max() const {
  return std::max({last_pair, pair_exchange, bianchi, first_pair});
}

template <class Scalar>
CurvatureSymmetryResiduals curvature_symmetry_residuals(const DenseTensor<Scalar>& t) {
  if (t.order() != 4) throw std::invalid_argument("curvature predicate needs an order-4 tensor");
  const std::size_t n = t.dim();
  CurvatureSymmetryResiduals r;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Scalar& v = t(w, x, y, z);
          r.last_pair = std::max(r.last_pair, magnitude(v + t(w, x, z, y)));
          r.pair_exchange = std::max(r.pair_exchange, magnitude(v - t(y, z, w, x)));
          r.bianchi = std::max(r.bianchi, magnitude(v + t(w, y, z, x) + t(w, z, x, y)));
          r.first_pair = std::max(r.first_pair, magnitude(v + t(x, w, y, z)));
        }
  return r;
}

template CurvatureSymmetryResiduals curvature_symmetry_residuals(const DenseTensor<Rational>&);
template CurvatureSymmetryResiduals curvature_symmetry_residuals(const DenseTensor<double>&);

template <class Scalar>
bool is_algebraic_curvature(const DenseTensor<Scalar>& t, double tol) {
  if constexpr (std::is_same_v<Scalar, Rational>) tol = 0.0;
  const auto r = curvature_symmetry_residuals(t);
  const bool defining = r.last_pair <= tol && r.pair_exchange <= tol && r.bianchi <= tol;
  // First-pair antisymmetry follows from the defining identities.
  if (defining && r.first_pair > 2 * tol) {
    throw std::logic_error("curvature predicate: first-pair antisymmetry not implied");
  }
  return defining;
}

template bool is_algebraic_curvature(const DenseTensor<Rational>&, double);
template bool is_algebraic_curvature(const DenseTensor<double>&, double);

const YoungTableau& curvature_tableau() {
  static const YoungTableau t({{1, 3}, {2, 4}});
  return t;
}

const GroupRingElement& curvature_projector() {
  static const GroupRingElement e = Rational(1, 12) * star(young_symmetrizer(curvature_tableau()));
  return e;
}

template <class Scalar>
DenseTensor<Scalar> acr_projector(const DenseTensor<Scalar>& t) {
  if (t.order() != 4) throw std::invalid_argument("acr_projector needs an order-4 tensor");
  return apply_operator(curvature_projector(), t);
}

template DenseTensor<Rational> acr_projector(const DenseTensor<Rational>&);
template DenseTensor<double> acr_projector(const DenseTensor<double>&);

std::size_t acr_dimension(std::size_t n) {
  if (n < 2 || n > 4) throw std::invalid_argument("acr_dimension: need 2 <= n <= 4");
  return operator_rank(curvature_projector(), n);
}

std::size_t generator_span_rank(std::size_t dim, std::size_t samples, FormGenerator generator,
                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<RationalTensor> generated;
  generated.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    SplitMix64 sample_rng = rng.split();
    if (generator == FormGenerator::gamma) {
      generated.push_back(gamma(SymmetricForm<Rational>::random(dim, sample_rng)));
    } else {
      generated.push_back(alpha(AlternatingForm<Rational>::random(dim, sample_rng)));
    }
  }
  return span_rank(generated);
}

std::size_t product_generator_span_rank(const GroupRingElement& class_idempotent,
                                        const ProductSpanOptions& options) {
  if (class_idempotent.degree() != 3) {
    throw std::invalid_argument("product generators need an idempotent of S_3");
  }
  constexpr std::size_t kDim = 4;
  const GroupRingElement ystar = star(young_symmetrizer(curvature_tableau()));
  SplitMix64 rng(options.seed);
  std::vector<RationalTensor> generated;
  generated.reserve(options.samples);
  for (std::size_t i = 0; i < options.samples; ++i) {
    SplitMix64 sample_rng = rng.split();
    const RationalTensor u = apply_operator(class_idempotent, random_tensor(3, kDim, sample_rng));
    RationalTensor w = random_tensor(1, kDim, sample_rng);
    if (options.zero_vector) w = RationalTensor(1, kDim);
    const RationalTensor product =
        options.order == FactorOrder::u_then_w ? tensor_product(u, w) : tensor_product(w, u);
    generated.push_back(apply_operator(ystar, product));
  }
  return span_rank(generated);
}

}  // namespace tabcurv
