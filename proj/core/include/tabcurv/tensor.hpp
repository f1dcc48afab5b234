#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "tabcurv/group_ring.hpp"
#include "tabcurv/random.hpp"
#include "tabcurv/rational.hpp"

namespace tabcurv {

enum class ScalarMode { rational, floating };

std::string to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view text);

template <class Scalar>
inline constexpr ScalarMode scalar_mode_of =
    std::is_same_v<Scalar, Rational> ? ScalarMode::rational : ScalarMode::floating;

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Rational& x) { return std::abs(to_double(x)); }

// Covariant tensor T_{i1...ir} over an n-dimensional space, stored row-major
// with 0-based index values: flat(i1..ir) = ((i1*n + i2)*n + ...)*n + ir.
template <class Scalar>
class DenseTensor {
 public:
  using scalar_type = Scalar;
  static constexpr ScalarMode mode = scalar_mode_of<Scalar>;

  DenseTensor(std::size_t order, std::size_t dim)
      : order_(order), dim_(dim), components_(power(dim, order), Scalar(0)) {
    if (dim == 0) throw std::invalid_argument("tensor dimension must be positive");
  }

  DenseTensor(std::size_t order, std::size_t dim, std::vector<Scalar> components)
      : order_(order), dim_(dim), components_(std::move(components)) {
    if (dim == 0) throw std::invalid_argument("tensor dimension must be positive");
    if (components_.size() != power(dim, order)) {
      throw std::invalid_argument("tensor component count " + std::to_string(components_.size()) +
                                  " != n^r = " + std::to_string(power(dim, order)));
    }
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return components_.size(); }

  std::span<const Scalar> components() const noexcept { return components_; }
  std::span<Scalar> components() noexcept { return components_; }

  Scalar& operator[](std::size_t flat) { return components_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return components_[flat]; }

  template <class... Index>
  Scalar& operator()(Index... idx) {
    return components_[flat_index(idx...)];
  }
  template <class... Index>
  const Scalar& operator()(Index... idx) const {
    return components_[flat_index(idx...)];
  }

  Scalar& at(std::span<const std::size_t> idx) { return components_[flat_of(idx)]; }
  const Scalar& at(std::span<const std::size_t> idx) const { return components_[flat_of(idx)]; }

  std::size_t flat_of(std::span<const std::size_t> idx) const {
    if (idx.size() != order_) throw std::invalid_argument("index arity != tensor order");
    std::size_t f = 0;
    for (auto i : idx) {
      if (i >= dim_) throw std::out_of_range("tensor index out of range");
      f = f * dim_ + i;
    }
    return f;
  }

  std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(order_);
    for (std::size_t k = order_; k-- > 0;) {
      idx[k] = flat % dim_;
      flat /= dim_;
    }
    return idx;
  }

  bool is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Scalar& x) { return x == 0; });
  }

  double max_abs() const {
    double m = 0;
    for (const auto& x : components_) m = std::max(m, magnitude(x));
    return m;
  }

  DenseTensor& operator+=(const DenseTensor& o) {
    check_shape(o);
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
    return *this;
  }
  DenseTensor& operator-=(const DenseTensor& o) {
    check_shape(o);
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
    return *this;
  }
  DenseTensor& operator*=(const Scalar& s) {
    for (auto& x : components_) x *= s;
    return *this;
  }

  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(const Scalar& s, DenseTensor a) { return a *= s; }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

  void check_shape(const DenseTensor& o) const {
    if (o.order_ != order_ || o.dim_ != dim_) throw std::invalid_argument("tensor shape mismatch");
  }

 private:
  static std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) out *= base;
    return out;
  }

  template <class... Index>
  std::size_t flat_index(Index... idx) const {
    static_assert((std::is_integral_v<Index> && ...));
    if (sizeof...(Index) != order_) throw std::invalid_argument("index arity != tensor order");
    std::size_t f = 0;
    ((f = f * dim_ + static_cast<std::size_t>(idx)), ...);
    return f;
  }

  std::size_t order_;
  std::size_t dim_;
  std::vector<Scalar> components_;
};

using RationalTensor = DenseTensor<Rational>;
using RealTensor = DenseTensor<double>;

RealTensor to_real(const RationalTensor& t);

// Components drawn uniformly from {-9..9}.
RationalTensor random_tensor(std::size_t order, std::size_t dim, SplitMix64& rng);

// (aT)_{i1..ir} = sum_p a(p) T_{i_p(1) .. i_p(r)}. With this action
// a(bT) = (a*b)T.
template <class Scalar>
DenseTensor<Scalar> apply_operator(const GroupRingElement& a, const DenseTensor<Scalar>& t);

// eT == T within tol (exact comparison for rational tensors).
template <class Scalar>
bool is_class_member(const GroupRingElement& e, const DenseTensor<Scalar>& t, double tol = 0.0);

// Largest component of eT - T.
template <class Scalar>
double class_membership_residual(const GroupRingElement& e, const DenseTensor<Scalar>& t);

// Outer product, order r1 + r2.
template <class Scalar>
DenseTensor<Scalar> tensor_product(const DenseTensor<Scalar>& a, const DenseTensor<Scalar>& b);

// Permutation s of S_k acting on positions offset+1..offset+k of S_total:
// (iota s)(i) = offset + s(i - offset) inside that block, i elsewhere.
Permutation embed(const Permutation& s, std::size_t total_degree, std::size_t offset);
GroupRingElement embed(const GroupRingElement& a, std::size_t total_degree, std::size_t offset);

// Exact rank over Q of the component vectors.
std::size_t span_rank(std::span<const RationalTensor> tensors);

// Rank of T -> aT as a linear map on the n^r-dimensional tensor space.
std::size_t operator_rank(const GroupRingElement& a, std::size_t dim);

extern template DenseTensor<Rational> apply_operator(const GroupRingElement&, const DenseTensor<Rational>&);
extern template DenseTensor<double> apply_operator(const GroupRingElement&, const DenseTensor<double>&);
extern template bool is_class_member(const GroupRingElement&, const DenseTensor<Rational>&, double);
extern template bool is_class_member(const GroupRingElement&, const DenseTensor<double>&, double);
extern template double class_membership_residual(const GroupRingElement&, const DenseTensor<Rational>&);
extern template double class_membership_residual(const GroupRingElement&, const DenseTensor<double>&);
extern template DenseTensor<Rational> tensor_product(const DenseTensor<Rational>&, const DenseTensor<Rational>&);
extern template DenseTensor<double> tensor_product(const DenseTensor<double>&, const DenseTensor<double>&);

}  // namespace tabcurv
