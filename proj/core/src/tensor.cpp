#include "tabcurv/tensor.hpp"

#include "tabcurv/exact_rank.hpp"

namespace tabcurv {

std::string to_string(ScalarMode mode) {
  return mode == ScalarMode::rational ? "rational" : "float";
}

ScalarMode parse_scalar_mode(std::string_view text) {
  if (text == "rational") return ScalarMode::rational;
  if (text == "float") return ScalarMode::floating;
  throw std::invalid_argument("unknown scalar mode '" + std::string(text) + "'");
}

RealTensor to_real(const RationalTensor& t) {
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = to_double(t[i]);
  return RealTensor(t.order(), t.dim(), std::move(out));
}

RationalTensor random_tensor(std::size_t order, std::size_t dim, SplitMix64& rng) {
  RationalTensor t(order, dim);
  for (auto& x : t.components()) x = Rational(rng.uniform_int(-9, 9));
  return t;
}

namespace {

// Strides such that flat(J) = sum_m I[m] * permuted[m] where J_k = I[p(k)].
std::vector<std::size_t> permuted_strides(const Permutation& p, std::size_t dim) {
  const std::size_t r = p.degree();
  std::vector<std::size_t> stride(r);
  std::size_t s = 1;
  for (std::size_t k = r; k-- > 0;) {
    stride[k] = s;
    s *= dim;
  }
  std::vector<std::size_t> permuted(r);
  for (std::size_t k = 0; k < r; ++k) permuted[p.image0(k)] = stride[k];
  return permuted;
}

// Calls f(flat_I, flat_J) for every multi-index I.
template <class F>
void for_each_permuted(const Permutation& p, std::size_t dim, std::size_t total, F&& f) {
  const std::size_t r = p.degree();
  const auto pstride = permuted_strides(p, dim);
  std::vector<std::size_t> idx(r, 0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < total; ++i) {
    f(i, j);
    // Odometer increment on idx, keeping j in sync.
    for (std::size_t k = r; k-- > 0;) {
      if (++idx[k] < dim) {
        j += pstride[k];
        break;
      }
      j -= pstride[k] * (dim - 1);
      idx[k] = 0;
    }
  }
}

template <class Scalar>
Scalar coefficient_as(const Rational& c) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return c;
  } else {
    return to_double(c);
  }
}

}  // namespace

template <class Scalar>
DenseTensor<Scalar> apply_operator(const GroupRingElement& a, const DenseTensor<Scalar>& t) {
  if (a.degree() != t.order()) {
    throw std::invalid_argument("apply_operator: operator degree " + std::to_string(a.degree()) +
                                " != tensor order " + std::to_string(t.order()));
  }
  DenseTensor<Scalar> out(t.order(), t.dim());
  for (const auto& [p, c] : a.terms()) {
    const Scalar coeff = coefficient_as<Scalar>(c);
    for_each_permuted(p, t.dim(), t.size(), [&](std::size_t i, std::size_t j) {
      if (t[j] != 0) out[i] += coeff * t[j];
    });
  }
  return out;
}

template <class Scalar>
double class_membership_residual(const GroupRingElement& e, const DenseTensor<Scalar>& t) {
  return (apply_operator(e, t) - t).max_abs();
}

template <class Scalar>
bool is_class_member(const GroupRingElement& e, const DenseTensor<Scalar>& t, double tol) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    (void)tol;
    return apply_operator(e, t) == t;
  } else {
    return class_membership_residual(e, t) <= tol;
  }
}

template <class Scalar>
DenseTensor<Scalar> tensor_product(const DenseTensor<Scalar>& a, const DenseTensor<Scalar>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor_product: dimension mismatch");
  DenseTensor<Scalar> out(a.order() + b.order(), a.dim());
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[k++] = a[i] * b[j];
  }
  return out;
}

template DenseTensor<Rational> apply_operator(const GroupRingElement&, const DenseTensor<Rational>&);
template DenseTensor<double> apply_operator(const GroupRingElement&, const DenseTensor<double>&);
template bool is_class_member(const GroupRingElement&, const DenseTensor<Rational>&, double);
template bool is_class_member(const GroupRingElement&, const DenseTensor<double>&, double);
template double class_membership_residual(const GroupRingElement&, const DenseTensor<Rational>&);
template double class_membership_residual(const GroupRingElement&, const DenseTensor<double>&);
template DenseTensor<Rational> tensor_product(const DenseTensor<Rational>&, const DenseTensor<Rational>&);
template DenseTensor<double> tensor_product(const DenseTensor<double>&, const DenseTensor<double>&);

Permutation embed(const Permutation& s, std::size_t total_degree, std::size_t offset) {
  if (offset + s.degree() > total_degree) {
    throw std::invalid_argument("embed: offset + k = " + std::to_string(offset + s.degree()) +
                                " exceeds total degree " + std::to_string(total_degree));
  }
  std::vector<int> one_line(total_degree);
  for (std::size_t i = 0; i < total_degree; ++i) one_line[i] = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i < s.degree(); ++i) {
    one_line[offset + i] = static_cast<int>(offset + s.image0(i)) + 1;
  }
  return Permutation(std::span<const int>(one_line));
}

GroupRingElement embed(const GroupRingElement& a, std::size_t total_degree, std::size_t offset) {
  GroupRingElement out(total_degree);
  for (const auto& [p, c] : a.terms()) out.add_term(embed(p, total_degree, offset), c);
  return out;
}

std::size_t span_rank(std::span<const RationalTensor> tensors) {
  if (tensors.empty()) return 0;
  RowEchelon echelon(tensors.front().size());
  for (const auto& t : tensors) {
    tensors.front().check_shape(t);
    echelon.insert(t.components());
  }
  return echelon.rank();
}

std::size_t operator_rank(const GroupRingElement& a, std::size_t dim) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < a.degree(); ++k) total *= dim;
  std::vector<std::vector<Rational>> rows(total, std::vector<Rational>(total));
  for (const auto& [p, c] : a.terms()) {
    for_each_permuted(p, dim, total, [&](std::size_t i, std::size_t j) { rows[i][j] += c; });
  }
  return exact_rank(rows);
}

}  // namespace tabcurv
