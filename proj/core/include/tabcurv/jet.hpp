#pragma once

#include <array>
#include <cstddef>

namespace tabcurv {

inline constexpr std::size_t kSpacetimeDim = 4;

using Vec4 = std::array<double, kSpacetimeDim>;
using Mat4 = std::array<Vec4, kSpacetimeDim>;

// First-order truncated Taylor scalar: value and gradient in the four
// coordinates.
struct Jet1 {
  double value = 0;
  Vec4 grad{};

  Jet1() = default;
  Jet1(double v) : value(v) {}  // NOLINT: constants promote implicitly
  Jet1(double v, const Vec4& g) : value(v), grad(g) {}

  Jet1& operator+=(const Jet1& o);
  Jet1& operator-=(const Jet1& o);
  Jet1& operator*=(const Jet1& o);
};

Jet1 operator+(Jet1 a, const Jet1& b);
Jet1 operator-(Jet1 a, const Jet1& b);
Jet1 operator*(Jet1 a, const Jet1& b);
Jet1 operator-(const Jet1& a);

// Second-order truncated Taylor scalar. The Hessian is kept symmetric by every
// operation (each update writes (i,j) and (j,i) from the same expression).
class Jet2 {
 public:
  Jet2() = default;
  Jet2(double v) : value_(v) {}  // NOLINT: constants promote implicitly

  // The coordinate x_k itself at `value`.
  static Jet2 variable(double value, std::size_t k);

  double value() const noexcept { return value_; }
  const Vec4& grad() const noexcept { return grad_; }
  const Mat4& hess() const noexcept { return hess_; }

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator/=(const Jet2& o);

  // g(f) for scalar g with g(v), g'(v), g''(v) given.
  Jet2 chain(double g0, double g1, double g2) const;

  // d/dx_k as a first-order jet (value = grad_k, grad = hess row k).
  Jet1 partial(std::size_t k) const;
  Jet1 first_order() const { return Jet1(value_, grad_); }

  bool hessian_symmetric() const noexcept;

 private:
  double value_ = 0;
  Vec4 grad_{};
  Mat4 hess_{};
};

Jet2 operator+(Jet2 a, const Jet2& b);
Jet2 operator-(Jet2 a, const Jet2& b);
Jet2 operator*(Jet2 a, const Jet2& b);
Jet2 operator/(Jet2 a, const Jet2& b);
Jet2 operator-(const Jet2& a);

// Throw std::domain_error for a zero divisor / non-positive radicand.
Jet2 sqrt(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
// a^p for real p; requires a > 0 unless p is a non-negative integer.
Jet2 pow(const Jet2& a, double p);

}  // namespace tabcurv
