#include "tabcurv/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace tabcurv {

Jet1& Jet1::operator+=(const Jet1& o) {
  value += o.value;
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) grad[i] += o.grad[i];
  return *this;
}

Jet1& Jet1::operator-=(const Jet1& o) {
  value -= o.value;
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) grad[i] -= o.grad[i];
  return *this;
}

Jet1& Jet1::operator*=(const Jet1& o) {
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) grad[i] = grad[i] * o.value + value * o.grad[i];
  value *= o.value;
  return *this;
}

Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
Jet1 operator-(const Jet1& a) { return Jet1(0.0) - a; }

Jet2 Jet2::variable(double value, std::size_t k) {
  if (k >= kSpacetimeDim) throw std::out_of_range("Jet2::variable: coordinate index");
  Jet2 j(value);
  j.grad_[k] = 1.0;
  return j;
}

Jet2& Jet2::operator+=(const Jet2& o) {
  value_ += o.value_;
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) {
    grad_[i] += o.grad_[i];
    for (std::size_t j = 0; j < kSpacetimeDim; ++j) hess_[i][j] += o.hess_[i][j];
  }
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  value_ -= o.value_;
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) {
    grad_[i] -= o.grad_[i];
    for (std::size_t j = 0; j < kSpacetimeDim; ++j) hess_[i][j] -= o.hess_[i][j];
  }
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) {
  // (fg)'' = f''g + f'g'^T + g'f'^T + fg''
  Mat4 h{};
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) {
    for (std::size_t j = i; j < kSpacetimeDim; ++j) {
      const double v = hess_[i][j] * o.value_ + grad_[i] * o.grad_[j] + o.grad_[i] * grad_[j] +
                       value_ * o.hess_[i][j];
      h[i][j] = v;
      h[j][i] = v;
    }
  }
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) grad_[i] = grad_[i] * o.value_ + value_ * o.grad_[i];
  value_ *= o.value_;
  hess_ = h;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& o) {
  if (o.value_ == 0.0) throw std::domain_error("Jet2: division by a zero value");
  const double v = o.value_;
  return *this *= o.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet2 Jet2::chain(double g0, double g1, double g2) const {
  Jet2 out(g0);
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) out.grad_[i] = g1 * grad_[i];
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) {
    for (std::size_t j = i; j < kSpacetimeDim; ++j) {
      const double v = g2 * grad_[i] * grad_[j] + g1 * hess_[i][j];
      out.hess_[i][j] = v;
      out.hess_[j][i] = v;
    }
  }
  return out;
}

Jet1 Jet2::partial(std::size_t k) const {
  if (k >= kSpacetimeDim) throw std::out_of_range("Jet2::partial: coordinate index");
  return Jet1(grad_[k], hess_[k]);
}

bool Jet2::hessian_symmetric() const noexcept {
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (hess_[i][j] != hess_[j][i]) return false;
    }
  }
  return true;
}

Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
Jet2 operator-(const Jet2& a) { return a.chain(-a.value(), -1.0, 0.0); }

Jet2 sqrt(const Jet2& a) {
  if (!(a.value() > 0.0)) throw std::domain_error("Jet2: sqrt of a non-positive value");
  const double s = std::sqrt(a.value());
  return a.chain(s, 0.5 / s, -0.25 / (s * a.value()));
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value());
  return a.chain(s, std::cos(a.value()), -s);
}

Jet2 cos(const Jet2& a) {
  const double c = std::cos(a.value());
  return a.chain(c, -std::sin(a.value()), -c);
}

Jet2 pow(const Jet2& a, double p) {
  const double v = a.value();
  const bool integral = p >= 0 && std::floor(p) == p;
  if (!integral && !(v > 0.0)) throw std::domain_error("Jet2: pow of a non-positive base");
  const double g0 = std::pow(v, p);
  const double g1 = p == 0 ? 0.0 : p * std::pow(v, p - 1);
  const double g2 = (p == 0 || p == 1) ? 0.0 : p * (p - 1) * std::pow(v, p - 2);
  return a.chain(g0, g1, g2);
}

}  // namespace tabcurv
