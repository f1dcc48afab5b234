#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "tabcurv/permutation.hpp"
#include "tabcurv/rational.hpp"

namespace tabcurv {

// Formal sum  a = sum_p a(p) p  in Q[S_r]. Zero coefficients are never stored,
// and terms iterate in lexicographic order of the permutations.
class GroupRingElement {
 public:
  using TermMap = std::map<Permutation, Rational>;

  explicit GroupRingElement(std::size_t degree);

  // The unit delta_id.
  static GroupRingElement identity(std::size_t degree);
  static GroupRingElement from_permutation(const Permutation& p, const Rational& coeff = 1);

  std::size_t degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Permutation& p) const;

  // Adds `coeff * p`; drops the term if the coefficient cancels.
  void add_term(const Permutation& p, const Rational& coeff);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const Rational& scalar);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  void check_same_degree(const GroupRingElement& other, const char* op) const;

  std::size_t degree_;
  TermMap terms_;
};

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator*(const Rational& scalar, GroupRingElement a);

// Convolution product: coefficient of s is sum over p o q = s of a(p) b(q).
GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);
inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  return ring_multiply(a, b);
}

// a* = sum_p a(p) p^{-1}
GroupRingElement star(const GroupRingElement& a);

// sum_p sign(p) p, unnormalized.
GroupRingElement signed_sum(std::size_t degree);

// Named elements of Q[S_3].
//   f0     = 1/2 {id - (1 3)} - 1/6 sum sign(p) p
//   zeta_v = 1/3 {[1,2,3] + v[1,3,2] + (1-v)[2,1,3] - v[2,3,1] + (v-1)[3,1,2] - [3,2,1]}
//   eta    = 1/3 {[1,2,3] - [2,1,3] - [2,3,1] + [3,2,1]}
//   rho    = 1/2 {[1,2,3] - [1,3,2]} - 1/6 sum sign(p) p
GroupRingElement make_f0();
GroupRingElement make_zeta(const Rational& nu);
GroupRingElement make_eta();
GroupRingElement make_rho();

// Accepts "f0", "eta", "rho", "zeta(<q>)" or "zeta:<q>". Throws
// std::invalid_argument for anything else.
GroupRingElement build_named(std::string_view name);

// "1/3*[1,2,3] - 1/3*[2,1,3] + ..."
std::string to_string(const GroupRingElement& a);

}  // namespace tabcurv
