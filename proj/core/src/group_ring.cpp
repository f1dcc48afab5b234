#include "tabcurv/group_ring.hpp"

#include <stdexcept>

namespace tabcurv {

GroupRingElement::GroupRingElement(std::size_t degree) : degree_(degree) {
  if (degree == 0 || degree > Permutation::kMaxDegree) {
    throw std::invalid_argument("group ring degree out of range");
  }
}

GroupRingElement GroupRingElement::identity(std::size_t degree) {
  return from_permutation(Permutation::identity(degree));
}

GroupRingElement GroupRingElement::from_permutation(const Permutation& p, const Rational& coeff) {
  GroupRingElement a(p.degree());
  a.add_term(p, coeff);
  return a;
}

Rational GroupRingElement::coefficient(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add_term(const Permutation& p, const Rational& coeff) {
  if (p.degree() != degree_) {
    throw std::invalid_argument("add_term: permutation degree " + std::to_string(p.degree()) +
                                " != element degree " + std::to_string(degree_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupRingElement::check_same_degree(const GroupRingElement& other, const char* op) const {
  if (degree_ != other.degree_) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch");
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  check_same_degree(other, "operator+");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  check_same_degree(other, "operator-");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
GroupRingElement operator*(const Rational& scalar, GroupRingElement a) { return a *= scalar; }

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("ring_multiply: degree mismatch");
  }
  GroupRingElement out(a.degree());
  for (const auto& [p, x] : a.terms()) {
    for (const auto& [q, y] : b.terms()) {
      out.add_term(compose(p, q), x * y);
    }
  }
  return out;
}

GroupRingElement star(const GroupRingElement& a) {
  GroupRingElement out(a.degree());
  for (const auto& [p, c] : a.terms()) out.add_term(p.inverse(), c);
  return out;
}

GroupRingElement signed_sum(std::size_t degree) {
  GroupRingElement out(degree);
  for (const auto& p : all_permutations(degree)) out.add_term(p, p.sign());
  return out;
}

GroupRingElement make_f0() {
  GroupRingElement f0(3);
  f0.add_term(Permutation{1, 2, 3}, Rational(1, 2));
  f0.add_term(Permutation{3, 2, 1}, Rational(-1, 2));
  return f0 - Rational(1, 6) * signed_sum(3);
}

GroupRingElement make_zeta(const Rational& nu) {
  GroupRingElement z(3);
  z.add_term(Permutation{1, 2, 3}, 1);
  z.add_term(Permutation{1, 3, 2}, nu);
  z.add_term(Permutation{2, 1, 3}, 1 - nu);
  z.add_term(Permutation{2, 3, 1}, -nu);
  z.add_term(Permutation{3, 1, 2}, nu - 1);
  z.add_term(Permutation{3, 2, 1}, -1);
  return Rational(1, 3) * std::move(z);
}

GroupRingElement make_eta() {
  GroupRingElement e(3);
  e.add_term(Permutation{1, 2, 3}, Rational(1, 3));
  e.add_term(Permutation{2, 1, 3}, Rational(-1, 3));
  e.add_term(Permutation{2, 3, 1}, Rational(-1, 3));
  e.add_term(Permutation{3, 2, 1}, Rational(1, 3));
  return e;
}

GroupRingElement make_rho() {
  GroupRingElement r(3);
  r.add_term(Permutation{1, 2, 3}, Rational(1, 2));
  r.add_term(Permutation{1, 3, 2}, Rational(-1, 2));
  return r - Rational(1, 6) * signed_sum(3);
}

GroupRingElement build_named(std::string_view name) {
  if (name == "f0") return make_f0();
  if (name == "eta") return make_eta();
  if (name == "rho") return make_rho();
  if (name.starts_with("zeta")) {
    std::string_view arg = name.substr(4);
    if (arg.starts_with(':')) {
      arg.remove_prefix(1);
    } else if (arg.starts_with('(') && arg.ends_with(')')) {
      arg = arg.substr(1, arg.size() - 2);
    } else {
      throw std::invalid_argument("zeta needs a parameter: zeta(<q>) or zeta:<q>");
    }
    return make_zeta(parse_rational(arg));
  }
  throw std::invalid_argument("unknown named element '" + std::string(name) + "'");
}

std::string to_string(const GroupRingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : a.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(p);
    first = false;
  }
  return out;
}

}  // namespace tabcurv
