#include <gtest/gtest.h>

#include "generators.hpp"
#include "tabcurv/group_ring.hpp"

using namespace tabcurv;

namespace {

GroupRingElement term(std::initializer_list<int> p, Rational c = 1) {
  return GroupRingElement::from_permutation(Permutation(p), c);
}

const std::vector<Rational>& sampled_nu() {
  static const std::vector<Rational> v = {Rational(-1), Rational(-1, 2), Rational(0),
                                          Rational(1, 2), Rational(1), Rational(2)};
  return v;
}

}  // namespace

TEST(GroupRing, ZeroCoefficientsAreDropped) {
  GroupRingElement a(3);
  a.add_term(Permutation({2, 1, 3}), 1);
  a.add_term(Permutation({2, 1, 3}), -1);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.coefficient(Permutation({2, 1, 3})), 0);
}

TEST(GroupRing, ProductOfBasisElementsComposes) {
  EXPECT_EQ(term({2, 1, 3}) * term({1, 3, 2}), term({2, 3, 1}));
}

TEST(GroupRing, UnitIsNeutral) {
  gen::for_cases("unit", 20, [](SplitMix64& rng) {
    const auto a = gen::element(rng, 4);
    EXPECT_EQ(GroupRingElement::identity(4) * a, a);
    EXPECT_EQ(a * GroupRingElement::identity(4), a);
  });
}

TEST(GroupRing, StarOfCycle) { EXPECT_EQ(star(term({2, 3, 1})), term({3, 1, 2})); }

TEST(GroupRing, StarFixesF0) { EXPECT_EQ(star(make_f0()), make_f0()); }

TEST(GroupRing, NamedZetaHalf) {
  GroupRingElement expected = term({1, 2, 3}) + term({1, 3, 2}, Rational(1, 2)) + term({2, 1, 3}, Rational(1, 2)) -
                              term({2, 3, 1}, Rational(1, 2)) - term({3, 1, 2}, Rational(1, 2)) - term({3, 2, 1});
  expected *= Rational(1, 3);
  EXPECT_EQ(build_named("zeta(1/2)"), expected);
  EXPECT_EQ(build_named("zeta:1/2"), expected);
}

TEST(GroupRing, NamedRejectsUnknown) {
  EXPECT_THROW(build_named("xi"), std::invalid_argument);
  EXPECT_THROW(build_named("zeta(1/0)"), std::invalid_argument);
  EXPECT_THROW(build_named("zeta("), std::invalid_argument);
}

TEST(GroupRing, NamedElementsAreIdempotent) {
  for (const char* n : {"f0", "eta", "rho"}) {
    const auto e = build_named(n);
    EXPECT_EQ(e * e, e) << n;
  }
  for (const auto& nu : sampled_nu()) {
    const auto z = make_zeta(nu);
    EXPECT_EQ(z * z, z) << to_string(nu);
  }
}

TEST(GroupRing, ZetaRhoRelationOnlyAtMinusOne) {
  const auto rho = make_rho();
  for (const auto& nu : sampled_nu()) {
    const auto z = make_zeta(nu);
    const bool related = z * rho == rho && rho * z == z;
    EXPECT_EQ(related, nu == -1) << to_string(nu);
  }
}

TEST(GroupRing, EtaDoesNotGenerateRhoClass) {
  EXPECT_NE(make_eta() * make_rho(), make_rho());
}

TEST(GroupRing, F0AndZetaHalfGenerateTheSameRightIdeal) {
  const auto f0 = make_f0();
  const auto z = make_zeta(Rational(1, 2));
  EXPECT_EQ(f0 * z, z);
  EXPECT_EQ(z * f0, f0);
}

TEST(GroupRing, DegreeMismatchThrows) {
  EXPECT_THROW(GroupRingElement(3) * GroupRingElement(4), std::invalid_argument);
  GroupRingElement a(3);
  EXPECT_THROW(a += GroupRingElement(2), std::invalid_argument);
}

TEST(GroupRing, Printing) {
  EXPECT_EQ(to_string(make_eta()), "1/3*[1,2,3] - 1/3*[2,1,3] - 1/3*[2,3,1] + 1/3*[3,2,1]");
  EXPECT_EQ(to_string(GroupRingElement(2)), "0");
}

TEST(GroupRingProperty, Associativity) {
  gen::for_cases("assoc", 40, [](SplitMix64& rng) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const auto a = gen::element(rng, n), b = gen::element(rng, n), c = gen::element(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
  });
}

TEST(GroupRingProperty, StarIsInvolutiveAntiHomomorphism) {
  gen::for_cases("star", 40, [](SplitMix64& rng) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const auto a = gen::element(rng, n), b = gen::element(rng, n);
    EXPECT_EQ(star(star(a)), a);
    EXPECT_EQ(star(a * b), star(b) * star(a));
  });
}

TEST(GroupRingProperty, Distributivity) {
  gen::for_cases("distrib", 40, [](SplitMix64& rng) {
    const auto a = gen::element(rng, 3), b = gen::element(rng, 3), c = gen::element(rng, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) * c, a * c - b * c);
  });
}
