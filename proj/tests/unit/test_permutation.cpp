#include <gtest/gtest.h>

#include "generators.hpp"
#include "tabcurv/permutation.hpp"

using namespace tabcurv;

TEST(Permutation, ComposeWithIdentity) {
  EXPECT_EQ(compose(Permutation::identity(3), Permutation({2, 3, 1})), Permutation({2, 3, 1}));
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  EXPECT_EQ(compose(Permutation({2, 1, 3}), Permutation({1, 3, 2})), Permutation({2, 3, 1}));
}

TEST(Permutation, ComposeWithInverse) {
  const Permutation p{3, 1, 2};
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_TRUE(compose(p.inverse(), p).is_identity());
}

TEST(Permutation, Signs) {
  EXPECT_EQ(Permutation::identity(4).sign(), 1);
  EXPECT_EQ(Permutation({2, 1, 3}).sign(), -1);
  EXPECT_EQ(Permutation({2, 3, 1}).sign(), 1);
  EXPECT_EQ(Permutation({4, 3, 2, 1}).sign(), 1);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(compose(Permutation({1, 2}), Permutation({1, 2, 3})), std::invalid_argument);
}

TEST(Permutation, Transposition) {
  EXPECT_EQ(Permutation::transposition(3, 1, 3), Permutation({3, 2, 1}));
  EXPECT_EQ(to_string(Permutation::transposition(4, 2, 4)), "[1,4,3,2]");
}

TEST(Permutation, AllPermutationsLexicographic) {
  const auto all = all_permutations(3);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), Permutation({1, 2, 3}));
  EXPECT_EQ(all.back(), Permutation({3, 2, 1}));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(all_permutations(5).size(), 120u);
}

TEST(PermutationProperty, SignIsHomomorphism) {
  gen::for_cases("sign-hom", 200, [](SplitMix64& rng) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 7));
    const auto p = gen::permutation(rng, n);
    const auto q = gen::permutation(rng, n);
    EXPECT_EQ(compose(p, q).sign(), p.sign() * q.sign());
  });
}

TEST(PermutationProperty, CompositionAssociativeAndInverseAntiMultiplicative) {
  gen::for_cases("compose-assoc", 200, [](SplitMix64& rng) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const auto p = gen::permutation(rng, n);
    const auto q = gen::permutation(rng, n);
    const auto r = gen::permutation(rng, n);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    EXPECT_EQ(compose(p, q).inverse(), compose(q.inverse(), p.inverse()));
    for (int i = 1; i <= static_cast<int>(n); ++i) EXPECT_EQ(compose(p, q)(i), p(q(i)));
  });
}
