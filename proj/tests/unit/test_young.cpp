#include <gtest/gtest.h>

#include "generators.hpp"
#include "tabcurv/tensor.hpp"
#include "tabcurv/young.hpp"

using namespace tabcurv;

namespace {

// Counts standard fillings by trying every arrangement of 1..r in the frame.
std::size_t brute_force_standard_count(const Partition& lambda) {
  std::vector<int> v(static_cast<std::size_t>(lambda.weight()));
  std::iota(v.begin(), v.end(), 1);
  std::size_t count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (int len : lambda.parts()) {
      rows.emplace_back(v.begin() + static_cast<long>(k), v.begin() + static_cast<long>(k + len));
      k += static_cast<std::size_t>(len);
    }
    if (YoungTableau(rows).is_standard()) ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Partition, NormalizesAndValidates) {
  EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(to_string(Partition({2, 1, 1})), "[2 1 1]");
}

TEST(Partition, PartitionsOfFour) {
  const auto p = partitions_of(4);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p.front(), Partition({4}));
  EXPECT_EQ(p.back(), Partition({1, 1, 1, 1}));
}

TEST(Tableau, ParseAndValidate) {
  const auto t = parse_tableau("1,3;2,4");
  EXPECT_EQ(t.rows(), (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(t.columns(), (std::vector<std::vector<int>>{{1, 2}, {3, 4}}));
  EXPECT_TRUE(t.is_standard());
  EXPECT_THROW(parse_tableau("1,2;3,5"), std::invalid_argument);
  EXPECT_THROW(parse_tableau("1;2,3"), std::invalid_argument);
  EXPECT_THROW(parse_tableau("1,x"), std::invalid_argument);
  EXPECT_FALSE(parse_tableau("2,1").is_standard());
}

TEST(Tableau, StandardCounts) {
  EXPECT_EQ(standard_tableaux(Partition({3})).size(), 1u);
  EXPECT_EQ(standard_tableaux(Partition({2, 1})).size(), 2u);
  const auto two_two = standard_tableaux(Partition({2, 2}));
  ASSERT_EQ(two_two.size(), 2u);
  EXPECT_NE(std::find(two_two.begin(), two_two.end(), parse_tableau("1,3;2,4")), two_two.end());
}

TEST(Tableau, HookLengthsAgreeWithEnumeration) {
  for (int r = 1; r <= 6; ++r) {
    for (const auto& lambda : partitions_of(r)) {
      const auto n = brute_force_standard_count(lambda);
      EXPECT_EQ(hook_length_count(lambda), n) << to_string(lambda);
      EXPECT_EQ(standard_tableaux(lambda).size(), n) << to_string(lambda);
    }
  }
}

TEST(Tableau, GroupsOfCurvatureTableau) {
  const auto t = parse_tableau("1,3;2,4");
  const auto h = horizontal_group(t);
  const std::vector<Permutation> expected = {Permutation({1, 2, 3, 4}), Permutation({1, 4, 3, 2}),
                                             Permutation({3, 2, 1, 4}), Permutation({3, 4, 1, 2})};
  EXPECT_EQ(h, expected);
  EXPECT_EQ(horizontal_group(parse_tableau("1;2;3")), std::vector<Permutation>{Permutation::identity(3)});
  EXPECT_EQ(vertical_group(parse_tableau("1,2,3")), std::vector<Permutation>{Permutation::identity(3)});
}

TEST(Symmetrizer, SingleBoxIsIdentity) {
  EXPECT_EQ(young_symmetrizer(parse_tableau("1")), GroupRingElement::identity(1));
}

TEST(Symmetrizer, ColumnIsSignedSum) {
  EXPECT_EQ(young_symmetrizer(parse_tableau("1;2;3")), signed_sum(3));
}

TEST(Symmetrizer, CurvatureTableau) {
  const auto y = young_symmetrizer(parse_tableau("1,3;2,4"));
  EXPECT_EQ(y.size(), 16u);
  GroupRingElement twelve = y;
  twelve *= Rational(12);
  EXPECT_EQ(y * y, twelve);
  const auto [ok, mu] = essential_idempotency_factor(y);
  EXPECT_TRUE(ok);
  EXPECT_EQ(mu, 12);
}

TEST(SymmetrizerProperty, GroupOrdersAreProductsOfFactorials) {
  for (int r = 1; r <= 5; ++r) {
    for (const auto& lambda : partitions_of(r)) {
      for (const auto& t : standard_tableaux(lambda)) {
        std::uint64_t rows = 1, cols = 1;
        for (int len : lambda.parts()) rows *= factorial(len);
        const auto conjugate = lambda.conjugate();
        for (int len : conjugate.parts()) cols *= factorial(len);
        EXPECT_EQ(horizontal_group(t).size(), rows);
        EXPECT_EQ(vertical_group(t).size(), cols);
      }
    }
  }
}

TEST(SymmetrizerProperty, EssentialIdempotencyFactor) {
  for (int r = 1; r <= 4; ++r) {
    for (const auto& lambda : partitions_of(r)) {
      const Rational expected(static_cast<long long>(factorial(r)), static_cast<long long>(hook_length_count(lambda)));
      for (const auto& t : standard_tableaux(lambda)) {
        const auto y = young_symmetrizer(t);
        const auto [ok, mu] = essential_idempotency_factor(y);
        ASSERT_TRUE(ok) << to_string(t);
        EXPECT_EQ(mu, expected) << to_string(t);
        const auto ys = star(y);
        GroupRingElement scaled = ys;
        scaled *= mu;
        EXPECT_EQ(ys * ys, scaled) << to_string(t);
      }
    }
  }
}

TEST(SymmetrizerProperty, AlternationIsProjector) {
  GroupRingElement alt = young_symmetrizer(parse_tableau("1;2;3"));
  alt *= Rational(1, 6);
  gen::for_cases("alternation", 10, [&](SplitMix64& rng) {
    const auto t = random_tensor(3, 3, rng);
    const auto once = apply_operator(alt, t);
    EXPECT_EQ(apply_operator(alt, once), once);
  });
}

TEST(RingDecomposition, SumsAndRanks) {
  for (int r = 1; r <= 5; ++r) {
    const auto rep = verify_ring_decomposition(r);
    EXPECT_EQ(rep.group_order, factorial(r));
    EXPECT_TRUE(rep.sum_matches()) << r;
    EXPECT_TRUE(rep.rank_matches()) << r;
  }
  const auto three = verify_ring_decomposition(3);
  ASSERT_EQ(three.standard_counts.size(), 3u);
  EXPECT_EQ(three.standard_counts[1].second, 2u);
  const auto four = verify_ring_decomposition(4);
  std::uint64_t sum = 0;
  for (const auto& [lambda, f] : four.standard_counts) sum += f * f;
  EXPECT_EQ(sum, 1u + 9 + 4 + 9 + 1);
  EXPECT_THROW(verify_ring_decomposition(6), std::invalid_argument);
}
