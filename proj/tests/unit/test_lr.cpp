#include <gtest/gtest.h>

#include "generators.hpp"
#include "tabcurv/lr.hpp"

using namespace tabcurv;

namespace {

PartitionMultiset multiset(std::initializer_list<Partition> parts) {
  PartitionMultiset m;
  for (const auto& p : parts) m.add(p);
  return m;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

// Partitions obtained by adding one box to lambda.
std::vector<Partition> addable(const Partition& lambda) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= lambda.length(); ++i) {
    if (i == 0 || lambda.row(i) < lambda.row(i - 1)) {
      auto parts = lambda.parts();
      if (i == parts.size()) parts.push_back(0);
      ++parts[i];
      out.emplace_back(parts);
    }
  }
  return out;
}

}  // namespace

TEST(LittlewoodRichardson, ProductsOfSmallPartitions) {
  EXPECT_EQ(lr_product({1, 1}, {1}), multiset({{2, 1}, {1, 1, 1}}));
  EXPECT_EQ(lr_product({2, 1}, {1}), multiset({{3, 1}, {2, 2}, {2, 1, 1}}));
  EXPECT_EQ(lr_product({1, 1, 1}, {1}), multiset({{2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(LittlewoodRichardson, TwoByTwoOnlyFromTwoOne) {
  EXPECT_EQ(contains_partition(lr_product({2, 1}, {1}), {2, 2}), 1);
  EXPECT_EQ(contains_partition(lr_product({1, 1, 1}, {1}), {2, 2}), 0);
  EXPECT_EQ(contains_partition(PartitionMultiset{}, {2, 2}), 0);
}

TEST(LittlewoodRichardson, Formatting) {
  EXPECT_EQ(format_multiset(lr_product({1, 1}, {1})), "[2 1] + [1 1 1]");
  EXPECT_EQ(format_product({2, 1}, {1}, lr_product({2, 1}, {1})), "[2 1][1] = [3 1] + [2 2] + [2 1 1]");
  EXPECT_EQ(format_multiset(lr_product({2, 1}, {2, 1})),
            "[4 2] + [4 1 1] + [3 3] + 2[3 2 1] + [3 1 1 1] + [2 2 2] + [2 2 1 1]");
}

TEST(LittlewoodRichardson, KnownCoefficient) {
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient({2, 1}, {1}, {3, 2}), 0);
  EXPECT_EQ(lr_coefficient({2}, {}, {2}), 1);
}

TEST(LittlewoodRichardsonProperty, DimensionCount) {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; a + b <= 6; ++b) {
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          std::uint64_t lhs = 0;
          const auto product = lr_product(lambda, mu);
          for (const auto& [nu, c] : product.entries()) {
            lhs += static_cast<std::uint64_t>(c) * hook_length_count(nu);
          }
          EXPECT_EQ(lhs, hook_length_count(lambda) * hook_length_count(mu) * binomial(a + b, a))
              << to_string(lambda) << to_string(mu);
        }
      }
    }
  }
}

TEST(LittlewoodRichardsonProperty, PieriWithOneBox) {
  for (int r = 1; r <= 6; ++r) {
    for (const auto& lambda : partitions_of(r)) {
      PartitionMultiset expected;
      for (const auto& nu : addable(lambda)) expected.add(nu);
      EXPECT_EQ(lr_product(lambda, {1}), expected) << to_string(lambda);
    }
  }
}

TEST(LittlewoodRichardsonProperty, Commutative) {
  gen::for_cases("lr-commute", 40, [](SplitMix64& rng) {
    const auto lambda = gen::partition(rng, static_cast<int>(rng.uniform_int(0, 4)));
    const auto mu = gen::partition(rng, static_cast<int>(rng.uniform_int(0, 4)));
    EXPECT_EQ(lr_product(lambda, mu), lr_product(mu, lambda)) << to_string(lambda) << to_string(mu);
  });
}
