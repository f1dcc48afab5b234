#include <gtest/gtest.h>

#include "generators.hpp"
#include "tabcurv/json_io.hpp"

using namespace tabcurv;

TEST(JsonIo, GroupRingShape) {
  const auto j = to_json(GroupRingElement::from_permutation(Permutation({2, 1}), Rational(-1, 2)));
  EXPECT_EQ(j.dump(), R"({"degree":2,"terms":[{"den":"2","num":"-1","perm":[2,1]}]})");
}

TEST(JsonIo, GroupRingRoundTrip) {
  gen::for_cases("json-ring", 20, [](SplitMix64& rng) {
    const auto a = gen::element(rng, static_cast<std::size_t>(rng.uniform_int(1, 5)), 6);
    EXPECT_EQ(group_ring_from_json(Json::parse(to_json(a).dump())), a);
  });
  EXPECT_EQ(group_ring_from_json(to_json(GroupRingElement(3))), GroupRingElement(3));
}

TEST(JsonIo, PartitionAndTableau) {
  EXPECT_EQ(to_json(Partition({2, 1, 1})).dump(), "[2,1,1]");
  EXPECT_EQ(partition_from_json(Json::parse("[3,1]")), Partition({3, 1}));
  const auto t = parse_tableau("1,3;2,4");
  EXPECT_EQ(to_json(t).dump(), "[[1,3],[2,4]]");
  EXPECT_EQ(tableau_from_json(to_json(t)), t);
  EXPECT_EQ(to_json(Permutation({3, 1, 2})).dump(), "[3,1,2]");
}

TEST(JsonIo, Multiset) {
  PartitionMultiset m;
  m.add({2, 1}, 2);
  m.add({3});
  EXPECT_EQ(to_json(m).dump(), R"([{"multiplicity":1,"partition":[3]},{"multiplicity":2,"partition":[2,1]}])");
}

TEST(JsonIo, TensorRoundTrips) {
  SplitMix64 rng(4);
  RationalTensor t = random_tensor(2, 3, rng);
  t[0] = Rational(7, 3);
  const auto j = to_json(t);
  EXPECT_EQ(j["mode"], "rational");
  EXPECT_EQ(j["components"][0], "7/3");
  EXPECT_EQ(rational_tensor_from_json(j), t);
  const auto r = to_real(t);
  EXPECT_EQ(real_tensor_from_json(Json::parse(to_json(r).dump())), r);
}

TEST(JsonIo, MalformedInputThrows) {
  EXPECT_THROW(group_ring_from_json(Json::parse(R"({"degree":2})")), std::invalid_argument);
  EXPECT_THROW(group_ring_from_json(Json::parse(R"({"degree":2,"terms":[{"perm":[1,1],"num":"1","den":"1"}]})")),
               std::invalid_argument);
  EXPECT_THROW(partition_from_json(Json::parse("[1,2]")), std::invalid_argument);
  EXPECT_THROW(partition_from_json(Json::parse(R"("x")")), std::invalid_argument);
  EXPECT_THROW(tableau_from_json(Json::parse("[[1,2],[4]]")), std::invalid_argument);
  EXPECT_THROW(rational_tensor_from_json(Json::parse(R"({"order":1,"dim":2,"components":["1"]})")),
               std::invalid_argument);
}
