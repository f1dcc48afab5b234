#include <gtest/gtest.h>

#include <cmath>

#include "tabcurv/jet.hpp"

using namespace tabcurv;

TEST(Jet2, SquareOfVariable) {
  const auto x = Jet2::variable(3.0, 1);
  const auto y = x * x;
  EXPECT_DOUBLE_EQ(y.value(), 9.0);
  EXPECT_DOUBLE_EQ(y.grad()[1], 6.0);
  EXPECT_DOUBLE_EQ(y.hess()[1][1], 2.0);
  EXPECT_DOUBLE_EQ(y.grad()[0], 0.0);
}

TEST(Jet2, SqrtChainRule) {
  const auto x = Jet2::variable(4.0, 0);
  const auto s = sqrt(x);
  EXPECT_DOUBLE_EQ(s.value(), 2.0);
  EXPECT_DOUBLE_EQ(s.grad()[0], 0.25);
  EXPECT_DOUBLE_EQ(s.hess()[0][0], -1.0 / 32.0);
  // sqrt(x*y) at (4, 9)
  const auto xy = Jet2::variable(4.0, 0) * Jet2::variable(9.0, 2);
  const auto r = sqrt(xy);
  EXPECT_DOUBLE_EQ(r.value(), 6.0);
  EXPECT_DOUBLE_EQ(r.grad()[0], 0.75);
  EXPECT_DOUBLE_EQ(r.grad()[2], 1.0 / 3.0);
  EXPECT_NEAR(r.hess()[0][2], 1.0 / 24.0, 1e-15);
  EXPECT_TRUE(r.hessian_symmetric());
}

TEST(Jet2, PythagoreanIdentity) {
  const auto x = Jet2::variable(0.7, 2) * Jet2::variable(1.3, 3);
  const auto s = sin(x), c = cos(x);
  const auto one = s * s + c * c;
  EXPECT_NEAR(one.value(), 1.0, 1e-15);
  for (std::size_t i = 0; i < kSpacetimeDim; ++i) {
    EXPECT_NEAR(one.grad()[i], 0.0, 1e-15);
    for (std::size_t j = 0; j < kSpacetimeDim; ++j) EXPECT_NEAR(one.hess()[i][j], 0.0, 1e-14);
  }
}

TEST(Jet2, QuotientAndPower) {
  const auto x = Jet2::variable(2.0, 0);
  const auto q = Jet2(1.0) / x;
  EXPECT_DOUBLE_EQ(q.grad()[0], -0.25);
  EXPECT_DOUBLE_EQ(q.hess()[0][0], 0.25);
  const auto p = pow(x, 3.0);
  EXPECT_DOUBLE_EQ(p.value(), 8.0);
  EXPECT_DOUBLE_EQ(p.grad()[0], 12.0);
  EXPECT_DOUBLE_EQ(p.hess()[0][0], 12.0);
  EXPECT_DOUBLE_EQ(pow(Jet2(-2.0), 2.0).value(), 4.0);
}

TEST(Jet2, Errors) {
  EXPECT_THROW(Jet2(1.0) / Jet2(0.0), std::domain_error);
  EXPECT_THROW(sqrt(Jet2(-1.0)), std::domain_error);
  EXPECT_THROW(pow(Jet2(-1.0), 0.5), std::domain_error);
  EXPECT_THROW(Jet2::variable(1.0, 4), std::out_of_range);
}

TEST(Jet2, PartialIsFirstOrderJet) {
  const auto x = Jet2::variable(2.0, 0), y = Jet2::variable(5.0, 1);
  const auto f = x * x * y;
  const auto fx = f.partial(0);
  EXPECT_DOUBLE_EQ(fx.value, 20.0);
  EXPECT_DOUBLE_EQ(fx.grad[0], 10.0);
  EXPECT_DOUBLE_EQ(fx.grad[1], 4.0);
  EXPECT_DOUBLE_EQ(f.first_order().grad[1], 4.0);
}

TEST(Jet1, ProductRule) {
  const Jet1 a(2.0, {1, 0, 0, 0});
  const Jet1 b(3.0, {0, 2, 0, 0});
  const auto c = a * b - Jet1(1.0);
  EXPECT_DOUBLE_EQ(c.value, 5.0);
  EXPECT_DOUBLE_EQ(c.grad[0], 3.0);
  EXPECT_DOUBLE_EQ(c.grad[1], 4.0);
  EXPECT_DOUBLE_EQ((-c).value, -5.0);
}
