// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "wfano/enumerator.hpp"
#include "wfano/error.hpp"
#include "wfano/singularities.hpp"

namespace wfano {
namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

TEST(LocusTest, LabelsRoundTrip) {
  EXPECT_EQ((Locus{4, 0}).label(), "P4");
  EXPECT_EQ((Locus{1, 2}).label(), "P1P2");
  EXPECT_EQ(parse_locus("P3P4"), (Locus{3, 4}));
  EXPECT_FALSE(parse_locus("P4P3").has_value());
  EXPECT_FALSE(parse_locus("P0").has_value());
  EXPECT_FALSE(parse_locus("P5").has_value());
}

TEST(CoordinatePointTest, Examples) {
  auto q = coordinate_point_type(Weights(1, 2, 3, 5), 4);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->type.to_string(), "1/5(1,2,3)");
  EXPECT_EQ(q->count, 1);

  auto p = coordinate_point_type(Weights(1, 2, 2, 3), 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->type.to_string(), "1/3(1,1,2)");

  for (int i = 1; i <= 4; ++i) EXPECT_FALSE(coordinate_point_type(Weights(1, 1, 1, 1), i).has_value());
}

TEST(CoordinatePointTest, NoEliminator) {
  EXPECT_EQ(code_of([] { coordinate_point_type(Weights(1, 1, 1, 4), 4); }), Errc::NoEliminator);
  EXPECT_EQ(code_of([] { coordinate_point_type(Weights(1, 1, 1, 4), 0); }), Errc::InvalidArgument);
}

TEST(StratumTest, Examples) {
  auto a = stratum_points(Weights(2, 2, 3, 5), 1, 2);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->count, 6);
  EXPECT_EQ(a->type.to_string(), "1/2(1,1,1)");

  auto b = stratum_points(Weights(2, 3, 4, 5), 1, 3);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->count, 3);
  EXPECT_EQ(b->type.to_string(), "1/2(1,1,1)");

  auto c = stratum_points(Weights(3, 4, 5, 6), 1, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->count, 3);
  EXPECT_EQ(c->type.to_string(), "1/3(1,1,2)");
}

TEST(StratumTest, Errors) {
  // y, z of weights 2, 4 cannot reach the odd degree 13.
  EXPECT_EQ(code_of([] { stratum_points(Weights(1, 2, 4, 6), 2, 3); }), Errc::EmptyRestriction);
  EXPECT_EQ(code_of([] { stratum_points(Weights(2, 2, 3, 5), 1, 3); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { stratum_points(Weights(2, 2, 3, 5), 2, 1); }), Errc::InvalidArgument);
}

TEST(BasketTest, Examples) {
  const Basket g18 = basket(Weights(2, 2, 3, 5));
  ASSERT_EQ(g18.entries().size(), 2u);
  EXPECT_EQ(g18.to_string(), "1/5(1,2,3) + 6x1/2(1,1,1)");
  EXPECT_EQ(g18.entries()[1].locus, (Locus{1, 2}));

  const Basket g60 = basket(Weights(4, 5, 6, 9));
  EXPECT_EQ(g60.to_string(), "1/9(1,4,5) + 1/5(1,1,4) + 1/3(1,1,2) + 2x1/2(1,1,1)");

  EXPECT_TRUE(basket(Weights(1, 1, 1, 3)).empty());
  EXPECT_EQ(basket(Weights(1, 1, 1, 3)).to_string(), "smooth");
}

TEST(BasketTest, TotalsMergeEqualTypes) {
  const auto totals = basket(Weights(2, 3, 4, 5)).totals();
  EXPECT_EQ(totals.at(QuotientSingularityType(2, 1)), 3);
}

TEST(BasketTest, InputOrderDoesNotMatter) {
  EXPECT_EQ(basket(Weights(5, 3, 2, 2)), basket(Weights(2, 2, 3, 5)));
}

TEST(BasketTest, AllAcceptedFamiliesHaveTerminalIntegralBaskets) {
  for (const auto& w : enumerate_families(33)) {
    Basket b;
    ASSERT_NO_THROW(b = basket(w)) << w.to_string();
    for (const auto& e : b.entries()) {
      EXPECT_GE(e.count, 1);
      if (e.locus.is_point()) EXPECT_EQ(e.count, 1);
      EXPECT_EQ(std::gcd(e.type.a(), e.type.r()), 1);
    }
  }
}

}  // namespace
}  // namespace wfano
