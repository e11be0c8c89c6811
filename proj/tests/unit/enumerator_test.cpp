// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "wfano/dataset.hpp"
#include "wfano/enumerator.hpp"

namespace wfano {
namespace {

std::set<std::array<int, 4>> table_quadruples() {
  std::ifstream in(WFANO_FAMILIES_FILE);
  std::stringstream buf;
  buf << in.rdbuf();
  std::set<std::array<int, 4>> out;
  for (const auto& r : parse_table(buf.str())) out.insert(r.weights.quadruple());
  return out;
}

std::set<std::array<int, 4>> as_set(const std::vector<Weights>& ws) {
  std::set<std::array<int, 4>> out;
  for (const auto& w : ws) out.insert(w.quadruple());
  return out;
}

TEST(QuasismoothTest, TableExamples) {
  EXPECT_TRUE(is_quasismooth_general(Weights(1, 1, 1, 1)));
  EXPECT_TRUE(is_quasismooth_general(Weights(2, 2, 3, 5)));
  EXPECT_TRUE(is_quasismooth_general(Weights(1, 1, 2, 2)));
}

TEST(QuasismoothTest, RejectsMissingEliminator) {
  // No monomial of degree 7 in w alone, and w^k x_j needs 4 | 7 - a_j.
  EXPECT_FALSE(is_quasismooth_general(Weights(1, 1, 1, 4)));
}

TEST(TerminalTest, TableExamples) {
  EXPECT_TRUE(has_only_terminal_isolated_sings(Weights(1, 1, 2, 3)));
  EXPECT_TRUE(has_only_terminal_isolated_sings(Weights(1, 2, 2, 5)));
  EXPECT_TRUE(has_only_terminal_isolated_sings(Weights(1, 1, 1, 3)));
}

TEST(TerminalTest, SingularSurfaceIsRejectedWithDiagnostic) {
  const auto verdict = check_terminal(Weights(2, 2, 2, 3));
  EXPECT_FALSE(verdict);
  ASSERT_TRUE(verdict.reason.has_value());
  EXPECT_EQ(*verdict.reason, Errc::NonTerminal);
  EXPECT_NE(verdict.diagnostic.find("dimension 2"), std::string::npos);
}

TEST(TerminalTest, PropagatesBasketErrorsAsVerdict) {
  const auto verdict = check_terminal(Weights(1, 1, 1, 4));
  EXPECT_FALSE(verdict);
  EXPECT_EQ(verdict.reason, Errc::NoEliminator);
}

TEST(StrataTest, DimensionsAndStabilizers) {
  const auto strata = singular_strata(Weights(2, 2, 3, 5));
  ASSERT_FALSE(strata.empty());
  for (const auto& s : strata) {
    EXPECT_GE(s.r, 2);
    EXPECT_LE(s.dimension(), 1);
  }
}

TEST(EnumerateTest, SmallBoundContainsFirstFamilies) {
  const auto ws = enumerate_families(2);
  ASSERT_GE(ws.size(), 2u);
  EXPECT_EQ(ws[0], Weights(1, 1, 1, 1));
  EXPECT_EQ(ws[1], Weights(1, 1, 1, 2));
}

TEST(EnumerateTest, NinetyFiveFamiliesMatchingTheTable) {
  const auto at33 = enumerate_families(33);
  EXPECT_EQ(at33.size(), 95u);
  EXPECT_EQ(as_set(at33), table_quadruples());
}

TEST(EnumerateTest, NoNewFamiliesUpToForty) {
  const auto at40 = enumerate_families(40, 0);
  EXPECT_EQ(at40.size(), 95u);
  EXPECT_EQ(as_set(at40), table_quadruples());
}

TEST(EnumerateTest, SortedDeduplicatedAndDeterministicAcrossThreads) {
  const auto serial = enumerate_families(33, 1);
  EXPECT_EQ(enumerate_families(33, 4), serial);
  EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end(), [](const Weights& a, const Weights& b) {
    return std::make_pair(a.degree(), a.quadruple()) < std::make_pair(b.degree(), b.quadruple());
  }));
  EXPECT_EQ(as_set(serial).size(), serial.size());
  for (const auto& w : serial) {
    EXPECT_TRUE(is_quasismooth_general(w)) << w.to_string();
    EXPECT_TRUE(has_only_terminal_isolated_sings(w)) << w.to_string();
  }
}

TEST(EnumerateTest, Monotone) {
  std::set<std::array<int, 4>> previous;
  for (int bound : {5, 11, 17, 23, 33}) {
    const auto current = as_set(enumerate_families(bound));
    EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
    previous = current;
  }
}

}  // namespace
}  // namespace wfano
