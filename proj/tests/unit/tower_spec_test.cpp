// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "wfano/classifier.hpp"
#include "wfano/error.hpp"
#include "wfano/tower_spec.hpp"

namespace wfano {
namespace {

using testing::rat;

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(WFANO_TOWER_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TowerEvaluation evaluate(const std::string& text) {
  return evaluate_tower_spec(parse_tower_spec(text), Catalog::standard());
}

ParseError error_of(const std::string& text) {
  try {
    evaluate(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseError(Errc::SyntaxError, 0, 0, "");
}

TEST(TowerSpecParseTest, Structure) {
  const auto spec = parse_tower_spec(fixture("g13_base_curves.tower"));
  EXPECT_EQ(std::get<int>(spec.base), 13);
  EXPECT_EQ(spec.steps.size(), 3u);
  ASSERT_TRUE(spec.gram.has_value());
  EXPECT_EQ(spec.gram->curves, (std::vector<std::string>{"C", "L"}));
  ASSERT_EQ(spec.gram->relations.size(), 2u);
  EXPECT_EQ(spec.gram->relations[1].multiplicities, (std::vector<Rational>{0, 1}));
  EXPECT_EQ(spec.expectations.size(), 3u);
  const auto& center = std::get<CenterDecl>(spec.steps[1]);
  EXPECT_EQ(center.track.at("E"), rat("1/2"));
}

TEST(TowerSpecParseTest, ExplicitWeightsAndExpressions) {
  const auto e = evaluate(
      "base weights 1 2 3 5\n"
      "center E 1/5(1,2,3)\n"
      "divisor A = 2H - 1/5 total(E)\n"
      "triple A, -K, E\n"
      "triple H, H, H\n");
  EXPECT_EQ(e.neg_k_cube, rat("11/30") - rat("1/30"));
  EXPECT_EQ(e.neg_k_cube_form, e.neg_k_cube);
  ASSERT_EQ(e.triples.size(), 2u);
  EXPECT_EQ(e.triples[1].second, rat("11/30"));
  // A . (-K) . E = (-1/5)(-1/5)(1)(25/6)
  EXPECT_EQ(e.triples[0].second, rat("1/6"));
}

TEST(TowerSpecEvalTest, Fixtures) {
  struct Case {
    const char* file;
    const char* cube;
    const char* gram;
    bool met;
  };
  for (const Case& c : {Case{"g13_two_point_chain.tower", "-3/10", "", true},
                        Case{"g13_base_curves.tower", "-1/6", "-5/6 1 / 1 -4/3", true},
                        Case{"g25_two_point_chain.tower", "-1/14", "", true},
                        Case{"g25_base_curves.tower", nullptr, "-7/12 2/3 / 2/3 -5/6", true},
                        Case{"g32_base_curves.tower", nullptr, "-7/24 3/8 / 3/8 -5/8", true},
                        Case{"g65_base_curves.tower", nullptr, "-199/450 22/225 / 22/225 -32/225", false}}) {
    const auto e = evaluate(fixture(c.file));
    if (c.cube) EXPECT_EQ(to_string(e.neg_k_cube), c.cube) << c.file;
    if (*c.gram) {
      ASSERT_TRUE(e.gram.has_value()) << c.file;
      EXPECT_EQ(e.gram->to_string(), c.gram) << c.file;
      EXPECT_TRUE(*e.negative_definite) << c.file;
    }
    EXPECT_EQ(e.expectations_met(), c.met) << c.file;
  }
}

TEST(TowerSpecEvalTest, FormatLines) {
  const std::string out = format_evaluation(evaluate(fixture("g13_base_curves.tower")));
  EXPECT_NE(out.find("neg_k_cube -1/6\n"), std::string::npos);
  EXPECT_NE(out.find("curves C L\n"), std::string::npos);
  EXPECT_NE(out.find("gram -5/6 1 / 1 -4/3\n"), std::string::npos);
  EXPECT_NE(out.find("verdict negative-definite\n"), std::string::npos);
  EXPECT_EQ(out.find("FAIL"), std::string::npos);
}

TEST(TowerSpecEvalTest, FailedExpectationIsReported) {
  const auto e = evaluate("base gimel 13\ncenter F 1/3(1,1,2)\nexpect neg_k_cube 1\n");
  EXPECT_FALSE(e.expectations_met());
  ASSERT_EQ(e.expectations.size(), 1u);
  EXPECT_EQ(e.expectations[0].actual, "1/5");
}

TEST(TowerSpecErrorTest, Positions) {
  auto e = error_of("base gimel 13\nfrobnicate\n");
  EXPECT_EQ(e.code(), Errc::SyntaxError);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 1u);

  e = error_of("base gimel 13\ndivisor D = 2H + * E\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 18u);

  e = error_of("base gimel 13\ndivisor D = H - Q\n");
  EXPECT_EQ(e.code(), Errc::UnknownDivisor);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 17u);

  e = error_of("center E 1/2(1,1,1)\n");
  EXPECT_EQ(e.code(), Errc::SyntaxError);

  e = error_of("base gimel 200\n");
  EXPECT_EQ(e.code(), Errc::UnknownGimel);
  EXPECT_EQ(e.line(), 1u);

  e = error_of("base gimel 13\ngram\nsurface -K\n");
  EXPECT_EQ(e.code(), Errc::SyntaxError);

  e = error_of("base gimel 13\ncenter E 1/5(1,2,3)\ncenter G 1/2(1,1,1) track E=1/3\n");
  EXPECT_EQ(e.code(), Errc::InvalidMultiplicity);
  EXPECT_EQ(e.line(), 3u);

  e = error_of("base gimel 13\ncenter E 1/4(1,1,1)\n");
  EXPECT_EQ(e.line(), 2u);
}

}  // namespace
}  // namespace wfano
