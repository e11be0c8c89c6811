// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "wfano_cli/cli.hpp"

namespace {

using wfano::cli::kExitCheckFailed;
using wfano::cli::kExitInputError;
using wfano::cli::kExitOk;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wfano::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tower(const std::string& name) { return std::string(WFANO_TOWER_DIR) + "/" + name; }

TEST(CliTest, VerifyAllPasses) {
  const auto r = run({"--threads", "2", "verify"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find("\tFAIL\t"), std::string::npos);
  EXPECT_NE(r.out.find("*\ttype_iv_set\tPASS"), std::string::npos);
}

TEST(CliTest, VerifySingleFamily) {
  const auto r = run({"verify", "--gimel", "18"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("18\thalphen_count\tPASS\t7\t7"), std::string::npos) << r.out;
}

TEST(CliTest, UnknownFamilyIsInputError) {
  EXPECT_EQ(run({"verify", "--gimel", "999"}).code, kExitInputError);
  EXPECT_EQ(run({"show", "0"}).code, kExitInputError);
}

TEST(CliTest, BadUsageIsInputError) {
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"export", "--format", "xml"}).code, kExitInputError);
}

TEST(CliTest, EvalTower) {
  auto r = run({"eval-tower", tower("g25_two_point_chain.tower")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("neg_k_cube -1/14\n"), std::string::npos);

  r = run({"eval-tower", tower("g32_base_curves.tower")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("gram -7/24 3/8 / 3/8 -5/8\n"), std::string::npos);
  EXPECT_NE(r.out.find("verdict negative-definite\n"), std::string::npos);
}

TEST(CliTest, EvalTowerFailedExpectation) {
  const auto r = run({"eval-tower", tower("g65_base_curves.tower")});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("expect gram FAIL"), std::string::npos);
}

TEST(CliTest, EvalTowerMalformedFile) {
  const std::string path = ::testing::TempDir() + "wfano_bad.tower";
  {
    std::ofstream out(path);
    out << "base gimel 13\ncenter E 1/5(1,2\n";
  }
  const auto r = run({"eval-tower", path});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find(path + ":2:"), std::string::npos) << r.err;
  EXPECT_EQ(run({"eval-tower", path + ".missing"}).code, kExitInputError);
}

TEST(CliTest, Export) {
  auto r = run({"export", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"wfano-families\""), std::string::npos);
  r = run({"export", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("gimel,a1,", 0), 0u);
  const std::string path = ::testing::TempDir() + "wfano_export.csv";
  EXPECT_EQ(run({"export", "--format", "csv", "--out", path}).code, kExitOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), r.out);
}

TEST(CliTest, EnumerateShowBasket) {
  auto r = run({"enumerate", "--bound", "33"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("# 95 families with a4 <= 33"), std::string::npos);
  EXPECT_NE(r.out.find("66\t(5,6,22,33)\t95\n"), std::string::npos);

  r = run({"show", "60"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("TYPE_V"), std::string::npos);

  r = run({"basket", "18"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1/5(1,2,3)"), std::string::npos);
}

}  // namespace
