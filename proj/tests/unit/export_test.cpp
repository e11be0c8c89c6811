// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "wfano/dataset.hpp"
#include "wfano/error.hpp"
#include "wfano/export.hpp"

namespace wfano {
namespace {

std::vector<std::string> csv_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = csv.find("\r\n", start)) != std::string::npos; start = pos + 2) {
    out.push_back(csv.substr(start, pos - start));
  }
  EXPECT_EQ(start, csv.size());
  return out;
}

TEST(JsonExportTest, RoundTrip) {
  const auto recs = load_table();
  const std::string text = export_json(recs);
  const auto back = import_json(text);
  EXPECT_EQ(back.size(), 95u);
  EXPECT_EQ(back, recs);
  EXPECT_EQ(export_json(back), text);
}

TEST(JsonExportTest, Envelope) {
  const std::string text = export_json(load_table());
  EXPECT_NE(text.find("\"format\": \"wfano-families\""), std::string::npos);
  EXPECT_NE(text.find("\"version\": 1"), std::string::npos);
  EXPECT_NE(text.find("\"pencils\": \"inf\""), std::string::npos);
}

TEST(JsonExportTest, RejectsMalformedDocuments) {
  EXPECT_THROW(import_json("{"), Error);
  EXPECT_THROW(import_json("{\"format\": \"other\", \"version\": 1, \"families\": []}"), Error);
  EXPECT_THROW(import_json("[]"), Error);
}

TEST(CsvExportTest, HeaderAndRows) {
  const auto lines = csv_lines(export_csv(load_table()));
  ASSERT_EQ(lines.size(), 96u);
  EXPECT_EQ(lines[0], "gimel,a1,a2,a3,a4,degree,minus_k_cube,inv,ell,pencils,basket");
  EXPECT_EQ(lines[7].rfind("7,1,2,2,3,8,2/3,", 0), 0u) << lines[7];
  EXPECT_EQ(lines[18].rfind("18,2,2,3,5,12,1/5,", 0), 0u) << lines[18];
  EXPECT_NE(lines[18].find("P1P2:6x1/2(1,1,1)"), std::string::npos) << lines[18];
  EXPECT_NE(lines[1].find(",inf,"), std::string::npos);
}

TEST(CsvExportTest, Deterministic) {
  EXPECT_EQ(export_csv(load_table()), export_csv(load_table()));
  EXPECT_EQ(export_json(load_table()), export_json(load_table()));
}

}  // namespace
}  // namespace wfano
