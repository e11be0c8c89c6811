// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wfano/dataset.hpp"

namespace wfano {

/// Pretty-printed JSON, keys sorted, families in gimel order
/// (docs/dataset-format.md describes the schema).
std::string export_json(const std::vector<FamilyRecord>& records);

/// Inverse of export_json. Throws Error(SyntaxError) on schema violations.
std::vector<FamilyRecord> import_json(std::string_view text);

/// RFC 4180 CSV, one row per family, basket flattened into one quoted field.
std::string export_csv(const std::vector<FamilyRecord>& records);

}  // namespace wfano
