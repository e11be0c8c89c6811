// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <vector>

#include "wfano/classifier.hpp"

namespace wfano {

struct CheckResult {
  int gimel = 0;
  std::string check;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct FamilyReport {
  int gimel = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Recomputes every derivable column of one record and compares it with the
/// stored data. Failures are entries, not exceptions; an unknown gimel throws
/// Error(UnknownGimel).
FamilyReport verify_family(const Catalog& catalog, int gimel);

/// All records in gimel order. threads == 0 picks the hardware concurrency.
std::vector<FamilyReport> verify_all(const Catalog& catalog, unsigned threads = 0);

/// Records satisfying a1 not in {1, a2}, having an index j for skipped = 2,
/// gimel != 60 and a stored pencil count of 2.
std::set<int> derived_type_iv_gimels(const Catalog& catalog);

/// Records where |-a1 K_X| is not the only predicted Halphen pencil.
std::set<int> derived_nonprincipal_gimels(const Catalog& catalog);

/// "gimel<TAB>check<TAB>PASS|FAIL<TAB>expected<TAB>actual".
std::string format_check(const CheckResult& c);

}  // namespace wfano
