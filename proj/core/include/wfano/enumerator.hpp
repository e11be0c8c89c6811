// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfano/error.hpp"
#include "wfano/weights.hpp"

namespace wfano {

inline constexpr int kDefaultScanBound = 40;

/// Torus-invariant stratum of P(1,a1,a2,a3,a4) where exactly the variables in
/// `variables` may be nonzero.
struct Stratum {
  VariableSet variables;
  int r = 1;

  int dimension() const { return static_cast<int>(variables.count()) - 1; }
};

/// Strata with nontrivial stabilizer (r >= 2), ordered by variable mask.
std::vector<Stratum> singular_strata(const Weights& w);

bool is_quasismooth_general(const Weights& w);

struct TerminalityVerdict {
  bool terminal = false;
  std::optional<Errc> reason;
  std::string diagnostic;

  explicit operator bool() const noexcept { return terminal; }
};

/// Explains why a quasismooth family fails the terminal test, if it does.
TerminalityVerdict check_terminal(const Weights& w);

bool has_only_terminal_isolated_sings(const Weights& w);

/// Quasismooth and terminal.
bool is_accepted(const Weights& w);

/// Accepted quadruples with a4 <= a4_bound, sorted by (degree, weights).
/// threads == 0 picks the hardware concurrency.
std::vector<Weights> enumerate_families(int a4_bound = kDefaultScanBound, unsigned threads = 1);

}  // namespace wfano
