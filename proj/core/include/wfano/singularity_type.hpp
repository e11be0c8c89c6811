// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "wfano/rational.hpp"

namespace wfano {

/// Terminal cyclic quotient singularity 1/r(1,a,r-a), stored with a <= r-a.
class QuotientSingularityType {
 public:
  /// Throws Error(NonTerminal) unless r >= 2, 1 <= a < r and gcd(a,r) = 1.
  /// Canonicalizes a to min(a, r-a).
  QuotientSingularityType(int r, int a);

  int r() const noexcept { return r_; }
  int a() const noexcept { return a_; }

  /// E^3 of the Kawamata blow-up: r^2 / (a(r-a)).
  Rational exceptional_cube() const;
  /// 1 / (r a (r-a)), the drop in -K^3 after one Kawamata blow-up.
  Rational discrepancy_defect() const;

  /// "1/r(1,a,r-a)".
  std::string to_string() const;

  friend bool operator==(const QuotientSingularityType&, const QuotientSingularityType&) = default;
  friend auto operator<=>(const QuotientSingularityType&, const QuotientSingularityType&) = default;

 private:
  int r_;
  int a_;
};

/// Finds a unit u mod r and an ordering turning u * weights into (1, a, r-a).
/// Throws Error(WeightDivisible) if a weight is 0 mod r, Error(NonTerminal) if
/// no such normal form exists or r < 2.
QuotientSingularityType normalize_singularity(int r, std::array<int, 3> transverse_weights);

/// Parses "1/r(x,y,z)" and normalizes it. Returns nullopt on malformed text;
/// normalization errors are thrown.
std::optional<QuotientSingularityType> parse_singularity(std::string_view text);

}  // namespace wfano
