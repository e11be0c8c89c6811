// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfano/singularity_type.hpp"
#include "wfano/weights.hpp"

namespace wfano {

/// A coordinate point P_i (second == 0) or the stratum P_iP_j, 1 <= i < j <= 4.
struct Locus {
  int first = 0;
  int second = 0;

  bool is_point() const noexcept { return second == 0; }
  /// "P4" or "P1P2".
  std::string label() const;

  friend bool operator==(const Locus&, const Locus&) = default;
  friend auto operator<=>(const Locus&, const Locus&) = default;
};

std::optional<Locus> parse_locus(std::string_view label);

struct BasketEntry {
  int count = 1;
  QuotientSingularityType type{2, 1};
  Locus locus;

  friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
};

/// Sorted by r descending, then count, then a, then locus.
class Basket {
 public:
  Basket() = default;
  explicit Basket(std::vector<BasketEntry> entries);

  const std::vector<BasketEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Total number of singular points of each type.
  std::map<QuotientSingularityType, int> totals() const;
  /// "6x1/2(1,1,1) + 1/5(1,2,3)"; "smooth" when empty.
  std::string to_string() const;

  friend bool operator==(const Basket&, const Basket&) = default;

 private:
  std::vector<BasketEntry> entries_;
};

/// Type of P_i (1 <= i <= 4) when it lies on the general member, else nullopt.
/// Throws Error(NoEliminator) when no monomial x_i^k x_j of degree d exists.
std::optional<BasketEntry> coordinate_point_type(const Weights& w, int i);

/// Points of the general member in the open stratum P_iP_j, 1 <= i < j <= 4.
/// Throws Error(InvalidArgument) unless gcd(a_i,a_j) >= 2, Error(EmptyRestriction)
/// when the member contains the stratum, Error(StratumCountNotIntegral) when the
/// point count does not divide out.
std::optional<BasketEntry> stratum_points(const Weights& w, int i, int j);

Basket basket(const Weights& w);

}  // namespace wfano
