// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wfano/dataset.hpp"
#include "wfano/rational.hpp"
#include "wfano/weights.hpp"

namespace wfano {

enum class PencilKind {
  FullAnticanonicalSystem,
  Principal,
  TypeIIIP,
  TypeIIIPoint,
  TypeIV,
  TypeV,
};

std::string_view to_string(PencilKind kind);

struct PencilDescriptor {
  PencilKind kind = PencilKind::Principal;
  /// e.g. "lambda*x^4 + mu*f_4"; f_k is a general form of degree k.
  std::string generator_text;
  /// The pencil lies in |-n K_X|.
  int degree = 1;
  /// Index of the singular point O_i for TypeIIIPoint, else 0.
  int point = 0;

  friend bool operator==(const PencilDescriptor&, const PencilDescriptor&) = default;
};

struct HalphenAnswer {
  int gimel = 0;
  PencilCount count = PencilCount::infinite();
  /// Empty when the count is infinite.
  std::vector<PencilDescriptor> pencils;
};

/// Families whose every pencil in |-K_X| is a Halphen pencil (a2 = 1).
const std::set<int>& infinite_pencil_gimels();
/// Families with a1 = a2 != 1.
const std::set<int>& type_iii_gimels();
/// Families carrying the extra pencil lambda x^{a2} + mu f_m.
const std::set<int>& type_iv_gimels();
/// Families where |-a1 K_X| is not the only Halphen pencil.
const std::set<int>& nonprincipal_gimels();

struct IndexMultiple {
  int j = 0;
  int m = 0;
  friend bool operator==(const IndexMultiple&, const IndexMultiple&) = default;
};

/// The index j != skipped with (sum of the three weights other than
/// a_skipped) = m * a_j. Indices 3 and 4 are tried first; the remaining index
/// below 3 is a fallback used only when neither 3 nor 4 works. Throws
/// Error(NotUnique) when both 3 and 4 work, Error(InvalidArgument) unless
/// skipped is 1 or 2.
std::optional<IndexMultiple> unique_index_j(const Weights& w, int skipped);

/// (3 a1 + a4 + 1) / a1. Throws Error(NotApplicable) unless a1 = a2 != 1 and
/// a3 = a1 + 1, or if the quotient is not integral.
int type_iii_point_count(const Weights& w);

/// -K_X . C <= -K_X^3.
bool curve_center_admissible(const Rational& curve_degree, const Weights& w);

/// Immutable, indexed view of the 95 records.
class Catalog {
 public:
  /// Expects the output of parse_table.
  explicit Catalog(std::vector<FamilyRecord> records);

  /// load_table() on first use.
  static const Catalog& standard();

  const std::vector<FamilyRecord>& records() const noexcept { return records_; }
  /// Throws Error(UnknownGimel).
  const FamilyRecord& record(int gimel) const;
  std::optional<int> find(const Weights& w) const;

  /// Throws Error(UnknownGimel).
  HalphenAnswer halphen_pencils(int gimel) const;

 private:
  std::vector<FamilyRecord> records_;
};

/// Pencils predicted for a family from its weights and gimel alone.
HalphenAnswer halphen_pencils(int gimel, const Weights& w);

/// Uses Catalog::standard().
HalphenAnswer halphen_pencils(int gimel);

}  // namespace wfano
