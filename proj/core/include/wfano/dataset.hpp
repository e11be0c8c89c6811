// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wfano/rational.hpp"
#include "wfano/singularities.hpp"
#include "wfano/singularity_type.hpp"
#include "wfano/weights.hpp"

namespace wfano {

inline constexpr int kFamilyCount = 95;

/// Number of Halphen pencils: a positive integer or infinitely many.
class PencilCount {
 public:
  static PencilCount finite(int n);
  static PencilCount infinite() { return PencilCount(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws Error(InvalidArgument) when infinite.
  int value() const;
  /// "inf" or the decimal count.
  std::string to_string() const;

  friend bool operator==(const PencilCount&, const PencilCount&) = default;

 private:
  PencilCount() = default;
  bool infinite_ = true;
  int value_ = 0;
};

struct NoAnnotation {
  friend bool operator==(const NoAnnotation&, const NoAnnotation&) = default;
};

/// Coefficients of bB + cE.
struct BcAnnotation {
  int b = 0;
  int c = 0;
  friend bool operator==(const BcAnnotation&, const BcAnnotation&) = default;
};

/// Quadratic (Q.I.) or elliptic (E.I.) untwisting entry, kept verbatim.
struct UntwistingAnnotation {
  enum class Kind { Quadratic, Elliptic };
  Kind kind = Kind::Quadratic;
  std::string text;
  friend bool operator==(const UntwistingAnnotation&, const UntwistingAnnotation&) = default;
};

using Annotation = std::variant<NoAnnotation, BcAnnotation, UntwistingAnnotation>;

struct BasketRow {
  Locus locus;
  int count = 1;
  /// Notation as written in the source, e.g. "1/3(1,2,1)".
  std::string type_text;
  QuotientSingularityType type{2, 1};
  Annotation annotation;

  friend bool operator==(const BasketRow&, const BasketRow&) = default;
};

struct FamilyRecord {
  int gimel = 0;
  Weights weights{1, 1, 1, 1};
  Rational minus_k_cube;
  /// "inv F" and "ell" columns, verbatim.
  std::string inv;
  std::string ell;
  PencilCount pencils = PencilCount::infinite();
  std::vector<BasketRow> basket;

  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

/// Parses the line-oriented dataset format (docs/dataset-format.md). Returns
/// the 95 records sorted by gimel. Throws ParseError on malformed input or a
/// duplicate gimel, Error(MissingGimel) when a gimel in 1..95 is absent.
std::vector<FamilyRecord> parse_table(std::string_view source);

std::string serialize_table(const std::vector<FamilyRecord>& records);

/// Dataset text compiled into the library.
std::string_view embedded_table();

/// Reads the file named by WFANO_DATA when set, else the embedded text.
std::vector<FamilyRecord> load_table();

}  // namespace wfano
