// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wfano/blowup.hpp"
#include "wfano/classifier.hpp"
#include "wfano/matrix.hpp"
#include "wfano/rational.hpp"

namespace wfano {

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Flattened linear combination of symbols. Symbols: H (pullback of -K_X),
/// K (canonical class of the top), a named divisor, or total(NAME) for the
/// full pullback of an exceptional divisor.
struct LinearExpr {
  struct Term {
    enum class Kind { H, K, Symbol, Total };
    Kind kind = Kind::Symbol;
    std::string name;
    Rational coeff;
    SourcePos pos;
  };
  std::vector<Term> terms;
  std::string text;
};

struct DivisorDecl {
  std::string name;
  LinearExpr value;
  std::size_t stage = 0;
  SourcePos pos;
};

struct CenterDecl {
  std::string name;
  QuotientSingularityType type;
  std::map<std::string, Rational> track;
  SourcePos pos;
};

struct GramDecl {
  LinearExpr surface;
  std::vector<std::string> curves;
  struct Relation {
    LinearExpr divisor;
    std::vector<Rational> multiplicities;
    SourcePos pos;
  };
  std::vector<Relation> relations;
};

struct Expectation {
  enum class Kind { NegKCube, Triple, Gram, Definite };
  Kind kind = Kind::NegKCube;
  /// Triple index, 0-based, for Kind::Triple.
  std::size_t index = 0;
  std::vector<Rational> values;
  bool definite = false;
  SourcePos pos;
};

/// Parsed tower description (docs/tower-spec.md).
struct TowerSpec {
  std::variant<int, std::array<int, 4>> base;
  SourcePos base_pos;
  /// Divisors and centers in file order.
  std::vector<std::variant<DivisorDecl, CenterDecl>> steps;
  std::vector<std::array<LinearExpr, 3>> triples;
  std::optional<GramDecl> gram;
  std::vector<Expectation> expectations;
};

/// Throws ParseError with the offending line and column.
TowerSpec parse_tower_spec(std::string_view source);

struct TowerEvaluation {
  Tower tower;
  Rational neg_k_cube;
  /// (-K)^3 through the cubic form; always equals neg_k_cube.
  Rational neg_k_cube_form;
  std::vector<std::pair<std::string, Rational>> triples;
  std::vector<std::string> curves;
  std::optional<RationalMatrix> gram;
  std::optional<bool> negative_definite;

  struct ExpectationResult {
    std::string what;
    bool pass = false;
    std::string expected;
    std::string actual;
  };
  std::vector<ExpectationResult> expectations;

  bool expectations_met() const;
};

/// Builds the tower and evaluates every request. Unknown symbols and invalid
/// centers raise ParseError at their position; solver errors propagate as Error.
TowerEvaluation evaluate_tower_spec(const TowerSpec& spec, const Catalog& catalog);

/// Renders the evaluation as the lines printed by `wfano eval-tower`.
std::string format_evaluation(const TowerEvaluation& e);

}  // namespace wfano
