// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wfano {

enum class Errc {
  InvalidWeights,
  InvalidArgument,
  NonTerminal,
  WeightDivisible,
  NoEliminator,
  EmptyRestriction,
  StratumCountNotIntegral,
  InvalidStage,
  InvalidMultiplicity,
  UnknownDivisor,
  DimensionMismatch,
  Underdetermined,
  Inconsistent,
  NotSymmetric,
  SyntaxError,
  DuplicateGimel,
  MissingGimel,
  NotUnique,
  NotApplicable,
  UnknownGimel,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Positioned diagnostic for the line-oriented text formats. Lines and
/// columns are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column,
             std::string expected, const std::string& detail = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace wfano
