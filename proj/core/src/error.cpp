// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/error.hpp"

namespace wfano {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonTerminal: return "NonTerminal";
    case Errc::WeightDivisible: return "WeightDivisible";
    case Errc::NoEliminator: return "NoEliminator";
    case Errc::EmptyRestriction: return "EmptyRestriction";
    case Errc::StratumCountNotIntegral: return "StratumCountNotIntegral";
    case Errc::InvalidStage: return "InvalidStage";
    case Errc::InvalidMultiplicity: return "InvalidMultiplicity";
    case Errc::UnknownDivisor: return "UnknownDivisor";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateGimel: return "DuplicateGimel";
    case Errc::MissingGimel: return "MissingGimel";
    case Errc::NotUnique: return "NotUnique";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::UnknownGimel: return "UnknownGimel";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

namespace {

std::string positioned_message(std::size_t line, std::size_t column,
                               const std::string& expected,
                               const std::string& detail) {
  std::string msg = "line " + std::to_string(line) + ", column " +
                    std::to_string(column);
  if (!expected.empty()) msg += ": expected " + expected;
  if (!detail.empty()) msg += (expected.empty() ? ": " : " (") + detail +
                              (expected.empty() ? "" : ")");
  return msg;
}

}  // namespace

ParseError::ParseError(Errc code, std::size_t line, std::size_t column,
                       std::string expected, const std::string& detail)
    : Error(code, positioned_message(line, column, expected, detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace wfano
