// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/rational.hpp"

#include <cctype>

#include "wfano/error.hpp"

namespace wfano {

Rational make_rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  // Some Boost releases reject a negative denominator in the two-argument constructor.
  if (d < 0) return Rational(-Integer(n), -Integer(d));
  return Rational(Integer(n), Integer(d));
}

std::string to_string(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

}  // namespace wfano
