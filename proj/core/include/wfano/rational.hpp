// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wfano {

// Arbitrary precision keeps tower products exact no matter how many centers
// are stacked. cpp_rational is always in lowest terms with positive
// denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n/d in lowest terms. Throws Error(InvalidArgument) when d == 0.
Rational make_rational(std::int64_t n, std::int64_t d = 1);

/// "p/q", or "p" for integers. Locale independent.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q", "-p/q" (q > 0). Whitespace is not allowed.
std::optional<Rational> parse_rational(std::string_view text);

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace wfano
