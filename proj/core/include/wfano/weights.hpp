// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "wfano/rational.hpp"

namespace wfano {

/// Number of homogeneous coordinates x, y, z, t, w of P(1,a1,a2,a3,a4).
inline constexpr std::size_t kNumVariables = 5;

/// Variable names in index order. Index 0 is the weight-1 variable.
inline constexpr std::array<char, kNumVariables> kVariableNames = {'x', 'y', 'z', 't', 'w'};

using VariableSet = std::bitset<kNumVariables>;

VariableSet all_variables();

/// Weight quadruple (a1,a2,a3,a4) with a0 = 1 implicit.
class Weights {
 public:
  /// Sorts the input. Throws Error(InvalidWeights) on a non-positive entry or
  /// when gcd(a1,a2,a3,a4) != 1.
  explicit Weights(std::array<int, 4> a);
  Weights(int a1, int a2, int a3, int a4) : Weights(std::array<int, 4>{a1, a2, a3, a4}) {}

  /// Index 0 returns 1; indices 1..4 return a1..a4.
  int operator[](std::size_t i) const;
  const std::array<int, 4>& quadruple() const noexcept { return a_; }
  int degree() const noexcept { return degree_; }

  /// "(a1,a2,a3,a4)".
  std::string to_string() const;

  friend bool operator==(const Weights&, const Weights&) = default;
  friend auto operator<=>(const Weights&, const Weights&) = default;

 private:
  std::array<int, 4> a_;
  int degree_;
};

struct Monomial {
  std::array<int, kNumVariables> exponents{};

  int degree(const Weights& w) const;
  /// e.g. "y^5z"; "1" for the constant monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// d / (a1 a2 a3 a4).
Rational anticanonical_cube(const Weights& w);

/// All monomials of weighted degree deg in the variables of vars, in
/// lexicographic order of exponent tuples. Throws Error(InvalidArgument) when
/// deg < 0.
std::vector<Monomial> monomials_of_degree(const Weights& w, int deg,
                                          VariableSet vars = all_variables());

/// Existence test without materializing the list.
bool has_monomial_of_degree(const Weights& w, int deg, VariableSet vars);

}  // namespace wfano
