// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wfano/matrix.hpp"
#include "wfano/rational.hpp"
#include "wfano/singularity_type.hpp"
#include "wfano/weights.hpp"

namespace wfano {

/// Divisor class at the top of a tower: k * H + sum_i e[i] * Ebar_i, where H is
/// the total pullback of -K_X and Ebar_i the total pullback of the i-th
/// exceptional divisor.
struct DivisorClass {
  Rational k;
  std::vector<Rational> e;

  DivisorClass() = default;
  DivisorClass(Rational k_coeff, std::vector<Rational> e_coeffs)
      : k(std::move(k_coeff)), e(std::move(e_coeffs)) {}

  std::size_t dimension() const noexcept { return e.size(); }
  /// Pads with zero exceptional coefficients.
  DivisorClass extended(std::size_t dim) const;
  /// "2H - 2/7E1 - 2/3E2" using the given exceptional names.
  std::string to_string(const std::vector<std::string>& exceptional_names) const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& factor);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& f, DivisorClass a) { return a *= f; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// One Kawamata blow-up. `stage` is the index of the variety being blown up
/// (0 for X itself). Each tracked divisor D loses m * E_new from its proper
/// transform, with m * r integral.
struct BlowupCenter {
  std::size_t stage = 0;
  QuotientSingularityType type{2, 1};
  std::map<std::string, Rational> tracked_multiplicities;
  /// Symbol of the new exceptional divisor; defaults to "E<n>".
  std::string name;
};

class Tower {
 public:
  explicit Tower(Weights base);

  const Weights& base() const noexcept { return base_; }
  const Rational& base_cube() const noexcept { return base_cube_; }
  const std::vector<BlowupCenter>& centers() const noexcept { return centers_; }
  std::size_t size() const noexcept { return centers_.size(); }

  /// Total pullback of -K_X.
  DivisorClass pullback_anticanonical() const;
  /// Total pullback of the i-th exceptional divisor (0-based).
  DivisorClass exceptional_pullback(std::size_t i) const;
  /// -K of the tower top.
  DivisorClass anticanonical() const;

  bool has_divisor(const std::string& name) const;
  /// Current proper transform of a named divisor, including exceptional ones.
  /// Throws Error(UnknownDivisor).
  const DivisorClass& divisor(const std::string& name) const;
  const std::map<std::string, DivisorClass>& divisors() const noexcept { return divisors_; }
  std::vector<std::string> exceptional_names() const;

  /// Registers a named divisor at the current top.
  Tower with_divisor(const std::string& name, const DivisorClass& cls) const;

  friend Tower push_blowup(const Tower& t, BlowupCenter c);

 private:
  Weights base_;
  Rational base_cube_;
  std::vector<BlowupCenter> centers_;
  std::map<std::string, DivisorClass> divisors_;
};

/// Throws Error(InvalidStage), Error(InvalidMultiplicity) or Error(UnknownDivisor).
Tower push_blowup(const Tower& t, BlowupCenter c);

/// A * B * C on the tower top. Throws Error(DimensionMismatch).
Rational triple(const Tower& t, const DivisorClass& a, const DivisorClass& b,
                const DivisorClass& c);

/// -K^3 of the tower top, from the closed form.
Rational neg_k_cube(const Tower& t);

struct CurveDecomposition {
  DivisorClass divisor;
  /// Coefficient per curve symbol: divisor * surface = sum m_i C_i.
  std::vector<Rational> multiplicities;
};

struct GramProblem {
  DivisorClass surface;
  std::vector<std::string> curves;
  std::vector<CurveDecomposition> decompositions;
};

/// Intersection matrix of the curves on the surface. Throws
/// Error(Underdetermined), Error(Inconsistent) or Error(DimensionMismatch).
RationalMatrix solve_gram(const Tower& t, const GramProblem& p);

}  // namespace wfano
