// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/weights.hpp"

#include <algorithm>
#include <numeric>

#include "wfano/error.hpp"

namespace wfano {

VariableSet all_variables() { return VariableSet().set(); }

Weights::Weights(std::array<int, 4> a) : a_(a), degree_(0) {
  std::sort(a_.begin(), a_.end());
  if (a_[0] <= 0) {
    throw Error(Errc::InvalidWeights, "weights must be positive, got " + to_string());
  }
  // {a0,...,a4} minus a0 is the only 4-subset that can share a factor.
  if (std::gcd(std::gcd(a_[0], a_[1]), std::gcd(a_[2], a_[3])) != 1) {
    throw Error(Errc::InvalidWeights, "not well-formed: " + to_string());
  }
  degree_ = a_[0] + a_[1] + a_[2] + a_[3];
}

int Weights::operator[](std::size_t i) const {
  if (i == 0) return 1;
  if (i > 4) throw Error(Errc::InvalidArgument, "variable index out of range");
  return a_[i - 1];
}

std::string Weights::to_string() const {
  return "(" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," +
         std::to_string(a_[2]) + "," + std::to_string(a_[3]) + ")";
}

int Monomial::degree(const Weights& w) const {
  int total = 0;
  for (std::size_t i = 0; i < kNumVariables; ++i) total += exponents[i] * w[i];
  return total;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    if (exponents[i] == 0) continue;
    out += kVariableNames[i];
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

Rational anticanonical_cube(const Weights& w) {
  const auto& a = w.quadruple();
  return make_rational(w.degree(),
                       static_cast<std::int64_t>(a[0]) * a[1] * a[2] * a[3]);
}

namespace {

void collect(const Weights& w, VariableSet vars, std::size_t index, int remaining,
             Monomial& current, std::vector<Monomial>& out) {
  if (index == kNumVariables) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  if (!vars.test(index)) {
    collect(w, vars, index + 1, remaining, current, out);
    return;
  }
  const int weight = w[index];
  for (int e = 0; e * weight <= remaining; ++e) {
    current.exponents[index] = e;
    collect(w, vars, index + 1, remaining - e * weight, current, out);
  }
  current.exponents[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Weights& w, int deg, VariableSet vars) {
  if (deg < 0) throw Error(Errc::InvalidArgument, "negative degree");
  std::vector<Monomial> out;
  Monomial current;
  collect(w, vars, 0, deg, current, out);
  return out;
}

bool has_monomial_of_degree(const Weights& w, int deg, VariableSet vars) {
  if (deg < 0) return false;
  std::vector<char> reachable(static_cast<std::size_t>(deg) + 1, 0);
  reachable[0] = 1;
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    if (!vars.test(i)) continue;
    const int weight = w[i];
    for (int s = weight; s <= deg; ++s) {
      if (reachable[s - weight]) reachable[s] = 1;
    }
  }
  return reachable[deg] != 0;
}

}  // namespace wfano
