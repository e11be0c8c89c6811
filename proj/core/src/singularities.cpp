// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/singularities.hpp"

#include <algorithm>
#include <numeric>

#include "wfano/error.hpp"

namespace wfano {

std::string Locus::label() const {
  std::string out = "P" + std::to_string(first);
  if (!is_point()) out += "P" + std::to_string(second);
  return out;
}

std::optional<Locus> parse_locus(std::string_view label) {
  auto digit = [](char c) { return c >= '1' && c <= '4'; };
  if (label.size() == 2 && label[0] == 'P' && digit(label[1])) {
    return Locus{label[1] - '0', 0};
  }
  if (label.size() == 4 && label[0] == 'P' && digit(label[1]) && label[2] == 'P' &&
      digit(label[3]) && label[1] < label[3]) {
    return Locus{label[1] - '0', label[3] - '0'};
  }
  return std::nullopt;
}

Basket::Basket(std::vector<BasketEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const BasketEntry& x, const BasketEntry& y) {
    if (x.type.r() != y.type.r()) return x.type.r() > y.type.r();
    if (x.count != y.count) return x.count < y.count;
    if (x.type.a() != y.type.a()) return x.type.a() < y.type.a();
    return x.locus < y.locus;
  });
}

std::map<QuotientSingularityType, int> Basket::totals() const {
  std::map<QuotientSingularityType, int> out;
  for (const auto& e : entries_) out[e.type] += e.count;
  return out;
}

std::string Basket::to_string() const {
  if (entries_.empty()) return "smooth";
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += " + ";
    if (e.count != 1) out += std::to_string(e.count) + "x";
    out += e.type.to_string();
  }
  return out;
}

namespace {

std::array<int, 3> other_weights(const Weights& w, int i, int j) {
  std::array<int, 3> out{};
  std::size_t n = 0;
  for (int k = 0; k < 5; ++k) {
    if (k != i && k != j) out[n++] = w[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

std::optional<BasketEntry> coordinate_point_type(const Weights& w, int i) {
  if (i < 1 || i > 4) throw Error(Errc::InvalidArgument, "coordinate index must be 1..4");
  const int d = w.degree();
  const int ai = w[static_cast<std::size_t>(i)];
  if (d % ai == 0) return std::nullopt;

  std::optional<QuotientSingularityType> chosen;
  for (int j = 0; j < 5; ++j) {
    if (j == i) continue;
    const int rest = d - w[static_cast<std::size_t>(j)];
    if (rest <= 0 || rest % ai != 0) continue;
    auto type = normalize_singularity(ai, other_weights(w, i, j));
    if (!chosen) {
      chosen = type;
    } else if (*chosen != type) {
      throw Error(Errc::NonTerminal, "eliminator choice changes the type at P" + std::to_string(i));
    }
  }
  if (!chosen) {
    throw Error(Errc::NoEliminator, "no monomial x_i^k x_j at P" + std::to_string(i) +
                                        " for " + w.to_string());
  }
  return BasketEntry{1, *chosen, Locus{i, 0}};
}

std::optional<BasketEntry> stratum_points(const Weights& w, int i, int j) {
  if (i < 1 || j > 4 || i >= j) throw Error(Errc::InvalidArgument, "stratum needs 1 <= i < j <= 4");
  const int ai = w[static_cast<std::size_t>(i)];
  const int aj = w[static_cast<std::size_t>(j)];
  const int r = std::gcd(ai, aj);
  if (r < 2) throw Error(Errc::InvalidArgument, "stratum has trivial stabilizer");

  VariableSet vars;
  vars.set(static_cast<std::size_t>(i)).set(static_cast<std::size_t>(j));
  const auto restricted = monomials_of_degree(w, w.degree(), vars);
  if (restricted.empty()) {
    throw Error(Errc::EmptyRestriction, "general member contains P" + std::to_string(i) + "P" +
                                            std::to_string(j));
  }
  int ei = restricted.front().exponents[i];
  int ej = restricted.front().exponents[j];
  for (const auto& m : restricted) {
    ei = std::min(ei, m.exponents[i]);
    ej = std::min(ej, m.exponents[j]);
  }
  const int l = std::lcm(ai, aj);
  const int rest = w.degree() - ei * ai - ej * aj;
  if (rest % l != 0) {
    throw Error(Errc::StratumCountNotIntegral, "on P" + std::to_string(i) + "P" + std::to_string(j));
  }
  if (rest == 0) return std::nullopt;
  return BasketEntry{rest / l, normalize_singularity(r, other_weights(w, i, j)), Locus{i, j}};
}

Basket basket(const Weights& w) {
  std::vector<BasketEntry> entries;
  for (int i = 1; i <= 4; ++i) {
    if (auto e = coordinate_point_type(w, i)) entries.push_back(*e);
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      if (std::gcd(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)]) < 2) continue;
      if (auto e = stratum_points(w, i, j)) entries.push_back(*e);
    }
  }
  return Basket(std::move(entries));
}

}  // namespace wfano
