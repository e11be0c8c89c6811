// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/singularity_type.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "wfano/error.hpp"

namespace wfano {

QuotientSingularityType::QuotientSingularityType(int r, int a) : r_(r), a_(a) {
  if (r < 2 || a < 1 || a >= r || std::gcd(a, r) != 1) {
    throw Error(Errc::NonTerminal,
                "1/" + std::to_string(r) + "(1," + std::to_string(a) + "," +
                    std::to_string(r - a) + ") is not terminal");
  }
  a_ = std::min(a, r - a);
}

Rational QuotientSingularityType::exceptional_cube() const {
  return make_rational(static_cast<std::int64_t>(r_) * r_,
                       static_cast<std::int64_t>(a_) * (r_ - a_));
}

Rational QuotientSingularityType::discrepancy_defect() const {
  return make_rational(1, static_cast<std::int64_t>(r_) * a_ * (r_ - a_));
}

std::string QuotientSingularityType::to_string() const {
  return "1/" + std::to_string(r_) + "(1," + std::to_string(a_) + "," +
         std::to_string(r_ - a_) + ")";
}

QuotientSingularityType normalize_singularity(int r, std::array<int, 3> weights) {
  if (r < 2) throw Error(Errc::NonTerminal, "order must be at least 2");
  for (int& x : weights) {
    x = ((x % r) + r) % r;
    if (x == 0) {
      throw Error(Errc::WeightDivisible,
                  "transverse weight divisible by " + std::to_string(r));
    }
  }
  std::set<int> found;
  for (int u = 1; u < r; ++u) {
    if (std::gcd(u, r) != 1) continue;
    std::array<int, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) v[i] = static_cast<int>((static_cast<long long>(u) * weights[i]) % r);
    std::sort(v.begin(), v.end());
    do {
      if (v[0] == 1 && (v[1] + v[2]) % r == 0 && std::gcd(v[1], r) == 1) {
        found.insert(std::min(v[1], v[2]));
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  if (found.empty()) {
    throw Error(Errc::NonTerminal,
                "1/" + std::to_string(r) + "(" + std::to_string(weights[0]) + "," +
                    std::to_string(weights[1]) + "," + std::to_string(weights[2]) +
                    ") has no terminal normal form");
  }
  if (found.size() != 1) {
    throw Error(Errc::NonTerminal, "ambiguous normal form for order " + std::to_string(r));
  }
  return QuotientSingularityType(r, *found.begin());
}

namespace {

bool take_int(std::string_view& s, int& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

bool take_char(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

}  // namespace

std::optional<QuotientSingularityType> parse_singularity(std::string_view text) {
  int one = 0, r = 0;
  std::array<int, 3> w{};
  if (!take_int(text, one) || one != 1 || !take_char(text, '/') || !take_int(text, r) ||
      !take_char(text, '(') || !take_int(text, w[0]) || !take_char(text, ',') ||
      !take_int(text, w[1]) || !take_char(text, ',') || !take_int(text, w[2]) ||
      !take_char(text, ')') || !text.empty()) {
    return std::nullopt;
  }
  return normalize_singularity(r, w);
}

}  // namespace wfano
