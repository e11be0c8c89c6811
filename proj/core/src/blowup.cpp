// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/blowup.hpp"

#include <algorithm>

#include "wfano/error.hpp"

namespace wfano {

DivisorClass DivisorClass::extended(std::size_t dim) const {
  if (dim < e.size()) throw Error(Errc::DimensionMismatch, "cannot shrink a divisor class");
  DivisorClass out = *this;
  out.e.resize(dim);
  return out;
}

std::string DivisorClass::to_string(const std::vector<std::string>& names) const {
  std::string out;
  auto term = [&out](const Rational& c, const std::string& sym) {
    if (c == 0) return;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += wfano::to_string(mag);
    out += sym;
  };
  term(k, "H");
  for (std::size_t i = 0; i < e.size(); ++i) {
    term(e[i], i < names.size() ? names[i] : "E" + std::to_string(i + 1));
  }
  return out.empty() ? "0" : out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (e.size() != other.e.size()) throw Error(Errc::DimensionMismatch, "adding classes of different towers");
  k += other.k;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.e[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (e.size() != other.e.size()) throw Error(Errc::DimensionMismatch, "subtracting classes of different towers");
  k -= other.k;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.e[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& factor) {
  k *= factor;
  for (auto& x : e) x *= factor;
  return *this;
}

Tower::Tower(Weights base) : base_(base), base_cube_(anticanonical_cube(base)) {}

DivisorClass Tower::pullback_anticanonical() const {
  return DivisorClass(Rational(1), std::vector<Rational>(centers_.size()));
}

DivisorClass Tower::exceptional_pullback(std::size_t i) const {
  if (i >= centers_.size()) throw Error(Errc::UnknownDivisor, "no exceptional divisor " + std::to_string(i + 1));
  DivisorClass out(Rational(0), std::vector<Rational>(centers_.size()));
  out.e[i] = 1;
  return out;
}

DivisorClass Tower::anticanonical() const {
  DivisorClass out = pullback_anticanonical();
  for (std::size_t i = 0; i < centers_.size(); ++i) out.e[i] = make_rational(-1, centers_[i].type.r());
  return out;
}

bool Tower::has_divisor(const std::string& name) const { return divisors_.count(name) != 0; }

const DivisorClass& Tower::divisor(const std::string& name) const {
  auto it = divisors_.find(name);
  if (it == divisors_.end()) throw Error(Errc::UnknownDivisor, "unknown divisor '" + name + "'");
  return it->second;
}

std::vector<std::string> Tower::exceptional_names() const {
  std::vector<std::string> out;
  for (const auto& c : centers_) out.push_back(c.name);
  return out;
}

Tower Tower::with_divisor(const std::string& name, const DivisorClass& cls) const {
  if (cls.dimension() != centers_.size()) throw Error(Errc::DimensionMismatch, "divisor '" + name + "'");
  if (has_divisor(name)) throw Error(Errc::InvalidArgument, "divisor '" + name + "' already defined");
  Tower out = *this;
  out.divisors_.emplace(name, cls);
  return out;
}

Tower push_blowup(const Tower& t, BlowupCenter c) {
  if (c.stage != t.centers_.size()) {
    throw Error(Errc::InvalidStage, "center at stage " + std::to_string(c.stage) + " on a tower of height " +
                                        std::to_string(t.centers_.size()));
  }
  const std::size_t n = t.centers_.size() + 1;
  if (c.name.empty()) c.name = "E" + std::to_string(n);
  if (t.has_divisor(c.name)) throw Error(Errc::InvalidArgument, "divisor '" + c.name + "' already defined");

  for (const auto& [sym, m] : c.tracked_multiplicities) {
    if (!t.has_divisor(sym)) throw Error(Errc::UnknownDivisor, "tracked divisor '" + sym + "'");
    if (m < 0 || !is_integral(m * c.type.r())) {
      throw Error(Errc::InvalidMultiplicity, "multiplicity " + to_string(m) + " of '" + sym + "' at 1/" +
                                                 std::to_string(c.type.r()));
    }
  }

  Tower out = t;
  for (auto& [sym, cls] : out.divisors_) {
    cls = cls.extended(n);
    auto it = c.tracked_multiplicities.find(sym);
    if (it != c.tracked_multiplicities.end()) cls.e[n - 1] -= it->second;
  }
  DivisorClass fresh(Rational(0), std::vector<Rational>(n));
  fresh.e[n - 1] = 1;
  out.divisors_.emplace(c.name, fresh);
  out.centers_.push_back(std::move(c));
  return out;
}

Rational triple(const Tower& t, const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) {
  const std::size_t n = t.size();
  if (a.dimension() != n || b.dimension() != n || c.dimension() != n) {
    throw Error(Errc::DimensionMismatch, "class dimension does not match tower height");
  }
  Rational out = a.k * b.k * c.k * t.base_cube();
  for (std::size_t i = 0; i < n; ++i) {
    out += a.e[i] * b.e[i] * c.e[i] * t.centers()[i].type.exceptional_cube();
  }
  return out;
}

Rational neg_k_cube(const Tower& t) {
  Rational out = t.base_cube();
  for (const auto& c : t.centers()) out -= c.type.discrepancy_defect();
  return out;
}

RationalMatrix solve_gram(const Tower& t, const GramProblem& p) {
  const std::size_t n = p.curves.size();
  for (const auto& dec : p.decompositions) {
    if (dec.multiplicities.size() != n) throw Error(Errc::DimensionMismatch, "decomposition length");
  }
  // Unknowns: upper triangle of the Gram matrix, row-major.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) unknowns.emplace_back(i, j);
  }
  auto slot = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  const std::size_t u = unknowns.size();

  std::vector<std::vector<Rational>> rows;
  const auto& decs = p.decompositions;
  for (std::size_t s = 0; s < decs.size(); ++s) {
    for (std::size_t q = s; q < decs.size(); ++q) {
      std::vector<Rational> row(u + 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          row[slot(i, j)] += decs[s].multiplicities[i] * decs[q].multiplicities[j];
        }
      }
      row[u] = triple(t, decs[s].divisor, decs[q].divisor, p.surface);
      rows.push_back(std::move(row));
    }
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < u && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j <= u; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rows[i][u] != 0) throw Error(Errc::Inconsistent, "redundant intersection equations disagree");
  }
  if (rank < u) {
    throw Error(Errc::Underdetermined, std::to_string(u - rank) + " intersection number(s) not determined");
  }

  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < rank; ++r) {
    auto [i, j] = unknowns[pivot_col[r]];
    out(i, j) = rows[r][u];
    out(j, i) = rows[r][u];
  }
  return out;
}

}  // namespace wfano
