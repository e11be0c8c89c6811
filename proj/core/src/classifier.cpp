// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/classifier.hpp"

#include <algorithm>
#include <mutex>

#include "wfano/error.hpp"

namespace wfano {

std::string_view to_string(PencilKind kind) {
  switch (kind) {
    case PencilKind::FullAnticanonicalSystem: return "FULL_ANTICANONICAL_SYSTEM_PENCILS";
    case PencilKind::Principal: return "PRINCIPAL";
    case PencilKind::TypeIIIP: return "TYPE_III_P";
    case PencilKind::TypeIIIPoint: return "TYPE_III_POINT";
    case PencilKind::TypeIV: return "TYPE_IV";
    case PencilKind::TypeV: return "TYPE_V";
  }
  return "UNKNOWN";
}

const std::set<int>& infinite_pencil_gimels() {
  static const std::set<int> s{1, 2, 3, 4, 5, 6, 8, 10, 14};
  return s;
}

const std::set<int>& type_iii_gimels() {
  static const std::set<int> s{18, 22, 28};
  return s;
}

const std::set<int>& type_iv_gimels() {
  static const std::set<int> s{45, 48, 55, 57, 58, 66, 69, 74, 76, 79, 80, 81, 84, 86, 91, 93, 95};
  return s;
}

const std::set<int>& nonprincipal_gimels() {
  static const std::set<int> s{1,  2,  3,  4,  5,  6,  8,  10, 14, 18, 22, 28, 45, 48, 55,
                               57, 58, 60, 66, 69, 74, 76, 79, 80, 81, 84, 86, 91, 93, 95};
  return s;
}

std::optional<IndexMultiple> unique_index_j(const Weights& w, int skipped) {
  if (skipped != 1 && skipped != 2) throw Error(Errc::InvalidArgument, "skipped index must be 1 or 2");
  int sum = 0;
  for (int k = 1; k <= 4; ++k) {
    if (k != skipped) sum += w[static_cast<std::size_t>(k)];
  }
  auto divides = [&](int j) { return sum % w[static_cast<std::size_t>(j)] == 0; };
  auto hit = [&](int j) { return IndexMultiple{j, sum / w[static_cast<std::size_t>(j)]}; };

  if (divides(3) && divides(4)) {
    throw Error(Errc::NotUnique, "both a3 and a4 divide " + std::to_string(sum) + " for " + w.to_string());
  }
  if (divides(3)) return hit(3);
  if (divides(4)) return hit(4);
  const int fallback = skipped == 1 ? 2 : 1;
  if (divides(fallback)) return hit(fallback);
  return std::nullopt;
}

int type_iii_point_count(const Weights& w) {
  const int a1 = w[1];
  if (a1 == 1 || w[2] != a1 || w[3] != a1 + 1) {
    throw Error(Errc::NotApplicable, w.to_string() + " is not of the form (a,a,a+1,b) with a > 1");
  }
  const int numerator = 3 * a1 + w[4] + 1;
  if (numerator % a1 != 0) throw Error(Errc::NotApplicable, "point count is not integral");
  return numerator / a1;
}

bool curve_center_admissible(const Rational& curve_degree, const Weights& w) {
  return curve_degree <= anticanonical_cube(w);
}

Catalog::Catalog(std::vector<FamilyRecord> records) : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const FamilyRecord& a, const FamilyRecord& b) { return a.gimel < b.gimel; });
}

const Catalog& Catalog::standard() {
  static const Catalog catalog(load_table());
  return catalog;
}

const FamilyRecord& Catalog::record(int gimel) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), gimel,
                             [](const FamilyRecord& r, int g) { return r.gimel < g; });
  if (it == records_.end() || it->gimel != gimel) {
    throw Error(Errc::UnknownGimel, "no family " + std::to_string(gimel));
  }
  return *it;
}

std::optional<int> Catalog::find(const Weights& w) const {
  for (const auto& r : records_) {
    if (r.weights == w) return r.gimel;
  }
  return std::nullopt;
}

HalphenAnswer Catalog::halphen_pencils(int gimel) const {
  return wfano::halphen_pencils(gimel, record(gimel).weights);
}

namespace {

std::string power(char var, int exponent) {
  std::string out(1, var);
  if (exponent != 1) out += "^" + std::to_string(exponent);
  return out;
}

std::string pencil_text(int x_exponent, const std::string& other) {
  return "lambda*" + power('x', x_exponent) + " + mu*" + other;
}

PencilDescriptor principal(const Weights& w) {
  return {PencilKind::Principal, pencil_text(w[1], "y"), w[1], 0};
}

}  // namespace

HalphenAnswer halphen_pencils(int gimel, const Weights& w) {
  if (gimel < 1 || gimel > kFamilyCount) throw Error(Errc::UnknownGimel, "no family " + std::to_string(gimel));
  HalphenAnswer out;
  out.gimel = gimel;
  const int d = w.degree();

  if (w[2] == 1) {
    out.count = PencilCount::infinite();
    return out;
  }
  if (w[1] == w[2]) {
    const int a1 = w[1];
    const auto jm = unique_index_j(w, 1);
    if (!jm) throw Error(Errc::NotApplicable, "no index j for " + w.to_string());
    const int f_degree = d - jm->m * w[static_cast<std::size_t>(jm->j)];
    out.pencils.push_back({PencilKind::TypeIIIP, pencil_text(a1, "f_" + std::to_string(f_degree)), a1, 0});
    const int n = type_iii_point_count(w);
    for (int i = 1; i <= n; ++i) {
      out.pencils.push_back({PencilKind::TypeIIIPoint,
                             "surfaces in |-" + std::to_string(a1) + "K_X| through O_" + std::to_string(i), a1, i});
    }
  } else {
    out.pencils.push_back(principal(w));
    if (type_iv_gimels().count(gimel)) {
      const auto jm = unique_index_j(w, 2);
      if (!jm) throw Error(Errc::NotApplicable, "no index j for " + w.to_string());
      const int f_degree = d - jm->m * w[static_cast<std::size_t>(jm->j)];
      out.pencils.push_back({PencilKind::TypeIV, pencil_text(w[2], "f_" + std::to_string(f_degree)), w[2], 0});
    } else if (gimel == 60) {
      out.pencils.push_back({PencilKind::TypeV, pencil_text(6, "f_6"), 6, 0});
    }
  }
  out.count = PencilCount::finite(static_cast<int>(out.pencils.size()));
  return out;
}

HalphenAnswer halphen_pencils(int gimel) { return Catalog::standard().halphen_pencils(gimel); }

}  // namespace wfano
