// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wfano/blowup.hpp"
#include "wfano/enumerator.hpp"
#include "wfano/error.hpp"
#include "wfano/singularities.hpp"

namespace wfano {

bool FamilyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string format_check(const CheckResult& c) {
  return std::to_string(c.gimel) + "\t" + c.check + "\t" + (c.pass ? "PASS" : "FAIL") + "\t" + c.expected +
         "\t" + c.actual;
}

namespace {

struct KnownTower {
  int gimel;
  std::vector<QuotientSingularityType> centers;
  Rational neg_k_cube;
};

const std::vector<KnownTower>& known_towers() {
  static const std::vector<KnownTower> towers{
      {13, {QuotientSingularityType(3, 1), QuotientSingularityType(2, 1)}, make_rational(-3, 10)},
      {25, {QuotientSingularityType(4, 1), QuotientSingularityType(3, 1)}, make_rational(-1, 14)},
  };
  return towers;
}

std::string join_rows(std::vector<std::pair<int, QuotientSingularityType>> rows) {
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [count, type] : rows) {
    if (!out.empty()) out += ",";
    out += std::to_string(count) + "x" + type.to_string();
  }
  return out.empty() ? "smooth" : out;
}

class Recorder {
 public:
  explicit Recorder(FamilyReport& report) : report_(report) {}

  void add(std::string check, const std::string& expected, const std::string& actual) {
    report_.checks.push_back({report_.gimel, std::move(check), expected == actual, expected, actual});
  }

  void flag(std::string check, bool ok, const std::string& expected, const std::string& actual) {
    report_.checks.push_back({report_.gimel, std::move(check), ok, expected, actual});
  }

 private:
  FamilyReport& report_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool is_principal_only(const HalphenAnswer& h) {
  return !h.count.is_infinite() && h.pencils.size() == 1 && h.pencils[0].kind == PencilKind::Principal;
}

}  // namespace

std::set<int> derived_type_iv_gimels(const Catalog& catalog) {
  std::set<int> out;
  for (const auto& r : catalog.records()) {
    const Weights& w = r.weights;
    if (w[1] == 1 || w[1] == w[2] || r.gimel == 60) continue;
    if (r.pencils.is_infinite() || r.pencils.value() != 2) continue;
    if (unique_index_j(w, 2)) out.insert(r.gimel);
  }
  return out;
}

std::set<int> derived_nonprincipal_gimels(const Catalog& catalog) {
  std::set<int> out;
  for (const auto& r : catalog.records()) {
    if (!is_principal_only(halphen_pencils(r.gimel, r.weights))) out.insert(r.gimel);
  }
  return out;
}

FamilyReport verify_family(const Catalog& catalog, int gimel) {
  const FamilyRecord& rec = catalog.record(gimel);
  const Weights& w = rec.weights;
  FamilyReport report;
  report.gimel = gimel;
  Recorder rc(report);

  rc.add("minus_k_cube", to_string(rec.minus_k_cube), to_string(anticanonical_cube(w)));
  rc.add("enumerator_accepts", "yes", yes_no(is_accepted(w)));

  std::vector<std::pair<int, QuotientSingularityType>> stored;
  for (const auto& row : rec.basket) stored.emplace_back(row.count, row.type);
  std::string computed;
  try {
    std::vector<std::pair<int, QuotientSingularityType>> rows;
    const Basket computed_basket = basket(w);
    for (const auto& e : computed_basket.entries()) rows.emplace_back(e.count, e.type);
    computed = join_rows(std::move(rows));
  } catch (const Error& e) {
    computed = e.what();
  }
  rc.add("basket", join_rows(stored), computed);

  for (const auto& row : rec.basket) {
    const Tower t = push_blowup(Tower(w), BlowupCenter{0, row.type, {}, {}});
    const Rational cube = neg_k_cube(t);
    const bool has_bc = std::holds_alternative<BcAnnotation>(row.annotation);
    rc.flag("bc_presence:" + row.locus.label() + ":" + row.type.to_string(), has_bc == (cube < 0),
            has_bc ? "bc" : "none", "neg_k_cube=" + to_string(cube));
  }

  HalphenAnswer h;
  try {
    h = halphen_pencils(gimel, w);
    rc.add("halphen_count", rec.pencils.to_string(), h.count.to_string());
  } catch (const Error& e) {
    rc.flag("halphen_count", false, rec.pencils.to_string(), e.what());
    return report;
  }

  for (const auto& p : h.pencils) {
    const bool ok = p.degree == 1 || p.degree == w[1] || p.degree == w[2] || (p.degree == 6 && gimel == 60);
    rc.flag("pencil_degree:" + std::string(to_string(p.kind)), ok, "1|a1|a2|6", std::to_string(p.degree));
  }

  const bool a2_is_one = w[2] == 1;
  rc.add("finite_iff_a2_ne_1", yes_no(!a2_is_one), yes_no(!h.count.is_infinite()));
  if (w[1] != w[2]) {
    rc.flag("at_most_two_pencils", !h.count.is_infinite() && h.count.value() <= 2, "<=2", h.count.to_string());
  }
  if (w[1] == 1 && !a2_is_one) {
    const bool ok = is_principal_only(h) && h.pencils[0].degree == 1;
    rc.flag("anticanonical_pencil_only", ok, "PRINCIPAL n=1",
            h.pencils.empty() ? "none" : std::string(to_string(h.pencils[0].kind)) + " n=" +
                                             std::to_string(h.pencils[0].degree));
  }
  rc.add("nonprincipal_listed", yes_no(nonprincipal_gimels().count(gimel) != 0), yes_no(!is_principal_only(h)));

  const bool iii_shape = w[1] == w[2] && w[1] != 1;
  rc.add("type_iii_applies", yes_no(type_iii_gimels().count(gimel) != 0), yes_no(iii_shape));
  if (iii_shape) {
    std::string actual;
    try {
      const int n = type_iii_point_count(w);
      int points = 0;
      const QuotientSingularityType target = normalize_singularity(w[1], {1, 1, w[1] - 1});
      for (const auto& row : rec.basket) {
        if (row.type == target) points += row.count;
      }
      actual = std::to_string(points);
      rc.add("type_iii_points", std::to_string(n), actual);
      const auto jm = unique_index_j(w, 1);
      rc.flag("type_iii_index", jm && jm->j >= 3, "j>=3", jm ? "j=" + std::to_string(jm->j) : "none");
    } catch (const Error& e) {
      rc.flag("type_iii_points", false, "applicable", e.what());
    }
  }

  bool iv_rule = false;
  std::string iv_actual;
  try {
    iv_rule = w[1] != 1 && w[1] != w[2] && gimel != 60 && !rec.pencils.is_infinite() &&
              rec.pencils.value() == 2 && unique_index_j(w, 2).has_value();
    iv_actual = yes_no(iv_rule);
  } catch (const Error& e) {
    iv_actual = e.what();
  }
  rc.add("type_iv_membership", yes_no(type_iv_gimels().count(gimel) != 0), iv_actual);

  const bool v_shape = w == Weights(4, 5, 6, 9);
  rc.add("type_v_applies", yes_no(gimel == 60), yes_no(v_shape));

  for (const auto& kt : known_towers()) {
    if (kt.gimel != gimel) continue;
    Tower t(w);
    std::string label;
    for (const auto& c : kt.centers) {
      t = push_blowup(t, BlowupCenter{t.size(), c, {}, {}});
      label += (label.empty() ? "" : ",") + c.to_string();
    }
    rc.add("neg_k_cube_tower[" + label + "]", to_string(kt.neg_k_cube), to_string(neg_k_cube(t)));
  }
  return report;
}

std::vector<FamilyReport> verify_all(const Catalog& catalog, unsigned threads) {
  const auto& records = catalog.records();
  std::vector<FamilyReport> out(records.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, records.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) out[i] = verify_family(catalog, records[i].gimel);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace wfano
