// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/export.hpp"

#include <sstream>

#include <json.hpp>

#include "wfano/error.hpp"

namespace wfano {

namespace {

using nlohmann::json;

json annotation_json(const Annotation& a) {
  if (const auto* bc = std::get_if<BcAnnotation>(&a)) return json{{"kind", "bc"}, {"b", bc->b}, {"c", bc->c}};
  if (const auto* u = std::get_if<UntwistingAnnotation>(&a)) {
    return json{{"kind", u->kind == UntwistingAnnotation::Kind::Quadratic ? "qi" : "ei"}, {"text", u->text}};
  }
  return json{{"kind", "none"}};
}

std::string annotation_text(const Annotation& a) {
  if (const auto* bc = std::get_if<BcAnnotation>(&a)) return "bc " + std::to_string(bc->b) + " " + std::to_string(bc->c);
  if (const auto* u = std::get_if<UntwistingAnnotation>(&a)) {
    return (u->kind == UntwistingAnnotation::Kind::Quadratic ? "qi " : "ei ") + u->text;
  }
  return "-";
}

Annotation annotation_from(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "none") return NoAnnotation{};
  if (kind == "bc") return BcAnnotation{j.at("b").get<int>(), j.at("c").get<int>()};
  if (kind == "qi" || kind == "ei") {
    return UntwistingAnnotation{
        kind == "qi" ? UntwistingAnnotation::Kind::Quadratic : UntwistingAnnotation::Kind::Elliptic,
        j.at("text").get<std::string>()};
  }
  throw Error(Errc::SyntaxError, "unknown annotation kind '" + kind + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_json(const std::vector<FamilyRecord>& records) {
  json families = json::array();
  for (const auto& r : records) {
    json basket = json::array();
    for (const auto& row : r.basket) {
      basket.push_back({{"annotation", annotation_json(row.annotation)},
                        {"count", row.count},
                        {"locus", row.locus.label()},
                        {"type", row.type.to_string()},
                        {"type_text", row.type_text}});
    }
    const auto& a = r.weights.quadruple();
    families.push_back({{"gimel", r.gimel},
                        {"weights", {a[0], a[1], a[2], a[3]}},
                        {"degree", r.weights.degree()},
                        {"minus_k_cube", to_string(r.minus_k_cube)},
                        {"inv", r.inv},
                        {"ell", r.ell},
                        {"pencils", r.pencils.is_infinite() ? json("inf") : json(r.pencils.value())},
                        {"basket", basket}});
  }
  json doc{{"format", "wfano-families"}, {"version", 1}, {"families", families}};
  return doc.dump(2) + "\n";
}

std::vector<FamilyRecord> import_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "wfano-families") throw Error(Errc::SyntaxError, "not a wfano-families document");
    std::vector<FamilyRecord> out;
    for (const auto& f : doc.at("families")) {
      FamilyRecord r;
      r.gimel = f.at("gimel").get<int>();
      const auto w = f.at("weights").get<std::vector<int>>();
      if (w.size() != 4) throw Error(Errc::SyntaxError, "weights must have four entries");
      r.weights = Weights(w[0], w[1], w[2], w[3]);
      if (f.at("degree").get<int>() != r.weights.degree()) throw Error(Errc::SyntaxError, "degree mismatch");
      auto cube = parse_rational(f.at("minus_k_cube").get<std::string>());
      if (!cube) throw Error(Errc::SyntaxError, "bad minus_k_cube");
      r.minus_k_cube = *cube;
      r.inv = f.at("inv").get<std::string>();
      r.ell = f.at("ell").get<std::string>();
      const auto& p = f.at("pencils");
      r.pencils = p.is_string() && p.get<std::string>() == "inf" ? PencilCount::infinite()
                                                                 : PencilCount::finite(p.get<int>());
      for (const auto& row : f.at("basket")) {
        BasketRow b;
        auto locus = parse_locus(row.at("locus").get<std::string>());
        if (!locus) throw Error(Errc::SyntaxError, "bad locus");
        b.locus = *locus;
        b.count = row.at("count").get<int>();
        b.type_text = row.at("type_text").get<std::string>();
        auto type = parse_singularity(b.type_text);
        if (!type) throw Error(Errc::SyntaxError, "bad singularity type");
        b.type = *type;
        b.annotation = annotation_from(row.at("annotation"));
        r.basket.push_back(std::move(b));
      }
      out.push_back(std::move(r));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
}

std::string export_csv(const std::vector<FamilyRecord>& records) {
  std::ostringstream out;
  out << "gimel,a1,a2,a3,a4,degree,minus_k_cube,inv,ell,pencils,basket\r\n";
  for (const auto& r : records) {
    const auto& a = r.weights.quadruple();
    std::string basket;
    for (const auto& row : r.basket) {
      if (!basket.empty()) basket += ';';
      basket += row.locus.label() + ":" + std::to_string(row.count) + "x" + row.type_text + "[" +
                annotation_text(row.annotation) + "]";
    }
    out << r.gimel << ',' << a[0] << ',' << a[1] << ',' << a[2] << ',' << a[3] << ',' << r.weights.degree() << ','
        << to_string(r.minus_k_cube) << ',' << csv_field(r.inv) << ',' << csv_field(r.ell) << ','
        << r.pencils.to_string() << ',' << csv_field(basket) << "\r\n";
  }
  return out.str();
}

}  // namespace wfano
