// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "wfano/blowup.hpp"
#include "wfano/classifier.hpp"
#include "wfano/enumerator.hpp"
#include "wfano/error.hpp"
#include "wfano/export.hpp"
#include "wfano/singularities.hpp"
#include "wfano/tower_spec.hpp"
#include "wfano/verify.hpp"

namespace wfano::cli {

namespace {

std::string annotation_text(const Annotation& a) {
  if (const auto* bc = std::get_if<BcAnnotation>(&a)) {
    return std::to_string(bc->b) + "B+" + std::to_string(bc->c) + "E";
  }
  if (const auto* u = std::get_if<UntwistingAnnotation>(&a)) {
    return (u->kind == UntwistingAnnotation::Kind::Quadratic ? "Q.I. " : "E.I. ") + u->text;
  }
  return "-";
}

int cmd_enumerate(int bound, unsigned threads, std::ostream& out, std::ostream& err) {
  if (bound < 1) {
    err << "error: --bound must be positive\n";
    return kExitInputError;
  }
  const auto& catalog = Catalog::standard();
  const auto families = enumerate_families(bound, threads);
  for (const auto& w : families) {
    const auto g = catalog.find(w);
    out << w.degree() << '\t' << w.to_string() << '\t' << (g ? std::to_string(*g) : "-") << '\n';
  }
  out << "# " << families.size() << " families with a4 <= " << bound << '\n';
  return kExitOk;
}

int cmd_show(int gimel, std::ostream& out) {
  const auto& catalog = Catalog::standard();
  const FamilyRecord& r = catalog.record(gimel);
  out << "family " << r.gimel << '\n'
      << "weights " << r.weights.to_string() << '\n'
      << "degree " << r.weights.degree() << '\n'
      << "minus_k_cube " << to_string(r.minus_k_cube) << '\n';
  if (!r.inv.empty()) out << "inv " << r.inv << '\n';
  if (!r.ell.empty()) out << "ell " << r.ell << '\n';
  for (const auto& row : r.basket) {
    out << "point " << row.locus.label() << ' ' << row.count << ' ' << row.type.to_string() << ' '
        << annotation_text(row.annotation) << '\n';
  }
  const HalphenAnswer h = catalog.halphen_pencils(gimel);
  out << "pencils " << h.count.to_string() << '\n';
  for (const auto& p : h.pencils) {
    out << "pencil " << to_string(p.kind) << " n=" << p.degree << ' ' << p.generator_text << '\n';
  }
  return kExitOk;
}

int cmd_basket(int gimel, std::ostream& out) {
  const Weights& w = Catalog::standard().record(gimel).weights;
  const Basket b = basket(w);
  if (b.empty()) out << "smooth\n";
  for (const auto& e : b.entries()) {
    out << e.locus.label() << '\t' << e.count << '\t' << e.type.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(std::optional<int> gimel, unsigned threads, std::ostream& out, std::ostream& err) {
  const auto& catalog = Catalog::standard();
  std::vector<FamilyReport> reports;
  if (gimel) {
    reports.push_back(verify_family(catalog, *gimel));
  } else {
    reports = verify_all(catalog, threads);
  }
  std::size_t checks = 0, failures = 0;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << format_check(c) << '\n';
      ++checks;
      if (!c.pass) ++failures;
    }
  }
  if (!gimel) {
    const auto iv = derived_type_iv_gimels(catalog);
    const bool iv_ok = iv == type_iv_gimels();
    out << "*\ttype_iv_set\t" << (iv_ok ? "PASS" : "FAIL") << "\tlisted\t" << (iv_ok ? "listed" : "differs")
        << '\n';
    const auto exc = derived_nonprincipal_gimels(catalog);
    const bool exc_ok = exc == nonprincipal_gimels();
    out << "*\tnonprincipal_set\t" << (exc_ok ? "PASS" : "FAIL") << "\tlisted\t" << (exc_ok ? "listed" : "differs")
        << '\n';
    checks += 2;
    failures += (iv_ok ? 0 : 1) + (exc_ok ? 0 : 1);
  }
  err << reports.size() << " families, " << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_eval_tower(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << '\n';
    return kExitInputError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    const TowerSpec spec = parse_tower_spec(buf.str());
    const TowerEvaluation e = evaluate_tower_spec(spec, Catalog::standard());
    out << format_evaluation(e);
    return e.expectations_met() ? kExitOk : kExitCheckFailed;
  } catch (const ParseError& e) {
    err << path << ':' << e.line() << ':' << e.column() << ": " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_export(const std::string& format, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto& records = Catalog::standard().records();
  const std::string text = format == "json" ? export_json(records) : export_csv(records);
  if (out_path.empty() || out_path == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << out_path << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Fano threefold hypersurfaces: families, baskets, blow-up towers, Halphen pencils"};
  app.name("wfano");
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for enumerate/verify (0 = hardware)");

  int bound = kDefaultScanBound;
  auto* enumerate = app.add_subcommand("enumerate", "List accepted weight quadruples");
  enumerate->add_option("--bound", bound, "Largest a4 to scan")->capture_default_str();

  int show_gimel = 0;
  auto* show = app.add_subcommand("show", "Print one dataset record and its pencils");
  show->add_option("gimel", show_gimel, "Family number")->required();

  int basket_gimel = 0;
  auto* basket_cmd = app.add_subcommand("basket", "Compute the basket of a family");
  basket_cmd->add_option("gimel", basket_gimel, "Family number")->required();

  std::optional<int> verify_gimel;
  auto* verify = app.add_subcommand("verify", "Cross-check the dataset against the rules");
  verify->add_option("--gimel", verify_gimel, "Restrict to one family");

  std::string tower_path;
  auto* eval = app.add_subcommand("eval-tower", "Evaluate a tower description file");
  eval->add_option("file", tower_path, "Tower description")->required();

  std::string format;
  std::string out_path;
  auto* exp = app.add_subcommand("export", "Serialize the dataset");
  exp->add_option("--format", format, "json or csv")->required()->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*enumerate) return cmd_enumerate(bound, threads, out, err);
    if (*show) return cmd_show(show_gimel, out);
    if (*basket_cmd) return cmd_basket(basket_gimel, out);
    if (*verify) return cmd_verify(verify_gimel, threads, out, err);
    if (*eval) return cmd_eval_tower(tower_path, out, err);
    if (*exp) return cmd_export(format, out_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wfano::cli
