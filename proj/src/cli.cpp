/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exlog/checker.hpp"
#include "exlog/decide.hpp"
#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"
#include "exlog/parser.hpp"
#include "exlog/printer.hpp"
#include "exlog/proof.hpp"
#include "exlog/structures.hpp"
#include "exlog/translate.hpp"

namespace exlog {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Lang lang_from_name(const std::string& name) {
  if (name == "prop") return Lang::prop;
  if (name == "gamble") return Lang::gamble;
  if (name == "expectation") return Lang::expectation;
  if (name == "likelihood") return Lang::likelihood;
  if (name == "gamble-ineq") return Lang::gamble_ineq;
  throw Error("unknown language '" + name + "'");
}

json stats_json(const SatStats& stats) {
  return {{"boolean_branches", stats.boolean_branches},
          {"guess_branches", stats.guess_branches},
          {"lp_solves", stats.lp_solves}};
}

json trace_json(const CheckResult& r) {
  json t = json::array();
  for (const auto& e : r.trace)
    t.push_back({{"basic", e.basic},
                 {"lhs", rat_string(e.lhs)},
                 {"rhs", rat_string(e.rhs)},
                 {"holds", e.holds}});
  return t;
}

struct Options {
  std::string format = "text";
  int atom_cap = kDefaultAtomCap;
  DecideBudget budget;

  bool json() const { return format == "json"; }
};

int do_parse(const Options& opt, const std::string& lang_name, const std::string& text,
             std::ostream& out) {
  AnyFormula f = parse_formula(text, lang_from_name(lang_name));
  if (opt.json())
    out << json{{"lang", lang_name}, {"canonical", to_text(f)}}.dump(2) << '\n';
  else
    out << to_text(f) << '\n';
  return 0;
}

int do_expect(const Options& opt, const std::string& structure_path, const std::string& gamble_text,
              const std::string& mode, std::ostream& out) {
  Structure s = load_structure(slurp(structure_path));
  Gamble g = parse_gamble(gamble_text);
  Rat value;
  std::string which;
  if (const auto* p = std::get_if<ProbabilityStructure>(&s)) {
    value = expect_prob(*p, g);
    which = "expectation";
  } else if (const auto* c = std::get_if<CredalStructure>(&s)) {
    ExpectBounds b = expect_bounds(*c, g);
    value = mode == "upper" ? b.upper : b.lower;
    which = mode == "upper" ? "upper expectation" : "lower expectation";
  } else if (const auto* b = std::get_if<BeliefStructure>(&s)) {
    value = expect_choquet(*b, g, mode == "upper" ? ChoquetMode::plaus : ChoquetMode::bel);
    which = mode == "upper" ? "plausibility expectation" : "belief expectation";
  } else if (const auto* q = std::get_if<PossibilityStructure>(&s)) {
    value = expect_poss(*q, g);
    which = "possibilistic expectation";
  } else {
    throw KindError("plain structures carry no expectation");
  }
  if (opt.json())
    out << json{{"value", rat_string(value)}, {"kind", which}}.dump(2) << '\n';
  else
    out << rat_string(value) << '\n';
  return 0;
}

int do_check(const Options& opt, const std::string& structure_path, const std::string& formula,
             const std::string& lang_name, std::ostream& out) {
  Structure s = load_structure(slurp(structure_path));
  Lang lang = lang_name == "auto" ? detect_lang(formula) : lang_from_name(lang_name);
  AnyFormula f = parse_formula(formula, lang);
  CheckResult r = check(s, f);
  if (opt.json()) {
    out << json{{"holds", r.verdict}, {"trace", trace_json(r)}}.dump(2) << '\n';
  } else {
    out << (r.verdict ? "true" : "false") << '\n';
    for (const auto& e : r.trace)
      out << "  [" << e.basic << "] lhs = " << rat_string(e.lhs)
          << (e.holds ? "  holds" : "  fails") << '\n';
  }
  return r.verdict ? 0 : 1;
}

ExpPtr expectation_input(const std::string& text) {
  Lang lang = detect_lang(text);
  if (lang == Lang::likelihood) return to_expectation(parse_likelihood(text));
  return parse_expectation(text);
}

int do_sat(const Options& opt, const std::string& semantics, const std::string& formula,
           std::ostream& out) {
  IntegerFormula f(expectation_input(formula));
  SatVerdict v = satisfiable(f, semantics_from_name(semantics), opt.budget);
  if (opt.json()) {
    json doc{{"verdict", v.sat ? "sat" : "unsat"}, {"stats", stats_json(v.stats)}};
    if (v.certificate) doc["certificate"] = json::parse(save_structure(*v.certificate));
    out << doc.dump(2) << '\n';
  } else {
    out << (v.sat ? "SAT" : "UNSAT") << '\n';
    if (v.certificate) out << save_structure(*v.certificate) << '\n';
  }
  return v.sat ? 0 : 1;
}

int do_valid(const Options& opt, const std::string& semantics, const std::string& formula,
             std::ostream& out) {
  IntegerFormula f(expectation_input(formula));
  ValidVerdict v = valid(f, semantics_from_name(semantics), opt.budget);
  if (opt.json()) {
    json doc{{"verdict", v.valid ? "valid" : "countermodel"}, {"stats", stats_json(v.stats)}};
    if (v.countermodel) doc["countermodel"] = json::parse(save_structure(*v.countermodel));
    out << doc.dump(2) << '\n';
  } else {
    out << (v.valid ? "valid" : "countermodel") << '\n';
    if (v.countermodel) out << save_structure(*v.countermodel) << '\n';
  }
  return v.valid ? 0 : 1;
}

int do_entail(const Options& opt, const std::vector<std::string>& assumptions,
              const std::string& gamble_text, std::ostream& out) {
  std::vector<ExpBasic> basics;
  for (const auto& text : assumptions) {
    auto more = assumption_list(parse_expectation(text));
    basics.insert(basics.end(), more.begin(), more.end());
  }
  Gamble g0 = parse_gamble(gamble_text);
  EntailResult r = infer_lower_bound(basics, g0, opt.budget);
  if (r.status == EntailResult::Status::inconsistent) {
    if (opt.json())
      out << json{{"verdict", "inconsistent"}}.dump(2) << '\n';
    else
      out << "inconsistent assumptions\n";
    return 1;
  }
  if (opt.json()) {
    json doc{{"verdict", "bound"}, {"bound", rat_string(r.bound)}};
    if (r.witness) doc["witness"] = json::parse(save_structure(*r.witness));
    out << doc.dump(2) << '\n';
  } else {
    out << rat_string(r.bound) << '\n';
  }
  return 0;
}

int do_translate(const Options& opt, const std::string& semantics, const std::string& formula,
                 std::ostream& out) {
  ExpPtr f = parse_expectation(formula);
  TranslationReport r = translate(f, semantics_from_name(semantics), opt.atom_cap);
  if (opt.json()) {
    out << json{{"formula", to_text(r.output)},
                {"input_size", r.input_size},
                {"output_size", r.output_size},
                {"blowup", r.blowup}}
               .dump(2)
        << '\n';
  } else {
    out << to_text(r.output) << '\n';
  }
  return 0;
}

int do_prove_check(const Options& opt, const std::string& system, const std::string& path,
                   std::ostream& out) {
  Derivation d = load_derivation(slurp(path));
  if (d.system != system)
    throw Error("derivation file declares system '" + d.system + "', not '" + system + "'");
  ProofOutcome r = check_proof(d);
  if (opt.json()) {
    json doc{{"accepted", r.accepted}};
    if (!r.accepted) {
      doc["line"] = r.line;
      doc["reason"] = r.reason;
    }
    out << doc.dump(2) << '\n';
  } else if (r.accepted) {
    out << "accepted\n";
  } else {
    out << "rejected at line " << r.line << ": " << r.reason << '\n';
  }
  return r.accepted ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"reasoning about expectation over probability, credal sets, belief and possibility"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--atom-cap", opt.atom_cap, "max propositions per atom enumeration");
  app.add_option("--max-props", opt.budget.max_props, "decision budget: propositions");
  app.add_option("--max-terms", opt.budget.max_terms, "decision budget: distinct e-terms");
  app.add_option("--max-branches", opt.budget.max_branches, "decision budget: branches");

  std::string lang = "expectation", text, structure, mode = "lower", semantics = "prob",
              system = "axprob", path;
  std::vector<std::string> assumptions;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a formula and print its canonical form");
  parse_cmd->add_option("--lang", lang, "prop|gamble|expectation|likelihood|gamble-ineq");
  parse_cmd->add_option("text", text, "formula text")->required();

  CLI::App* expect_cmd = app.add_subcommand("expect", "expectation of a gamble in a structure");
  expect_cmd->add_option("--structure", structure, "structure file")->required();
  expect_cmd->add_option("--gamble", text, "gamble text")->required();
  expect_cmd->add_option("--mode", mode, "lower|upper")->check(CLI::IsMember({"lower", "upper"}));

  CLI::App* check_cmd = app.add_subcommand("check", "model-check a formula against a structure");
  check_cmd->add_option("--structure", structure, "structure file")->required();
  check_cmd->add_option("--formula", text, "formula text")->required();
  std::string check_lang = "auto";
  check_cmd->add_option("--lang", check_lang, "expectation|likelihood|gamble-ineq|auto");

  CLI::App* sat_cmd = app.add_subcommand("sat", "decide satisfiability");
  sat_cmd->add_option("--semantics", semantics, "prob|lp|bel|poss")->required();
  sat_cmd->add_option("text", text, "expectation (or likelihood) formula")->required();

  CLI::App* valid_cmd = app.add_subcommand("valid", "decide validity");
  valid_cmd->add_option("--semantics", semantics, "prob|lp|bel|poss")->required();
  valid_cmd->add_option("text", text, "expectation (or likelihood) formula")->required();

  CLI::App* entail_cmd =
      app.add_subcommand("entail", "tightest entailed lower bound on an expectation");
  entail_cmd->add_option("--assume", assumptions, "basic inequality (repeatable)");
  entail_cmd->add_option("--gamble", text, "goal gamble")->required();

  CLI::App* translate_cmd = app.add_subcommand("translate", "rewrite into a likelihood formula");
  translate_cmd->add_option("--semantics", semantics, "prob|bel|poss")->required();
  translate_cmd->add_option("text", text, "expectation formula")->required();

  CLI::App* prove_cmd = app.add_subcommand("prove-check", "check a derivation file");
  prove_cmd->add_option("--system", system, "axprob|axlp|axbel|axposs|axg")->required();
  prove_cmd->add_option("file", path, "derivation file")->required();

  std::vector<std::string> argv = args;
  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (parse_cmd->parsed()) return do_parse(opt, lang, text, out);
    if (expect_cmd->parsed()) return do_expect(opt, structure, text, mode, out);
    if (check_cmd->parsed()) return do_check(opt, structure, text, check_lang, out);
    if (sat_cmd->parsed()) return do_sat(opt, semantics, text, out);
    if (valid_cmd->parsed()) return do_valid(opt, semantics, text, out);
    if (entail_cmd->parsed()) return do_entail(opt, assumptions, text, out);
    if (translate_cmd->parsed()) return do_translate(opt, semantics, text, out);
    if (prove_cmd->parsed()) return do_prove_check(opt, system, path, out);
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace exlog
