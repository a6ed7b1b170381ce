// Copyright 2026 The prefent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prefent/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prefent/campaign.hpp"
#include "prefent/checks.hpp"
#include "prefent/formula.hpp"
#include "prefent/translate.hpp"
#include "model_text.hpp"

namespace prefent {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

enum class ModelKind { Klm, Mak };

ModelKind detect_kind(const std::string& text) {
  for (const detail::Line& line : detail::content_lines(text)) {
    if (line.text.rfind("state ", 0) != 0) continue;
    if (line.text.find(" theory") != std::string::npos) return ModelKind::Klm;
    if (line.text.find(" sat") != std::string::npos) return ModelKind::Mak;
  }
  throw Error("cannot tell KLM from MAK format: no state directive found");
}

std::vector<std::string> split_premises(const std::string& premises) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= premises.size()) {
    std::size_t end = premises.find(';', pos);
    if (end == std::string::npos) end = premises.size();
    std::string_view part =
        detail::trim(std::string_view(premises).substr(pos, end - pos));
    if (!part.empty()) out.emplace_back(part);
    pos = end + 1;
  }
  return out;
}

std::string render_mak_set(const FormulaSet& fs, const Vocab& v) {
  if (fs.is_everything()) return "ALL";
  std::string out = "{";
  bool first = true;
  fs.for_each([&](Mask c) {
    if (!first) out += "; ";
    out += mask_to_formula(c, v);
    first = false;
  });
  out += "}";
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int run_entail(const std::string& model_path, bool as_klm, bool as_mak,
               const std::string& premises, std::ostream& out) {
  std::string text = read_file(model_path);
  ModelKind kind = as_klm   ? ModelKind::Klm
                   : as_mak ? ModelKind::Mak
                            : detect_kind(text);
  if (kind == ModelKind::Klm) {
    KlmModel m = parse_klm(text);
    FormulaSet classes = FormulaSet::empty(m.vocab());
    for (const std::string& f : split_premises(premises))
      classes.insert(sem(*parse_formula(f, m.vocab()), m.vocab()));
    Theory conclusion = klm_entail(m, closure(classes, m.vocab()));
    out << "Th(" << mask_to_formula(conclusion.models(), m.vocab()) << ")\n";
  } else {
    MakModel m = parse_mak(text);
    FormulaSet x = FormulaSet::empty(m.vocab());
    for (const std::string& f : split_premises(premises))
      x.insert(sem(*parse_formula(f, m.vocab()), m.vocab()));
    out << render_mak_set(mak_entail(m, x), m.vocab()) << "\n";
  }
  return 0;
}

int run_check(const std::string& model_path, const std::string& property,
              const std::string& entailment, const CheckOptions& opt,
              std::ostream& out) {
  std::string text = read_file(model_path);
  ModelKind kind = detect_kind(text);

  EntailOracle oracle = [&]() {
    if (kind == ModelKind::Klm) return EntailOracle::from_klm(parse_klm(text));
    MakModel m = parse_mak(text);
    std::string which = entailment;
    if (which == "auto")
      which = (property == "tarski" || property == "supra") ? "cn" : "pref";
    return which == "cn" ? EntailOracle::from_mak_cn(m)
                         : EntailOracle::from_mak(m);
  }();

  CheckReport report;
  if (property == "tarski")
    report = check_tarski(oracle, opt);
  else if (property == "ct")
    report = check_ct(oracle, opt);
  else if (property == "cm")
    report = check_cm(oracle, opt);
  else if (property == "precirc")
    report = check_precirc(oracle, opt);
  else if (property == "supra")
    report = check_supra_entail(oracle, opt);
  else
    throw Error("unknown property '" + property + "'");

  out << "oracle: " << oracle.name << "\n" << render_report(report);
  return report.verdict == Verdict::Fails ? 1 : 0;
}

int run_classify(const std::string& model_path, std::ostream& out) {
  std::string text = read_file(model_path);
  if (detect_kind(text) == ModelKind::Klm) {
    KlmModel m = parse_klm(text);
    KlmKind k = classify(m);
    out << "kind: klm\n";
    out << "consistentStates: " << bool_str(k.consistent_states) << "\n";
    out << "simplified: " << bool_str(k.simplified) << "\n";
    out << "singular: " << bool_str(k.singular) << "\n";
    out << "strictlySingular: " << bool_str(k.strictly_singular) << "\n";
    out << "smooth: " << bool_str(k.smooth) << "\n";
    out << "prefIrreflexive: " << bool_str(m.pref_irreflexive()) << "\n";
    out << "prefTransitive: " << bool_str(m.pref_transitive()) << "\n";
  } else {
    MakKind k = classify_mak(parse_mak(text));
    out << "kind: mak\n";
    out << "supraClassical: " << bool_str(k.supra_classical) << "\n";
    out << "classical: " << bool_str(k.classical) << "\n";
    out << "unicityOfStates: " << bool_str(k.unicity_of_states) << "\n";
    out << "rAnd: " << bool_str(k.r_and) << "\n";
    out << "rNeg: " << bool_str(k.r_neg) << "\n";
    out << "rOr: " << bool_str(k.r_or) << "\n";
  }
  return 0;
}

int run_translate(const std::string& model_path, const std::string& to,
                  const std::string& out_path, std::ostream& out) {
  std::string text = read_file(model_path);
  ModelKind kind = detect_kind(text);
  std::string result;
  if (to == "table") {
    result = kind == ModelKind::Klm
                 ? serialize_table(tabulate(parse_klm(text)))
                 : serialize_table(tabulate(parse_mak(text)));
  } else if (to == "mak") {
    if (kind == ModelKind::Mak)
      throw Error("the model is already in MAK form");
    result = serialize_mak(klm_to_mak(parse_klm(text)));
  } else if (to == "klm") {
    if (kind == ModelKind::Klm)
      throw Error("the model is already in KLM form");
    result = serialize_klm(mak_to_klm(parse_mak(text)));
  } else {
    throw Error("unknown target '" + to + "'");
  }
  write_output(out_path, result, out);
  return 0;
}

int run_construct(const std::string& table_path, bool ct_only,
                  const std::string& out_path, std::ostream& out) {
  PrecircTable table = parse_table(read_file(table_path));
  ConstructOptions opt;
  opt.allow_ct_only = ct_only;
  Construction built = precirc_to_simplified_klm(table, opt);
  std::string result = serialize_klm(built.model);
  if (ct_only) {
    result += "# validated: " + bool_str(built.report.validated) + "\n";
    if (built.report.mismatch_theory)
      result += "# mismatch-theory: " +
                to_bitstring(*built.report.mismatch_theory, table.vocab()) +
                "\n";
  }
  write_output(out_path, result, out);
  return 0;
}

int run_fuzz(const std::string& claim_name, std::uint64_t trials,
             const GenSpec& spec, const std::string& json_path,
             std::ostream& out, std::ostream& err) {
  std::optional<Claim> claim = claim_from_string(claim_name);
  if (!claim) throw Error("unknown claim '" + claim_name + "'");
  CampaignResult result;
  try {
    result = run_campaign(*claim, trials, spec);
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (json_path == "-")
    out << campaign_to_json(result);
  else
    out << render_campaign(result);
  if (!json_path.empty() && json_path != "-")
    write_output(json_path, campaign_to_json(result), out);
  return result.expected_outcome() ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"prefent: preferential entailment workbench"};
  app.require_subcommand(1);

  // entail
  auto* entail = app.add_subcommand(
      "entail", "Compute the preferential conclusions of a premise list");
  std::string model_path, premises;
  bool as_klm = false, as_mak = false;
  entail->add_option("--model", model_path, "model file")->required();
  entail->add_option("--premises", premises,
                     "semicolon-separated formula list");
  auto* klm_flag =
      entail->add_flag("--klm", as_klm, "treat the model as a KLM model");
  auto* mak_flag =
      entail->add_flag("--mak", as_mak, "treat the model as a MAK model");
  klm_flag->excludes(mak_flag);

  // check
  auto* check = app.add_subcommand("check",
                                   "Check a property of a model's entailment");
  std::string check_model, property, entailment = "auto";
  CheckOptions check_opt;
  bool sampled = false;
  check->add_option("--model", check_model, "model file")->required();
  check->add_option("--property", property,
                    "tarski | ct | cm | precirc | supra")
      ->required();
  check->add_option("--entailment", entailment,
                    "for MAK models: pref (C_MAK) | cn (Cn) | auto");
  check->add_option("--seed", check_opt.seed, "sampling seed");
  check->add_option("--premises", check_opt.premise_trials,
                    "sampled premise sets");
  check->add_option("--subsets", check_opt.subset_trials,
                    "sampled subsets per premise");
  check->add_option("--cap", check_opt.cap, "exhaustiveness cap");
  check->add_flag("--sampled", sampled, "skip the exhaustive tiers");

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "Print a model's classification flags");
  std::string classify_model;
  classify_cmd->add_option("--model", classify_model, "model file")
      ->required();

  // translate
  auto* translate =
      app.add_subcommand("translate", "Translate between model families");
  std::string trans_model, trans_to, trans_out;
  translate->add_option("--model", trans_model, "model file")->required();
  translate->add_option("--to", trans_to, "klm | mak | table")->required();
  translate->add_option("--out", trans_out, "output file (default stdout)");

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Build the simplified KLM model of a cumulative table");
  std::string table_path, construct_out;
  bool ct_only = false;
  construct->add_option("--table", table_path, "table file")->required();
  construct->add_flag("--ct-only", ct_only,
                      "run on (CT)-only tables and report validation");
  construct->add_option("--out", construct_out, "output file");

  // fuzz
  auto* fuzz = app.add_subcommand(
      "fuzz", "Run a claim verification campaign or counterexample search");
  std::string claim_name, json_path;
  std::uint64_t trials = 1000;
  GenSpec spec;
  fuzz->add_option("--claim", claim_name, "claim id (e.g. P3.6, NONMONO)")
      ->required();
  fuzz->add_option("--trials", trials, "trial budget");
  fuzz->add_option("--seed", spec.seed, "campaign seed");
  fuzz->add_option("--vocab", spec.vocab_size, "vocabulary size");
  fuzz->add_option("--min-states", spec.min_states, "minimum state count");
  fuzz->add_option("--max-states", spec.max_states, "maximum state count");
  fuzz->add_option("--density", spec.pref_density,
                   "preference edge probability");
  fuzz->add_option("--json", json_path,
                   "write the machine-readable report here ('-' = stdout)");

  std::vector<const char*> argv;
  argv.push_back("prefent");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    for (const CLI::App* sub : app.get_subcommands()) {
      out << sub->help();
      return 0;
    }
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*entail) return run_entail(model_path, as_klm, as_mak, premises, out);
    if (*check) {
      check_opt.force_sampled = sampled;
      return run_check(check_model, property, entailment, check_opt, out);
    }
    if (*classify_cmd) return run_classify(classify_model, out);
    if (*translate)
      return run_translate(trans_model, trans_to, trans_out, out);
    if (*construct)
      return run_construct(table_path, ct_only, construct_out, out);
    if (*fuzz) return run_fuzz(claim_name, trials, spec, json_path, out, err);
  } catch (const NotSupraClassicalError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotCumulativeError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace prefent
