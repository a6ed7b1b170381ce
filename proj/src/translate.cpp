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

#include "prefent/translate.hpp"

#include <algorithm>

#include "prefent/checks.hpp"
#include "model_text.hpp"

namespace prefent {

PrecircTable::PrecircTable(Vocab vocab, std::vector<Mask> map)
    : vocab_(std::move(vocab)), map_(std::move(map)) {
  if (map_.size() != vocab_.class_count())
    throw Error("table must map every theory: expected " +
                std::to_string(vocab_.class_count()) + " entries, got " +
                std::to_string(map_.size()));
  for (std::uint64_t t = 0; t < map_.size(); ++t) {
    if (map_[t] > vocab_.full_mask())
      throw Error("table entry " + std::to_string(t) +
                  " is not a theory of this vocabulary");
    if (!mask_subset(map_[t], static_cast<Mask>(t)))
      throw Error("table is not extensive at theory " +
                  to_bitstring(static_cast<Mask>(t), vocab_) + ": maps to " +
                  to_bitstring(map_[t], vocab_));
  }
}

namespace {

void guard_theories(const Vocab& v, std::uint64_t cap) {
  if (v.class_count() > cap)
    throw SizeGuardError("tabulation spans " +
                         std::to_string(v.class_count()) +
                         " theories, above the cap " + std::to_string(cap));
}

void require_supra(const MakModel& m, const std::string& operation) {
  if (auto violation = find_supra_violation(m)) {
    const Vocab& v = m.vocab();
    Theory closed = closure(m.sat(violation->state), v);
    std::string side = m.sat(violation->state).contains(
                           SemFormula(violation->witness_class))
                           ? "contains the unentailed"
                           : "misses the entailed";
    throw NotSupraClassicalError(
        operation + " requires a supra classical model, but state '" +
            m.state_name(violation->state) + "' " + side + " class " +
            to_bitstring(violation->witness_class, v) + " (closure " +
            to_bitstring(closed.models(), v) + ")",
        m.state_name(violation->state), violation->witness_class);
  }
}

}  // namespace

MakModel klm_to_mak(const KlmModel& m) {
  std::vector<FormulaSet> sat;
  sat.reserve(m.state_count());
  for (StateIndex s = 0; s < m.state_count(); ++s)
    sat.push_back(FormulaSet::entailed_by(m.label(s), m.vocab()));
  return MakModel(m.vocab(), m.state_names(), std::move(sat), m.pref());
}

KlmModel mak_to_klm(const MakModel& m) {
  require_supra(m, "the MAK-to-KLM passage");
  std::vector<Theory> labels;
  labels.reserve(m.state_count());
  for (StateIndex s = 0; s < m.state_count(); ++s)
    labels.push_back(closure(m.sat(s), m.vocab()));
  return KlmModel(m.vocab(), m.state_names(), std::move(labels), m.pref());
}

PrecircTable tabulate(const KlmModel& m, std::uint64_t cap) {
  guard_theories(m.vocab(), cap);
  std::vector<Mask> map(m.vocab().class_count());
  for (std::uint64_t t = 0; t < map.size(); ++t)
    map[t] = klm_entail(m, Theory(static_cast<Mask>(t))).models();
  return PrecircTable(m.vocab(), std::move(map));
}

PrecircTable tabulate(const MakModel& m, std::uint64_t cap) {
  guard_theories(m.vocab(), cap);
  require_supra(m, "tabulation");
  // For a supra classical model the states behave exactly like KLM states
  // labelled with the closures, so tabulate that model.
  return tabulate(mak_to_klm(m), cap);
}

PrecircTable tabulate(const KlmModel& m) {
  return tabulate(m, default_size_cap());
}
PrecircTable tabulate(const MakModel& m) {
  return tabulate(m, default_size_cap());
}

Construction precirc_to_simplified_klm(const PrecircTable& f,
                                       const ConstructOptions& options) {
  const Vocab& v = f.vocab();
  std::uint64_t cap = options.cap ? options.cap : default_size_cap();
  guard_theories(v, cap);
  const std::uint64_t theories = f.theory_count();

  EntailOracle oracle = EntailOracle::from_table(f);
  CheckOptions check_opt;
  check_opt.cap = cap;
  CheckReport ct = check_ct(oracle, check_opt);
  if (ct.verdict == Verdict::Fails)
    throw NotCumulativeError(
        "table violates (CT); first witness: " + render_report(ct), "CT");
  CheckReport cm = check_cm(oracle, check_opt);
  bool cumulative = cm.verdict != Verdict::Fails;
  if (!cumulative && !options.allow_ct_only)
    throw NotCumulativeError(
        "table violates (CM); first witness: " + render_report(cm), "CM");

  // States: every theory under its canonical name, identity labelling.
  std::vector<std::string> names;
  std::vector<Theory> labels;
  names.reserve(theories);
  labels.reserve(theories);
  for (std::uint64_t t = 0; t < theories; ++t) {
    Theory theory(static_cast<Mask>(t));
    names.push_back(canonical_theory_name(theory, v));
    labels.push_back(theory);
  }

  // Preimages f^-1(T), and the range of f for rule (2a).
  std::vector<std::vector<Mask>> preimages(theories);
  for (std::uint64_t t = 0; t < theories; ++t)
    preimages[f.apply_mask(static_cast<Mask>(t))].push_back(
        static_cast<Mask>(t));

  PrefPairs pref;
  for (std::uint64_t t1 = 0; t1 < theories; ++t1) {
    for (std::uint64_t t2 = 0; t2 < theories; ++t2) {
      bool edge = false;
      if (t1 == 0 && preimages[t2].empty()) edge = true;  // (2a)
      if (!edge && t2 != 0 && t2 != t1 && !preimages[t2].empty()) {  // (2b)
        for (Mask t3 : preimages[t1]) {
          // T3 ⊆ T2 as formula sets: M(T2) ⊆ M(T3).
          if (mask_subset(static_cast<Mask>(t2), t3)) {
            edge = true;
            break;
          }
        }
      }
      if (edge)
        pref.emplace_back(static_cast<StateIndex>(t1),
                          static_cast<StateIndex>(t2));
    }
  }

  KlmModel model(v, std::move(names), std::move(labels), std::move(pref));

  Construction result{std::move(model),
                      TranslationReport{"precirc-table", "klm-simplified",
                                        true, std::nullopt}};
  PrecircTable back = tabulate(result.model, cap);
  for (std::uint64_t t = 0; t < theories; ++t) {
    if (back.apply_mask(static_cast<Mask>(t)) !=
        f.apply_mask(static_cast<Mask>(t))) {
      result.report.validated = false;
      result.report.mismatch_theory = static_cast<Mask>(t);
      break;
    }
  }
  if (!result.report.validated && cumulative && !options.allow_ct_only)
    throw ValidationError(
        "constructed model does not tabulate back to the input table at "
        "theory " +
        to_bitstring(*result.report.mismatch_theory, v));
  return result;
}

PrecircTable parse_table(std::string_view text) {
  std::optional<Vocab> vocab;
  std::vector<std::optional<Mask>> map;

  for (const detail::Line& line : detail::content_lines(text)) {
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("line " + std::to_string(line.number) + ": " + what, 0);
    };
    auto words = detail::split_words(line.text);
    if (words[0] == "vocab") {
      if (vocab) fail("duplicate vocab directive");
      vocab.emplace(std::vector<std::string>(words.begin() + 1, words.end()));
      map.assign(vocab->class_count(), std::nullopt);
    } else if (words[0] == "map") {
      if (!vocab) fail("vocab must come first");
      if (words.size() != 4 || words[2] != "->")
        fail("expected: map FROM -> TO");
      Mask from = mask_from_bitstring(words[1], *vocab);
      Mask to = mask_from_bitstring(words[3], *vocab);
      if (map[from].has_value())
        fail("duplicate entry for theory " + words[1]);
      map[from] = to;
    } else {
      fail("unknown directive '" + words[0] + "'");
    }
  }
  if (!vocab) throw ParseError("missing vocab directive", 0);
  std::vector<Mask> entries(map.size());
  for (std::uint64_t t = 0; t < map.size(); ++t) {
    if (!map[t])
      throw ParseError("missing entry for theory " +
                           to_bitstring(static_cast<Mask>(t), *vocab),
                       0);
    entries[t] = *map[t];
  }
  return PrecircTable(*vocab, std::move(entries));
}

std::string serialize_table(const PrecircTable& f) {
  const Vocab& v = f.vocab();
  std::string out = "vocab";
  for (const auto& s : v.symbols()) out += " " + s;
  out += "\n";
  for (std::uint64_t t = 0; t < f.theory_count(); ++t)
    out += "map " + to_bitstring(static_cast<Mask>(t), v) + " -> " +
           to_bitstring(f.apply_mask(static_cast<Mask>(t)), v) + "\n";
  return out;
}

}  // namespace prefent
