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

#include "prefent/mak.hpp"

#include <algorithm>
#include <unordered_set>

#include "prefent/formula.hpp"
#include "model_text.hpp"

namespace prefent {

MakModel::MakModel(Vocab vocab, std::vector<std::string> states,
                   std::vector<FormulaSet> sat, PrefPairs pref)
    : vocab_(std::move(vocab)),
      states_(std::move(states)),
      sat_(std::move(sat)),
      pref_(std::move(pref)) {
  if (states_.empty()) throw Error("a model needs at least one state");
  if (sat_.size() != states_.size())
    throw Error("satisfaction must be total: " + std::to_string(sat_.size()) +
                " sets for " + std::to_string(states_.size()) + " states");
  for (const FormulaSet& fs : sat_)
    if (fs.class_count() != vocab_.class_count())
      throw Error("satisfied-formula set built over a different vocabulary");
  std::unordered_set<std::string_view> seen;
  for (const auto& s : states_) {
    if (!detail::is_state_token(s)) throw Error("invalid state name '" + s + "'");
    if (!seen.insert(s).second) throw Error("duplicate state '" + s + "'");
  }
  for (auto [a, b] : pref_)
    if (a >= states_.size() || b >= states_.size())
      throw Error("preference pair out of range");
  std::sort(pref_.begin(), pref_.end());
  pref_.erase(std::unique(pref_.begin(), pref_.end()), pref_.end());
  pref_matrix_.assign(states_.size() * states_.size(), 0);
  for (auto [a, b] : pref_)
    pref_matrix_[static_cast<std::size_t>(a) * states_.size() + b] = 1;
}

std::optional<StateIndex> MakModel::state_index(std::string_view name) const
    noexcept {
  for (StateIndex i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return i;
  return std::nullopt;
}

StateIndex MakModel::require_state(std::string_view name) const {
  if (auto i = state_index(name)) return *i;
  throw UnknownStateError(std::string(name));
}

bool MakModel::operator==(const MakModel& other) const {
  return vocab_ == other.vocab_ && states_ == other.states_ &&
         sat_ == other.sat_ && pref_ == other.pref_;
}

bool mak_sat(const MakModel& m, StateIndex s, const FormulaSet& x) {
  if (s >= m.state_count()) throw UnknownStateError(std::to_string(s));
  return x.subset_of(m.sat(s));
}

bool mak_minsat(const MakModel& m, StateIndex s, const FormulaSet& x) {
  if (!mak_sat(m, s, x)) return false;
  for (StateIndex other = 0; other < m.state_count(); ++other)
    if (m.prefers(other, s) && mak_sat(m, other, x)) return false;
  return true;
}

const FormulaSet& cn_state(const MakModel& m, StateIndex s) {
  if (s >= m.state_count()) throw UnknownStateError(std::to_string(s));
  return m.sat(s);
}

std::vector<StateIndex> mak_states_of(const MakModel& m, const FormulaSet& x) {
  std::vector<StateIndex> out;
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (mak_sat(m, s, x)) out.push_back(s);
  return out;
}

std::vector<StateIndex> mak_minimal(const MakModel& m, const FormulaSet& x) {
  std::vector<StateIndex> sat = mak_states_of(m, x);
  std::vector<StateIndex> out;
  for (StateIndex s : sat) {
    bool dominated = false;
    for (StateIndex other : sat) {
      if (m.prefers(other, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

namespace {

FormulaSet intersect_over(const MakModel& m,
                          const std::vector<StateIndex>& states) {
  if (states.empty()) return FormulaSet::everything(m.vocab());
  FormulaSet out = m.sat(states.front());
  for (std::size_t i = 1; i < states.size(); ++i)
    out.intersect_with(m.sat(states[i]));
  return out;
}

}  // namespace

FormulaSet cn_entail(const MakModel& m, const FormulaSet& x) {
  return intersect_over(m, mak_states_of(m, x));
}

FormulaSet mak_entail(const MakModel& m, const FormulaSet& x) {
  return intersect_over(m, mak_minimal(m, x));
}

bool is_supra_classical(const MakModel& m) {
  return !find_supra_violation(m).has_value();
}

std::optional<SupraViolation> find_supra_violation(const MakModel& m) {
  for (StateIndex s = 0; s < m.state_count(); ++s) {
    FormulaSet expected =
        FormulaSet::entailed_by(closure(m.sat(s), m.vocab()), m.vocab());
    if (expected == m.sat(s)) continue;
    // Canonically least class in the symmetric difference.
    for (std::uint64_t c = 0; c < m.vocab().class_count(); ++c) {
      SemFormula f(static_cast<Mask>(c));
      if (expected.contains(f) != m.sat(s).contains(f))
        return SupraViolation{s, f.models()};
    }
  }
  return std::nullopt;
}

MakKind classify_mak(const MakModel& m, std::uint64_t cap) {
  MakKind kind;
  const Vocab& v = m.vocab();
  const std::uint64_t classes = v.class_count();

  kind.supra_classical = is_supra_classical(m);

  if (classes * classes > cap)
    throw SizeGuardError("connector sweeps span " +
                         std::to_string(classes * classes) +
                         " class pairs, above the cap " + std::to_string(cap));

  kind.r_and = true;
  kind.r_or = true;
  kind.r_neg = true;
  for (StateIndex s = 0; s < m.state_count(); ++s) {
    const FormulaSet& sat = m.sat(s);
    // Respecting conjunction covers the empty conjunction: the state must
    // satisfy the tautology class. Without it a state satisfying nothing
    // would respect every binary conjunction yet fail supra classicality.
    if (!sat.contains(SemFormula(v.full_mask()))) kind.r_and = false;
    for (std::uint64_t c = 0; c < classes; ++c) {
      SemFormula f(static_cast<Mask>(c));
      SemFormula nf(static_cast<Mask>(v.full_mask() & ~f.models()));
      if (sat.contains(f) == sat.contains(nf)) kind.r_neg = false;
    }
    for (std::uint64_t c1 = 0; c1 < classes && (kind.r_and || kind.r_or);
         ++c1) {
      SemFormula f1(static_cast<Mask>(c1));
      bool in1 = sat.contains(f1);
      for (std::uint64_t c2 = c1; c2 < classes; ++c2) {
        SemFormula f2(static_cast<Mask>(c2));
        bool in2 = sat.contains(f2);
        if (sat.contains(SemFormula(f1.models() & f2.models())) !=
            (in1 && in2))
          kind.r_and = false;
        if (sat.contains(SemFormula(f1.models() | f2.models())) !=
            (in1 || in2))
          kind.r_or = false;
        if (!kind.r_and && !kind.r_or) break;
      }
    }
  }

  kind.classical = kind.supra_classical && kind.r_neg;

  kind.unicity_of_states = true;
  for (StateIndex a = 0; a < m.state_count() && kind.unicity_of_states; ++a)
    for (StateIndex b = a + 1; b < m.state_count(); ++b)
      if (m.sat(a) == m.sat(b)) {
        kind.unicity_of_states = false;
        break;
      }
  return kind;
}

MakKind classify_mak(const MakModel& m) {
  return classify_mak(m, default_size_cap());
}

MakModel parse_mak(std::string_view text) {
  std::optional<Vocab> vocab;
  std::vector<std::string> states;
  std::vector<FormulaSet> sats;
  std::vector<std::pair<std::string, std::string>> pref_names;

  for (const detail::Line& line : detail::content_lines(text)) {
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("line " + std::to_string(line.number) + ": " + what, 0);
    };
    std::string_view rest(line.text);
    std::size_t sp = rest.find_first_of(" \t");
    std::string directive(rest.substr(0, sp));
    rest = sp == std::string_view::npos ? std::string_view{}
                                        : detail::trim(rest.substr(sp));

    if (directive == "vocab") {
      if (vocab) fail("duplicate vocab directive");
      vocab.emplace(detail::split_words(rest));
    } else if (directive == "state") {
      if (!vocab) fail("vocab must come first");
      sp = rest.find_first_of(" \t");
      std::string name(rest.substr(0, sp));
      rest = sp == std::string_view::npos ? std::string_view{}
                                          : detail::trim(rest.substr(sp));
      if (rest.substr(0, 3) != "sat") fail("expected 'sat' after the state name");
      rest = detail::trim(rest.substr(3));
      FormulaSet sat = FormulaSet::empty(*vocab);
      if (rest.substr(0, 7) == "closure") {
        Mask models = vocab->full_mask();
        std::string_view list = detail::trim(rest.substr(7));
        for (const std::string& f : detail::quoted_list(list, line.number))
          models &= sem(*parse_formula(f, *vocab), *vocab).models();
        sat = FormulaSet::entailed_by(Theory(models), *vocab);
      } else if (!rest.empty()) {
        for (const std::string& f : detail::quoted_list(rest, line.number))
          sat.insert(sem(*parse_formula(f, *vocab), *vocab));
      }
      states.push_back(std::move(name));
      sats.push_back(std::move(sat));
    } else if (directive == "pref") {
      auto words = detail::split_words(rest);
      if (words.size() != 2) fail("expected: pref A B");
      pref_names.emplace_back(words[0], words[1]);
    } else {
      fail("unknown directive '" + directive + "'");
    }
  }
  if (!vocab) throw ParseError("missing vocab directive", 0);

  auto resolve = [&](const std::string& name) -> StateIndex {
    for (StateIndex i = 0; i < states.size(); ++i)
      if (states[i] == name) return i;
    throw UnknownStateError(name);
  };
  PrefPairs pref;
  for (const auto& [a, b] : pref_names)
    pref.emplace_back(resolve(a), resolve(b));
  return MakModel(*vocab, std::move(states), std::move(sats),
                  std::move(pref));
}

std::string serialize_mak(const MakModel& m) {
  const Vocab& v = m.vocab();
  std::string out = "vocab";
  for (const auto& s : v.symbols()) out += " " + s;
  out += "\n";
  for (StateIndex s = 0; s < m.state_count(); ++s) {
    out += "state " + m.state_name(s) + " sat";
    const FormulaSet& sat = m.sat(s);
    Theory closed = closure(sat, v);
    if (!sat.is_empty() && sat == FormulaSet::entailed_by(closed, v)) {
      out += " closure \"" + mask_to_formula(closed.models(), v) + "\"";
    } else {
      bool first = true;
      sat.for_each([&](Mask c) {
        out += first ? " " : ", ";
        out += "\"" + mask_to_formula(c, v) + "\"";
        first = false;
      });
    }
    out += "\n";
  }
  for (auto [a, b] : m.pref())
    out += "pref " + m.state_name(a) + " " + m.state_name(b) + "\n";
  return out;
}

}  // namespace prefent
