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

#include "prefent/klm.hpp"

#include <algorithm>
#include <unordered_set>

#include "prefent/formula.hpp"
#include "model_text.hpp"

namespace prefent {

KlmModel::KlmModel(Vocab vocab, std::vector<std::string> states,
                   std::vector<Theory> labels, PrefPairs pref)
    : vocab_(std::move(vocab)),
      states_(std::move(states)),
      labels_(std::move(labels)),
      pref_(std::move(pref)) {
  if (states_.empty()) throw Error("a model needs at least one state");
  if (labels_.size() != states_.size())
    throw Error("labelling must be total: " + std::to_string(labels_.size()) +
                " labels for " + std::to_string(states_.size()) + " states");
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

std::optional<StateIndex> KlmModel::state_index(std::string_view name) const
    noexcept {
  for (StateIndex i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return i;
  return std::nullopt;
}

StateIndex KlmModel::require_state(std::string_view name) const {
  if (auto i = state_index(name)) return *i;
  throw UnknownStateError(std::string(name));
}

bool KlmModel::pref_irreflexive() const {
  for (StateIndex s = 0; s < state_count(); ++s)
    if (prefers(s, s)) return false;
  return true;
}

bool KlmModel::pref_transitive() const {
  for (auto [a, b] : pref_)
    for (StateIndex c = 0; c < state_count(); ++c)
      if (prefers(b, c) && !prefers(a, c)) return false;
  return true;
}

bool KlmModel::operator==(const KlmModel& other) const {
  return vocab_ == other.vocab_ && states_ == other.states_ &&
         labels_ == other.labels_ && pref_ == other.pref_;
}

bool klm_sat(const KlmModel& m, StateIndex s, const Theory& t) {
  if (s >= m.state_count()) throw UnknownStateError(std::to_string(s));
  return mask_subset(m.label(s).models(), t.models());
}

std::vector<StateIndex> klm_states_of(const KlmModel& m, const Theory& t) {
  std::vector<StateIndex> out;
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (klm_sat(m, s, t)) out.push_back(s);
  return out;
}

std::vector<StateIndex> klm_minimal(const KlmModel& m, const Theory& t) {
  std::vector<StateIndex> sat = klm_states_of(m, t);
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

Theory klm_entail(const KlmModel& m, const Theory& t) {
  Mask models = 0;
  for (StateIndex s : klm_minimal(m, t)) models |= m.label(s).models();
  return Theory(models);
}

std::string canonical_theory_name(const Theory& t, const Vocab& v) {
  return "T" + to_bitstring(t.models(), v);
}

KlmKind classify(const KlmModel& m, std::uint64_t cap) {
  KlmKind kind;
  const Vocab& v = m.vocab();

  kind.consistent_states = true;
  kind.singular = true;
  for (StateIndex s = 0; s < m.state_count(); ++s) {
    if (m.label(s).is_inconsistent()) kind.consistent_states = false;
    if (!m.label(s).is_complete()) kind.singular = false;
  }

  // Simplified: the states are exactly the canonical names of all theories
  // and each label is its named theory (l = identity under the naming
  // convention). Distinct labels with a full count make l a bijection.
  if (m.state_count() == v.class_count()) {
    kind.simplified = true;
    std::unordered_set<Mask> labels;
    for (StateIndex s = 0; s < m.state_count(); ++s) {
      if (m.state_name(s) != canonical_theory_name(m.label(s), v) ||
          !labels.insert(m.label(s).models()).second) {
        kind.simplified = false;
        break;
      }
    }
  }

  // Strictly singular, complete-theory reading: states are exactly the
  // canonical names of the complete theories, identity labelling.
  if (m.state_count() == v.interp_count()) {
    kind.strictly_singular = true;
    std::unordered_set<Mask> labels;
    for (StateIndex s = 0; s < m.state_count(); ++s) {
      if (!m.label(s).is_complete() ||
          m.state_name(s) != canonical_theory_name(m.label(s), v) ||
          !labels.insert(m.label(s).models()).second) {
        kind.strictly_singular = false;
        break;
      }
    }
  }

  // Smoothness quantifies over every theory of the vocabulary; exact since
  // satisfaction only sees the premise theory's models.
  if (v.class_count() > cap)
    throw SizeGuardError("smoothness sweep spans " +
                         std::to_string(v.class_count()) +
                         " theories, above the cap " + std::to_string(cap));
  kind.smooth = true;
  for (std::uint64_t tm = 0; tm < v.class_count() && kind.smooth; ++tm) {
    Theory t(static_cast<Mask>(tm));
    std::vector<StateIndex> sat = klm_states_of(m, t);
    std::vector<StateIndex> minimal = klm_minimal(m, t);
    for (StateIndex s : sat) {
      if (std::find(minimal.begin(), minimal.end(), s) != minimal.end())
        continue;
      bool minorated = false;
      for (StateIndex w : minimal) {
        if (m.prefers(w, s)) {
          minorated = true;
          break;
        }
      }
      if (!minorated) {
        kind.smooth = false;
        break;
      }
    }
  }
  return kind;
}

KlmKind classify(const KlmModel& m) { return classify(m, default_size_cap()); }

KlmModel parse_klm(std::string_view text) {
  std::optional<Vocab> vocab;
  std::vector<std::string> states;
  std::vector<Theory> labels;
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
      if (sp == std::string_view::npos) fail("expected: state NAME theory ...");
      std::string name(rest.substr(0, sp));
      rest = detail::trim(rest.substr(sp));
      if (rest.substr(0, 6) != "theory") fail("expected 'theory' after the state name");
      rest = detail::trim(rest.substr(6));
      Mask models;
      if (rest == "L") {
        models = 0;
      } else {
        models = vocab->full_mask();
        for (const std::string& f : detail::quoted_list(rest, line.number))
          models &= sem(*parse_formula(f, *vocab), *vocab).models();
      }
      states.push_back(std::move(name));
      labels.push_back(Theory(models));
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
  return KlmModel(*vocab, std::move(states), std::move(labels),
                  std::move(pref));
}

std::string serialize_klm(const KlmModel& m) {
  std::string out = "vocab";
  for (const auto& s : m.vocab().symbols()) out += " " + s;
  out += "\n";
  for (StateIndex s = 0; s < m.state_count(); ++s) {
    out += "state " + m.state_name(s) + " theory ";
    if (m.label(s).is_inconsistent())
      out += "L";
    else
      out += "\"" + mask_to_formula(m.label(s).models(), m.vocab()) + "\"";
    out += "\n";
  }
  for (auto [a, b] : m.pref())
    out += "pref " + m.state_name(a) + " " + m.state_name(b) + "\n";
  return out;
}

}  // namespace prefent
