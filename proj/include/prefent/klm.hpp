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
//
// KLM models: labelled states plus an arbitrary preference relation. The
// preference relation carries no constraint at all (no irreflexivity,
// transitivity or well-foundedness); cycles and reflexive edges are
// legitimate and are exactly the stress cases for minimality. Labels are
// theories; the inconsistent label is allowed.

#ifndef PREFENT_KLM_HPP_
#define PREFENT_KLM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefent/logic.hpp"

namespace prefent {

using StateIndex = std::uint32_t;
using PrefPairs = std::vector<std::pair<StateIndex, StateIndex>>;

/// Structural classification flags for a KLM model (all descriptive; none
/// is an admission condition).
struct KlmKind {
  bool consistent_states = false;
  bool simplified = false;
  bool singular = false;
  bool strictly_singular = false;
  bool smooth = false;
};

class KlmModel {
 public:
  /// States must be unique non-empty tokens; labels parallel to states;
  /// pref pairs are (smaller, larger) meaning first ≺ second, indices into
  /// the state list. Duplicate pairs collapse.
  KlmModel(Vocab vocab, std::vector<std::string> states,
           std::vector<Theory> labels, PrefPairs pref);

  const Vocab& vocab() const noexcept { return vocab_; }
  std::uint32_t state_count() const noexcept {
    return static_cast<std::uint32_t>(states_.size());
  }
  const std::string& state_name(StateIndex s) const { return states_.at(s); }
  const std::vector<std::string>& state_names() const noexcept {
    return states_;
  }
  std::optional<StateIndex> state_index(std::string_view name) const noexcept;
  /// Resolves a state name, raising UnknownStateError if absent.
  StateIndex require_state(std::string_view name) const;

  const Theory& label(StateIndex s) const { return labels_.at(s); }

  /// a ≺ b?
  bool prefers(StateIndex a, StateIndex b) const {
    return pref_matrix_[static_cast<std::size_t>(a) * states_.size() + b] != 0;
  }
  /// The relation as ordered pairs, canonically sorted.
  const PrefPairs& pref() const noexcept { return pref_; }

  bool pref_irreflexive() const;
  bool pref_transitive() const;

  bool operator==(const KlmModel& other) const;

 private:
  Vocab vocab_;
  std::vector<std::string> states_;
  std::vector<Theory> labels_;
  PrefPairs pref_;
  std::vector<std::uint8_t> pref_matrix_;
};

/// s satisfies t iff the label's models are all models of t.
bool klm_sat(const KlmModel& m, StateIndex s, const Theory& t);

/// S(T): the states satisfying t, ascending.
std::vector<StateIndex> klm_states_of(const KlmModel& m, const Theory& t);

/// S_≺(T): members of S(T) with no ≺-smaller member of S(T). Minimality is
/// relative to S(T), not to the full state set.
std::vector<StateIndex> klm_minimal(const KlmModel& m, const Theory& t);

/// The KLM preferential entailment at t: the theory whose models are the
/// union of the minimal satisfying states' label models. When no state
/// qualifies the result is the inconsistent theory L.
Theory klm_entail(const KlmModel& m, const Theory& t);

/// Canonical state name of a theory: "T" + characteristic bitstring. The
/// simplified/strictly-singular classifications compare against this naming
/// convention, since "l = identity" is only meaningful under one.
std::string canonical_theory_name(const Theory& t, const Vocab& v);

/// Computes every flag. Smoothness quantifies over all theories of the
/// vocabulary (exact, since satisfaction depends only on the premise
/// theory); raises SizeGuardError when the theory space exceeds `cap`.
///
/// strictly_singular uses the complete-theory reading: states are exactly
/// the canonical names of the complete theories with identity labelling.
/// (The literal "simplified and singular" conjunction is unsatisfiable:
/// a simplified model labels some state with an incomplete theory.)
KlmKind classify(const KlmModel& m, std::uint64_t cap);
KlmKind classify(const KlmModel& m);

/// Model text format, one directive per line; '#' starts a comment.
///
///   vocab p q
///   state s1 theory "p & q"      (several formulas conjoin: "p", "q")
///   state s2 theory L            (the inconsistent label)
///   pref s1 s2                   (s1 ≺ s2)
KlmModel parse_klm(std::string_view text);
std::string serialize_klm(const KlmModel& m);

}  // namespace prefent

#endif  // PREFENT_KLM_HPP_
