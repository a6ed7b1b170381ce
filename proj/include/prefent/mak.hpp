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
// MAK models: states equipped with a completely unconstrained satisfaction
// relation, stored extensionally as one FormulaSet per state, plus a
// preference relation as in KLM models. Nothing forces a state's set to be
// deductively closed, so the induced entailments can conclude a conjunction
// without concluding its conjuncts.

#ifndef PREFENT_MAK_HPP_
#define PREFENT_MAK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefent/klm.hpp"
#include "prefent/logic.hpp"

namespace prefent {

/// Classification flags of Def-level structure. `classical` is the
/// conjunction supra_classical && r_neg; the r_* flags are computed by
/// direct quantification over class pairs, independently of the closure
/// test, so the equivalences (r_and <=> supra, etc.) stay checkable.
///
/// r_and reads "respects conjunction" over finite conjunctions including
/// the empty one, i.e. the state must also satisfy the tautology class;
/// restricted to binary pairs the equivalence with supra classicality
/// breaks on states satisfying no formula at all. These equivalences are
/// finite-vocabulary facts here; nothing is certified about infinite
/// languages, where the conjunction-to-closure step needs compactness.
struct MakKind {
  bool supra_classical = false;
  bool classical = false;
  bool unicity_of_states = false;
  bool r_and = false;
  bool r_neg = false;
  bool r_or = false;
};

class MakModel {
 public:
  MakModel(Vocab vocab, std::vector<std::string> states,
           std::vector<FormulaSet> sat, PrefPairs pref);

  const Vocab& vocab() const noexcept { return vocab_; }
  std::uint32_t state_count() const noexcept {
    return static_cast<std::uint32_t>(states_.size());
  }
  const std::string& state_name(StateIndex s) const { return states_.at(s); }
  const std::vector<std::string>& state_names() const noexcept {
    return states_;
  }
  std::optional<StateIndex> state_index(std::string_view name) const noexcept;
  StateIndex require_state(std::string_view name) const;

  const FormulaSet& sat(StateIndex s) const { return sat_.at(s); }

  bool prefers(StateIndex a, StateIndex b) const {
    return pref_matrix_[static_cast<std::size_t>(a) * states_.size() + b] != 0;
  }
  const PrefPairs& pref() const noexcept { return pref_; }

  bool operator==(const MakModel& other) const;

 private:
  Vocab vocab_;
  std::vector<std::string> states_;
  std::vector<FormulaSet> sat_;
  PrefPairs pref_;
  std::vector<std::uint8_t> pref_matrix_;
};

/// s satisfies x iff x ⊆ sat(s) as plain sets of classes — no closure.
bool mak_sat(const MakModel& m, StateIndex s, const FormulaSet& x);

/// Minimal satisfaction: s satisfies x and no ≺-smaller state does.
bool mak_minsat(const MakModel& m, StateIndex s, const FormulaSet& x);

/// Cn(s), the stored satisfied-formula set of s.
const FormulaSet& cn_state(const MakModel& m, StateIndex s);

/// The Tarski entailment Cn: the intersection of sat(s) over the states
/// satisfying x; everything when no state does.
FormulaSet cn_entail(const MakModel& m, const FormulaSet& x);

/// The MAK preferential entailment: intersection over minimally satisfying
/// states; everything when none exists.
FormulaSet mak_entail(const MakModel& m, const FormulaSet& x);

/// States satisfying x, ascending (helper shared with translations).
std::vector<StateIndex> mak_states_of(const MakModel& m, const FormulaSet& x);
std::vector<StateIndex> mak_minimal(const MakModel& m, const FormulaSet& x);

/// True iff every state's satisfied set is deductively closed. Cheap; does
/// not require the pairwise sweeps of classify_mak.
bool is_supra_classical(const MakModel& m);

/// If m is not supra classical, the first offending state (ascending) and
/// the canonically least class on which sat(s) differs from the closure.
struct SupraViolation {
  StateIndex state;
  Mask witness_class;
};
std::optional<SupraViolation> find_supra_violation(const MakModel& m);

/// Full classification. The r_and / r_or sweeps quantify over all ordered
/// class pairs per state; raises SizeGuardError when class_count^2 exceeds
/// `cap`.
MakKind classify_mak(const MakModel& m, std::uint64_t cap);
MakKind classify_mak(const MakModel& m);

/// Model text format:
///
///   vocab p q
///   state s1 sat "p & q", "q"     (the exact classes listed; no closure)
///   state s2 sat closure "p"      (sugar: the deductive closure)
///   state s3 sat                  (the empty set)
///   pref s1 s2
MakModel parse_mak(std::string_view text);
std::string serialize_mak(const MakModel& m);

}  // namespace prefent

#endif  // PREFENT_MAK_HPP_
