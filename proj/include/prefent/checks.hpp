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
// Property checkers over entailments. Checking is two-tier: exhaustive
// whenever the quantifier domain fits the configured cap, seeded-random
// otherwise, with the verdict downgraded to holds-on-sample. Every failing
// verdict ships a witness that reproduces the violation when replayed
// through the definitions.

#ifndef PREFENT_CHECKS_HPP_
#define PREFENT_CHECKS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "prefent/klm.hpp"
#include "prefent/logic.hpp"
#include "prefent/mak.hpp"
#include "prefent/translate.hpp"

namespace prefent {

/// An entailment under test: a total deterministic map from formula sets to
/// formula sets over a declared vocabulary. Theory-respecting oracles (KLM
/// entailments, tables, classical closure) also expose the theory-level
/// map, which the checkers exploit for exact interval reductions; raw
/// oracles (MAK models) only expose the set-level map.
struct EntailOracle {
  enum class Domain { TheoryRespecting, Raw };

  Vocab vocab;
  Domain domain;
  std::string name;
  std::function<Theory(const Theory&)> on_theory;       // TheoryRespecting only
  std::function<FormulaSet(const FormulaSet&)> on_set;  // always present

  static EntailOracle from_klm(const KlmModel& m);
  static EntailOracle from_table(const PrecircTable& f);
  /// Classical deductive closure Th as an entailment.
  static EntailOracle classical_closure(const Vocab& v);
  /// The preferential entailment C_MAK of a MAK model (raw domain).
  static EntailOracle from_mak(const MakModel& m);
  /// The Tarski entailment Cn of a MAK model (raw domain).
  static EntailOracle from_mak_cn(const MakModel& m);
};

enum class Verdict { Holds, HoldsOnSample, Fails };

std::string to_string(Verdict v);

struct CheckOptions {
  std::uint64_t seed = 0;
  /// Sampled premise sets when the premise domain exceeds the cap.
  std::uint32_t premise_trials = 1000;
  /// Sampled subsets per premise for the raw (CT)/(CM) forms.
  std::uint32_t subset_trials = 100;
  std::uint64_t cap = 0;  // 0 = default_size_cap()
  /// Skip the exhaustive tiers even when the domain fits the cap; verdicts
  /// are then at most holds-on-sample.
  bool force_sampled = false;
};

/// Witness fields are (key, value) pairs with values in the serialized
/// forms of this library (bitstrings, bitstring sets), so a failing report
/// can be replayed exactly.
struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::Holds;
  std::vector<std::pair<std::string, std::string>> witness;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Human statement of quantifier coverage ("exhaustive over ...").
  std::string coverage;
};

/// Extensivity, idempotence and monotony. Witness field "axiom" names the
/// violated one.
CheckReport check_tarski(const EntailOracle& o, const CheckOptions& opt = {});

/// Cumulative transitivity (cut): T' ⊆ C(T) implies C(T ∪ T') ⊆ C(T).
/// Theory-respecting oracles use the exact interval reduction over theories
/// T'' with M(C(T)) ⊆ M(T'') ⊆ M(T); raw oracles sample subsets of C(T).
CheckReport check_ct(const EntailOracle& o, const CheckOptions& opt = {});

/// Cumulative monotony: T' ⊆ C(T) implies C(T) ⊆ C(T ∪ T'). Same domains
/// as check_ct with the reversed conclusion.
CheckReport check_cm(const EntailOracle& o, const CheckOptions& opt = {});

/// Pre-circumscription: respects equivalence on the left (equal closures
/// give equal outputs), outputs deductively closed (the right side), and
/// extensive. Witness field "side" names the violated part.
CheckReport check_precirc(const EntailOracle& o, const CheckOptions& opt = {});

/// Supra classicality of the entailment: Th(X) ⊆ C(X) for every X.
CheckReport check_supra_entail(const EntailOracle& o,
                               const CheckOptions& opt = {});

/// Entailment equality: exhaustive over the theory domain when it fits the
/// cap, plus sampled raw premise sets when either oracle is raw. First
/// mismatch in canonical order wins. Raises Error on vocabulary mismatch.
CheckReport check_equal(const EntailOracle& o1, const EntailOracle& o2,
                        const CheckOptions& opt = {});

/// Line-oriented rendering: "key: value" lines, deterministic.
std::string render_report(const CheckReport& r);

}  // namespace prefent

#endif  // PREFENT_CHECKS_HPP_
