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
// Constructive passages between the two model families, and the tabulation
// of a model's entailment as a finite theory-to-theory table.

#ifndef PREFENT_TRANSLATE_HPP_
#define PREFENT_TRANSLATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefent/klm.hpp"
#include "prefent/logic.hpp"
#include "prefent/mak.hpp"

namespace prefent {

/// A total extensive map from theories to theories, indexed by theory mask.
/// Extensivity (f(T) ⊇ T as formula sets, i.e. map[t] ⊆ t as model sets) is
/// enforced at construction; outputs are closed by representation, which
/// settles the "right side" of pre-circumscription membership.
class PrecircTable {
 public:
  /// `map` must have exactly one entry per theory of `vocab`.
  PrecircTable(Vocab vocab, std::vector<Mask> map);

  const Vocab& vocab() const noexcept { return vocab_; }
  std::uint64_t theory_count() const noexcept { return map_.size(); }
  Theory apply(const Theory& t) const { return Theory(map_.at(t.models())); }
  Mask apply_mask(Mask t) const { return map_.at(t); }
  const std::vector<Mask>& raw() const noexcept { return map_; }

  bool operator==(const PrecircTable&) const = default;

 private:
  Vocab vocab_;
  std::vector<Mask> map_;
};

struct TranslationReport {
  std::string source_kind;
  std::string target_kind;
  bool validated = false;
  /// Theory where the constructed model's tabulation differs, if any.
  std::optional<Mask> mismatch_theory;
};

/// KLM -> MAK: same states and preference relation; each state satisfies
/// exactly the classes its label entails. The result is supra classical by
/// construction and defines the same entailment.
MakModel klm_to_mak(const KlmModel& m);

/// Supra-classical MAK -> KLM: same states and preference relation; each
/// label is the closure of the state's satisfied set. Raises
/// NotSupraClassicalError (with a witness state and class) otherwise.
KlmModel mak_to_klm(const MakModel& m);

/// The entailment of a model at every theory of its vocabulary. For a MAK
/// model, requires supra classicality. Raises SizeGuardError when the
/// theory space exceeds `cap`.
PrecircTable tabulate(const KlmModel& m, std::uint64_t cap);
PrecircTable tabulate(const MakModel& m, std::uint64_t cap);
PrecircTable tabulate(const KlmModel& m);
PrecircTable tabulate(const MakModel& m);

struct ConstructOptions {
  /// Run the construction when the table satisfies (CT) but not (CM), and
  /// report whether post-validation passes instead of failing. Evidence-
  /// gathering only; the strict path requires a cumulative table.
  bool allow_ct_only = false;
  std::uint64_t cap = 0;  // 0 = default_size_cap()
};

struct Construction {
  KlmModel model;
  TranslationReport report;
};

/// Builds the simplified KLM model of a cumulative pre-circumscription:
/// states are the canonical names of all theories, labels the identity, and
/// T1 ≺ T2 iff
///   (2a) T1 = L and T2 is outside the range of f, or
///   (2b) T2 ≠ L, T2 ≠ T1, and there are T3, T4 with f(T3) = T1,
///        f(T4) = T2 and T3 ⊆ T2 (model sets: M(T2) ⊆ M(T3)).
///
/// The result is always post-validated by tabulating it and comparing with
/// the input. Strict mode raises NotCumulativeError when (CT) or (CM) fails
/// and ValidationError on a tabulation mismatch; with allow_ct_only only
/// (CT) is required and the report carries the validation outcome.
Construction precirc_to_simplified_klm(const PrecircTable& f,
                                       const ConstructOptions& options = {});

/// Table text format:
///
///   vocab p q
///   map 1010 -> 0010
///
/// One line per theory (all required, each exactly once); bitstrings are
/// model-set characteristic vectors in canonical interpretation order.
PrecircTable parse_table(std::string_view text);
std::string serialize_table(const PrecircTable& f);

}  // namespace prefent

#endif  // PREFENT_TRANSLATE_HPP_
