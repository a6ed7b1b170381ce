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
// Verification campaigns and counterexample searches over the claim
// catalog. Positive claims expect zero failures across seeded random
// trials; negative claims (NONMONO, NONCLOSE, SING-LIMIT) search for a
// witness. Machine-readable results exclude wall time, so a (claim, spec,
// seed, trials) tuple fixes the report bytes.

#ifndef PREFENT_CAMPAIGN_HPP_
#define PREFENT_CAMPAIGN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "prefent/generate.hpp"

namespace prefent {

enum class Claim {
  P3_6,       // KLM entailments are pre-circumscriptions satisfying (CT)
  P3_10,      // MAK entailments are extensive and satisfy (CT)
  Idem,       // C_MAK(C_MAK(T)) = C_MAK(T)
  Tarski,     // Cn is a Tarski entailment; Cn(Cn(s)) = Cn(s)
  CnSub,      // Cn(T) ⊆ C_MAK(T)
  KlmToMak,   // the KLM->MAK passage preserves the entailment
  Equiv,      // C_MAK equals a KLM entailment iff it is a pre-circumscription
  Supra,      // both directions of the supra-classical passage
  RAnd,       // supra classical <=> satisfaction respects conjunction
  ROr,        // (R∧) and (R¬) imply (R∨)
  SmoothCm,   // smooth models yield (CM)
  Constr,     // the ≺_C construction round-trips cumulative tables
  NonMono,    // search: C_MAK falsifies monotony
  NonClose,   // search: a conjunction concluded without its conjunct
  SingLimit,  // search: a KLM entailment no strictly-singular model realizes
};

std::optional<Claim> claim_from_string(std::string_view s);
std::string to_string(Claim c);
const std::vector<Claim>& all_claims();
/// Negative claims are searches that must produce a witness.
bool claim_expects_witness(Claim c);

struct CampaignResult {
  std::string claim;
  std::uint64_t seed = 0;
  std::size_t vocab_size = 0;
  std::uint64_t trials_run = 0;
  /// Positive claims: violations found (must be 0). Negative claims:
  /// witnesses found (must be >= 1, except SING-LIMIT which reports its
  /// outcome either way).
  std::uint64_t failures = 0;
  /// Serialized first counterexample / witness: model text plus inputs.
  std::optional<std::string> counterexample;
  std::string coverage;
  double wall_seconds = 0.0;

  bool expected_outcome() const;
  bool expects_witness = false;
  /// SING-LIMIT reports its outcome either way at desk scale; a missing
  /// witness there is a documented result, not a failed run.
  bool witness_optional = false;
};

/// Runs `claim` for `trials` seeded trials. Raises GenerationError when a
/// NONMONO/NONCLOSE search exhausts its budget without the required
/// witness. SING-LIMIT ignores `trials` at n=1 (exhaustive both sides) and
/// uses it as the candidate-search budget at n=2.
CampaignResult run_campaign(Claim claim, std::uint64_t trials,
                            const GenSpec& spec);

/// Human rendering (includes wall time).
std::string render_campaign(const CampaignResult& r);
/// Machine-readable key-value document (no wall time; byte-deterministic).
std::string campaign_to_json(const CampaignResult& r);

}  // namespace prefent

#endif  // PREFENT_CAMPAIGN_HPP_
