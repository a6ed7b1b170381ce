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
// Seeded random model generators. Determinism contract: a GenSpec (seed
// included) fixes the generated model exactly; campaign trial k uses the
// stream derived from (seed, k). Preference edges are drawn independently
// per ordered pair with no acyclicity enforcement — cycles and reflexive
// edges are wanted stress cases.

#ifndef PREFENT_GENERATE_HPP_
#define PREFENT_GENERATE_HPP_

#include <cstdint>
#include <random>

#include "prefent/klm.hpp"
#include "prefent/logic.hpp"
#include "prefent/mak.hpp"

namespace prefent {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seeded generator with rejection-sampled bounds (no distribution objects,
/// so sequences are fixed by the seed alone).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream for trial `stream` of a campaign seeded by `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class MakTarget { Raw, Supra, Classical, Unicity };
enum class KlmTarget { Any, Smooth, Simplified, Singular };

struct GenSpec {
  std::size_t vocab_size = 2;
  std::uint32_t min_states = 1;
  std::uint32_t max_states = 4;
  double pref_density = 0.3;
  MakTarget mak_target = MakTarget::Raw;
  KlmTarget klm_target = KlmTarget::Any;
  std::uint64_t seed = 0;
  /// Attempts for rejection targets (smooth, unicity) before
  /// GenerationError("target unreachable ...").
  std::uint32_t resample_budget = 1000;

  GenSpec with_seed(std::uint64_t s) const {
    GenSpec copy = *this;
    copy.seed = s;
    return copy;
  }
};

/// "p q r s t" prefix of length n.
Vocab default_vocab(std::size_t n);

KlmModel gen_klm(const GenSpec& spec);
MakModel gen_mak(const GenSpec& spec);

}  // namespace prefent

#endif  // PREFENT_GENERATE_HPP_
