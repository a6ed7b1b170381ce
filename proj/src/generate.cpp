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

#include "prefent/generate.hpp"

#include <unordered_set>

namespace prefent {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n) - 1;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return x % n;
}

Vocab default_vocab(std::size_t n) {
  static const std::vector<std::string> names = {"p", "q", "r", "s", "t"};
  if (n == 0 || n > names.size())
    throw Error("vocabulary size must be in 1.." +
                std::to_string(names.size()));
  return Vocab(std::vector<std::string>(names.begin(), names.begin() + n));
}

namespace {

void validate(const GenSpec& spec, bool mak) {
  std::size_t max_vocab = mak ? kMaxClassSpaceVocabSize : kMaxVocabSize;
  if (spec.vocab_size == 0 || spec.vocab_size > max_vocab)
    throw Error("vocab_size must be in 1.." + std::to_string(max_vocab));
  if (spec.min_states == 0 || spec.min_states > spec.max_states)
    throw Error("state count range must satisfy 1 <= min <= max");
  if (spec.pref_density < 0.0 || spec.pref_density > 1.0)
    throw Error("pref_density must be in [0,1]");
}

std::vector<std::string> state_names(std::uint32_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::uint32_t i = 1; i <= count; ++i)
    names.push_back("s" + std::to_string(i));
  return names;
}

PrefPairs random_pref(Rng& rng, std::uint32_t count, double density) {
  PrefPairs pref;
  for (StateIndex a = 0; a < count; ++a)
    for (StateIndex b = 0; b < count; ++b)
      if (rng.chance(density)) pref.emplace_back(a, b);
  return pref;
}

KlmModel gen_klm_once(const GenSpec& spec, Rng& rng, const Vocab& v) {
  std::uint32_t count =
      spec.min_states +
      static_cast<std::uint32_t>(
          rng.below(spec.max_states - spec.min_states + std::uint64_t{1}));
  std::vector<Theory> labels;
  labels.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    Mask models = spec.klm_target == KlmTarget::Singular
                      ? Mask{1} << rng.below(v.interp_count())
                      : static_cast<Mask>(rng.below(v.class_count()));
    labels.push_back(Theory(models));
  }
  return KlmModel(v, state_names(count), std::move(labels),
                  random_pref(rng, count, spec.pref_density));
}

}  // namespace

KlmModel gen_klm(const GenSpec& spec) {
  validate(spec, /*mak=*/false);
  Rng rng(spec.seed);
  Vocab v = default_vocab(spec.vocab_size);

  if (spec.klm_target == KlmTarget::Simplified) {
    if (v.class_count() * v.class_count() > default_size_cap())
      throw SizeGuardError("simplified model over " +
                           std::to_string(spec.vocab_size) +
                           " symbols needs " +
                           std::to_string(v.class_count()) + " states");
    std::uint32_t count = static_cast<std::uint32_t>(v.class_count());
    std::vector<std::string> names;
    std::vector<Theory> labels;
    for (std::uint32_t t = 0; t < count; ++t) {
      labels.push_back(Theory(static_cast<Mask>(t)));
      names.push_back(canonical_theory_name(labels.back(), v));
    }
    return KlmModel(v, std::move(names), std::move(labels),
                    random_pref(rng, count, spec.pref_density));
  }

  if (spec.klm_target == KlmTarget::Smooth) {
    for (std::uint32_t attempt = 0; attempt < spec.resample_budget;
         ++attempt) {
      KlmModel candidate = gen_klm_once(spec, rng, v);
      if (classify(candidate).smooth) return candidate;
    }
    throw GenerationError("target unreachable: no smooth model within " +
                          std::to_string(spec.resample_budget) +
                          " resamples (seed " + std::to_string(spec.seed) +
                          ")");
  }

  return gen_klm_once(spec, rng, v);
}

MakModel gen_mak(const GenSpec& spec) {
  validate(spec, /*mak=*/true);
  Rng rng(spec.seed);
  Vocab v = default_vocab(spec.vocab_size);
  std::uint32_t count =
      spec.min_states +
      static_cast<std::uint32_t>(
          rng.below(spec.max_states - spec.min_states + std::uint64_t{1}));

  auto random_sat = [&]() -> FormulaSet {
    switch (spec.mak_target) {
      case MakTarget::Supra:
        return FormulaSet::entailed_by(
            Theory(static_cast<Mask>(rng.below(v.class_count()))), v);
      case MakTarget::Classical:
        return FormulaSet::entailed_by(
            Theory(Mask{1} << rng.below(v.interp_count())), v);
      default: {
        FormulaSet sat = FormulaSet::empty(v);
        double density = rng.unit();
        for (std::uint64_t c = 0; c < v.class_count(); ++c)
          if (rng.chance(density)) sat.insert(SemFormula(static_cast<Mask>(c)));
        return sat;
      }
    }
  };

  std::vector<FormulaSet> sats;
  sats.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    if (spec.mak_target == MakTarget::Unicity) {
      bool placed = false;
      for (std::uint32_t attempt = 0; attempt < spec.resample_budget;
           ++attempt) {
        FormulaSet candidate = random_sat();
        bool fresh = true;
        for (const FormulaSet& existing : sats)
          if (existing == candidate) {
            fresh = false;
            break;
          }
        if (fresh) {
          sats.push_back(std::move(candidate));
          placed = true;
          break;
        }
      }
      if (!placed)
        throw GenerationError(
            "target unreachable: no fresh satisfied-formula set within " +
            std::to_string(spec.resample_budget) + " resamples (seed " +
            std::to_string(spec.seed) + ")");
    } else {
      sats.push_back(random_sat());
    }
  }
  return MakModel(v, state_names(count), std::move(sats),
                  random_pref(rng, count, spec.pref_density));
}

}  // namespace prefent
