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

#include <doctest.h>

#include "prefent/generate.hpp"
#include "prefent/mak.hpp"

using namespace prefent;

TEST_CASE("bounded draws are in range and deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = a.below(7);
    CHECK(x < 7);
    CHECK(x == b.below(7));
  }
  CHECK_THROWS_AS(Rng(1).below(0), Error);
  double u = Rng(5).unit();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("equal specs generate identical models") {
  GenSpec spec;
  spec.vocab_size = 2;
  spec.seed = 17;
  CHECK(gen_klm(spec) == gen_klm(spec));
  CHECK(gen_mak(spec) == gen_mak(spec));
  CHECK(serialize_klm(gen_klm(spec)) == serialize_klm(gen_klm(spec)));

  bool some_difference = false;
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    if (!(gen_klm(spec.with_seed(seed)) == gen_klm(spec)))
      some_difference = true;
  CHECK(some_difference);
}

TEST_CASE("generator targets are reached by construction") {
  GenSpec spec;
  spec.vocab_size = 2;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GenSpec g = spec.with_seed(seed);

    g.mak_target = MakTarget::Supra;
    CHECK(is_supra_classical(gen_mak(g)));

    g.mak_target = MakTarget::Classical;
    MakModel classical = gen_mak(g);
    CHECK(classify_mak(classical).classical);

    g.mak_target = MakTarget::Unicity;
    CHECK(classify_mak(gen_mak(g)).unicity_of_states);

    g.mak_target = MakTarget::Raw;
    g.klm_target = KlmTarget::Singular;
    CHECK(classify(gen_klm(g)).singular);

    g.klm_target = KlmTarget::Smooth;
    CHECK(classify(gen_klm(g)).smooth);
  }

  GenSpec simp;
  simp.vocab_size = 2;
  simp.klm_target = KlmTarget::Simplified;
  simp.seed = 4;
  KlmKind kind = classify(gen_klm(simp));
  CHECK(kind.simplified);
}

TEST_CASE("invalid specs are rejected") {
  GenSpec spec;
  spec.vocab_size = 0;
  CHECK_THROWS_AS(gen_klm(spec), Error);
  spec.vocab_size = 5;  // class-space values need n <= 4
  CHECK_THROWS_AS(gen_mak(spec), Error);
  spec.vocab_size = 2;
  spec.min_states = 3;
  spec.max_states = 2;
  CHECK_THROWS_AS(gen_klm(spec), Error);
  spec.min_states = 1;
  spec.max_states = 4;
  spec.pref_density = 1.5;
  CHECK_THROWS_AS(gen_mak(spec), Error);
}

TEST_CASE("unreachable targets exhaust their budget") {
  // Full density self-loops empty every minimal set, so no model is smooth.
  GenSpec spec;
  spec.vocab_size = 2;
  spec.pref_density = 1.0;
  spec.klm_target = KlmTarget::Smooth;
  spec.resample_budget = 5;
  CHECK_THROWS_AS(gen_klm(spec), GenerationError);

  // More states than distinct satisfied-formula sets at n=1.
  GenSpec unicity;
  unicity.vocab_size = 1;
  unicity.min_states = 20;
  unicity.max_states = 20;
  unicity.mak_target = MakTarget::Unicity;
  unicity.resample_budget = 10;
  CHECK_THROWS_AS(gen_mak(unicity), GenerationError);
}
