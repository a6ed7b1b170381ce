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

#include "naive.hpp"
#include "prefent/generate.hpp"
#include "prefent/klm.hpp"

using namespace prefent;

namespace {

constexpr Mask kP = 0b1100;
constexpr Mask kQ = 0b1010;
constexpr Mask kPandQ = 0b1000;
constexpr Mask kNotPandQ = 0b0010;
constexpr Mask kNotP = 0b0011;

// The running two-state example: s1 labelled Th(p & q), s2 labelled
// Th(~p & q), with s1 preferred to s2.
KlmModel two_state() {
  Vocab v({"p", "q"});
  return KlmModel(v, {"s1", "s2"}, {Theory(kPandQ), Theory(kNotPandQ)},
                  {{0, 1}});
}

}  // namespace

TEST_CASE("state satisfaction is label entailment") {
  KlmModel m = two_state();
  CHECK(klm_sat(m, 0, Theory(kQ)));
  CHECK(!klm_sat(m, 1, Theory(kPandQ)));
  CHECK_THROWS_AS(klm_sat(m, 7, Theory(kQ)), UnknownStateError);

  // An inconsistent label satisfies every theory.
  Vocab v({"p", "q"});
  KlmModel with_bottom(v, {"s1"}, {Theory(0)}, {});
  for (Mask t = 0; t <= v.full_mask(); ++t)
    CHECK(klm_sat(with_bottom, 0, Theory(t)));
}

TEST_CASE("satisfying-state sets against the naive transcription") {
  KlmModel m = two_state();
  CHECK(klm_states_of(m, Theory(kQ)) == std::vector<StateIndex>{0, 1});
  CHECK(klm_states_of(m, Theory(kNotP)) == std::vector<StateIndex>{1});
  // Th(false): only inconsistent labels qualify.
  CHECK(klm_states_of(m, Theory(0)).empty());

  for (Mask t = 0; t <= m.vocab().full_mask(); ++t)
    CHECK(klm_states_of(m, Theory(t)) == naive::klm_satisfying(m, t));
}

TEST_CASE("minimality is relative to the satisfying set") {
  Vocab v({"p", "q"});
  SUBCASE("one edge") {
    KlmModel m = two_state();
    CHECK(klm_minimal(m, Theory(kQ)) == std::vector<StateIndex>{0});
  }
  SUBCASE("a 2-cycle eliminates both") {
    KlmModel m(v, {"s1", "s2"}, {Theory(kPandQ), Theory(kNotPandQ)},
               {{0, 1}, {1, 0}});
    CHECK(klm_minimal(m, Theory(kQ)).empty());
  }
  SUBCASE("a reflexive edge eliminates its state") {
    KlmModel m(v, {"s1"}, {Theory(kPandQ)}, {{0, 0}});
    CHECK(klm_minimal(m, Theory(kQ)).empty());
  }
  SUBCASE("domination by a non-satisfying state does not count") {
    // s1 dominates s2 but s1 does not satisfy Th(~p).
    KlmModel m = two_state();
    CHECK(klm_minimal(m, Theory(kNotP)) == std::vector<StateIndex>{1});
  }
}

TEST_CASE("the preferential entailment of the two-state example") {
  KlmModel m = two_state();
  // q |~ p: from Th(q) the minimal state is s1.
  CHECK(klm_entail(m, Theory(kQ)) == Theory(kPandQ));
  // Strengthening the premises to Th(~p) kills the earlier conclusion.
  CHECK(klm_entail(m, Theory(kNotP)) == Theory(kNotPandQ));
  // No satisfying state: the inconsistent theory.
  CHECK(klm_entail(m, Theory(0)) == Theory(0));

  for (Mask t = 0; t <= m.vocab().full_mask(); ++t) {
    auto conclusions = naive::klm_conclusions(m, t);
    CHECK(klm_entail(m, Theory(t)).models() ==
          naive::conclusions_models(m.vocab(), conclusions));
  }
}

TEST_CASE("entailment is extensive and a function of the premise models") {
  GenSpec spec;
  spec.vocab_size = 2;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    KlmModel m = gen_klm(spec.with_seed(seed));
    for (Mask t = 0; t <= m.vocab().full_mask(); ++t) {
      Theory theory(t);
      Theory out = klm_entail(m, theory);
      CHECK(mask_subset(out.models(), t));
      CHECK(klm_entail(m, Theory(t)) == out);
    }
  }
}

TEST_CASE("satisfying sets shrink when premises strengthen") {
  GenSpec spec;
  spec.vocab_size = 2;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    KlmModel m = gen_klm(spec.with_seed(seed));
    for (Mask t1 = 0; t1 <= m.vocab().full_mask(); ++t1)
      for (Mask t2 = 0; t2 <= m.vocab().full_mask(); ++t2) {
        if (!mask_subset(t2, t1)) continue;  // t2 entails t1
        auto s1 = klm_states_of(m, Theory(t1));
        auto s2 = klm_states_of(m, Theory(t2));
        for (StateIndex s : s2)
          CHECK(std::find(s1.begin(), s1.end(), s) != s1.end());
      }
  }
}

TEST_CASE("cumulative transitivity holds for every model") {
  GenSpec spec;
  spec.vocab_size = 2;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    KlmModel m = gen_klm(spec.with_seed(seed));
    for (Mask t = 0; t <= m.vocab().full_mask(); ++t) {
      Mask base = klm_entail(m, Theory(t)).models() & t;
      Mask diff = t & ~base;
      for (Mask sub = diff;; sub = (sub - 1) & diff) {
        Mask mid = base | sub;
        CHECK(mask_subset(klm_entail(m, Theory(t)).models(),
                          klm_entail(m, Theory(mid)).models()));
        if (sub == 0) break;
      }
    }
  }
}

TEST_CASE("classification flags") {
  Vocab v({"p", "q"});
  SUBCASE("consistency of states") {
    KlmModel m(v, {"s1", "s2"}, {Theory(0), Theory(kP)}, {});
    CHECK(!classify(m).consistent_states);
    CHECK(classify(two_state()).consistent_states);
  }
  SUBCASE("singular means complete labels") {
    CHECK(classify(two_state()).singular);
    KlmModel m(v, {"s1"}, {Theory(kP)}, {});
    CHECK(!classify(m).singular);
  }
  SUBCASE("the two-state example is smooth") {
    KlmKind kind = classify(two_state());
    CHECK(kind.smooth);
    CHECK(naive::is_smooth(two_state()));
  }
  SUBCASE("a 2-cycle under a shared theory is not smooth") {
    KlmModel m(v, {"s1", "s2"}, {Theory(kPandQ), Theory(kNotPandQ)},
               {{0, 1}, {1, 0}});
    CHECK(!classify(m).smooth);
    CHECK(!naive::is_smooth(m));
  }
  SUBCASE("smoothness agrees with the naive oracle on random models") {
    GenSpec spec;
    spec.vocab_size = 2;
    spec.pref_density = 0.5;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      KlmModel m = gen_klm(spec.with_seed(seed));
      CHECK(classify(m).smooth == naive::is_smooth(m));
    }
  }
}

TEST_CASE("simplified and strictly singular detection") {
  Vocab v({"p"});
  // Simplified: all four theories under canonical names, identity labels.
  std::vector<std::string> names;
  std::vector<Theory> labels;
  for (Mask t = 0; t < 4; ++t) {
    labels.push_back(Theory(t));
    names.push_back(canonical_theory_name(Theory(t), v));
  }
  KlmModel simplified(v, names, labels, {});
  KlmKind kind = classify(simplified);
  CHECK(kind.simplified);
  CHECK(!kind.singular);
  CHECK(!kind.strictly_singular);

  // Strictly singular: exactly the complete theories, identity labels.
  KlmModel strict(v,
                  {canonical_theory_name(Theory(1), v),
                   canonical_theory_name(Theory(2), v)},
                  {Theory(1), Theory(2)}, {});
  KlmKind strict_kind = classify(strict);
  CHECK(strict_kind.strictly_singular);
  CHECK(strict_kind.singular);
  CHECK(!strict_kind.simplified);

  // Renaming a state breaks the convention.
  KlmModel renamed(v, {"a", canonical_theory_name(Theory(2), v)},
                   {Theory(1), Theory(2)}, {});
  CHECK(!classify(renamed).strictly_singular);
}

TEST_CASE("preference relation audits") {
  Vocab v({"p", "q"});
  KlmModel loop(v, {"s1", "s2"}, {Theory(kP), Theory(kQ)}, {{0, 0}, {0, 1}});
  CHECK(!loop.pref_irreflexive());
  CHECK(loop.pref_transitive());
  KlmModel chain(v, {"s1", "s2", "s3"},
                 {Theory(kP), Theory(kQ), Theory(kPandQ)},
                 {{0, 1}, {1, 2}});
  CHECK(chain.pref_irreflexive());
  CHECK(!chain.pref_transitive());
}

TEST_CASE("model text format round-trips") {
  const char* text =
      "# comment\n"
      "vocab p q\n"
      "state s1 theory \"p & q\"\n"
      "state s2 theory \"~p\", \"q\"   # conjoined\n"
      "state s3 theory L\n"
      "pref s1 s2\n"
      "pref s2 s2\n";
  KlmModel m = parse_klm(text);
  CHECK(m.state_count() == 3);
  CHECK(m.label(0) == Theory(kPandQ));
  CHECK(m.label(1) == Theory(kNotPandQ));
  CHECK(m.label(2) == Theory(0));
  CHECK(m.prefers(0, 1));
  CHECK(m.prefers(1, 1));
  CHECK(!m.prefers(1, 0));

  KlmModel back = parse_klm(serialize_klm(m));
  CHECK(back == m);

  GenSpec spec;
  spec.vocab_size = 2;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    KlmModel random = gen_klm(spec.with_seed(seed));
    CHECK(parse_klm(serialize_klm(random)) == random);
  }
}

TEST_CASE("model text format rejects bad input") {
  CHECK_THROWS_AS(parse_klm("state s1 theory \"p\"\n"), ParseError);
  CHECK_THROWS_AS(parse_klm("vocab p q\npref s1 s2\n"), UnknownStateError);
  CHECK_THROWS_AS(
      parse_klm("vocab p q\nstate s1 theory \"r\"\n"), UnknownSymbolError);
  CHECK_THROWS_AS(
      parse_klm("vocab p q\nstate s1 theory \"p\"\nstate s1 theory \"q\"\n"),
      Error);
  CHECK_THROWS_AS(parse_klm("vocab p q\nstate s1 frob \"p\"\n"), ParseError);
  CHECK_THROWS_AS(parse_klm("vocab p q\nvocab p\n"), ParseError);
}
