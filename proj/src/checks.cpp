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

#include "prefent/checks.hpp"

#include "prefent/generate.hpp"

namespace prefent {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::HoldsOnSample:
      return "holds-on-sample";
    case Verdict::Fails:
      return "fails";
  }
  return "?";
}

EntailOracle EntailOracle::from_klm(const KlmModel& m) {
  Vocab v = m.vocab();
  return EntailOracle{
      v, EntailOracle::Domain::TheoryRespecting, "klm-entail",
      [m](const Theory& t) { return klm_entail(m, t); },
      [m, v](const FormulaSet& x) {
        return FormulaSet::entailed_by(klm_entail(m, closure(x, v)), v);
      }};
}

EntailOracle EntailOracle::from_table(const PrecircTable& f) {
  Vocab v = f.vocab();
  return EntailOracle{
      v, EntailOracle::Domain::TheoryRespecting, "table",
      [f](const Theory& t) { return f.apply(t); },
      [f, v](const FormulaSet& x) {
        return FormulaSet::entailed_by(f.apply(closure(x, v)), v);
      }};
}

EntailOracle EntailOracle::classical_closure(const Vocab& v) {
  return EntailOracle{
      v, EntailOracle::Domain::TheoryRespecting, "closure",
      [](const Theory& t) { return t; },
      [v](const FormulaSet& x) {
        return FormulaSet::entailed_by(closure(x, v), v);
      }};
}

EntailOracle EntailOracle::from_mak(const MakModel& m) {
  return EntailOracle{m.vocab(), EntailOracle::Domain::Raw, "mak-entail",
                      nullptr,
                      [m](const FormulaSet& x) { return mak_entail(m, x); }};
}

EntailOracle EntailOracle::from_mak_cn(const MakModel& m) {
  return EntailOracle{m.vocab(), EntailOracle::Domain::Raw, "cn-entail",
                      nullptr,
                      [m](const FormulaSet& x) { return cn_entail(m, x); }};
}

namespace {

std::uint64_t effective_cap(const CheckOptions& opt) {
  return opt.cap ? opt.cap : default_size_cap();
}

bool theory_respecting(const EntailOracle& o) {
  return o.domain == EntailOracle::Domain::TheoryRespecting;
}

/// Random formula set with a random density, so sizes vary.
FormulaSet random_set(Rng& rng, const Vocab& v) {
  FormulaSet out = FormulaSet::empty(v);
  double density = rng.unit();
  for (std::uint64_t c = 0; c < v.class_count(); ++c)
    if (rng.chance(density)) out.insert(SemFormula(static_cast<Mask>(c)));
  return out;
}

FormulaSet random_subset_of(Rng& rng, const FormulaSet& x, const Vocab& v) {
  FormulaSet out = FormulaSet::empty(v);
  double density = rng.unit();
  x.for_each([&](Mask c) {
    if (rng.chance(density)) out.insert(SemFormula(c));
  });
  return out;
}

/// A formula set whose closure is exactly t: the class of t's conjunction
/// plus entailed classes.
FormulaSet random_presentation(Rng& rng, const Theory& t, const Vocab& v) {
  FormulaSet out =
      random_subset_of(rng, FormulaSet::entailed_by(t, v), v);
  out.insert(SemFormula(t.models()));
  return out;
}

/// Premise sets in [0, 2^classes) encoded as counters; only used when the
/// class space fits one machine word.
FormulaSet set_from_counter(std::uint64_t counter, const Vocab& v) {
  FormulaSet out = FormulaSet::empty(v);
  for (std::uint32_t c = 0; c < v.class_count(); ++c)
    if ((counter >> c) & 1u) out.insert(SemFormula(static_cast<Mask>(c)));
  return out;
}

using Witness = std::vector<std::pair<std::string, std::string>>;

CheckReport make_report(std::string property, Verdict verdict,
                        Witness witness, std::uint64_t trials,
                        std::uint64_t seed, std::string coverage) {
  return CheckReport{std::move(property), verdict, std::move(witness), trials,
                     seed, std::move(coverage)};
}

}  // namespace

CheckReport check_tarski(const EntailOracle& o, const CheckOptions& opt) {
  const Vocab& v = o.vocab;
  const std::uint64_t cap = effective_cap(opt);
  const std::uint64_t classes = v.class_count();
  Rng rng(opt.seed);
  std::uint64_t trials = 0;

  if (theory_respecting(o)) {
    bool exhaustive = !opt.force_sampled && classes * classes <= cap;
    auto fail = [&](const char* axiom, Mask a, Mask oa, Mask b,
                    Mask ob) -> CheckReport {
      Witness w{{"axiom", axiom},
                {"T", to_bitstring(a, v)},
                {"o(T)", to_bitstring(oa, v)}};
      if (std::string(axiom) == "monotony") {
        w.emplace_back("T2", to_bitstring(b, v));
        w.emplace_back("o(T2)", to_bitstring(ob, v));
      }
      return make_report("tarski", Verdict::Fails, std::move(w), trials,
                         opt.seed, "theory domain");
    };
    auto one_theory = [&](Mask tm) -> std::optional<CheckReport> {
      Theory t(tm);
      Theory ot = o.on_theory(t);
      ++trials;
      if (!mask_subset(ot.models(), t.models()))
        return fail("extensivity", tm, ot.models(), 0, 0);
      if (o.on_theory(ot) != ot)
        return fail("idempotence", tm, ot.models(), 0, 0);
      return std::nullopt;
    };
    auto one_pair = [&](Mask weak, Mask strong) -> std::optional<CheckReport> {
      // strong ⊆ weak as model sets means weak ⊆ strong as formula sets.
      ++trials;
      if (!mask_subset(o.on_theory(Theory(strong)).models(),
                       o.on_theory(Theory(weak)).models()))
        return fail("monotony", weak, o.on_theory(Theory(weak)).models(),
                    strong, o.on_theory(Theory(strong)).models());
      return std::nullopt;
    };
    if (exhaustive) {
      for (std::uint64_t tm = 0; tm < classes; ++tm)
        if (auto r = one_theory(static_cast<Mask>(tm))) return *r;
      for (std::uint64_t weak = 0; weak < classes; ++weak)
        for (Mask strong = static_cast<Mask>(weak);;
             strong = (strong - 1) & static_cast<Mask>(weak)) {
          if (auto r = one_pair(static_cast<Mask>(weak), strong)) return *r;
          if (strong == 0) break;
        }
      return make_report("tarski", Verdict::Holds, {}, trials, opt.seed,
                         "exhaustive over all theories and theory pairs");
    }
    for (std::uint32_t i = 0; i < opt.premise_trials; ++i) {
      Mask weak = static_cast<Mask>(rng.below(classes));
      if (auto r = one_theory(weak)) return *r;
      Mask strong = weak & static_cast<Mask>(rng.below(classes));
      if (auto r = one_pair(weak, strong)) return *r;
    }
    return make_report("tarski", Verdict::HoldsOnSample, {}, trials, opt.seed,
                       "sampled theories and theory pairs");
  }

  // Raw oracle. Extensivity and idempotence can be exhausted when the
  // premise-set space fits; monotony quantifies over subset pairs, a
  // 3^classes domain, exhausted only under a raised cap.
  bool exhaustive_sets =
      !opt.force_sampled && classes <= 16 &&
      (std::uint64_t{1} << classes) <= cap;
  std::uint64_t pair_domain = 1;
  for (std::uint64_t c = 0; c < classes && pair_domain <= cap; ++c)
    pair_domain *= 3;
  bool exhaustive_pairs =
      !opt.force_sampled && classes <= 16 && pair_domain <= cap;
  auto fail_set = [&](const char* axiom, const FormulaSet& x,
                      const FormulaSet& ox, const FormulaSet* y,
                      const FormulaSet* oy) -> CheckReport {
    Witness w{{"axiom", axiom},
              {"x", to_string(x, v)},
              {"o(x)", to_string(ox, v)}};
    if (y != nullptr) {
      w.emplace_back("y", to_string(*y, v));
      w.emplace_back("o(y)", to_string(*oy, v));
    }
    return make_report("tarski", Verdict::Fails, std::move(w), trials,
                       opt.seed, "raw domain");
  };
  auto one_set = [&](const FormulaSet& x) -> std::optional<CheckReport> {
    FormulaSet ox = o.on_set(x);
    ++trials;
    if (!x.subset_of(ox)) return fail_set("extensivity", x, ox, nullptr,
                                          nullptr);
    if (o.on_set(ox) != ox)
      return fail_set("idempotence", x, ox, nullptr, nullptr);
    return std::nullopt;
  };
  if (exhaustive_sets) {
    std::uint64_t total = std::uint64_t{1} << classes;
    for (std::uint64_t counter = 0; counter < total; ++counter)
      if (auto r = one_set(set_from_counter(counter, v))) return *r;
  }
  if (exhaustive_sets && exhaustive_pairs) {
    std::uint64_t total = std::uint64_t{1} << classes;
    std::vector<FormulaSet> outputs;
    outputs.reserve(total);
    for (std::uint64_t counter = 0; counter < total; ++counter)
      outputs.push_back(o.on_set(set_from_counter(counter, v)));
    for (std::uint64_t y = 0; y < total; ++y) {
      for (std::uint64_t x = y;; x = (x - 1) & y) {
        ++trials;
        if (!outputs[x].subset_of(outputs[y])) {
          FormulaSet xs = set_from_counter(x, v);
          FormulaSet ys = set_from_counter(y, v);
          return fail_set("monotony", xs, outputs[x], &ys, &outputs[y]);
        }
        if (x == 0) break;
      }
    }
    return make_report("tarski", Verdict::Holds, {}, trials, opt.seed,
                       "exhaustive premise sets and subset pairs");
  }
  for (std::uint32_t i = 0; i < opt.premise_trials; ++i) {
    FormulaSet x = random_set(rng, v);
    if (!exhaustive_sets)
      if (auto r = one_set(x)) return *r;
    FormulaSet y = x;
    y.union_with(random_set(rng, v));
    FormulaSet ox = o.on_set(x);
    FormulaSet oy = o.on_set(y);
    ++trials;
    if (!ox.subset_of(oy)) return fail_set("monotony", x, ox, &y, &oy);
  }
  return make_report(
      "tarski", Verdict::HoldsOnSample, {}, trials, opt.seed,
      exhaustive_sets
          ? "exhaustive premise sets for extensivity/idempotence; sampled "
            "pairs for monotony"
          : "sampled premise sets and pairs");
}

namespace {

/// Shared body of check_ct / check_cm. `ct` selects the conclusion:
/// (CT) wants o(T'') ⊇ o(T) as formula sets, (CM) the reverse.
CheckReport check_cumul(const EntailOracle& o, const CheckOptions& opt,
                        bool ct) {
  const char* property = ct ? "ct" : "cm";
  const Vocab& v = o.vocab;
  const std::uint64_t cap = effective_cap(opt);
  const std::uint64_t classes = v.class_count();
  Rng rng(opt.seed);
  std::uint64_t trials = 0;

  if (theory_respecting(o)) {
    auto violated = [&](Mask ot, Mask ott) {
      // (CT): C(T∪T') ⊆ C(T) as formula sets, i.e. M(o(T'')) ⊇ M(o(T)).
      return ct ? !mask_subset(ot, ott) : !mask_subset(ott, ot);
    };
    auto one = [&](Mask tm, Mask ttm) -> std::optional<CheckReport> {
      Mask ot = o.on_theory(Theory(tm)).models();
      Mask ott = o.on_theory(Theory(ttm)).models();
      ++trials;
      if (violated(ot, ott))
        return make_report(
            property, Verdict::Fails,
            Witness{{"T", to_bitstring(tm, v)},
                    {"o(T)", to_bitstring(ot, v)},
                    {"T''", to_bitstring(ttm, v)},
                    {"o(T'')", to_bitstring(ott, v)}},
            trials, opt.seed, "theory domain, interval form");
      return std::nullopt;
    };
    // Premise sets T ∪ T' with T' ⊆ C(T) close to exactly the theories T''
    // with M(C(T)) ∩ M(T) ⊆ M(T'') ⊆ M(T); for an extensive oracle the lower
    // bound is M(C(T)) itself.
    bool exhaustive = !opt.force_sampled && classes * classes <= cap;
    if (exhaustive) {
      for (std::uint64_t tm = 0; tm < classes; ++tm) {
        Mask base =
            o.on_theory(Theory(static_cast<Mask>(tm))).models() & tm;
        Mask diff = static_cast<Mask>(tm) & ~base;
        for (Mask sub = diff;; sub = (sub - 1) & diff) {
          if (auto r = one(static_cast<Mask>(tm), base | sub)) return *r;
          if (sub == 0) break;
        }
      }
      return make_report(property, Verdict::Holds, {}, trials, opt.seed,
                         "exhaustive over all theories and full intervals");
    }
    for (std::uint32_t i = 0; i < opt.premise_trials; ++i) {
      Mask tm = static_cast<Mask>(rng.below(classes));
      Mask base = o.on_theory(Theory(tm)).models() & tm;
      Mask diff = tm & ~base;
      for (std::uint32_t j = 0; j < opt.subset_trials; ++j) {
        Mask sub = static_cast<Mask>(rng.below(std::uint64_t{1}
                                               << std::popcount(diff)));
        // Spread the chosen bits over diff.
        Mask ttm = base;
        std::uint32_t bit = 0;
        for (std::uint32_t k = 0; k < 32 && (diff >> k) != 0; ++k)
          if ((diff >> k) & 1u) {
            if ((sub >> bit) & 1u) ttm |= Mask{1} << k;
            ++bit;
          }
        if (auto r = one(tm, ttm)) return *r;
      }
    }
    return make_report(property, Verdict::HoldsOnSample, {}, trials, opt.seed,
                       "sampled theories and interval theories");
  }

  // Raw oracle: sampled subsets x' of o(x); premises exhausted only when
  // the whole premise-times-subset budget fits the cap.
  bool exhaustive_premises =
      !opt.force_sampled && classes <= 16 &&
      (std::uint64_t{1} << classes) * opt.subset_trials <= cap;
  auto one_raw = [&](const FormulaSet& x) -> std::optional<CheckReport> {
    FormulaSet ox = o.on_set(x);
    for (std::uint32_t j = 0; j < opt.subset_trials; ++j) {
      FormulaSet xp = random_subset_of(rng, ox, v);
      FormulaSet combined = x;
      combined.union_with(xp);
      FormulaSet oc = o.on_set(combined);
      ++trials;
      bool bad = ct ? !oc.subset_of(ox) : !ox.subset_of(oc);
      if (bad)
        return make_report(
            property, Verdict::Fails,
            Witness{{"x", to_string(x, v)},
                    {"o(x)", to_string(ox, v)},
                    {"x'", to_string(xp, v)},
                    {"o(x u x')", to_string(oc, v)}},
            trials, opt.seed, "raw domain, sampled subsets");
    }
    return std::nullopt;
  };
  if (exhaustive_premises) {
    std::uint64_t total = std::uint64_t{1} << classes;
    for (std::uint64_t counter = 0; counter < total; ++counter)
      if (auto r = one_raw(set_from_counter(counter, v))) return *r;
  } else {
    for (std::uint32_t i = 0; i < opt.premise_trials; ++i)
      if (auto r = one_raw(random_set(rng, v))) return *r;
  }
  return make_report(property, Verdict::HoldsOnSample, {}, trials, opt.seed,
                     exhaustive_premises
                         ? "exhaustive premise sets, sampled subsets"
                         : "sampled premise sets and subsets");
}

}  // namespace

CheckReport check_ct(const EntailOracle& o, const CheckOptions& opt) {
  return check_cumul(o, opt, /*ct=*/true);
}

CheckReport check_cm(const EntailOracle& o, const CheckOptions& opt) {
  return check_cumul(o, opt, /*ct=*/false);
}

CheckReport check_precirc(const EntailOracle& o, const CheckOptions& opt) {
  const Vocab& v = o.vocab;
  const std::uint64_t cap = effective_cap(opt);
  const std::uint64_t classes = v.class_count();
  Rng rng(opt.seed);
  std::uint64_t trials = 0;

  if (theory_respecting(o)) {
    // The left side and closed outputs hold structurally: the oracle is a
    // function of the premise theory and produces theories. Extensivity
    // remains to check.
    bool exhaustive = !opt.force_sampled && classes <= cap;
    std::uint64_t count = exhaustive ? classes : opt.premise_trials;
    for (std::uint64_t i = 0; i < count; ++i) {
      Mask tm = exhaustive ? static_cast<Mask>(i)
                           : static_cast<Mask>(rng.below(classes));
      Mask ot = o.on_theory(Theory(tm)).models();
      ++trials;
      if (!mask_subset(ot, tm))
        return make_report("precirc", Verdict::Fails,
                           Witness{{"side", "extensivity"},
                                   {"T", to_bitstring(tm, v)},
                                   {"o(T)", to_bitstring(ot, v)}},
                           trials, opt.seed, "theory domain");
    }
    return make_report(
        "precirc", exhaustive ? Verdict::Holds : Verdict::HoldsOnSample, {},
        trials, opt.seed,
        "left side and closed outputs hold structurally for a "
        "theory-respecting oracle; extensivity " +
            std::string(exhaustive ? "exhaustive over all theories"
                                   : "sampled"));
  }

  auto check_one = [&](const FormulaSet& x,
                       const FormulaSet& ox) -> std::optional<CheckReport> {
    ++trials;
    if (!x.subset_of(ox))
      return make_report("precirc", Verdict::Fails,
                         Witness{{"side", "extensivity"},
                                 {"x", to_string(x, v)},
                                 {"o(x)", to_string(ox, v)}},
                         trials, opt.seed, "raw domain");
    Theory closed = closure(ox, v);
    FormulaSet expected = FormulaSet::entailed_by(closed, v);
    if (ox != expected) {
      // Least class separating the output from its closure.
      Mask missing = 0;
      for (std::uint64_t c = 0; c < classes; ++c) {
        SemFormula f(static_cast<Mask>(c));
        if (expected.contains(f) != ox.contains(f)) {
          missing = f.models();
          break;
        }
      }
      return make_report("precirc", Verdict::Fails,
                         Witness{{"side", "right"},
                                 {"x", to_string(x, v)},
                                 {"o(x)", to_string(ox, v)},
                                 {"closure", to_bitstring(closed.models(), v)},
                                 {"class", to_bitstring(missing, v)}},
                         trials, opt.seed, "raw domain");
    }
    return std::nullopt;
  };

  bool exhaustive =
      !opt.force_sampled && classes <= 16 &&
      (std::uint64_t{1} << classes) <= cap;
  if (exhaustive) {
    // Single pass: extensivity and closedness per set, plus the left side
    // by bucketing outputs per closure value.
    std::vector<std::optional<std::pair<std::uint64_t, FormulaSet>>> buckets(
        classes);
    std::uint64_t total = std::uint64_t{1} << classes;
    for (std::uint64_t counter = 0; counter < total; ++counter) {
      FormulaSet x = set_from_counter(counter, v);
      FormulaSet ox = o.on_set(x);
      if (auto r = check_one(x, ox)) return *r;
      Mask key = closure(x, v).models();
      if (!buckets[key]) {
        buckets[key] = {counter, ox};
      } else if (buckets[key]->second != ox) {
        FormulaSet x1 = set_from_counter(buckets[key]->first, v);
        return make_report(
            "precirc", Verdict::Fails,
            Witness{{"side", "left"},
                    {"x1", to_string(x1, v)},
                    {"o(x1)", to_string(buckets[key]->second, v)},
                    {"x2", to_string(x, v)},
                    {"o(x2)", to_string(ox, v)},
                    {"closure", to_bitstring(key, v)}},
            trials, opt.seed, "raw domain, exhaustive");
      }
    }
    return make_report("precirc", Verdict::Holds, {}, trials, opt.seed,
                       "exhaustive over all premise sets (left side via "
                       "closure buckets)");
  }

  for (std::uint32_t i = 0; i < opt.premise_trials; ++i) {
    Theory t(static_cast<Mask>(rng.below(classes)));
    FormulaSet x1 = random_presentation(rng, t, v);
    FormulaSet x2 = random_presentation(rng, t, v);
    FormulaSet o1 = o.on_set(x1);
    FormulaSet o2 = o.on_set(x2);
    if (auto r = check_one(x1, o1)) return *r;
    if (auto r = check_one(x2, o2)) return *r;
    ++trials;
    if (o1 != o2)
      return make_report("precirc", Verdict::Fails,
                         Witness{{"side", "left"},
                                 {"x1", to_string(x1, v)},
                                 {"o(x1)", to_string(o1, v)},
                                 {"x2", to_string(x2, v)},
                                 {"o(x2)", to_string(o2, v)},
                                 {"closure", to_bitstring(t.models(), v)}},
                         trials, opt.seed, "raw domain, sampled");
  }
  return make_report("precirc", Verdict::HoldsOnSample, {}, trials, opt.seed,
                     "sampled equivalent presentations per theory");
}

CheckReport check_supra_entail(const EntailOracle& o,
                               const CheckOptions& opt) {
  const Vocab& v = o.vocab;
  const std::uint64_t cap = effective_cap(opt);
  const std::uint64_t classes = v.class_count();
  Rng rng(opt.seed);
  std::uint64_t trials = 0;

  if (theory_respecting(o)) {
    // Th(T) = T on the theory domain, so supra classicality is extensivity.
    bool exhaustive = !opt.force_sampled && classes <= cap;
    std::uint64_t count = exhaustive ? classes : opt.premise_trials;
    for (std::uint64_t i = 0; i < count; ++i) {
      Mask tm = exhaustive ? static_cast<Mask>(i)
                           : static_cast<Mask>(rng.below(classes));
      Mask ot = o.on_theory(Theory(tm)).models();
      ++trials;
      if (!mask_subset(ot, tm))
        return make_report("supra", Verdict::Fails,
                           Witness{{"T", to_bitstring(tm, v)},
                                   {"o(T)", to_bitstring(ot, v)}},
                           trials, opt.seed, "theory domain");
    }
    return make_report("supra",
                       exhaustive ? Verdict::Holds : Verdict::HoldsOnSample,
                       {}, trials, opt.seed,
                       exhaustive ? "exhaustive over all theories"
                                  : "sampled theories");
  }

  auto one = [&](const FormulaSet& x) -> std::optional<CheckReport> {
    FormulaSet ox = o.on_set(x);
    Theory t = closure(x, v);
    FormulaSet entailed = FormulaSet::entailed_by(t, v);
    ++trials;
    if (!entailed.subset_of(ox)) {
      Mask missing = 0;
      for (std::uint64_t c = 0; c < classes; ++c) {
        SemFormula f(static_cast<Mask>(c));
        if (entailed.contains(f) && !ox.contains(f)) {
          missing = f.models();
          break;
        }
      }
      return make_report("supra", Verdict::Fails,
                         Witness{{"x", to_string(x, v)},
                                 {"closure", to_bitstring(t.models(), v)},
                                 {"class", to_bitstring(missing, v)},
                                 {"o(x)", to_string(ox, v)}},
                         trials, opt.seed, "raw domain");
    }
    return std::nullopt;
  };

  bool exhaustive =
      !opt.force_sampled && classes <= 16 &&
      (std::uint64_t{1} << classes) <= cap;
  if (exhaustive) {
    std::uint64_t total = std::uint64_t{1} << classes;
    for (std::uint64_t counter = 0; counter < total; ++counter)
      if (auto r = one(set_from_counter(counter, v))) return *r;
    return make_report("supra", Verdict::Holds, {}, trials, opt.seed,
                       "exhaustive over all premise sets");
  }
  for (std::uint32_t i = 0; i < opt.premise_trials; ++i)
    if (auto r = one(random_set(rng, v))) return *r;
  return make_report("supra", Verdict::HoldsOnSample, {}, trials, opt.seed,
                     "sampled premise sets");
}

CheckReport check_equal(const EntailOracle& o1, const EntailOracle& o2,
                        const CheckOptions& opt) {
  if (o1.vocab != o2.vocab)
    throw Error("cannot compare entailments over different vocabularies");
  const Vocab& v = o1.vocab;
  const std::uint64_t cap = effective_cap(opt);
  const std::uint64_t classes = v.class_count();
  Rng rng(opt.seed);
  std::uint64_t trials = 0;

  bool both_theory = theory_respecting(o1) && theory_respecting(o2);
  if (classes > cap)
    throw SizeGuardError("theory domain spans " + std::to_string(classes) +
                         " cases, above the cap " + std::to_string(cap));

  auto value_at_theory = [&](const EntailOracle& o,
                             const Theory& t) -> FormulaSet {
    if (theory_respecting(o))
      return FormulaSet::entailed_by(o.on_theory(t), v);
    return o.on_set(FormulaSet::entailed_by(t, v));
  };

  for (std::uint64_t tm = 0; tm < classes; ++tm) {
    Theory t(static_cast<Mask>(tm));
    FormulaSet left = value_at_theory(o1, t);
    FormulaSet right = value_at_theory(o2, t);
    ++trials;
    if (left != right)
      return make_report("equal", Verdict::Fails,
                         Witness{{"domain", "theory"},
                                 {"T", to_bitstring(static_cast<Mask>(tm), v)},
                                 {"left", to_string(left, v)},
                                 {"right", to_string(right, v)}},
                         trials, opt.seed, "theory domain");
  }
  if (both_theory)
    return make_report("equal", Verdict::Holds, {}, trials, opt.seed,
                       "exhaustive over all theories");

  for (std::uint32_t i = 0; i < opt.premise_trials; ++i) {
    FormulaSet x = random_set(rng, v);
    FormulaSet left = o1.on_set(x);
    FormulaSet right = o2.on_set(x);
    ++trials;
    if (left != right)
      return make_report("equal", Verdict::Fails,
                         Witness{{"domain", "raw"},
                                 {"x", to_string(x, v)},
                                 {"left", to_string(left, v)},
                                 {"right", to_string(right, v)}},
                         trials, opt.seed, "sampled raw premise sets");
  }
  return make_report("equal", Verdict::HoldsOnSample, {}, trials, opt.seed,
                     "exhaustive over all theories plus sampled raw premise "
                     "sets");
}

std::string render_report(const CheckReport& r) {
  std::string out;
  out += "property: " + r.property + "\n";
  out += "verdict: " + to_string(r.verdict) + "\n";
  out += "coverage: " + r.coverage + "\n";
  out += "trials: " + std::to_string(r.trials) + "\n";
  out += "seed: " + std::to_string(r.seed) + "\n";
  for (const auto& [key, value] : r.witness)
    out += "witness." + key + ": " + value + "\n";
  return out;
}

}  // namespace prefent
