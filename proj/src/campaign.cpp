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

#include "prefent/campaign.hpp"

#include <chrono>
#include <unordered_set>

#include <json.hpp>

#include "prefent/checks.hpp"
#include "prefent/translate.hpp"

namespace prefent {

namespace {

struct ClaimInfo {
  Claim claim;
  const char* id;
  bool expects_witness;
};

constexpr ClaimInfo kClaims[] = {
    {Claim::P3_6, "P3.6", false},
    {Claim::P3_10, "P3.10", false},
    {Claim::Idem, "IDEM", false},
    {Claim::Tarski, "TARSKI", false},
    {Claim::CnSub, "CN-SUB", false},
    {Claim::KlmToMak, "T-KLM2MAK", false},
    {Claim::Equiv, "T-EQUIV", false},
    {Claim::Supra, "T-SUPRA", false},
    {Claim::RAnd, "R-AND", false},
    {Claim::ROr, "R-OR", false},
    {Claim::SmoothCm, "SMOOTH-CM", false},
    {Claim::Constr, "CONSTR", false},
    {Claim::NonMono, "NONMONO", true},
    {Claim::NonClose, "NONCLOSE", true},
    {Claim::SingLimit, "SING-LIMIT", true},
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial + 0x9e3779b97f4a7c15ull));
}

// Per-trial sampling sizes for the sampled sweeps.
constexpr std::uint32_t kPremiseSamples = 100;
constexpr std::uint32_t kSubsetSamples = 50;

std::string describe_check(const CheckReport& r) { return render_report(r); }

std::string model_block(const std::string& text) {
  return "model:\n" + text;
}

}  // namespace

std::optional<Claim> claim_from_string(std::string_view s) {
  for (const ClaimInfo& info : kClaims)
    if (s == info.id) return info.claim;
  return std::nullopt;
}

std::string to_string(Claim c) {
  for (const ClaimInfo& info : kClaims)
    if (info.claim == c) return info.id;
  return "?";
}

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> out;
    for (const ClaimInfo& info : kClaims) out.push_back(info.claim);
    return out;
  }();
  return claims;
}

bool claim_expects_witness(Claim c) {
  for (const ClaimInfo& info : kClaims)
    if (info.claim == c) return info.expects_witness;
  return false;
}

bool CampaignResult::expected_outcome() const {
  if (!expects_witness) return failures == 0;
  if (witness_optional) return true;
  return failures >= 1;
}

namespace {

// One positive trial body per claim; returns a violation description, or
// nothing when the trial passes.
using TrialBody =
    std::function<std::optional<std::string>(std::uint64_t trial)>;

void run_positive(CampaignResult& result, std::uint64_t trials,
                  const TrialBody& body) {
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++result.trials_run;
    if (auto violation = body(trial)) {
      ++result.failures;
      if (!result.counterexample) result.counterexample = *violation;
    }
  }
}

std::optional<std::string> nonmono_witness(const MakModel& m, Rng& rng,
                                           std::uint32_t attempts) {
  const Vocab& v = m.vocab();
  for (std::uint32_t i = 0; i < attempts; ++i) {
    FormulaSet x = FormulaSet::empty(v);
    double density = rng.unit();
    for (std::uint64_t c = 0; c < v.class_count(); ++c)
      if (rng.chance(density)) x.insert(SemFormula(static_cast<Mask>(c)));
    FormulaSet y = x;
    double extra = rng.unit();
    for (std::uint64_t c = 0; c < v.class_count(); ++c)
      if (rng.chance(extra)) y.insert(SemFormula(static_cast<Mask>(c)));
    FormulaSet ox = mak_entail(m, x);
    FormulaSet oy = mak_entail(m, y);
    if (!ox.subset_of(oy)) {
      Mask lost = 0;
      for (std::uint64_t c = 0; c < v.class_count(); ++c) {
        SemFormula f(static_cast<Mask>(c));
        if (ox.contains(f) && !oy.contains(f)) {
          lost = f.models();
          break;
        }
      }
      return model_block(serialize_mak(m)) + "x: " + to_string(x, v) +
             "\ny: " + to_string(y, v) + "\nC(x): " + to_string(ox, v) +
             "\nC(y): " + to_string(oy, v) +
             "\nlost-class: " + to_bitstring(lost, v) + "\n";
    }
  }
  return std::nullopt;
}

std::optional<std::string> nonclose_witness(const MakModel& m, Rng& rng,
                                            std::uint32_t attempts) {
  const Vocab& v = m.vocab();
  for (std::uint32_t i = 0; i < attempts; ++i) {
    FormulaSet x = FormulaSet::empty(v);
    if (i > 0) {  // try the empty premise set first
      double density = rng.unit();
      for (std::uint64_t c = 0; c < v.class_count(); ++c)
        if (rng.chance(density)) x.insert(SemFormula(static_cast<Mask>(c)));
    }
    FormulaSet ox = mak_entail(m, x);
    if (ox.is_everything()) continue;
    std::optional<std::string> found;
    ox.for_each([&](Mask conj) {
      if (found) return;
      // Any superset class f of conj is a conjunct: f & conj == conj.
      Mask comp = v.full_mask() & ~conj;
      for (Mask sub = comp; sub != 0; sub = (sub - 1) & comp) {
        Mask f = conj | sub;
        if (!ox.contains(SemFormula(f))) {
          found = model_block(serialize_mak(m)) + "x: " + to_string(x, v) +
                  "\nC(x): " + to_string(ox, v) +
                  "\nconjunction: " + to_bitstring(conj, v) +
                  "\nmissing-conjunct: " + to_bitstring(f, v) + "\n";
          return;
        }
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

// Packs a table over <= 16 theories into one word (entries are <= 4 bits).
std::uint64_t encode_table(const PrecircTable& f) {
  std::uint64_t key = 0;
  for (std::uint64_t t = 0; t < f.theory_count(); ++t)
    key |= static_cast<std::uint64_t>(f.apply_mask(static_cast<Mask>(t)))
           << (t * f.vocab().interp_count());
  return key;
}

// Every table realized by a strictly singular model: states are the
// complete theories, only the preference relation varies.
std::unordered_set<std::uint64_t> singular_tables(const Vocab& v) {
  std::uint32_t n = v.interp_count();
  std::vector<std::string> names;
  std::vector<Theory> labels;
  for (std::uint32_t k = 0; k < n; ++k) {
    labels.push_back(Theory(Mask{1} << k));
    names.push_back(canonical_theory_name(labels.back(), v));
  }
  std::unordered_set<std::uint64_t> tables;
  std::uint64_t relations = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < relations; ++bits) {
    PrefPairs pref;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if ((bits >> (a * n + b)) & 1u) pref.emplace_back(a, b);
    KlmModel m(v, names, labels, std::move(pref));
    tables.insert(encode_table(tabulate(m)));
  }
  return tables;
}

}  // namespace

CampaignResult run_campaign(Claim claim, std::uint64_t trials,
                            const GenSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  CampaignResult result;
  result.claim = to_string(claim);
  result.seed = spec.seed;
  result.vocab_size = spec.vocab_size;
  result.expects_witness = claim_expects_witness(claim);
  result.witness_optional = claim == Claim::SingLimit;

  CheckOptions sampled_opt;
  sampled_opt.premise_trials = kPremiseSamples;
  sampled_opt.subset_trials = kSubsetSamples;
  sampled_opt.force_sampled = true;

  switch (claim) {
    case Claim::P3_6: {
      result.coverage =
          "per trial: tabulated KLM entailment, check_precirc and check_ct "
          "exhaustive over all theories and full intervals";
      run_positive(result, trials, [&](std::uint64_t trial) {
        KlmModel m = gen_klm(spec.with_seed(derive_seed(spec.seed, trial)));
        EntailOracle oracle = EntailOracle::from_table(tabulate(m));
        for (const CheckReport& r :
             {check_precirc(oracle), check_ct(oracle)}) {
          if (r.verdict == Verdict::Fails)
            return std::optional<std::string>(model_block(serialize_klm(m)) +
                                              describe_check(r));
        }
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::P3_10: {
      result.coverage = "per trial: extensivity on " +
                        std::to_string(kPremiseSamples) +
                        " sampled premise sets; (CT) on " +
                        std::to_string(kPremiseSamples) + " premise sets x " +
                        std::to_string(kSubsetSamples) + " subsets";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        MakModel m = gen_mak(spec.with_seed(s));
        const Vocab& v = m.vocab();
        Rng rng(splitmix64(s));
        for (std::uint32_t i = 0; i < kPremiseSamples; ++i) {
          FormulaSet x = FormulaSet::empty(v);
          double density = rng.unit();
          for (std::uint64_t c = 0; c < v.class_count(); ++c)
            if (rng.chance(density))
              x.insert(SemFormula(static_cast<Mask>(c)));
          FormulaSet ox = mak_entail(m, x);
          if (!x.subset_of(ox))
            return std::optional<std::string>(
                model_block(serialize_mak(m)) + "extensivity at x: " +
                to_string(x, v) + "\nC(x): " + to_string(ox, v) + "\n");
        }
        CheckOptions opt = sampled_opt;
        opt.seed = s;
        CheckReport ct = check_ct(EntailOracle::from_mak(m), opt);
        if (ct.verdict == Verdict::Fails)
          return std::optional<std::string>(model_block(serialize_mak(m)) +
                                            describe_check(ct));
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::Idem: {
      result.coverage = "per trial: C(C(x)) = C(x) on " +
                        std::to_string(kPremiseSamples) +
                        " sampled premise sets";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        MakModel m = gen_mak(spec.with_seed(s));
        const Vocab& v = m.vocab();
        Rng rng(splitmix64(s));
        for (std::uint32_t i = 0; i < kPremiseSamples; ++i) {
          FormulaSet x = FormulaSet::empty(v);
          double density = rng.unit();
          for (std::uint64_t c = 0; c < v.class_count(); ++c)
            if (rng.chance(density))
              x.insert(SemFormula(static_cast<Mask>(c)));
          FormulaSet ox = mak_entail(m, x);
          FormulaSet oox = mak_entail(m, ox);
          if (!(oox == ox))
            return std::optional<std::string>(
                model_block(serialize_mak(m)) + "x: " + to_string(x, v) +
                "\nC(x): " + to_string(ox, v) +
                "\nC(C(x)): " + to_string(oox, v) + "\n");
        }
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::Tarski: {
      result.coverage =
          "per trial: check_tarski on Cn (sampled) plus Cn(Cn(s)) = Cn(s) "
          "for every state";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        MakModel m = gen_mak(spec.with_seed(s));
        CheckOptions opt = sampled_opt;
        opt.seed = s;
        CheckReport r = check_tarski(EntailOracle::from_mak_cn(m), opt);
        if (r.verdict == Verdict::Fails)
          return std::optional<std::string>(model_block(serialize_mak(m)) +
                                            describe_check(r));
        for (StateIndex st = 0; st < m.state_count(); ++st) {
          FormulaSet cn = cn_entail(m, m.sat(st));
          if (!(cn == m.sat(st)))
            return std::optional<std::string>(
                model_block(serialize_mak(m)) + "state: " + m.state_name(st) +
                "\nCn(s): " + to_string(m.sat(st), m.vocab()) +
                "\nCn(Cn(s)): " + to_string(cn, m.vocab()) + "\n");
        }
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::CnSub: {
      result.coverage = "per trial: Cn(x) included in C_MAK(x) on " +
                        std::to_string(2 * kPremiseSamples) +
                        " sampled premise sets";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        MakModel m = gen_mak(spec.with_seed(s));
        const Vocab& v = m.vocab();
        Rng rng(splitmix64(s));
        for (std::uint32_t i = 0; i < 2 * kPremiseSamples; ++i) {
          FormulaSet x = FormulaSet::empty(v);
          double density = rng.unit();
          for (std::uint64_t c = 0; c < v.class_count(); ++c)
            if (rng.chance(density))
              x.insert(SemFormula(static_cast<Mask>(c)));
          FormulaSet cn = cn_entail(m, x);
          FormulaSet cm = mak_entail(m, x);
          if (!cn.subset_of(cm))
            return std::optional<std::string>(
                model_block(serialize_mak(m)) + "x: " + to_string(x, v) +
                "\nCn(x): " + to_string(cn, v) +
                "\nC_MAK(x): " + to_string(cm, v) + "\n");
        }
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::KlmToMak: {
      result.coverage =
          "per trial: check_equal(klm_entail, mak_entail of the passage) "
          "exhaustive over theories plus sampled raw sets; translated model "
          "supra classical";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        KlmModel m = gen_klm(spec.with_seed(s));
        MakModel mm = klm_to_mak(m);
        if (!is_supra_classical(mm))
          return std::optional<std::string>(
              model_block(serialize_klm(m)) +
              "translated model is not supra classical\n");
        CheckOptions opt;
        opt.seed = s;
        opt.premise_trials = kPremiseSamples;
        CheckReport r = check_equal(EntailOracle::from_klm(m),
                                    EntailOracle::from_mak(mm), opt);
        if (r.verdict == Verdict::Fails)
          return std::optional<std::string>(model_block(serialize_klm(m)) +
                                            describe_check(r));
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::Equiv: {
      result.coverage =
          "per trial: exhaustive check_precirc on C_MAK; failing models need "
          "no KLM witness (KLM entailments are pre-circumscriptions); "
          "passing supra models must equal their KLM passage; passing "
          "non-supra cumulative tables must validate through the "
          "construction";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        MakModel m = gen_mak(spec.with_seed(s));
        CheckOptions opt;
        opt.seed = s;
        CheckReport pre = check_precirc(EntailOracle::from_mak(m), opt);
        if (pre.verdict == Verdict::Fails) return std::optional<std::string>();
        if (is_supra_classical(m)) {
          CheckOptions eq_opt;
          eq_opt.seed = s;
          eq_opt.premise_trials = kPremiseSamples;
          CheckReport r = check_equal(EntailOracle::from_mak(m),
                                      EntailOracle::from_klm(mak_to_klm(m)),
                                      eq_opt);
          if (r.verdict == Verdict::Fails)
            return std::optional<std::string>(model_block(serialize_mak(m)) +
                                              describe_check(r));
          return std::optional<std::string>();
        }
        // Pre-circumscription through an unclassical satisfaction relation:
        // tabulate through theory premises and run the construction.
        const Vocab& v = m.vocab();
        std::vector<Mask> map(v.class_count());
        for (std::uint64_t t = 0; t < v.class_count(); ++t) {
          FormulaSet out = mak_entail(
              m, FormulaSet::entailed_by(Theory(static_cast<Mask>(t)), v));
          map[t] = closure(out, v).models();
        }
        PrecircTable table(v, std::move(map));
        ConstructOptions copt;
        copt.allow_ct_only = true;
        Construction built = precirc_to_simplified_klm(table, copt);
        CheckReport cm = check_cm(EntailOracle::from_table(table));
        if (cm.verdict != Verdict::Fails && !built.report.validated)
          return std::optional<std::string>(
              model_block(serialize_mak(m)) +
              "cumulative non-supra pre-circumscription failed to validate "
              "through the construction\n" +
              serialize_table(table));
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::Supra: {
      result.coverage =
          "per trial both directions: supra MAK -> KLM with states and pref "
          "unmodified and equal entailment; KLM -> MAK supra with equal "
          "entailment";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        GenSpec supra_spec = spec.with_seed(s);
        supra_spec.mak_target = MakTarget::Supra;
        MakModel m = gen_mak(supra_spec);
        KlmModel k = mak_to_klm(m);
        if (k.state_names() != m.state_names() || k.pref() != m.pref())
          return std::optional<std::string>(
              model_block(serialize_mak(m)) +
              "passage modified states or preference relation\n");
        CheckOptions opt;
        opt.seed = s;
        opt.premise_trials = kPremiseSamples;
        CheckReport r1 = check_equal(EntailOracle::from_mak(m),
                                     EntailOracle::from_klm(k), opt);
        if (r1.verdict == Verdict::Fails)
          return std::optional<std::string>(model_block(serialize_mak(m)) +
                                            describe_check(r1));

        KlmModel k2 = gen_klm(spec.with_seed(splitmix64(s)));
        MakModel m2 = klm_to_mak(k2);
        if (!is_supra_classical(m2))
          return std::optional<std::string>(
              model_block(serialize_klm(k2)) +
              "translated model is not supra classical\n");
        CheckReport r2 = check_equal(EntailOracle::from_klm(k2),
                                     EntailOracle::from_mak(m2), opt);
        if (r2.verdict == Verdict::Fails)
          return std::optional<std::string>(model_block(serialize_klm(k2)) +
                                            describe_check(r2));
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::RAnd: {
      result.coverage =
          "per trial: classify_mak on alternating raw/supra models; require "
          "r_and == supra_classical";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        GenSpec g = spec.with_seed(s);
        g.mak_target = trial % 2 == 0 ? MakTarget::Raw : MakTarget::Supra;
        MakModel m = gen_mak(g);
        MakKind kind = classify_mak(m);
        if (kind.r_and != kind.supra_classical)
          return std::optional<std::string>(
              model_block(serialize_mak(m)) +
              "r_and = " + std::to_string(kind.r_and) +
              " but supra_classical = " +
              std::to_string(kind.supra_classical) + "\n");
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::ROr: {
      result.coverage =
          "per trial: classify_mak on alternating raw/classical models; "
          "require r_and and r_neg imply r_or";
      run_positive(result, trials, [&](std::uint64_t trial) {
        std::uint64_t s = derive_seed(spec.seed, trial);
        GenSpec g = spec.with_seed(s);
        g.mak_target = trial % 2 == 0 ? MakTarget::Raw : MakTarget::Classical;
        MakModel m = gen_mak(g);
        MakKind kind = classify_mak(m);
        if (kind.r_and && kind.r_neg && !kind.r_or)
          return std::optional<std::string>(
              model_block(serialize_mak(m)) +
              "r_and and r_neg hold but r_or fails\n");
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::SmoothCm: {
      result.coverage =
          "per trial: smooth model's tabulated entailment passes check_cm "
          "exhaustively";
      run_positive(result, trials, [&](std::uint64_t trial) {
        GenSpec g = spec.with_seed(derive_seed(spec.seed, trial));
        g.klm_target = KlmTarget::Smooth;
        KlmModel m = gen_klm(g);
        CheckReport r = check_cm(EntailOracle::from_table(tabulate(m)));
        if (r.verdict == Verdict::Fails)
          return std::optional<std::string>(model_block(serialize_klm(m)) +
                                            describe_check(r));
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::Constr: {
      result.coverage =
          "per trial: smooth model -> table -> simplified model; require "
          "validated round-trip, simplified, smooth, irreflexive";
      run_positive(result, trials, [&](std::uint64_t trial) {
        GenSpec g = spec.with_seed(derive_seed(spec.seed, trial));
        g.klm_target = KlmTarget::Smooth;
        KlmModel m = gen_klm(g);
        PrecircTable table = tabulate(m);
        std::optional<std::string> violation;
        try {
          Construction built = precirc_to_simplified_klm(table);
          KlmKind kind = classify(built.model);
          if (!built.report.validated)
            violation = "construction did not validate";
          else if (!kind.simplified)
            violation = "constructed model is not simplified";
          else if (!kind.smooth)
            violation = "constructed model is not smooth";
          else if (!built.model.pref_irreflexive())
            violation = "constructed preference relation is reflexive";
        } catch (const Error& e) {
          violation = e.what();
        }
        if (violation)
          return std::optional<std::string>(model_block(serialize_klm(m)) +
                                            *violation + "\n" +
                                            serialize_table(table));
        return std::optional<std::string>();
      });
      break;
    }

    case Claim::NonMono: {
      result.coverage =
          "search: random raw models, sampled premise pairs x included in y "
          "with C(x) not included in C(y)";
      for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ++result.trials_run;
        std::uint64_t s = derive_seed(spec.seed, trial);
        MakModel m = gen_mak(spec.with_seed(s));
        Rng rng(splitmix64(s));
        if (auto w = nonmono_witness(m, rng, 20)) {
          result.failures = 1;
          result.counterexample = *w;
          break;
        }
      }
      break;
    }

    case Claim::NonClose: {
      result.coverage =
          "search: random raw models concluding a conjunction without one "
          "of its conjuncts";
      for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ++result.trials_run;
        std::uint64_t s = derive_seed(spec.seed, trial);
        MakModel m = gen_mak(spec.with_seed(s));
        Rng rng(splitmix64(s));
        if (auto w = nonclose_witness(m, rng, 10)) {
          result.failures = 1;
          result.counterexample = *w;
          break;
        }
      }
      break;
    }

    case Claim::SingLimit: {
      if (spec.vocab_size > 2)
        throw Error("SING-LIMIT supports vocabularies of size 1 and 2");
      Vocab v = default_vocab(spec.vocab_size);
      std::unordered_set<std::uint64_t> realizable = singular_tables(v);
      auto record = [&](const KlmModel& candidate, const PrecircTable& t) {
        result.failures = 1;
        result.counterexample =
            model_block(serialize_klm(candidate)) +
            "table realized by no strictly singular model:\n" +
            serialize_table(t);
      };
      if (spec.vocab_size == 1) {
        // Both sides exhaustive: every KLM entailment at n=1 arises from a
        // simplified model (4 states, 2^16 preference relations).
        result.coverage =
            "exhaustive: all strictly singular tables vs all simplified-"
            "model tables at n=1";
        std::uint64_t relations =
            std::uint64_t{1} << (v.class_count() * v.class_count());
        for (std::uint64_t bits = 0; bits < relations && result.failures == 0;
             ++bits) {
          std::vector<std::string> names;
          std::vector<Theory> labels;
          for (std::uint64_t t = 0; t < v.class_count(); ++t) {
            labels.push_back(Theory(static_cast<Mask>(t)));
            names.push_back(canonical_theory_name(labels.back(), v));
          }
          PrefPairs pref;
          std::uint32_t count = static_cast<std::uint32_t>(v.class_count());
          for (std::uint32_t a = 0; a < count; ++a)
            for (std::uint32_t b = 0; b < count; ++b)
              if ((bits >> (a * count + b)) & 1u) pref.emplace_back(a, b);
          KlmModel candidate(v, std::move(names), std::move(labels),
                             std::move(pref));
          ++result.trials_run;
          PrecircTable table = tabulate(candidate);
          if (!realizable.contains(encode_table(table)))
            record(candidate, table);
        }
      } else {
        result.coverage =
            "exhaustive strictly singular side (65536 preference relations); "
            "seeded random candidate models";
        for (std::uint64_t trial = 0; trial < trials && result.failures == 0;
             ++trial) {
          ++result.trials_run;
          KlmModel candidate =
              gen_klm(spec.with_seed(derive_seed(spec.seed, trial)));
          PrecircTable table = tabulate(candidate);
          if (!realizable.contains(encode_table(table)))
            record(candidate, table);
        }
      }
      break;
    }
  }

  if (result.expects_witness && !result.witness_optional &&
      result.failures == 0)
    throw GenerationError("claim " + result.claim + ": no witness within " +
                          std::to_string(result.trials_run) + " trials");

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::string render_campaign(const CampaignResult& r) {
  std::string out;
  out += "claim: " + r.claim + "\n";
  out += "seed: " + std::to_string(r.seed) + "\n";
  out += "vocab: " + std::to_string(r.vocab_size) + "\n";
  out += "trials: " + std::to_string(r.trials_run) + "\n";
  out += "failures: " + std::to_string(r.failures) + "\n";
  out += "expected: " + std::string(r.expects_witness
                                        ? (r.witness_optional
                                               ? "report-outcome"
                                               : "witness")
                                        : "zero-failures") +
         "\n";
  out += "outcome: " + std::string(r.expected_outcome() ? "pass" : "fail") +
         "\n";
  out += "coverage: " + r.coverage + "\n";
  out += "wall-seconds: " + std::to_string(r.wall_seconds) + "\n";
  if (r.counterexample) {
    out += r.expects_witness ? "witness:\n" : "counterexample:\n";
    out += *r.counterexample;
  }
  return out;
}

std::string campaign_to_json(const CampaignResult& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["seed"] = r.seed;
  j["vocab"] = r.vocab_size;
  j["trials"] = r.trials_run;
  j["failures"] = r.failures;
  j["expected"] = r.expects_witness
                      ? (r.witness_optional ? "report-outcome" : "witness")
                      : "zero-failures";
  j["outcome"] = r.expected_outcome() ? "pass" : "fail";
  j["coverage"] = r.coverage;
  if (r.counterexample)
    j["counterexample"] = *r.counterexample;
  else
    j["counterexample"] = nullptr;
  return j.dump(2) + "\n";
}

}  // namespace prefent
