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
// Independent brute-force oracles for the test suite: literal quantifier
// transcriptions of the model definitions, with no interval reductions, no
// canonical shortcuts and no reuse of the library's satisfaction helpers.
// They only touch the representation invariant (class mask bit mu = truth
// at interpretation mu) and the models' raw accessors.

#ifndef PREFENT_TESTS_NAIVE_HPP_
#define PREFENT_TESTS_NAIVE_HPP_

#include <vector>

#include "prefent/klm.hpp"
#include "prefent/mak.hpp"

namespace naive {

using prefent::KlmModel;
using prefent::MakModel;
using prefent::Mask;
using prefent::SemFormula;
using prefent::StateIndex;
using prefent::Vocab;

inline bool interp_sat(Mask cls, std::uint32_t mu) {
  return (cls >> mu) & 1u;
}

// phi in Th(T): every model of T satisfies phi.
inline bool theory_has(const Vocab& v, Mask theory, Mask cls) {
  for (std::uint32_t mu = 0; mu < v.interp_count(); ++mu)
    if (interp_sat(theory, mu) && !interp_sat(cls, mu)) return false;
  return true;
}

// l(s) |= T: every model of the label satisfies every formula of T.
inline bool klm_state_sat(const KlmModel& m, StateIndex s, Mask theory) {
  const Vocab& v = m.vocab();
  for (std::uint32_t mu = 0; mu < v.interp_count(); ++mu) {
    if (!interp_sat(m.label(s).models(), mu)) continue;
    for (std::uint64_t cls = 0; cls < v.class_count(); ++cls)
      if (theory_has(v, theory, static_cast<Mask>(cls)) &&
          !interp_sat(static_cast<Mask>(cls), mu))
        return false;
  }
  return true;
}

inline std::vector<StateIndex> klm_satisfying(const KlmModel& m, Mask theory) {
  std::vector<StateIndex> out;
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (klm_state_sat(m, s, theory)) out.push_back(s);
  return out;
}

inline std::vector<StateIndex> klm_minimal_states(const KlmModel& m,
                                                  Mask theory) {
  std::vector<StateIndex> sat = klm_satisfying(m, theory);
  std::vector<StateIndex> out;
  for (StateIndex s : sat) {
    bool dominated = false;
    for (auto [a, b] : m.pref()) {
      if (b != s) continue;
      for (StateIndex other : sat)
        if (other == a) dominated = true;
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Membership vector over all classes: the conclusions C_KLM(T).
inline std::vector<bool> klm_conclusions(const KlmModel& m, Mask theory) {
  const Vocab& v = m.vocab();
  std::vector<StateIndex> minimal = klm_minimal_states(m, theory);
  std::vector<bool> out(v.class_count(), false);
  for (std::uint64_t cls = 0; cls < v.class_count(); ++cls) {
    bool in = true;
    for (StateIndex s : minimal) {
      // l(s) |= phi: every model of the label satisfies phi.
      for (std::uint32_t mu = 0; mu < v.interp_count(); ++mu)
        if (interp_sat(m.label(s).models(), mu) &&
            !interp_sat(static_cast<Mask>(cls), mu))
          in = false;
    }
    out[cls] = in;
  }
  return out;
}

// The model set of a conclusion list (for comparing against a Theory).
inline Mask conclusions_models(const Vocab& v, const std::vector<bool>& cs) {
  Mask models = v.full_mask();
  for (std::uint64_t cls = 0; cls < cs.size(); ++cls)
    if (cs[cls]) models &= static_cast<Mask>(cls);
  return models;
}

inline bool mak_state_sat(const MakModel& m, StateIndex s,
                          const std::vector<Mask>& premises) {
  for (Mask phi : premises) {
    bool found = false;
    for (SemFormula member : m.sat(s).to_formulas())
      if (member.models() == phi) found = true;
    if (!found) return false;
  }
  return true;
}

inline std::vector<StateIndex> mak_minimal_states(
    const MakModel& m, const std::vector<Mask>& premises) {
  std::vector<StateIndex> sat;
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (mak_state_sat(m, s, premises)) sat.push_back(s);
  std::vector<StateIndex> out;
  for (StateIndex s : sat) {
    bool dominated = false;
    for (auto [a, b] : m.pref()) {
      if (b != s) continue;
      for (StateIndex other : sat)
        if (other == a) dominated = true;
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

inline std::vector<bool> mak_conclusions(const MakModel& m,
                                         const std::vector<Mask>& premises) {
  const Vocab& v = m.vocab();
  std::vector<StateIndex> minimal = mak_minimal_states(m, premises);
  std::vector<bool> out(v.class_count(), false);
  for (std::uint64_t cls = 0; cls < v.class_count(); ++cls) {
    bool in = true;
    for (StateIndex s : minimal)
      if (!mak_state_sat(m, s, {static_cast<Mask>(cls)})) in = false;
    out[cls] = in;
  }
  return out;
}

inline std::vector<bool> cn_conclusions(const MakModel& m,
                                        const std::vector<Mask>& premises) {
  const Vocab& v = m.vocab();
  std::vector<StateIndex> sat;
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (mak_state_sat(m, s, premises)) sat.push_back(s);
  std::vector<bool> out(v.class_count(), false);
  for (std::uint64_t cls = 0; cls < v.class_count(); ++cls) {
    bool in = true;
    for (StateIndex s : sat)
      if (!mak_state_sat(m, s, {static_cast<Mask>(cls)})) in = false;
    out[cls] = in;
  }
  return out;
}

inline bool is_smooth(const KlmModel& m) {
  const Vocab& v = m.vocab();
  for (std::uint64_t theory = 0; theory < v.class_count(); ++theory) {
    std::vector<StateIndex> sat =
        klm_satisfying(m, static_cast<Mask>(theory));
    std::vector<StateIndex> minimal =
        klm_minimal_states(m, static_cast<Mask>(theory));
    for (StateIndex s : sat) {
      bool is_min = false;
      for (StateIndex w : minimal)
        if (w == s) is_min = true;
      if (is_min) continue;
      bool minorated = false;
      for (StateIndex w : minimal) {
        for (auto [a, b] : m.pref())
          if (a == w && b == s) minorated = true;
      }
      if (!minorated) return false;
    }
  }
  return true;
}

}  // namespace naive

#endif  // PREFENT_TESTS_NAIVE_HPP_
