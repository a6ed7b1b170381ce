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
// Finite classical propositional semantics. Everything downstream builds on
// three finite spaces fixed by a vocabulary of n symbols:
//
//   - interpretations: the 2^n truth assignments, indexed 0 .. 2^n-1 with the
//     FIRST vocabulary symbol as the most significant bit (truth-table order);
//   - model sets: subsets of the interpretations, stored as bitmasks with
//     bit k <-> interpretation k;
//   - classes: the 2^(2^n) semantic equivalence classes of formulas, each
//     identified with its model-set mask.
//
// A formula is identified with its equivalence class (a SemFormula). A theory
// is identified with its set of models; formula-set containment of theories
// reverses model-set containment. The canonical order used everywhere (for
// enumeration, tie-breaking and reports) is ascending mask value, i.e. the
// lexicographic order of characteristic bitstrings written with the last
// interpretation leftmost.

#ifndef PREFENT_LOGIC_HPP_
#define PREFENT_LOGIC_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefent/errors.hpp"

namespace prefent {

/// A set of interpretations, bit k = canonical interpretation k.
using Mask = std::uint32_t;

/// Largest supported vocabulary. 2^5 = 32 interpretations fit a Mask and
/// the 2^32 classes still have a representable count.
inline constexpr std::size_t kMaxVocabSize = 5;

/// Largest vocabulary for which per-state satisfied-formula sets (bitsets
/// over the class space) are materializable: 2^(2^4) = 65536 classes.
inline constexpr std::size_t kMaxClassSpaceVocabSize = 4;

/// Global size cap for enumerative sweeps, overridable through the
/// PREFENT_SIZE_CAP environment variable. Default 65536 cases.
std::uint64_t default_size_cap();

inline bool mask_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

/// An ordered, duplicate-free list of proposition names. The order is fixed
/// at construction and indexes interpretations.
class Vocab {
 public:
  explicit Vocab(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  /// 2^n interpretations.
  std::uint32_t interp_count() const noexcept {
    return std::uint32_t{1} << symbols_.size();
  }
  /// 2^(2^n) semantic classes (= theories).
  std::uint64_t class_count() const noexcept {
    return std::uint64_t{1} << interp_count();
  }
  /// Mask holding every interpretation.
  Mask full_mask() const noexcept {
    return interp_count() >= 32 ? ~Mask{0}
                                : (Mask{1} << interp_count()) - 1;
  }

  bool operator==(const Vocab&) const = default;

 private:
  std::vector<std::string> symbols_;
};

/// One truth assignment, identified with the set of symbols it makes true.
class Interpretation {
 public:
  explicit Interpretation(std::uint32_t index) noexcept : index_(index) {}

  std::uint32_t index() const noexcept { return index_; }

  /// Truth of the i-th vocabulary symbol. The first symbol is the most
  /// significant bit of the index.
  bool is_true(const Vocab& v, std::size_t symbol_index) const {
    return (index_ >> (v.size() - 1 - symbol_index)) & 1u;
  }

  /// Renders as the set of true symbols, e.g. "{p,q}" or "{}".
  std::string to_string(const Vocab& v) const;

  bool operator==(const Interpretation&) const = default;

 private:
  std::uint32_t index_;
};

/// An equivalence class of formulas, identified with its model set.
class SemFormula {
 public:
  SemFormula() noexcept : models_(0) {}
  explicit SemFormula(Mask models) noexcept : models_(models) {}

  Mask models() const noexcept { return models_; }

  bool operator==(const SemFormula&) const = default;

 private:
  Mask models_;
};

/// A deductively closed formula set, identified with its model set. The
/// empty model set is the inconsistent theory L; the full model set is the
/// theory of the tautologies.
class Theory {
 public:
  Theory() noexcept : models_(0) {}
  explicit Theory(Mask models) noexcept : models_(models) {}

  Mask models() const noexcept { return models_; }

  /// Formula membership: phi is in T iff every model of T satisfies phi.
  bool contains(SemFormula f) const noexcept {
    return mask_subset(models_, f.models());
  }
  /// T entails T1 iff every model of T is a model of T1.
  bool entails(const Theory& t) const noexcept {
    return mask_subset(models_, t.models());
  }
  bool is_inconsistent() const noexcept { return models_ == 0; }
  /// Complete theories correspond one-to-one with interpretations.
  bool is_complete() const noexcept { return std::popcount(models_) == 1; }

  bool operator==(const Theory&) const = default;

 private:
  Mask models_;
};

inline bool entails(const Theory& t, SemFormula f) noexcept {
  return t.contains(f);
}
inline bool is_complete(const Theory& t) noexcept { return t.is_complete(); }

/// A finite set of SemFormulas with no closure requirement: the carrier for
/// MAK-side satisfied-formula sets and premise sets. Stored densely as a
/// bitset over the full class space of its vocabulary, so intersection,
/// union, containment and equality are word operations and the "everything"
/// value (all classes, the formula set L) is an ordinary, canonically equal
/// value rather than a special case. Only constructible for vocabularies of
/// size <= kMaxClassSpaceVocabSize.
class FormulaSet {
 public:
  static FormulaSet empty(const Vocab& v);
  static FormulaSet everything(const Vocab& v);
  static FormulaSet of(const Vocab& v, const std::vector<SemFormula>& fs);
  static FormulaSet of_masks(const Vocab& v, const std::vector<Mask>& masks);
  /// The deductively closed set { f : t entails f }.
  static FormulaSet entailed_by(const Theory& t, const Vocab& v);

  std::uint32_t class_count() const noexcept { return class_count_; }

  bool contains(SemFormula f) const noexcept {
    return (bits_[f.models() >> 6] >> (f.models() & 63u)) & 1u;
  }
  void insert(SemFormula f) noexcept {
    bits_[f.models() >> 6] |= std::uint64_t{1} << (f.models() & 63u);
  }
  void erase(SemFormula f) noexcept {
    bits_[f.models() >> 6] &= ~(std::uint64_t{1} << (f.models() & 63u));
  }

  bool subset_of(const FormulaSet& other) const;
  bool is_empty() const;
  bool is_everything() const;
  std::uint64_t size() const;

  void intersect_with(const FormulaSet& other);
  void union_with(const FormulaSet& other);

  /// Member classes in canonical (ascending mask) order.
  std::vector<SemFormula> to_formulas() const;

  /// Calls fn(Mask) for each member class in canonical order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(word));
        fn(static_cast<Mask>((w << 6) + bit));
        word &= word - 1;
      }
    }
  }

  bool operator==(const FormulaSet&) const = default;

 private:
  explicit FormulaSet(std::uint32_t class_count);

  std::uint32_t class_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Deductive closure Th(X): the theory whose models are the interpretations
/// satisfying every member of X. Th({}) is the theory of the tautologies.
Theory closure(const FormulaSet& fs, const Vocab& v);

/// Exhaustive, duplicate-free enumerations in canonical order. The class-
/// level enumerations raise SizeGuardError when 2^(2^n) exceeds the cap.
std::vector<Interpretation> enumerate_interpretations(const Vocab& v);
std::vector<SemFormula> enumerate_semformulas(const Vocab& v,
                                              std::uint64_t cap);
std::vector<Theory> enumerate_theories(const Vocab& v, std::uint64_t cap);
std::vector<SemFormula> enumerate_semformulas(const Vocab& v);
std::vector<Theory> enumerate_theories(const Vocab& v);

/// Characteristic bitstring of a model set: character j (from the left,
/// 0-based) is '1' iff canonical interpretation j is a member. This is the
/// on-disk form of theories and classes.
std::string to_bitstring(Mask m, const Vocab& v);
Mask mask_from_bitstring(std::string_view s, const Vocab& v);

/// Renders a model set as a formula: "false", "true", or the disjunction of
/// its interpretations' minterms, in canonical interpretation order.
std::string mask_to_formula(Mask m, const Vocab& v);

/// Bitstring-set form of a FormulaSet: "ALL", "{}", or "{b1 b2 ...}" in
/// canonical order. Used in reports and witnesses.
std::string to_string(const FormulaSet& fs, const Vocab& v);
FormulaSet formula_set_from_string(std::string_view s, const Vocab& v);

}  // namespace prefent

#endif  // PREFENT_LOGIC_HPP_
