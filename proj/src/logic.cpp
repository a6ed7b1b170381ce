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

#include "prefent/logic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace prefent {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  }
  return true;
}

}  // namespace

std::uint64_t default_size_cap() {
  if (const char* env = std::getenv("PREFENT_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::uint64_t{1} << 16;
}

Vocab::Vocab(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error("vocabulary must not be empty");
  if (symbols_.size() > kMaxVocabSize)
    throw Error("vocabulary size " + std::to_string(symbols_.size()) +
                " exceeds the supported maximum " +
                std::to_string(kMaxVocabSize));
  std::unordered_set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (!is_identifier(s) || s == "true" || s == "false")
      throw Error("invalid proposition name '" + s + "'");
    if (!seen.insert(s).second)
      throw Error("duplicate proposition name '" + s + "'");
  }
}

std::optional<std::size_t> Vocab::index_of(std::string_view name) const
    noexcept {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return i;
  return std::nullopt;
}

std::string Interpretation::to_string(const Vocab& v) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_true(v, i)) continue;
    if (!first) out += ",";
    out += v.symbol(i);
    first = false;
  }
  out += "}";
  return out;
}

FormulaSet::FormulaSet(std::uint32_t class_count)
    : class_count_(class_count), bits_((class_count + 63) / 64, 0) {}

namespace {

std::uint32_t checked_class_count(const Vocab& v) {
  if (v.size() > kMaxClassSpaceVocabSize)
    throw SizeGuardError(
        "formula sets over " + std::to_string(v.size()) +
        " symbols would span 2^" + std::to_string(v.interp_count()) +
        " classes; the supported maximum vocabulary for class-space "
        "values is " +
        std::to_string(kMaxClassSpaceVocabSize));
  return static_cast<std::uint32_t>(v.class_count());
}

}  // namespace

FormulaSet FormulaSet::empty(const Vocab& v) {
  return FormulaSet(checked_class_count(v));
}

FormulaSet FormulaSet::everything(const Vocab& v) {
  FormulaSet fs(checked_class_count(v));
  for (std::size_t w = 0; w < fs.bits_.size(); ++w) fs.bits_[w] = ~0ull;
  // Clear the bits beyond class_count in the last word.
  std::uint32_t rem = fs.class_count_ & 63u;
  if (rem != 0) fs.bits_.back() &= (std::uint64_t{1} << rem) - 1;
  return fs;
}

FormulaSet FormulaSet::of(const Vocab& v, const std::vector<SemFormula>& fs) {
  FormulaSet out = empty(v);
  for (SemFormula f : fs) out.insert(f);
  return out;
}

FormulaSet FormulaSet::of_masks(const Vocab& v, const std::vector<Mask>& ms) {
  FormulaSet out = empty(v);
  for (Mask m : ms) out.insert(SemFormula(m));
  return out;
}

FormulaSet FormulaSet::entailed_by(const Theory& t, const Vocab& v) {
  FormulaSet out = empty(v);
  Mask base = t.models();
  Mask comp = v.full_mask() & ~base;
  Mask sub = comp;
  for (;;) {  // all supersets of base: base | (every submask of comp)
    out.insert(SemFormula(base | sub));
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
  return out;
}

bool FormulaSet::subset_of(const FormulaSet& other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  return true;
}

bool FormulaSet::is_empty() const {
  for (std::uint64_t w : bits_)
    if (w != 0) return false;
  return true;
}

bool FormulaSet::is_everything() const { return size() == class_count_; }

std::uint64_t FormulaSet::size() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : bits_) n += std::popcount(w);
  return n;
}

void FormulaSet::intersect_with(const FormulaSet& other) {
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
}

void FormulaSet::union_with(const FormulaSet& other) {
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
}

std::vector<SemFormula> FormulaSet::to_formulas() const {
  std::vector<SemFormula> out;
  out.reserve(size());
  for_each([&](Mask m) { out.push_back(SemFormula(m)); });
  return out;
}

Theory closure(const FormulaSet& fs, const Vocab& v) {
  Mask models = v.full_mask();
  fs.for_each([&](Mask m) { models &= m; });
  return Theory(models);
}

std::vector<Interpretation> enumerate_interpretations(const Vocab& v) {
  std::vector<Interpretation> out;
  out.reserve(v.interp_count());
  for (std::uint32_t k = 0; k < v.interp_count(); ++k)
    out.push_back(Interpretation(k));
  return out;
}

namespace {

void guard_class_space(const Vocab& v, std::uint64_t cap, const char* what) {
  if (v.class_count() > cap)
    throw SizeGuardError(std::string(what) + " over " +
                         std::to_string(v.size()) + " symbols spans " +
                         std::to_string(v.class_count()) +
                         " cases, above the cap " + std::to_string(cap));
}

}  // namespace

std::vector<SemFormula> enumerate_semformulas(const Vocab& v,
                                              std::uint64_t cap) {
  guard_class_space(v, cap, "enumerating classes");
  std::vector<SemFormula> out;
  out.reserve(v.class_count());
  for (std::uint64_t m = 0; m < v.class_count(); ++m)
    out.push_back(SemFormula(static_cast<Mask>(m)));
  return out;
}

std::vector<Theory> enumerate_theories(const Vocab& v, std::uint64_t cap) {
  guard_class_space(v, cap, "enumerating theories");
  std::vector<Theory> out;
  out.reserve(v.class_count());
  for (std::uint64_t m = 0; m < v.class_count(); ++m)
    out.push_back(Theory(static_cast<Mask>(m)));
  return out;
}

std::vector<SemFormula> enumerate_semformulas(const Vocab& v) {
  return enumerate_semformulas(v, default_size_cap());
}

std::vector<Theory> enumerate_theories(const Vocab& v) {
  return enumerate_theories(v, default_size_cap());
}

std::string to_bitstring(Mask m, const Vocab& v) {
  std::string out(v.interp_count(), '0');
  for (std::uint32_t k = 0; k < v.interp_count(); ++k)
    if ((m >> k) & 1u) out[k] = '1';
  return out;
}

Mask mask_from_bitstring(std::string_view s, const Vocab& v) {
  if (s.size() != v.interp_count())
    throw ParseError("bitstring must have length " +
                         std::to_string(v.interp_count()),
                     s.size());
  Mask m = 0;
  for (std::uint32_t k = 0; k < v.interp_count(); ++k) {
    if (s[k] == '1')
      m |= Mask{1} << k;
    else if (s[k] != '0')
      throw ParseError("bitstring characters must be 0 or 1", k);
  }
  return m;
}

std::string mask_to_formula(Mask m, const Vocab& v) {
  if (m == 0) return "false";
  if (m == v.full_mask()) return "true";
  std::string out;
  for (std::uint32_t k = 0; k < v.interp_count(); ++k) {
    if (!((m >> k) & 1u)) continue;
    if (!out.empty()) out += " | ";
    Interpretation mu(k);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) out += " & ";
      if (!mu.is_true(v, i)) out += "~";
      out += v.symbol(i);
    }
  }
  return out;
}

std::string to_string(const FormulaSet& fs, const Vocab& v) {
  if (fs.is_everything()) return "ALL";
  std::string out = "{";
  bool first = true;
  fs.for_each([&](Mask m) {
    if (!first) out += " ";
    out += to_bitstring(m, v);
    first = false;
  });
  out += "}";
  return out;
}

FormulaSet formula_set_from_string(std::string_view s, const Vocab& v) {
  if (s == "ALL") return FormulaSet::everything(v);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("formula set must be ALL or {bitstring ...}", 0);
  FormulaSet out = FormulaSet::empty(v);
  std::istringstream in{std::string(s.substr(1, s.size() - 2))};
  std::string tok;
  while (in >> tok) out.insert(SemFormula(mask_from_bitstring(tok, v)));
  return out;
}

}  // namespace prefent
