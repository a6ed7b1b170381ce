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
// Formula syntax. The AST exists only at the parsing boundary; everything
// semantic works on SemFormula. Grammar (ASCII):
//
//   atoms:      identifiers [A-Za-z_][A-Za-z0-9_]*
//   constants:  true, false
//   operators:  ~ (not), & (and), | (or), -> (implies), <-> (iff)
//   precedence: ~ > & > | > -> > <->, with -> and <-> right-associative
//   parentheses allowed

#ifndef PREFENT_FORMULA_HPP_
#define PREFENT_FORMULA_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "prefent/logic.hpp"

namespace prefent {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Connective { True, False, Var, Not, And, Or, Implies, Iff };

class Formula {
 public:
  static FormulaPtr constant(bool value);
  static FormulaPtr var(std::string name);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implication(FormulaPtr l, FormulaPtr r);
  static FormulaPtr equivalence(FormulaPtr l, FormulaPtr r);

  Connective kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const FormulaPtr& left() const noexcept { return left_; }
  const FormulaPtr& right() const noexcept { return right_; }

 private:
  Formula(Connective kind, std::string name, FormulaPtr l, FormulaPtr r)
      : kind_(kind), name_(std::move(name)), left_(std::move(l)),
        right_(std::move(r)) {}

  Connective kind_;
  std::string name_;
  FormulaPtr left_, right_;
};

/// Parses `text` over vocabulary `v`. Raises ParseError with the offset of
/// the offending character, or UnknownSymbolError naming an atom outside v.
FormulaPtr parse_formula(std::string_view text, const Vocab& v);

/// Prints with minimal parentheses; parse(print(f)) == f structurally.
std::string print_formula(const Formula& f);

bool structurally_equal(const Formula& a, const Formula& b);

/// Classical truth-table evaluation.
bool eval(const Formula& f, const Vocab& v, Interpretation mu);

/// The equivalence class of f: its set of models.
SemFormula sem(const Formula& f, const Vocab& v);

}  // namespace prefent

#endif  // PREFENT_FORMULA_HPP_
