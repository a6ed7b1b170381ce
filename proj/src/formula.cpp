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

#include "prefent/formula.hpp"

#include <cctype>

namespace prefent {

FormulaPtr Formula::constant(bool value) {
  return FormulaPtr(new Formula(value ? Connective::True : Connective::False,
                                {}, nullptr, nullptr));
}
FormulaPtr Formula::var(std::string name) {
  return FormulaPtr(
      new Formula(Connective::Var, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::negation(FormulaPtr f) {
  return FormulaPtr(new Formula(Connective::Not, {}, std::move(f), nullptr));
}
FormulaPtr Formula::conjunction(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(
      new Formula(Connective::And, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::disjunction(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(
      new Formula(Connective::Or, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::implication(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(
      new Formula(Connective::Implies, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::equivalence(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(
      new Formula(Connective::Iff, {}, std::move(l), std::move(r)));
}

namespace {

struct Token {
  enum class Kind { Ident, True, False, Not, And, Or, Implies, Iff, LParen,
                    RParen, End };
  Kind kind;
  std::string text;
  std::size_t position;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "true")
        current_ = {Token::Kind::True, word, start};
      else if (word == "false")
        current_ = {Token::Kind::False, word, start};
      else
        current_ = {Token::Kind::Ident, word, start};
      return;
    }
    switch (c) {
      case '~':
        ++pos_;
        current_ = {Token::Kind::Not, "~", start};
        return;
      case '&':
        ++pos_;
        current_ = {Token::Kind::And, "&", start};
        return;
      case '|':
        ++pos_;
        current_ = {Token::Kind::Or, "|", start};
        return;
      case '(':
        ++pos_;
        current_ = {Token::Kind::LParen, "(", start};
        return;
      case ')':
        ++pos_;
        current_ = {Token::Kind::RParen, ")", start};
        return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {Token::Kind::Implies, "->", start};
          return;
        }
        throw ParseError("expected '->'", start);
      case '<':
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' &&
            text_[pos_ + 2] == '>') {
          pos_ += 3;
          current_ = {Token::Kind::Iff, "<->", start};
          return;
        }
        throw ParseError("expected '<->'", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::End, "", 0};
};

class Parser {
 public:
  Parser(std::string_view text, const Vocab& vocab)
      : lexer_(text), vocab_(vocab) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::End)
      throw ParseError("unexpected trailing input '" + t.text + "'",
                       t.position);
    return f;
  }

 private:
  FormulaPtr parse_iff() {
    FormulaPtr left = parse_implies();
    if (lexer_.peek().kind == Token::Kind::Iff) {
      lexer_.take();
      return Formula::equivalence(std::move(left), parse_iff());
    }
    return left;
  }

  FormulaPtr parse_implies() {
    FormulaPtr left = parse_or();
    if (lexer_.peek().kind == Token::Kind::Implies) {
      lexer_.take();
      return Formula::implication(std::move(left), parse_implies());
    }
    return left;
  }

  FormulaPtr parse_or() {
    FormulaPtr left = parse_and();
    while (lexer_.peek().kind == Token::Kind::Or) {
      lexer_.take();
      left = Formula::disjunction(std::move(left), parse_and());
    }
    return left;
  }

  FormulaPtr parse_and() {
    FormulaPtr left = parse_unary();
    while (lexer_.peek().kind == Token::Kind::And) {
      lexer_.take();
      left = Formula::conjunction(std::move(left), parse_unary());
    }
    return left;
  }

  FormulaPtr parse_unary() {
    if (lexer_.peek().kind == Token::Kind::Not) {
      lexer_.take();
      return Formula::negation(parse_unary());
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    Token t = lexer_.take();
    switch (t.kind) {
      case Token::Kind::True:
        return Formula::constant(true);
      case Token::Kind::False:
        return Formula::constant(false);
      case Token::Kind::Ident:
        if (!vocab_.index_of(t.text))
          throw UnknownSymbolError(t.text, t.position);
        return Formula::var(t.text);
      case Token::Kind::LParen: {
        FormulaPtr inner = parse_iff();
        Token close = lexer_.take();
        if (close.kind != Token::Kind::RParen)
          throw ParseError("expected ')'", close.position);
        return inner;
      }
      default:
        throw ParseError("expected a formula, got '" + t.text + "'",
                         t.position);
    }
  }

  Lexer lexer_;
  const Vocab& vocab_;
};

// Binding strength; a child prints parenthesized when its own level is
// below what its context requires.
int level(Connective k) {
  switch (k) {
    case Connective::Iff:
      return 1;
    case Connective::Implies:
      return 2;
    case Connective::Or:
      return 3;
    case Connective::And:
      return 4;
    default:
      return 5;
  }
}

void print_into(const Formula& f, int min_level, std::string& out) {
  bool parens = level(f.kind()) < min_level;
  if (parens) out += "(";
  switch (f.kind()) {
    case Connective::True:
      out += "true";
      break;
    case Connective::False:
      out += "false";
      break;
    case Connective::Var:
      out += f.name();
      break;
    case Connective::Not:
      out += "~";
      print_into(*f.left(), 5, out);
      break;
    case Connective::And:
      print_into(*f.left(), 4, out);
      out += " & ";
      print_into(*f.right(), 5, out);
      break;
    case Connective::Or:
      print_into(*f.left(), 3, out);
      out += " | ";
      print_into(*f.right(), 4, out);
      break;
    case Connective::Implies:
      print_into(*f.left(), 3, out);
      out += " -> ";
      print_into(*f.right(), 2, out);
      break;
    case Connective::Iff:
      print_into(*f.left(), 2, out);
      out += " <-> ";
      print_into(*f.right(), 1, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, const Vocab& v) {
  return Parser(text, v).parse();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::True:
    case Connective::False:
      return true;
    case Connective::Var:
      return a.name() == b.name();
    case Connective::Not:
      return structurally_equal(*a.left(), *b.left());
    default:
      return structurally_equal(*a.left(), *b.left()) &&
             structurally_equal(*a.right(), *b.right());
  }
}

bool eval(const Formula& f, const Vocab& v, Interpretation mu) {
  switch (f.kind()) {
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Var:
      return mu.is_true(v, *v.index_of(f.name()));
    case Connective::Not:
      return !eval(*f.left(), v, mu);
    case Connective::And:
      return eval(*f.left(), v, mu) && eval(*f.right(), v, mu);
    case Connective::Or:
      return eval(*f.left(), v, mu) || eval(*f.right(), v, mu);
    case Connective::Implies:
      return !eval(*f.left(), v, mu) || eval(*f.right(), v, mu);
    case Connective::Iff:
      return eval(*f.left(), v, mu) == eval(*f.right(), v, mu);
  }
  return false;  // unreachable
}

SemFormula sem(const Formula& f, const Vocab& v) {
  Mask models = 0;
  for (std::uint32_t k = 0; k < v.interp_count(); ++k)
    if (eval(f, v, Interpretation(k))) models |= Mask{1} << k;
  return SemFormula(models);
}

}  // namespace prefent
