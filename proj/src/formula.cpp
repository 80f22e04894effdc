// Copyright 2026 The bilat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bilat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace bilat {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& what)
    : Error(what + " at offset " + std::to_string(offset) +
            (expected.empty() ? std::string()
                              : " (expected one of: " + join(expected, ", ") + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

std::string_view to_string(Polarity p) { return p == Polarity::Plus ? "+" : "-"; }

Polarity parse_polarity(std::string_view s) {
  if (s == "+") return Polarity::Plus;
  if (s == "-") return Polarity::Minus;
  throw ParseError(0, {"+", "-"}, "invalid polarity '" + std::string(s) + "'");
}

bool Atom::is_valid_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "bot" && name != "top";
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw ParseError(0, {"atom"}, "invalid atom name '" + name_ + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.name(); }

struct Formula::Node {
  Connective kind;
  std::optional<Atom> atom;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t complexity = 0;
  std::size_t depth = 0;
};

Connective Formula::kind() const { return node_->kind; }
std::size_t Formula::complexity() const { return node_->complexity; }
std::size_t Formula::depth() const { return node_->depth; }

const Atom& Formula::atom() const {
  if (!node_->atom) throw Error("formula is not an atom");
  return *node_->atom;
}

const Formula& Formula::lhs() const {
  if (!node_->lhs) throw Error("formula has no subterms");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs) throw Error("formula has no subterms");
  return *node_->rhs;
}

Formula make_atom(Atom a) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Connective::Atom;
  n->atom = std::move(a);
  return Formula(std::move(n));
}

Formula make_bot() {
  static const Formula f = [] {
    auto n = std::make_shared<Formula::Node>();
    n->kind = Connective::Bot;
    n->complexity = 1;
    return Formula(std::move(n));
  }();
  return f;
}

Formula make_top() {
  static const Formula f = [] {
    auto n = std::make_shared<Formula::Node>();
    n->kind = Connective::Top;
    n->complexity = 1;
    return Formula(std::move(n));
  }();
  return f;
}

Formula make_binary(Connective c, Formula lhs, Formula rhs) {
  if (c < Connective::And) throw Error("make_binary needs a binary connective");
  auto n = std::make_shared<Formula::Node>();
  n->kind = c;
  n->complexity = 1 + lhs.complexity() + rhs.complexity();
  n->depth = 1 + std::max(lhs.depth(), rhs.depth());
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::Atom:
      return a.atom() <=> b.atom();
    case Connective::Bot:
    case Connective::Top:
      return std::strong_ordering::equal;
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser.

namespace {

enum class Tok { Ident, Bot, Top, And, Or, Arrow, BackArrow, Tilde, Minus, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_arrows();
    if (cur_.kind != Tok::End) fail({"'->'", "'<-'", "'|'", "'&'", "end of input"}, "unexpected token");
    return f;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    throw ParseError(cur_.offset, std::move(expected), what);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, start, ""};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok t) {
      ++pos_;
      cur_ = {t, start, std::string(1, c)};
    };
    switch (c) {
      case '&': return single(Tok::And);
      case '|': return single(Tok::Or);
      case '~': return single(Tok::Tilde);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          cur_ = {Tok::Arrow, start, "->"};
          return;
        }
        return single(Tok::Minus);
      case '<':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          pos_ += 2;
          cur_ = {Tok::BackArrow, start, "<-"};
          return;
        }
        break;
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      Tok kind = word == "bot" ? Tok::Bot : word == "top" ? Tok::Top : Tok::Ident;
      cur_ = {kind, start, std::move(word)};
      return;
    }
    cur_ = {Tok::End, start, std::string(1, c)};
    throw ParseError(start, {"atom", "'bot'", "'top'", "'('", "'~'", "'-'"},
                     std::string("unexpected character '") + c + "'");
  }

  Formula parse_arrows() {
    Formula first = parse_or();
    if (cur_.kind == Tok::Arrow) {
      std::vector<Formula> chain{first};
      while (cur_.kind == Tok::Arrow) {
        advance();
        chain.push_back(parse_or());
      }
      if (cur_.kind == Tok::BackArrow) {
        fail({"')'", "end of input"}, "'<-' after '->' needs parentheses");
      }
      Formula acc = chain.back();
      for (std::size_t i = chain.size() - 1; i-- > 0;) acc = imp(chain[i], acc);
      return acc;
    }
    if (cur_.kind == Tok::BackArrow) {
      Formula acc = first;
      while (cur_.kind == Tok::BackArrow) {
        advance();
        acc = coimp(acc, parse_or());
      }
      if (cur_.kind == Tok::Arrow) {
        fail({"')'", "end of input"}, "'->' after '<-' needs parentheses");
      }
      return acc;
    }
    return first;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (cur_.kind == Tok::Or) {
      advance();
      acc = disj(acc, parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (cur_.kind == Tok::And) {
      advance();
      acc = conj(acc, parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    switch (cur_.kind) {
      case Tok::Tilde: {
        advance();
        return imp(parse_unary(), bot());
      }
      case Tok::Minus: {
        advance();
        return coimp(top(), parse_unary());
      }
      case Tok::Ident: {
        Formula f = atom(cur_.text);
        advance();
        return f;
      }
      case Tok::Bot:
        advance();
        return bot();
      case Tok::Top:
        advance();
        return top();
      case Tok::LParen: {
        advance();
        Formula f = parse_arrows();
        if (cur_.kind != Tok::RParen) fail({"')'"}, "unclosed parenthesis");
        advance();
        return f;
      }
      default:
        fail({"atom", "'bot'", "'top'", "'('", "'~'", "'-'"}, "expected a formula");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, 0, ""};
};

int level(const Formula& f) {
  switch (f.kind()) {
    case Connective::Imp:
    case Connective::CoImp:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    default:
      return 4;
  }
}

void print_to(std::string& out, const Formula& f);

void print_wrapped(std::string& out, const Formula& f, bool parens) {
  if (parens) out += '(';
  print_to(out, f);
  if (parens) out += ')';
}

void print_to(std::string& out, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      out += f.atom().name();
      return;
    case Connective::Bot:
      out += "bot";
      return;
    case Connective::Top:
      out += "top";
      return;
    case Connective::And:
      print_wrapped(out, f.lhs(), level(f.lhs()) < 3);
      out += " & ";
      print_wrapped(out, f.rhs(), level(f.rhs()) < 4);
      return;
    case Connective::Or:
      print_wrapped(out, f.lhs(), level(f.lhs()) < 2);
      out += " | ";
      print_wrapped(out, f.rhs(), level(f.rhs()) < 3);
      return;
    case Connective::Imp:
      print_wrapped(out, f.lhs(), level(f.lhs()) < 2);
      out += " -> ";
      print_wrapped(out, f.rhs(), f.rhs().kind() == Connective::CoImp);
      return;
    case Connective::CoImp:
      print_wrapped(out, f.lhs(), f.lhs().kind() == Connective::Imp);
      out += " <- ";
      print_wrapped(out, f.rhs(), level(f.rhs()) < 2);
      return;
  }
}

void collect_atoms(const Formula& f, AtomSet& out) {
  if (f.is_atom()) {
    out.insert(f.atom());
  } else if (f.is_binary()) {
    collect_atoms(f.lhs(), out);
    collect_atoms(f.rhs(), out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_to(out, f);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print_formula(f); }

Formula dual_formula(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return f;
    case Connective::Bot:
      return top();
    case Connective::Top:
      return bot();
    case Connective::And:
      return disj(dual_formula(f.lhs()), dual_formula(f.rhs()));
    case Connective::Or:
      return conj(dual_formula(f.lhs()), dual_formula(f.rhs()));
    case Connective::Imp:
      return coimp(dual_formula(f.rhs()), dual_formula(f.lhs()));
    case Connective::CoImp:
      return imp(dual_formula(f.rhs()), dual_formula(f.lhs()));
  }
  return f;
}

FormulaSet dual_formulas(const FormulaSet& fs) {
  FormulaSet out;
  for (const auto& f : fs) out.insert(dual_formula(f));
  return out;
}

FormulaSet subformula_closure(const FormulaSet& fs) {
  FormulaSet out;
  std::vector<Formula> stack(fs.begin(), fs.end());
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!out.insert(f).second) continue;
    if (f.is_binary()) {
      stack.push_back(f.lhs());
      stack.push_back(f.rhs());
    }
  }
  return out;
}

AtomSet atoms_of(const Formula& f) {
  AtomSet out;
  collect_atoms(f, out);
  return out;
}

FormulaSet parse_formula_list(std::string_view csv) {
  FormulaSet out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view piece = csv.substr(start, end - start);
    bool blank = std::all_of(piece.begin(), piece.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) {
      try {
        out.insert(parse_formula(piece));
      } catch (const ParseError& e) {
        throw ParseError(start + e.offset(), e.expected(),
                         "in list item '" + std::string(piece) + "'");
      }
    } else if (end != csv.size() || start != 0) {
      throw ParseError(start, {"formula"}, "empty list item");
    }
    start = end + 1;
  }
  return out;
}

std::string format_set(const FormulaSet& s) {
  if (s.empty()) return "∅";
  std::string out = "{";
  for (const auto& f : s) {
    if (out.size() > 1) out += ", ";
    out += print_formula(f);
  }
  return out + "}";
}

}  // namespace bilat
