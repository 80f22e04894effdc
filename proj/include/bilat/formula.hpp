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

#ifndef BILAT_FORMULA_HPP_
#define BILAT_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bilat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text parsers. `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& what);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

enum class Polarity : std::uint8_t { Plus, Minus };

constexpr Polarity dual(Polarity p) {
  return p == Polarity::Plus ? Polarity::Minus : Polarity::Plus;
}

/// "+" or "-".
std::string_view to_string(Polarity p);
/// Accepts exactly "+" and "-".
Polarity parse_polarity(std::string_view s);

/// A propositional atom. Names match `[a-z][A-Za-z0-9_]*` and are neither
/// `bot` nor `top`.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  static bool is_valid_name(std::string_view name);

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const Atom& a);

using AtomSet = std::set<Atom>;

enum class Connective : std::uint8_t { Atom, Bot, Top, And, Or, Imp, CoImp };

/// Immutable formula tree with shared subterms. Copying is cheap.
class Formula {
 public:
  Connective kind() const;
  bool is_atom() const { return kind() == Connective::Atom; }
  bool is_binary() const { return kind() >= Connective::And; }

  /// Only valid for atoms.
  const Atom& atom() const;
  /// Only valid for binary connectives.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Number of connective nodes; constants count 1, atoms 0.
  std::size_t complexity() const;
  std::size_t depth() const;

  friend Formula make_atom(Atom a);
  friend Formula make_bot();
  friend Formula make_top();
  friend Formula make_binary(Connective c, Formula lhs, Formula rhs);

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Formula make_atom(Atom a);
Formula make_bot();
Formula make_top();
Formula make_binary(Connective c, Formula lhs, Formula rhs);

inline Formula atom(std::string name) { return make_atom(Atom(std::move(name))); }
inline Formula bot() { return make_bot(); }
inline Formula top() { return make_top(); }
inline Formula conj(Formula a, Formula b) {
  return make_binary(Connective::And, std::move(a), std::move(b));
}
inline Formula disj(Formula a, Formula b) {
  return make_binary(Connective::Or, std::move(a), std::move(b));
}
inline Formula imp(Formula a, Formula b) {
  return make_binary(Connective::Imp, std::move(a), std::move(b));
}
inline Formula coimp(Formula a, Formula b) {
  return make_binary(Connective::CoImp, std::move(a), std::move(b));
}

using FormulaSet = std::set<Formula>;

/// Parses the concrete syntax:
///
///   formula := coimp ; coimp := imp | coimp "<-" imp ; imp := or ("->" imp)?
///   or := and ("|" and)* ; and := unary ("&" unary)*
///   unary := "~" unary | "-" unary | atom | "bot" | "top" | "(" formula ")"
///
/// `~f` is sugar for `f -> bot` and `-f` for `top <- f`. Chaining `->` and
/// `<-` at one level without parentheses is rejected.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Swaps bot/top, and/or, and maps `a -> b` to `b^D <- a^D` (and back).
Formula dual_formula(const Formula& f);

FormulaSet dual_formulas(const FormulaSet& fs);

/// Smallest superset of `fs` closed under immediate subterms.
FormulaSet subformula_closure(const FormulaSet& fs);

AtomSet atoms_of(const Formula& f);

/// Splits on commas and parses each piece; empty input gives the empty set.
FormulaSet parse_formula_list(std::string_view csv);

/// "{p, q & r}", or "∅" when empty.
std::string format_set(const FormulaSet& s);

}  // namespace bilat

#endif  // BILAT_FORMULA_HPP_
