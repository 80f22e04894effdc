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

#ifndef BILAT_ND_HPP_
#define BILAT_ND_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bilat/formula.hpp"

namespace bilat {

enum class NDRule : std::uint8_t {
  TopPlus,
  BotMinus,
  BotPlus,
  TopMinus,
  AndIPlus,
  AndE1Plus,
  AndE2Plus,
  OrI1Plus,
  OrI2Plus,
  OrEPlus,
  ImpIPlus,
  ImpEPlus,
  CoImpIPlus,
  CoImpE1Plus,
  CoImpE2Plus,
  CoImpIMinus,
  CoImpEMinus,
  AndI1Minus,
  AndI2Minus,
  AndEMinus,
  OrIMinus,
  OrE1Minus,
  OrE2Minus,
  ImpIMinus,
  ImpE1Minus,
  ImpE2Minus,
};

inline constexpr std::size_t kNDRuleCount = 26;

std::string_view to_string(NDRule r);
/// Throws Error on an unknown name.
NDRule parse_nd_rule(std::string_view name);

/// BotPlus, TopMinus, OrEPlus and AndEMinus may conclude with either sign.
bool is_flexible(NDRule r);

struct NDRuleTag {
  NDRule rule;
  /// Present exactly for flexible rules.
  std::optional<Polarity> result;

  friend bool operator==(const NDRuleTag&, const NDRuleTag&) = default;
};

/// Patterns are formulas over the metavariables phi, psi and chi.
struct NDPremiseSchema {
  Formula pattern;
  /// nullopt: the application's result polarity (a dotted line).
  std::optional<Polarity> polarity;
  /// When set, the premise discharges assumptions of this pattern and sign.
  std::optional<Formula> discharges;
  Polarity discharge_role = Polarity::Plus;
};

struct NDRuleSchema {
  NDRule rule;
  std::vector<NDPremiseSchema> premises;
  Formula conclusion;
  std::optional<Polarity> conclusion_polarity;
};

const std::vector<NDRuleSchema>& nd_rule_catalog();
const NDRuleSchema& nd_schema(NDRule r);

struct NDProof {
  struct Assume {
    Formula formula;
    Polarity polarity;
    /// 0 means the assumption is never discharged.
    unsigned label = 0;
    friend bool operator==(const Assume&, const Assume&) = default;
  };
  struct Apply {
    NDRuleTag tag;
    Formula conclusion;
    std::vector<NDProof> children;
    std::vector<unsigned> discharge;
    friend bool operator==(const Apply&, const Apply&) = default;
  };

  std::variant<Assume, Apply> node;

  static NDProof assume(Formula f, Polarity p, unsigned label = 0) {
    return {Assume{std::move(f), p, label}};
  }
  static NDProof apply(NDRuleTag tag, Formula conclusion, std::vector<NDProof> children = {},
                       std::vector<unsigned> discharge = {}) {
    return {Apply{tag, std::move(conclusion), std::move(children), std::move(discharge)}};
  }

  /// Sign of the deduction this tree ends with.
  Polarity polarity() const;
  const Formula& conclusion() const;
  std::size_t height() const;

  friend bool operator==(const NDProof&, const NDProof&) = default;
};

struct NDJudgment {
  FormulaSet proofs;
  FormulaSet refutations;
  Polarity polarity = Polarity::Plus;
  Formula conclusion = top();

  friend bool operator==(const NDJudgment&, const NDJudgment&) = default;
};

/// "{bot}; ∅ ⊢− q"
std::string format_judgment(const NDJudgment& j);

/// `got` establishes `target`: same sign and conclusion, and assumption sets
/// included in the target's.
bool establishes(const NDJudgment& got, const NDJudgment& target);

class NDCheckError : public Error {
 public:
  enum class Kind {
    ChildCount,
    ShapeMismatch,
    PolarityMismatch,
    MixedDottedLines,
    IllegalDischarge,
    DuplicateLabelConflict
  };

  NDCheckError(Kind kind, std::string path, const std::string& detail);

  Kind kind() const { return kind_; }
  const std::string& path() const { return path_; }

 private:
  Kind kind_;
  std::string path_;
};

std::string_view to_string(NDCheckError::Kind k);

/// Checks every application against its schema and the discharge
/// discipline, and returns the judgment with exactly the open assumptions.
NDJudgment check_nd(const NDProof& p);

}  // namespace bilat

#endif  // BILAT_ND_HPP_
