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

#ifndef BILAT_BASE_HPP_
#define BILAT_BASE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "bilat/formula.hpp"

namespace bilat {

/// One premise of an atomic rule: the premise atom, the sign of the
/// deduction it expects, and the atomic proof/refutation assumptions the
/// rule discharges in that premise's subdeduction.
struct RulePremise {
  Atom atom;
  Polarity polarity = Polarity::Plus;
  AtomSet discharged_proofs;
  AtomSet discharged_refutations;

  friend bool operator==(const RulePremise&, const RulePremise&) = default;
  friend auto operator<=>(const RulePremise&, const RulePremise&) = default;
};

struct AtomicRule {
  std::string name;
  std::vector<RulePremise> premises;
  Atom conclusion;
  Polarity conclusion_polarity = Polarity::Plus;

  bool is_axiom() const { return premises.empty(); }
  bool is_proof_rule() const { return conclusion_polarity == Polarity::Plus; }

  /// Structural equality, ignoring the name.
  bool same_shape(const AtomicRule& other) const;

  friend bool operator==(const AtomicRule&, const AtomicRule&) = default;
};

/// Orders rules by shape only; used for set-of-rules comparisons.
struct RuleShapeLess {
  bool operator()(const AtomicRule& a, const AtomicRule& b) const;
};

/// A finite bilateral base. Rules are kept sorted by name; names are unique.
class Base {
 public:
  Base() = default;
  /// Throws Error on duplicate rule names.
  explicit Base(std::vector<AtomicRule> rules);

  const std::vector<AtomicRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  /// nullptr when absent.
  const AtomicRule* find(std::string_view name) const;

  /// Copy with `extra` appended; names must stay unique.
  Base with_rules(const std::vector<AtomicRule>& extra) const;

  friend bool operator==(const Base&, const Base&) = default;

 private:
  std::vector<AtomicRule> rules_;
};

/// Reads the base JSON format
/// `{"rules":[{"name":..,"premises":[{"atom":..,"polarity":"+",
///   "dischargedProofs":[..],"dischargedRefutations":[..]}],
///   "conclusion":..,"conclusionPolarity":"-"}]}`.
Base parse_base(std::string_view json_text);
std::string print_base(const Base& b);

/// Every rule of `b` occurs (by shape) in `c`.
bool extends(const Base& c, const Base& b);

/// Flips the conclusion sign, flips each premise sign and swaps its two
/// discharge sets. The name toggles a trailing "^D".
AtomicRule dual_rule(const AtomicRule& r);
Base dual_base(const Base& b);

AtomSet atoms_of(const AtomicRule& r);
AtomSet atoms_of(const Base& b);

/// "p, [q]+ [[r]]- => s-" style one-line rendering for diagnostics.
std::string describe_rule(const AtomicRule& r);

}  // namespace bilat

#endif  // BILAT_BASE_HPP_
