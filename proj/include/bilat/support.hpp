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

#ifndef BILAT_SUPPORT_HPP_
#define BILAT_SUPPORT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bilat/atomic.hpp"

namespace bilat {

enum class Clauses { Standard, Naive };

enum class Outcome { Holds, Fails, Unknown };

/// "HOLDS", "FAILS", "UNKNOWN".
std::string_view to_string(Outcome o);

/// Bounds for the counterextension search. The rule universe is every rule
/// over the base and query atoms plus `extra_atoms` fresh ones, with at most
/// `max_premises` premises each discharging at most `max_discharge` atoms.
struct ExtensionBudget {
  unsigned extra_atoms = 1;
  unsigned max_extra_rules = 2;
  unsigned max_premises = 2;
  unsigned max_discharge = 1;
  /// Candidate extensions examined per search before giving up.
  std::size_t max_extensions = 2000;

  friend bool operator==(const ExtensionBudget&, const ExtensionBudget&) = default;
};

/// "a,r,p,d" or "a,r,p,d,cap". Throws Error on malformed input.
ExtensionBudget parse_budget(std::string_view text);
std::string format_budget(const ExtensionBudget& b);

/// Gamma ; Delta ⊩(+/-)_B chi. Empty antecedents denote plain support.
struct SupportQuery {
  Base base;
  FormulaSet gamma;
  FormulaSet delta;
  Polarity polarity = Polarity::Plus;
  Formula formula = top();
};

/// "{p}; ∅ ⊩+ q"
std::string format_query(const FormulaSet& gamma, const FormulaSet& delta, Polarity pol, const Formula& chi);

struct SupportOptions {
  ExtensionBudget budget;
  Clauses clauses = Clauses::Standard;
  /// When set, At is this finite set instead of an unbounded supply of
  /// atoms. It must contain every atom of the base and the query.
  std::optional<AtomSet> universe;
};

struct Justification {
  std::string step;
  std::string detail;
  std::vector<Justification> children;
};

/// A derivability claim a decisive verdict rests on.
struct AtomicFact {
  std::shared_ptr<const Base> base;
  AtomicSequent sequent;
  bool derivable = false;
};

/// Rules added to the query base, and what goes wrong in the result.
struct Counterextension {
  std::vector<AtomicRule> added;
  std::string violation;
};

struct SupportVerdict {
  Outcome outcome = Outcome::Unknown;
  Justification justification;
  std::optional<Counterextension> counterextension;
  std::vector<AtomicFact> facts;
  /// Some search stopped at the extension cap.
  bool truncated = false;
  std::size_t extensions_tried = 0;
};

/// Throws Error when a closed universe misses atoms of the query.
SupportVerdict support(const SupportQuery& q, const SupportOptions& options = {});

struct RecheckReport {
  std::size_t confirmed = 0;
  std::size_t contradicted = 0;
  /// Facts over more atoms than the fixpoint oracle accepts.
  std::size_t skipped = 0;
};

/// Re-evaluates every atomic fact of `v` with the fixpoint oracle.
RecheckReport recheck(const SupportVerdict& v);

enum class HarmonyStatus { Consistent, Violation };

std::string_view to_string(HarmonyStatus s);

struct HarmonyReport {
  SupportVerdict original;
  SupportVerdict dual;
  HarmonyStatus status = HarmonyStatus::Consistent;
};

/// Compares ⊩*_B chi with its dual query over the dual base.
HarmonyReport harmony_check(const Base& b, Polarity pol, const Formula& chi, const SupportOptions& options = {});

/// Compares Gamma;Delta ⊩*_B chi with Delta^D;Gamma^D over the dual base.
HarmonyReport strong_harmony_check(const Base& b, const FormulaSet& gamma, const FormulaSet& delta, Polarity pol,
                                   const Formula& chi, const SupportOptions& options = {});

}  // namespace bilat

#endif  // BILAT_SUPPORT_HPP_
