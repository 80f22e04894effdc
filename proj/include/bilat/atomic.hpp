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

#ifndef BILAT_ATOMIC_HPP_
#define BILAT_ATOMIC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bilat/base.hpp"

namespace bilat {

/// A deduction tree over a base: either a lone signed assumption or an
/// application of a named rule to one subdeduction per premise.
struct AtomicDeduction {
  struct Assumption {
    Atom atom;
    Polarity polarity;
    friend bool operator==(const Assumption&, const Assumption&) = default;
  };
  struct RuleApp {
    std::string rule;
    std::vector<AtomicDeduction> children;
    friend bool operator==(const RuleApp&, const RuleApp&) = default;
  };

  std::variant<Assumption, RuleApp> node;

  static AtomicDeduction assume(Atom a, Polarity p) { return {Assumption{std::move(a), p}}; }
  static AtomicDeduction apply(std::string rule, std::vector<AtomicDeduction> children = {}) {
    return {RuleApp{std::move(rule), std::move(children)}};
  }

  bool is_assumption() const { return std::holds_alternative<Assumption>(node); }
  std::size_t height() const;

  friend bool operator==(const AtomicDeduction&, const AtomicDeduction&) = default;
};

/// Gamma_At ; Delta_At |-(+/-) p
struct AtomicSequent {
  AtomSet proofs;
  AtomSet refutations;
  Polarity polarity = Polarity::Plus;
  Atom conclusion;

  friend bool operator==(const AtomicSequent&, const AtomicSequent&) = default;
};

/// Delta ; Gamma |-(dual *) p for Gamma ; Delta |-* p.
AtomicSequent dual_sequent(const AtomicSequent& s);

std::string format_sequent(const AtomicSequent& s);

class AtomicCheckError : public Error {
 public:
  enum class Kind { UnknownRule, ChildCount, PremiseAtomMismatch, PremisePolarityMismatch };

  AtomicCheckError(Kind kind, std::string path, const std::string& detail);

  Kind kind() const { return kind_; }
  const std::string& path() const { return path_; }

 private:
  Kind kind_;
  std::string path_;
};

std::string_view to_string(AtomicCheckError::Kind k);

/// Returns the sequent `d` witnesses: its root conclusion and sign, and the
/// assumptions left open after every rule application discharges the
/// matching leaves of the corresponding child.
AtomicSequent check_atomic(const Base& b, const AtomicDeduction& d);

/// Decides Gamma;Delta |-*_B p. Goal-directed: explores the finite set of
/// goals reachable from `s` (assumption sets only grow by discharge sets),
/// then solves the induced Horn system as a least fixpoint.
bool derivable(const Base& b, const AtomicSequent& s);

/// Like derivable(), and on success returns a deduction whose checked
/// sequent has assumption sets included in those of `s`. Among alternatives
/// the first rule in name order is preferred.
std::optional<AtomicDeduction> find_deduction(const Base& b, const AtomicSequent& s);

/// Bottom-up least fixpoint over every sequent whose assumption sets are
/// subsets of a fixed atom universe. Independent of derivable().
class FixpointOracle {
 public:
  /// Throws Error when the base mentions atoms outside `universe` or the
  /// universe has more than 10 atoms.
  FixpointOracle(const Base& b, const AtomSet& universe);

  /// Throws Error when `s` mentions atoms outside the universe.
  bool derivable(const AtomicSequent& s) const;

  const std::vector<Atom>& universe() const { return atoms_; }

 private:
  std::size_t slot(std::uint32_t proofs, std::uint32_t refs, Polarity pol, std::size_t atom) const;
  std::uint32_t mask_of(const AtomSet& s) const;
  std::size_t index_of(const Atom& a) const;

  std::vector<Atom> atoms_;
  std::vector<bool> table_;
};

bool derivable_fixpoint(const Base& b, const AtomSet& universe, const AtomicSequent& s);

/// Leaves flip sign; rule nodes refer to the dual rule's name.
AtomicDeduction dual_deduction(const AtomicDeduction& d);

}  // namespace bilat

#endif  // BILAT_ATOMIC_HPP_
