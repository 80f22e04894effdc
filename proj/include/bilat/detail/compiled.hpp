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

// Integer/bitmask form of bases used by the derivability search and the
// support checker. Not part of the stable interface.

#ifndef BILAT_DETAIL_COMPILED_HPP_
#define BILAT_DETAIL_COMPILED_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bilat/atomic.hpp"

namespace bilat::detail {

using Mask = std::uint64_t;
inline constexpr int kMaxAtoms = 64;

inline Mask bit(int i) { return Mask{1} << i; }

class AtomIndex {
 public:
  /// Interns `a`; throws Error past kMaxAtoms.
  int intern(const Atom& a);
  /// -1 when absent.
  int find(const Atom& a) const;
  const Atom& atom(int id) const { return atoms_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(atoms_.size()); }

  Mask intern_mask(const AtomSet& s);
  AtomSet atoms(Mask m) const;

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, int> ids_;
};

struct CPremise {
  int atom;
  Polarity pol;
  Mask dis_proofs;
  Mask dis_refs;

  friend bool operator==(const CPremise&, const CPremise&) = default;
  friend auto operator<=>(const CPremise&, const CPremise&) = default;
};

struct CRule {
  std::vector<CPremise> premises;
  int conclusion;
  Polarity pol;

  friend bool operator==(const CRule&, const CRule&) = default;
  friend auto operator<=>(const CRule&, const CRule&) = default;
};

CRule compile_rule(const AtomicRule& r, AtomIndex& idx);
AtomicRule decompile_rule(const CRule& r, const AtomIndex& idx, std::string name);

/// Rules plus an index from (conclusion, sign) to rule positions.
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<CRule> rules);

  void add(CRule r);
  const std::vector<CRule>& rules() const { return rules_; }
  const std::vector<int>& concluding(int atom, Polarity pol) const;

 private:
  std::vector<CRule> rules_;
  std::vector<std::vector<int>> by_head_;
  std::vector<int> none_;
};

struct CGoal {
  Mask proofs = 0;
  Mask refs = 0;
  int atom = 0;
  Polarity pol = Polarity::Plus;

  friend bool operator==(const CGoal&, const CGoal&) = default;
};

/// A witness tree: `rule < 0` marks an assumption leaf for the goal.
struct CWitness {
  CGoal goal;
  int rule = -1;
  std::vector<CWitness> children;
};

bool derives(const RuleSet& rules, const CGoal& goal);
std::optional<CWitness> derive_witness(const RuleSet& rules, const CGoal& goal);

}  // namespace bilat::detail

#endif  // BILAT_DETAIL_COMPILED_HPP_
