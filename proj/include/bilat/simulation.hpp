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

#ifndef BILAT_SIMULATION_HPP_
#define BILAT_SIMULATION_HPP_

#include <map>
#include <optional>
#include <string>

#include "bilat/atomic.hpp"
#include "bilat/nd.hpp"

namespace bilat {

/// Injective map from a subformula-closed set to atoms; atoms map to
/// themselves and the k-th non-atom (ordered by printed form) to `f_k`.
class AtomicMapping {
 public:
  AtomicMapping() = default;
  /// Throws Error when the table is not injective or moves an atom.
  explicit AtomicMapping(std::map<Formula, Atom> table);

  const std::map<Formula, Atom>& table() const { return table_; }
  bool contains(const Formula& f) const { return table_.count(f) > 0; }
  /// Throws Error outside the domain.
  const Atom& at(const Formula& f) const;
  /// nullopt outside the image.
  std::optional<Formula> preimage(const Atom& a) const;
  AtomSet image() const;

 private:
  std::map<Formula, Atom> table_;
  std::map<Atom, Formula> inverse_;
};

/// True for names of the form f_<digits>, which build_mapping reserves.
bool is_reserved_atom_name(std::string_view name);

/// Throws Error when an atom of `theta` uses a reserved name.
AtomicMapping build_mapping(const FormulaSet& theta);

struct SimulationSpec {
  FormulaSet theta;
  /// Instantiation range of the schematic atom q. Empty selects the
  /// mapping's image plus `q_fresh`.
  AtomSet query_universe;
};

/// A simulation base together with what is needed to translate into and
/// out of it.
struct Simulation {
  AtomicMapping mapping;
  AtomSet universe;
  Base base;
  /// Rule name to the N2Int* rule it mirrors.
  std::map<std::string, NDRuleTag> mirrors;
};

/// Throws Error when the universe misses a mapped atom.
Simulation build_simulation(const SimulationSpec& spec);
Base build_simulation_base(const SimulationSpec& spec);

/// Every formula occurring in `p`, as leaf or conclusion.
FormulaSet formulas_of(const NDProof& p);

/// Rule for rule, leaf for leaf. Throws Error for formulas outside the
/// mapping's domain or schematic atoms outside the universe.
AtomicDeduction translate_nd_to_atomic(const NDProof& p, const Simulation& sim);

/// Inverse translation; discharged leaves receive fresh labels.
NDProof translate_atomic_to_nd(const AtomicDeduction& d, const Simulation& sim);

/// Image of a judgment under the mapping (atoms outside the domain throw).
AtomicSequent map_judgment(const NDJudgment& j, const AtomicMapping& m);
/// Preimage of a sequent; atoms outside the image stay atoms.
NDJudgment unmap_sequent(const AtomicSequent& s, const AtomicMapping& m);

}  // namespace bilat

#endif  // BILAT_SIMULATION_HPP_
