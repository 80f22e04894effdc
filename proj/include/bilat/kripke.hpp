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

#ifndef BILAT_KRIPKE_HPP_
#define BILAT_KRIPKE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilat/formula.hpp"

namespace bilat {

/// A model as read from a file: world names, generating pairs (a, b)
/// meaning b >= a, and the two valuations. Missing valuation entries are empty.
struct RawModel {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::string, AtomSet> vplus;
  std::map<std::string, AtomSet> vminus;
};

/// A validated model: the order is reflexive and transitive and both
/// valuations grow along it. Worlds are dense indices.
class KripkeModel {
 public:
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t w) const { return names_.at(w); }
  /// Throws Error for an unknown name.
  std::size_t world(const std::string& name) const;

  /// v >= w.
  bool above(std::size_t w, std::size_t v) const { return above_[w * size() + v]; }
  const AtomSet& vplus(std::size_t w) const { return vplus_.at(w); }
  const AtomSet& vminus(std::size_t w) const { return vminus_.at(w); }

  /// Closed order as pairs (a, b) with a != b and b >= a.
  RawModel to_raw() const;

 private:
  friend KripkeModel validate_model(const RawModel& raw);
  friend struct KripkeBuilder;
  std::vector<std::string> names_;
  std::vector<bool> above_;
  std::vector<AtomSet> vplus_;
  std::vector<AtomSet> vminus_;
};

class MonotonicityViolation : public Error {
 public:
  MonotonicityViolation(std::string lower, std::string upper, Atom atom, Polarity sign);

  const std::string& lower() const { return lower_; }
  const std::string& upper() const { return upper_; }
  const Atom& atom() const { return atom_; }
  Polarity sign() const { return sign_; }

 private:
  std::string lower_;
  std::string upper_;
  Atom atom_;
  Polarity sign_;
};

/// Closes the order reflexively and transitively, then checks that
/// valuations persist upward. Throws MonotonicityViolation or Error.
KripkeModel validate_model(const RawModel& raw);

/// Forcing at a world. Implication (proof side) and co-implication
/// (refutation side) quantify over all v >= w and evaluate their bodies at v.
bool forces(const KripkeModel& m, std::size_t w, Polarity pol, const Formula& f);

bool model_valid(const KripkeModel& m, Polarity pol, const Formula& f);

/// Every world forcing + all of gamma and - all of delta forces (pol, chi).
bool entails(const KripkeModel& m, const FormulaSet& gamma, const FormulaSet& delta, Polarity pol,
             const Formula& chi);

struct Countermodel {
  KripkeModel model;
  std::size_t world;
};

struct CountermodelLimits {
  std::size_t max_worlds = 4;
  /// Hard ceiling on the number of candidate models; exceeding it throws.
  std::uint64_t ceiling = 50'000'000;
};

/// Searches rooted finite posets with up-set valuations over `universe`
/// (defaulting to the query's atoms), smallest world count first, for a
/// root that forces the antecedents but not (pol, chi). Any witness is
/// re-verified with forces() before it is returned.
std::optional<Countermodel> countermodel_search(const FormulaSet& gamma, const FormulaSet& delta, Polarity pol,
                                                const Formula& chi, const CountermodelLimits& limits,
                                                const AtomSet& universe = {});

}  // namespace bilat

#endif  // BILAT_KRIPKE_HPP_
