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

#include "bilat/atomic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "bilat/detail/compiled.hpp"

namespace bilat {

namespace detail {

int AtomIndex::intern(const Atom& a) {
  auto it = ids_.find(a);
  if (it != ids_.end()) return it->second;
  if (size() >= kMaxAtoms) throw Error("more than 64 distinct atoms in one derivability query");
  int id = size();
  atoms_.push_back(a);
  ids_.emplace(a, id);
  return id;
}

int AtomIndex::find(const Atom& a) const {
  auto it = ids_.find(a);
  return it == ids_.end() ? -1 : it->second;
}

Mask AtomIndex::intern_mask(const AtomSet& s) {
  Mask m = 0;
  for (const auto& a : s) m |= bit(intern(a));
  return m;
}

AtomSet AtomIndex::atoms(Mask m) const {
  AtomSet out;
  for (int i = 0; i < size(); ++i) {
    if (m & bit(i)) out.insert(atom(i));
  }
  return out;
}

CRule compile_rule(const AtomicRule& r, AtomIndex& idx) {
  CRule c{{}, idx.intern(r.conclusion), r.conclusion_polarity};
  c.premises.reserve(r.premises.size());
  for (const auto& p : r.premises) {
    c.premises.push_back({idx.intern(p.atom), p.polarity, idx.intern_mask(p.discharged_proofs),
                          idx.intern_mask(p.discharged_refutations)});
  }
  return c;
}

AtomicRule decompile_rule(const CRule& r, const AtomIndex& idx, std::string name) {
  AtomicRule out{std::move(name), {}, idx.atom(r.conclusion), r.pol};
  for (const auto& p : r.premises) {
    out.premises.push_back({idx.atom(p.atom), p.pol, idx.atoms(p.dis_proofs), idx.atoms(p.dis_refs)});
  }
  return out;
}

RuleSet::RuleSet(std::vector<CRule> rules) {
  for (auto& r : rules) add(std::move(r));
}

void RuleSet::add(CRule r) {
  std::size_t head = static_cast<std::size_t>(r.conclusion) * 2 + (r.pol == Polarity::Minus);
  if (by_head_.size() <= head) by_head_.resize(head + 1);
  by_head_[head].push_back(static_cast<int>(rules_.size()));
  rules_.push_back(std::move(r));
}

const std::vector<int>& RuleSet::concluding(int atom, Polarity pol) const {
  std::size_t head = static_cast<std::size_t>(atom) * 2 + (pol == Polarity::Minus);
  return head < by_head_.size() ? by_head_[head] : none_;
}

namespace {

bool is_assumption_case(const CGoal& g) {
  return g.pol == Polarity::Plus ? (g.proofs & bit(g.atom)) != 0 : (g.refs & bit(g.atom)) != 0;
}

struct GoalHash {
  std::size_t operator()(const CGoal& g) const {
    std::size_t h = std::hash<Mask>{}(g.proofs);
    h ^= std::hash<Mask>{}(g.refs) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(g.atom * 2 + (g.pol == Polarity::Minus)) + 0x9e3779b9 + (h << 6);
    return h;
  }
};

// Reachable goals from a root, with one alternative per applicable rule,
// solved as a Horn system by counter propagation.
class GoalGraph {
 public:
  GoalGraph(const RuleSet& rules, const CGoal& root) : rules_(rules) {
    intern(root);
    for (std::size_t next = 0; next < goals_.size(); ++next) expand(static_cast<int>(next));
  }

  // Propagates until the root is proven (when `stop_at_root`) or to the fixpoint.
  bool solve(bool stop_at_root) {
    std::deque<int> queue;
    for (int g = 0; g < static_cast<int>(goals_.size()); ++g) {
      if (is_assumption_case(goals_[g])) mark(g, queue);
    }
    for (auto& alt : alts_) {
      if (alt.pending == 0) mark(alt.owner, queue);
    }
    while (!queue.empty()) {
      if (stop_at_root && rank_[0] >= 0) return true;
      int g = queue.front();
      queue.pop_front();
      for (int a : parents_[g]) {
        if (--alts_[a].pending == 0) mark(alts_[a].owner, queue);
      }
    }
    return rank_[0] >= 0;
  }

  CWitness witness(int g) const {
    CWitness w{goals_[g], -1, {}};
    if (is_assumption_case(goals_[g])) return w;
    for (int a : alts_of_[g]) {
      const auto& alt = alts_[a];
      bool earlier = std::all_of(alt.children.begin(), alt.children.end(), [&](int c) {
        return rank_[c] >= 0 && rank_[c] < rank_[g];
      });
      if (!earlier) continue;
      w.rule = alt.rule;
      for (int c : alt.children) w.children.push_back(witness(c));
      return w;
    }
    throw Error("internal: no well-founded alternative for a proven goal");
  }

 private:
  struct Alt {
    int rule;
    int owner;
    std::vector<int> children;
    int pending;
  };

  int intern(const CGoal& g) {
    auto [it, fresh] = ids_.emplace(g, static_cast<int>(goals_.size()));
    if (fresh) {
      goals_.push_back(g);
      alts_of_.emplace_back();
      parents_.emplace_back();
      rank_.push_back(-1);
    }
    return it->second;
  }

  void expand(int g) {
    CGoal goal = goals_[g];
    if (is_assumption_case(goal)) return;
    for (int ri : rules_.concluding(goal.atom, goal.pol)) {
      const CRule& r = rules_.rules()[ri];
      Alt alt{ri, g, {}, 0};
      for (const auto& p : r.premises) {
        int c = intern({goal.proofs | p.dis_proofs, goal.refs | p.dis_refs, p.atom, p.pol});
        alt.children.push_back(c);
      }
      // Duplicate premises share a child; count each occurrence.
      alt.pending = static_cast<int>(alt.children.size());
      int ai = static_cast<int>(alts_.size());
      for (int c : alt.children) parents_[c].push_back(ai);
      alts_of_[g].push_back(ai);
      alts_.push_back(std::move(alt));
    }
  }

  void mark(int g, std::deque<int>& queue) {
    if (rank_[g] >= 0) return;
    rank_[g] = next_rank_++;
    queue.push_back(g);
  }

  const RuleSet& rules_;
  std::vector<CGoal> goals_;
  std::unordered_map<CGoal, int, GoalHash> ids_;
  std::vector<Alt> alts_;
  std::vector<std::vector<int>> alts_of_;
  std::vector<std::vector<int>> parents_;
  std::vector<int> rank_;
  int next_rank_ = 0;
};

}  // namespace

bool derives(const RuleSet& rules, const CGoal& goal) {
  if (is_assumption_case(goal)) return true;
  if (rules.concluding(goal.atom, goal.pol).empty()) return false;
  return GoalGraph(rules, goal).solve(true);
}

std::optional<CWitness> derive_witness(const RuleSet& rules, const CGoal& goal) {
  GoalGraph graph(rules, goal);
  if (!graph.solve(false)) return std::nullopt;
  return graph.witness(0);
}

}  // namespace detail

// ---------------------------------------------------------------------------

std::size_t AtomicDeduction::height() const {
  if (const auto* app = std::get_if<RuleApp>(&node)) {
    std::size_t h = 0;
    for (const auto& c : app->children) h = std::max(h, c.height());
    return h + 1;
  }
  return 0;
}

AtomicSequent dual_sequent(const AtomicSequent& s) {
  return {s.refutations, s.proofs, dual(s.polarity), s.conclusion};
}

namespace {

std::string format_atom_set(const AtomSet& s) {
  if (s.empty()) return "∅";
  std::string out = "{";
  for (const auto& a : s) {
    if (out.size() > 1) out += ", ";
    out += a.name();
  }
  return out + "}";
}

}  // namespace

std::string format_sequent(const AtomicSequent& s) {
  return format_atom_set(s.proofs) + "; " + format_atom_set(s.refutations) +
         (s.polarity == Polarity::Plus ? " ⊢+ " : " ⊢− ") + s.conclusion.name();
}

AtomicCheckError::AtomicCheckError(Kind kind, std::string path, const std::string& detail)
    : Error(std::string(bilat::to_string(kind)) + " at " + path + ": " + detail),
      kind_(kind),
      path_(std::move(path)) {}

std::string_view to_string(AtomicCheckError::Kind k) {
  switch (k) {
    case AtomicCheckError::Kind::UnknownRule: return "UnknownRule";
    case AtomicCheckError::Kind::ChildCount: return "ChildCount";
    case AtomicCheckError::Kind::PremiseAtomMismatch: return "PremiseAtomMismatch";
    case AtomicCheckError::Kind::PremisePolarityMismatch: return "PremisePolarityMismatch";
  }
  return "?";
}

namespace {

AtomicSequent check_node(const Base& b, const AtomicDeduction& d, const std::string& path) {
  if (const auto* leaf = std::get_if<AtomicDeduction::Assumption>(&d.node)) {
    AtomicSequent s{{}, {}, leaf->polarity, leaf->atom};
    (leaf->polarity == Polarity::Plus ? s.proofs : s.refutations).insert(leaf->atom);
    return s;
  }
  const auto& app = std::get<AtomicDeduction::RuleApp>(d.node);
  const AtomicRule* rule = b.find(app.rule);
  using Kind = AtomicCheckError::Kind;
  if (!rule) throw AtomicCheckError(Kind::UnknownRule, path, "no rule named '" + app.rule + "'");
  if (rule->premises.size() != app.children.size()) {
    throw AtomicCheckError(Kind::ChildCount, path,
                           "rule '" + rule->name + "' has " + std::to_string(rule->premises.size()) +
                               " premises, got " + std::to_string(app.children.size()));
  }
  AtomicSequent out{{}, {}, rule->conclusion_polarity, rule->conclusion};
  for (std::size_t i = 0; i < app.children.size(); ++i) {
    std::string child_path = path + "/" + std::to_string(i);
    AtomicSequent c = check_node(b, app.children[i], child_path);
    const RulePremise& prem = rule->premises[i];
    if (c.conclusion != prem.atom) {
      throw AtomicCheckError(Kind::PremiseAtomMismatch, child_path,
                             "expected " + prem.atom.name() + ", got " + c.conclusion.name());
    }
    if (c.polarity != prem.polarity) {
      throw AtomicCheckError(Kind::PremisePolarityMismatch, child_path,
                             "premise of '" + rule->name + "' needs sign " +
                                 std::string(to_string(prem.polarity)));
    }
    for (const auto& a : c.proofs) {
      if (!prem.discharged_proofs.count(a)) out.proofs.insert(a);
    }
    for (const auto& a : c.refutations) {
      if (!prem.discharged_refutations.count(a)) out.refutations.insert(a);
    }
  }
  return out;
}

struct Compiled {
  detail::AtomIndex index;
  detail::RuleSet rules;
  detail::CGoal goal;
};

Compiled compile(const Base& b, const AtomicSequent& s) {
  Compiled c;
  std::vector<detail::CRule> rules;
  rules.reserve(b.size());
  for (const auto& r : b.rules()) rules.push_back(detail::compile_rule(r, c.index));
  c.rules = detail::RuleSet(std::move(rules));
  c.goal = {c.index.intern_mask(s.proofs), c.index.intern_mask(s.refutations),
            c.index.intern(s.conclusion), s.polarity};
  return c;
}

AtomicDeduction to_deduction(const detail::CWitness& w, const Base& b, const detail::AtomIndex& idx) {
  if (w.rule < 0) return AtomicDeduction::assume(idx.atom(w.goal.atom), w.goal.pol);
  std::vector<AtomicDeduction> children;
  children.reserve(w.children.size());
  for (const auto& c : w.children) children.push_back(to_deduction(c, b, idx));
  return AtomicDeduction::apply(b.rules()[static_cast<std::size_t>(w.rule)].name, std::move(children));
}

}  // namespace

AtomicSequent check_atomic(const Base& b, const AtomicDeduction& d) { return check_node(b, d, "root"); }

bool derivable(const Base& b, const AtomicSequent& s) {
  Compiled c = compile(b, s);
  return detail::derives(c.rules, c.goal);
}

std::optional<AtomicDeduction> find_deduction(const Base& b, const AtomicSequent& s) {
  Compiled c = compile(b, s);
  auto w = detail::derive_witness(c.rules, c.goal);
  if (!w) return std::nullopt;
  return to_deduction(*w, b, c.index);
}

// ---------------------------------------------------------------------------

FixpointOracle::FixpointOracle(const Base& b, const AtomSet& universe)
    : atoms_(universe.begin(), universe.end()) {
  if (atoms_.size() > 10) throw Error("fixpoint oracle universe limited to 10 atoms");
  for (const auto& a : atoms_of(b)) {
    if (!universe.count(a)) throw Error("universe too small: base mentions atom '" + a.name() + "'");
  }
  const std::size_t n = atoms_.size();
  const std::uint32_t subsets = std::uint32_t{1} << n;
  table_.assign(static_cast<std::size_t>(subsets) * subsets * 2 * n, false);

  struct Prem {
    std::size_t atom;
    Polarity pol;
    std::uint32_t dp;
    std::uint32_t dr;
  };
  struct Rule {
    std::vector<Prem> prems;
    std::size_t head;
    Polarity pol;
  };
  std::vector<Rule> rules;
  for (const auto& r : b.rules()) {
    Rule cr{{}, index_of(r.conclusion), r.conclusion_polarity};
    for (const auto& p : r.premises) {
      cr.prems.push_back({index_of(p.atom), p.polarity, mask_of(p.discharged_proofs),
                          mask_of(p.discharged_refutations)});
    }
    rules.push_back(std::move(cr));
  }

  for (std::uint32_t g = 0; g < subsets; ++g) {
    for (std::uint32_t d = 0; d < subsets; ++d) {
      for (std::size_t a = 0; a < n; ++a) {
        if (g & (1u << a)) table_[slot(g, d, Polarity::Plus, a)] = true;
        if (d & (1u << a)) table_[slot(g, d, Polarity::Minus, a)] = true;
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t g = 0; g < subsets; ++g) {
      for (std::uint32_t d = 0; d < subsets; ++d) {
        for (const auto& r : rules) {
          std::size_t at = slot(g, d, r.pol, r.head);
          if (table_[at]) continue;
          bool all = std::all_of(r.prems.begin(), r.prems.end(), [&](const Prem& p) {
            return table_[slot(g | p.dp, d | p.dr, p.pol, p.atom)];
          });
          if (all) {
            table_[at] = true;
            changed = true;
          }
        }
      }
    }
  }
}

std::size_t FixpointOracle::slot(std::uint32_t proofs, std::uint32_t refs, Polarity pol,
                                 std::size_t atom) const {
  const std::size_t n = atoms_.size();
  std::size_t subsets = std::size_t{1} << n;
  return ((static_cast<std::size_t>(proofs) * subsets + refs) * 2 + (pol == Polarity::Minus)) * n + atom;
}

std::size_t FixpointOracle::index_of(const Atom& a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) throw Error("universe too small: atom '" + a.name() + "'");
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::uint32_t FixpointOracle::mask_of(const AtomSet& s) const {
  std::uint32_t m = 0;
  for (const auto& a : s) m |= 1u << index_of(a);
  return m;
}

bool FixpointOracle::derivable(const AtomicSequent& s) const {
  return table_[slot(mask_of(s.proofs), mask_of(s.refutations), s.polarity, index_of(s.conclusion))];
}

bool derivable_fixpoint(const Base& b, const AtomSet& universe, const AtomicSequent& s) {
  return FixpointOracle(b, universe).derivable(s);
}

AtomicDeduction dual_deduction(const AtomicDeduction& d) {
  if (const auto* leaf = std::get_if<AtomicDeduction::Assumption>(&d.node)) {
    return AtomicDeduction::assume(leaf->atom, dual(leaf->polarity));
  }
  const auto& app = std::get<AtomicDeduction::RuleApp>(d.node);
  std::vector<AtomicDeduction> children;
  children.reserve(app.children.size());
  for (const auto& c : app.children) children.push_back(dual_deduction(c));
  return AtomicDeduction::apply(dual_rule(AtomicRule{app.rule, {}, Atom("p"), Polarity::Plus}).name,
                                std::move(children));
}

}  // namespace bilat
