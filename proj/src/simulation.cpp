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

#include "bilat/simulation.hpp"

#include <algorithm>
#include <cctype>

namespace bilat {

AtomicMapping::AtomicMapping(std::map<Formula, Atom> table) : table_(std::move(table)) {
  for (const auto& [f, a] : table_) {
    if (f.is_atom() && f.atom() != a) throw Error("atomic mapping moves atom '" + f.atom().name() + "'");
    if (!inverse_.emplace(a, f).second) throw Error("atomic mapping is not injective at '" + a.name() + "'");
  }
}

const Atom& AtomicMapping::at(const Formula& f) const {
  auto it = table_.find(f);
  if (it == table_.end()) throw Error("formula '" + print_formula(f) + "' is outside the mapping's domain");
  return it->second;
}

std::optional<Formula> AtomicMapping::preimage(const Atom& a) const {
  auto it = inverse_.find(a);
  if (it == inverse_.end()) return std::nullopt;
  return it->second;
}

AtomSet AtomicMapping::image() const {
  AtomSet out;
  for (const auto& [f, a] : table_) out.insert(a);
  return out;
}

bool is_reserved_atom_name(std::string_view name) {
  if (name.size() < 3 || name.substr(0, 2) != "f_") return false;
  return std::all_of(name.begin() + 2, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

AtomicMapping build_mapping(const FormulaSet& theta) {
  FormulaSet closure = subformula_closure(theta);
  std::vector<std::pair<std::string, Formula>> non_atoms;
  std::map<Formula, Atom> table;
  for (const auto& f : closure) {
    if (f.is_atom()) {
      if (is_reserved_atom_name(f.atom().name())) {
        throw Error("atom '" + f.atom().name() + "' collides with the reserved f_<k> names");
      }
      table.emplace(f, f.atom());
    } else {
      non_atoms.emplace_back(print_formula(f), f);
    }
  }
  std::sort(non_atoms.begin(), non_atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < non_atoms.size(); ++k) {
    table.emplace(non_atoms[k].second, Atom("f_" + std::to_string(k)));
  }
  return AtomicMapping(std::move(table));
}

namespace {

/// One rule family of the simulation base: the N2Int* rule it mirrors, the
/// connective it is indexed by, and whether that formula is the conclusion
/// (introductions, constants) or the major premise (eliminations).
struct Family {
  const char* label;
  NDRule rule;
  std::optional<Polarity> result;
  Connective connective;
  bool keyed_by_conclusion;
  bool schematic;
};

constexpr auto kPlus = Polarity::Plus;
constexpr auto kMinus = Polarity::Minus;

const std::vector<Family>& families() {
  using R = NDRule;
  using C = Connective;
  static const std::vector<Family> fs = {
      {"I(+)", R::ImpIPlus, std::nullopt, C::Imp, true, false},
      {"E(+)", R::ImpEPlus, std::nullopt, C::Imp, false, false},
      {"I(-)", R::ImpIMinus, std::nullopt, C::Imp, true, false},
      {"E1(-)", R::ImpE1Minus, std::nullopt, C::Imp, false, false},
      {"E2(-)", R::ImpE2Minus, std::nullopt, C::Imp, false, false},
      {"I1(+)", R::OrI1Plus, std::nullopt, C::Or, true, false},
      {"I2(+)", R::OrI2Plus, std::nullopt, C::Or, true, false},
      {"E1(+)", R::OrEPlus, kPlus, C::Or, false, true},
      {"E2(+)", R::OrEPlus, kMinus, C::Or, false, true},
      {"I(-)", R::OrIMinus, std::nullopt, C::Or, true, false},
      {"E1(-)", R::OrE1Minus, std::nullopt, C::Or, false, false},
      {"E2(-)", R::OrE2Minus, std::nullopt, C::Or, false, false},
      {"I(+)", R::AndIPlus, std::nullopt, C::And, true, false},
      {"E1(+)", R::AndE1Plus, std::nullopt, C::And, false, false},
      {"E2(+)", R::AndE2Plus, std::nullopt, C::And, false, false},
      {"I1(-)", R::AndI1Minus, std::nullopt, C::And, true, false},
      {"I2(-)", R::AndI2Minus, std::nullopt, C::And, true, false},
      {"E1(-)", R::AndEMinus, kMinus, C::And, false, true},
      {"E2(-)", R::AndEMinus, kPlus, C::And, false, true},
      {"I(+)", R::CoImpIPlus, std::nullopt, C::CoImp, true, false},
      {"E1(+)", R::CoImpE1Plus, std::nullopt, C::CoImp, false, false},
      {"E2(+)", R::CoImpE2Plus, std::nullopt, C::CoImp, false, false},
      {"I(-)", R::CoImpIMinus, std::nullopt, C::CoImp, true, false},
      {"E(-)", R::CoImpEMinus, std::nullopt, C::CoImp, false, false},
      {"top(+)", R::TopPlus, std::nullopt, C::Top, true, false},
      {"top(-)1", R::TopMinus, kMinus, C::Top, false, true},
      {"top(-)2", R::TopMinus, kPlus, C::Top, false, true},
      {"bot(-)", R::BotMinus, std::nullopt, C::Bot, true, false},
      {"bot(+)1", R::BotPlus, kPlus, C::Bot, false, true},
      {"bot(+)2", R::BotPlus, kMinus, C::Bot, false, true},
  };
  return fs;
}

const Family& family_of(const NDRuleTag& tag) {
  for (const auto& f : families()) {
    if (f.rule == tag.rule && f.result == tag.result) return f;
  }
  throw Error("no simulation rule mirrors " + std::string(to_string(tag.rule)));
}

std::string rule_name(const Family& fam, const Atom& key, const std::optional<Atom>& q) {
  std::string name = std::string(fam.label) + "," + key.name();
  if (q) name += "," + q->name();
  return name;
}

Formula instantiate(const Formula& pattern, const std::map<std::string, Formula>& b) {
  if (pattern.is_atom()) return b.at(pattern.atom().name());
  if (!pattern.is_binary()) return pattern;
  return make_binary(pattern.kind(), instantiate(pattern.lhs(), b), instantiate(pattern.rhs(), b));
}

/// Mapping lookup that lets atoms outside the domain stand for themselves.
Atom image_of(const AtomicMapping& m, const Formula& f) {
  if (f.is_atom() && !m.contains(f)) return f.atom();
  return m.at(f);
}

Formula preimage_of(const AtomicMapping& m, const Atom& a) { return m.preimage(a).value_or(make_atom(a)); }

AtomicRule instantiate_family(const Family& fam, const Formula& phi, const std::optional<Atom>& q,
                              const AtomicMapping& m) {
  const NDRuleSchema& schema = nd_schema(fam.rule);
  std::map<std::string, Formula> b;
  if (phi.is_binary()) {
    b.emplace("phi", phi.lhs());
    b.emplace("psi", phi.rhs());
  }
  if (q) b.emplace(phi.is_binary() ? "chi" : "phi", preimage_of(m, *q));
  const Polarity result = fam.result.value_or(kPlus);
  AtomicRule r{rule_name(fam, m.at(phi), q), {}, image_of(m, instantiate(schema.conclusion, b)),
               schema.conclusion_polarity.value_or(result)};
  for (const auto& ps : schema.premises) {
    RulePremise prem{image_of(m, instantiate(ps.pattern, b)), ps.polarity.value_or(result), {}, {}};
    if (ps.discharges) {
      Atom d = image_of(m, instantiate(*ps.discharges, b));
      (ps.discharge_role == kPlus ? prem.discharged_proofs : prem.discharged_refutations).insert(d);
    }
    r.premises.push_back(std::move(prem));
  }
  return r;
}

void collect_formulas(const NDProof& p, FormulaSet& out) {
  out.insert(p.conclusion());
  if (const auto* app = std::get_if<NDProof::Apply>(&p.node)) {
    for (const auto& c : app->children) collect_formulas(c, out);
  }
}

void relabel(NDProof& p, const Formula& f, Polarity pol, unsigned label) {
  if (auto* a = std::get_if<NDProof::Assume>(&p.node)) {
    if (a->label == 0 && a->formula == f && a->polarity == pol) a->label = label;
    return;
  }
  for (auto& c : std::get<NDProof::Apply>(p.node).children) relabel(c, f, pol, label);
}

NDProof back(const AtomicDeduction& d, const Simulation& sim, unsigned& next_label) {
  if (const auto* leaf = std::get_if<AtomicDeduction::Assumption>(&d.node)) {
    if (!sim.mapping.preimage(leaf->atom) && !sim.universe.count(leaf->atom)) {
      throw Error("atom '" + leaf->atom.name() + "' is outside the mapping image and the query universe");
    }
    return NDProof::assume(preimage_of(sim.mapping, leaf->atom), leaf->polarity);
  }
  const auto& app = std::get<AtomicDeduction::RuleApp>(d.node);
  const AtomicRule* rule = sim.base.find(app.rule);
  auto mirror = sim.mirrors.find(app.rule);
  if (!rule || mirror == sim.mirrors.end()) throw Error("rule '" + app.rule + "' is not in the simulation base");
  if (rule->premises.size() != app.children.size()) throw Error("rule '" + app.rule + "' applied with wrong arity");
  std::vector<NDProof> children;
  std::vector<unsigned> discharge;
  for (std::size_t i = 0; i < app.children.size(); ++i) {
    NDProof child = back(app.children[i], sim, next_label);
    const RulePremise& prem = rule->premises[i];
    auto discharge_in = [&](const AtomSet& atoms, Polarity role) {
      for (const auto& a : atoms) {
        unsigned label = next_label++;
        relabel(child, preimage_of(sim.mapping, a), role, label);
        discharge.push_back(label);
      }
    };
    discharge_in(prem.discharged_proofs, kPlus);
    discharge_in(prem.discharged_refutations, kMinus);
    children.push_back(std::move(child));
  }
  return NDProof::apply(mirror->second, preimage_of(sim.mapping, rule->conclusion), std::move(children),
                        std::move(discharge));
}

}  // namespace

Simulation build_simulation(const SimulationSpec& spec) {
  Simulation sim;
  sim.mapping = build_mapping(spec.theta);
  sim.universe = spec.query_universe;
  AtomSet image = sim.mapping.image();
  if (sim.universe.empty()) {
    sim.universe = image;
    sim.universe.insert(Atom("q_fresh"));
  }
  for (const auto& a : image) {
    if (!sim.universe.count(a)) throw Error("query universe misses mapped atom '" + a.name() + "'");
  }
  std::vector<AtomicRule> rules;
  for (const auto& [phi, atom] : sim.mapping.table()) {
    if (phi.is_atom()) continue;
    for (const auto& fam : families()) {
      if (fam.connective != phi.kind()) continue;
      NDRuleTag tag{fam.rule, fam.result};
      if (!fam.schematic) {
        rules.push_back(instantiate_family(fam, phi, std::nullopt, sim.mapping));
        sim.mirrors.emplace(rules.back().name, tag);
        continue;
      }
      for (const auto& q : sim.universe) {
        rules.push_back(instantiate_family(fam, phi, q, sim.mapping));
        sim.mirrors.emplace(rules.back().name, tag);
      }
    }
  }
  sim.base = Base(std::move(rules));
  return sim;
}

Base build_simulation_base(const SimulationSpec& spec) { return build_simulation(spec).base; }

FormulaSet formulas_of(const NDProof& p) {
  FormulaSet out;
  collect_formulas(p, out);
  return out;
}

AtomicDeduction translate_nd_to_atomic(const NDProof& p, const Simulation& sim) {
  if (const auto* a = std::get_if<NDProof::Assume>(&p.node)) {
    if (a->formula.is_atom() && sim.universe.count(a->formula.atom())) {
      return AtomicDeduction::assume(a->formula.atom(), a->polarity);
    }
    return AtomicDeduction::assume(sim.mapping.at(a->formula), a->polarity);
  }
  const auto& app = std::get<NDProof::Apply>(p.node);
  const Family& fam = family_of(app.tag);
  if (!fam.keyed_by_conclusion && app.children.empty()) throw Error("elimination without a major premise");
  const Formula& key = fam.keyed_by_conclusion ? app.conclusion : app.children[0].conclusion();
  std::optional<Atom> q;
  if (fam.schematic) {
    q = image_of(sim.mapping, app.conclusion);
    if (!sim.universe.count(*q)) throw Error("schematic atom '" + q->name() + "' is outside the query universe");
  }
  if (!sim.mapping.contains(key)) throw Error("formula '" + print_formula(key) + "' is outside the mapping's domain");
  std::string name = rule_name(fam, sim.mapping.at(key), q);
  if (!sim.base.find(name)) throw Error("simulation base lacks rule '" + name + "'");
  std::vector<AtomicDeduction> children;
  for (const auto& c : app.children) children.push_back(translate_nd_to_atomic(c, sim));
  return AtomicDeduction::apply(std::move(name), std::move(children));
}

NDProof translate_atomic_to_nd(const AtomicDeduction& d, const Simulation& sim) {
  unsigned next_label = 1;
  return back(d, sim, next_label);
}

AtomicSequent map_judgment(const NDJudgment& j, const AtomicMapping& m) {
  AtomicSequent s{{}, {}, j.polarity, image_of(m, j.conclusion)};
  for (const auto& f : j.proofs) s.proofs.insert(image_of(m, f));
  for (const auto& f : j.refutations) s.refutations.insert(image_of(m, f));
  return s;
}

NDJudgment unmap_sequent(const AtomicSequent& s, const AtomicMapping& m) {
  NDJudgment j{{}, {}, s.polarity, preimage_of(m, s.conclusion)};
  for (const auto& a : s.proofs) j.proofs.insert(preimage_of(m, a));
  for (const auto& a : s.refutations) j.refutations.insert(preimage_of(m, a));
  return j;
}

}  // namespace bilat
