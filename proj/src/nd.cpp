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

#include "bilat/nd.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace bilat {

namespace {

constexpr std::array<std::string_view, kNDRuleCount> kNames = {
    "TopPlus",     "BotMinus",    "BotPlus",     "TopMinus",   "AndIPlus",   "AndE1Plus",  "AndE2Plus",
    "OrI1Plus",    "OrI2Plus",    "OrEPlus",     "ImpIPlus",   "ImpEPlus",   "CoImpIPlus", "CoImpE1Plus",
    "CoImpE2Plus", "CoImpIMinus", "CoImpEMinus", "AndI1Minus", "AndI2Minus", "AndEMinus",  "OrIMinus",
    "OrE1Minus",   "OrE2Minus",   "ImpIMinus",   "ImpE1Minus", "ImpE2Minus"};

constexpr auto kPlus = Polarity::Plus;
constexpr auto kMinus = Polarity::Minus;

NDPremiseSchema prem(std::string_view pattern, std::optional<Polarity> pol) {
  return {parse_formula(pattern), pol, std::nullopt, kPlus};
}

NDPremiseSchema discharging(std::string_view pattern, std::optional<Polarity> pol, std::string_view assumption,
                            Polarity role) {
  return {parse_formula(pattern), pol, parse_formula(assumption), role};
}

std::vector<NDRuleSchema> build_catalog() {
  using R = NDRule;
  const std::optional<Polarity> dotted;
  auto rule = [](R r, std::vector<NDPremiseSchema> ps, std::string_view concl, std::optional<Polarity> pol) {
    return NDRuleSchema{r, std::move(ps), parse_formula(concl), pol};
  };
  std::vector<NDRuleSchema> c;
  c.push_back(rule(R::TopPlus, {}, "top", kPlus));
  c.push_back(rule(R::BotMinus, {}, "bot", kMinus));
  c.push_back(rule(R::BotPlus, {prem("bot", kPlus)}, "phi", dotted));
  c.push_back(rule(R::TopMinus, {prem("top", kMinus)}, "phi", dotted));
  c.push_back(rule(R::AndIPlus, {prem("phi", kPlus), prem("psi", kPlus)}, "phi & psi", kPlus));
  c.push_back(rule(R::AndE1Plus, {prem("phi & psi", kPlus)}, "phi", kPlus));
  c.push_back(rule(R::AndE2Plus, {prem("phi & psi", kPlus)}, "psi", kPlus));
  c.push_back(rule(R::OrI1Plus, {prem("phi", kPlus)}, "phi | psi", kPlus));
  c.push_back(rule(R::OrI2Plus, {prem("psi", kPlus)}, "phi | psi", kPlus));
  c.push_back(rule(R::OrEPlus,
                   {prem("phi | psi", kPlus), discharging("chi", dotted, "phi", kPlus),
                    discharging("chi", dotted, "psi", kPlus)},
                   "chi", dotted));
  c.push_back(rule(R::ImpIPlus, {discharging("psi", kPlus, "phi", kPlus)}, "phi -> psi", kPlus));
  c.push_back(rule(R::ImpEPlus, {prem("phi -> psi", kPlus), prem("phi", kPlus)}, "psi", kPlus));
  c.push_back(rule(R::CoImpIPlus, {prem("phi", kPlus), prem("psi", kMinus)}, "phi <- psi", kPlus));
  c.push_back(rule(R::CoImpE1Plus, {prem("phi <- psi", kPlus)}, "phi", kPlus));
  c.push_back(rule(R::CoImpE2Plus, {prem("phi <- psi", kPlus)}, "psi", kMinus));
  c.push_back(rule(R::CoImpIMinus, {discharging("phi", kMinus, "psi", kMinus)}, "phi <- psi", kMinus));
  c.push_back(rule(R::CoImpEMinus, {prem("phi <- psi", kMinus), prem("psi", kMinus)}, "phi", kMinus));
  c.push_back(rule(R::AndI1Minus, {prem("phi", kMinus)}, "phi & psi", kMinus));
  c.push_back(rule(R::AndI2Minus, {prem("psi", kMinus)}, "phi & psi", kMinus));
  c.push_back(rule(R::AndEMinus,
                   {prem("phi & psi", kMinus), discharging("chi", dotted, "phi", kMinus),
                    discharging("chi", dotted, "psi", kMinus)},
                   "chi", dotted));
  c.push_back(rule(R::OrIMinus, {prem("phi", kMinus), prem("psi", kMinus)}, "phi | psi", kMinus));
  c.push_back(rule(R::OrE1Minus, {prem("phi | psi", kMinus)}, "phi", kMinus));
  c.push_back(rule(R::OrE2Minus, {prem("phi | psi", kMinus)}, "psi", kMinus));
  c.push_back(rule(R::ImpIMinus, {prem("phi", kPlus), prem("psi", kMinus)}, "phi -> psi", kMinus));
  c.push_back(rule(R::ImpE1Minus, {prem("phi -> psi", kMinus)}, "phi", kPlus));
  c.push_back(rule(R::ImpE2Minus, {prem("phi -> psi", kMinus)}, "psi", kMinus));
  return c;
}

using Bindings = std::map<std::string, Formula>;

bool match(const Formula& pattern, const Formula& f, Bindings& b) {
  if (pattern.is_atom()) {
    auto [it, fresh] = b.emplace(pattern.atom().name(), f);
    return fresh || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  if (!pattern.is_binary()) return true;
  return match(pattern.lhs(), f.lhs(), b) && match(pattern.rhs(), f.rhs(), b);
}

Formula instantiate(const Formula& pattern, const Bindings& b) {
  if (pattern.is_atom()) return b.at(pattern.atom().name());
  if (!pattern.is_binary()) return pattern;
  return make_binary(pattern.kind(), instantiate(pattern.lhs(), b), instantiate(pattern.rhs(), b));
}

struct Leaf {
  unsigned label;
  Formula formula;
  Polarity polarity;
  friend auto operator<=>(const Leaf&, const Leaf&) = default;
  friend bool operator==(const Leaf&, const Leaf&) = default;
};

using Open = std::set<Leaf>;

std::string describe(const Formula& f, Polarity p) { return print_formula(f) + " (" + std::string(to_string(p)) + ")"; }

class Checker {
 public:
  using Kind = NDCheckError::Kind;

  void scan(const NDProof& p, const std::string& path) {
    if (const auto* a = std::get_if<NDProof::Assume>(&p.node)) {
      if (a->label == 0) return;
      auto [it, fresh] = labels_.emplace(a->label, Leaf{a->label, a->formula, a->polarity});
      if (!fresh && (it->second.formula != a->formula || it->second.polarity != a->polarity)) {
        throw NDCheckError(Kind::DuplicateLabelConflict, path,
                           "label " + std::to_string(a->label) + " used for " +
                               describe(it->second.formula, it->second.polarity) + " and " +
                               describe(a->formula, a->polarity));
      }
      return;
    }
    const auto& app = std::get<NDProof::Apply>(p.node);
    for (unsigned l : app.discharge) {
      if (l == 0) throw NDCheckError(Kind::IllegalDischarge, path, "label 0 marks undischargeable assumptions");
      if (!discharged_.insert(l).second) {
        throw NDCheckError(Kind::IllegalDischarge, path, "label " + std::to_string(l) + " discharged twice");
      }
    }
    for (std::size_t i = 0; i < app.children.size(); ++i) scan(app.children[i], path + "/" + std::to_string(i));
  }

  Open check(const NDProof& p, const std::string& path) {
    if (const auto* a = std::get_if<NDProof::Assume>(&p.node)) return {Leaf{a->label, a->formula, a->polarity}};
    const auto& app = std::get<NDProof::Apply>(p.node);
    const NDRuleSchema& schema = nd_schema(app.tag.rule);
    const std::string name(to_string(app.tag.rule));

    if (is_flexible(app.tag.rule) != app.tag.result.has_value()) {
      throw NDCheckError(Kind::PolarityMismatch, path,
                         is_flexible(app.tag.rule) ? name + " needs a result polarity"
                                                   : name + " does not take a result polarity");
    }
    if (app.children.size() != schema.premises.size()) {
      throw NDCheckError(Kind::ChildCount, path,
                         name + " takes " + std::to_string(schema.premises.size()) + " premises, got " +
                             std::to_string(app.children.size()));
    }
    std::vector<Open> opens;
    for (std::size_t i = 0; i < app.children.size(); ++i) {
      opens.push_back(check(app.children[i], path + "/" + std::to_string(i)));
    }

    Bindings b;
    if (!match(schema.conclusion, app.conclusion, b)) {
      throw NDCheckError(Kind::ShapeMismatch, path,
                         name + " cannot conclude " + print_formula(app.conclusion));
    }
    const Polarity result = app.tag.result.value_or(Polarity::Plus);
    for (std::size_t i = 0; i < app.children.size(); ++i) {
      const auto& ps = schema.premises[i];
      const NDProof& child = app.children[i];
      std::string child_path = path + "/" + std::to_string(i);
      if (!match(ps.pattern, child.conclusion(), b)) {
        throw NDCheckError(Kind::ShapeMismatch, child_path,
                           "premise " + std::to_string(i) + " of " + name + " cannot be " +
                               print_formula(child.conclusion()));
      }
      Polarity expected = ps.polarity.value_or(result);
      if (child.polarity() != expected) {
        throw NDCheckError(ps.polarity ? Kind::PolarityMismatch : Kind::MixedDottedLines, child_path,
                           "premise " + std::to_string(i) + " of " + name + " must have sign " +
                               std::string(to_string(expected)));
      }
    }

    Open out;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      const auto& ps = schema.premises[i];
      for (const Leaf& leaf : opens[i]) {
        bool discharged = leaf.label != 0 &&
                          std::find(app.discharge.begin(), app.discharge.end(), leaf.label) != app.discharge.end();
        if (!discharged) {
          out.insert(leaf);
          continue;
        }
        if (!ps.discharges) {
          throw NDCheckError(Kind::IllegalDischarge, path,
                             "premise " + std::to_string(i) + " of " + name + " discharges nothing, but label " +
                                 std::to_string(leaf.label) + " occurs in it");
        }
        Formula required = instantiate(*ps.discharges, b);
        if (leaf.formula != required || leaf.polarity != ps.discharge_role) {
          throw NDCheckError(Kind::IllegalDischarge, path,
                             name + " may discharge " + describe(required, ps.discharge_role) +
                                 " in premise " + std::to_string(i) + ", not " +
                                 describe(leaf.formula, leaf.polarity));
        }
      }
    }
    return out;
  }

  void check_escapes(const Open& open) const {
    for (const Leaf& leaf : open) {
      if (leaf.label != 0 && discharged_.count(leaf.label)) {
        throw NDCheckError(Kind::IllegalDischarge, "root",
                           "assumption labeled " + std::to_string(leaf.label) +
                               " occurs outside the application discharging it");
      }
    }
  }

 private:
  std::map<unsigned, Leaf> labels_;
  std::set<unsigned> discharged_;
};

}  // namespace

std::string_view to_string(NDRule r) { return kNames[static_cast<std::size_t>(r)]; }

NDRule parse_nd_rule(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<NDRule>(i);
  }
  throw Error("unknown N2Int* rule '" + std::string(name) + "'");
}

bool is_flexible(NDRule r) {
  return r == NDRule::BotPlus || r == NDRule::TopMinus || r == NDRule::OrEPlus || r == NDRule::AndEMinus;
}

const std::vector<NDRuleSchema>& nd_rule_catalog() {
  static const std::vector<NDRuleSchema> catalog = build_catalog();
  return catalog;
}

const NDRuleSchema& nd_schema(NDRule r) { return nd_rule_catalog()[static_cast<std::size_t>(r)]; }

Polarity NDProof::polarity() const {
  if (const auto* a = std::get_if<Assume>(&node)) return a->polarity;
  const auto& app = std::get<Apply>(node);
  if (app.tag.result) return *app.tag.result;
  return nd_schema(app.tag.rule).conclusion_polarity.value_or(Polarity::Plus);
}

const Formula& NDProof::conclusion() const {
  if (const auto* a = std::get_if<Assume>(&node)) return a->formula;
  return std::get<Apply>(node).conclusion;
}

std::size_t NDProof::height() const {
  const auto* app = std::get_if<Apply>(&node);
  if (!app) return 0;
  std::size_t h = 0;
  for (const auto& c : app->children) h = std::max(h, c.height());
  return h + 1;
}

std::string format_judgment(const NDJudgment& j) {
  return format_set(j.proofs) + "; " + format_set(j.refutations) +
         (j.polarity == Polarity::Plus ? " ⊢+ " : " ⊢− ") + print_formula(j.conclusion);
}

bool establishes(const NDJudgment& got, const NDJudgment& target) {
  return got.polarity == target.polarity && got.conclusion == target.conclusion &&
         std::includes(target.proofs.begin(), target.proofs.end(), got.proofs.begin(), got.proofs.end()) &&
         std::includes(target.refutations.begin(), target.refutations.end(), got.refutations.begin(),
                       got.refutations.end());
}

NDCheckError::NDCheckError(Kind kind, std::string path, const std::string& detail)
    : Error(std::string(bilat::to_string(kind)) + " at " + path + ": " + detail),
      kind_(kind),
      path_(std::move(path)) {}

std::string_view to_string(NDCheckError::Kind k) {
  switch (k) {
    case NDCheckError::Kind::ChildCount: return "ChildCount";
    case NDCheckError::Kind::ShapeMismatch: return "ShapeMismatch";
    case NDCheckError::Kind::PolarityMismatch: return "PolarityMismatch";
    case NDCheckError::Kind::MixedDottedLines: return "MixedDottedLines";
    case NDCheckError::Kind::IllegalDischarge: return "IllegalDischarge";
    case NDCheckError::Kind::DuplicateLabelConflict: return "DuplicateLabelConflict";
  }
  return "?";
}

NDJudgment check_nd(const NDProof& p) {
  Checker checker;
  checker.scan(p, "root");
  Open open = checker.check(p, "root");
  checker.check_escapes(open);
  NDJudgment j{{}, {}, p.polarity(), p.conclusion()};
  for (const Leaf& leaf : open) (leaf.polarity == Polarity::Plus ? j.proofs : j.refutations).insert(leaf.formula);
  return j;
}

}  // namespace bilat
