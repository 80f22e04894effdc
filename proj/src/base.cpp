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

#include "bilat/base.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "bilat/json_io.hpp"

namespace bilat {

bool AtomicRule::same_shape(const AtomicRule& other) const {
  return premises == other.premises && conclusion == other.conclusion &&
         conclusion_polarity == other.conclusion_polarity;
}

bool RuleShapeLess::operator()(const AtomicRule& a, const AtomicRule& b) const {
  return std::tie(a.conclusion, a.conclusion_polarity, a.premises) <
         std::tie(b.conclusion, b.conclusion_polarity, b.premises);
}

Base::Base(std::vector<AtomicRule> rules) : rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end(),
            [](const AtomicRule& a, const AtomicRule& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < rules_.size(); ++i) {
    if (rules_[i].name == rules_[i - 1].name) {
      throw Error("duplicate rule name '" + rules_[i].name + "'");
    }
  }
}

const AtomicRule* Base::find(std::string_view name) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), name,
                             [](const AtomicRule& r, std::string_view n) { return r.name < n; });
  if (it == rules_.end() || it->name != name) return nullptr;
  return &*it;
}

Base Base::with_rules(const std::vector<AtomicRule>& extra) const {
  std::vector<AtomicRule> all = rules_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Base(std::move(all));
}

Base parse_base(std::string_view json_text) { return base_from_json(parse_json(json_text)); }

std::string print_base(const Base& b) { return to_json(b).dump(2); }

bool extends(const Base& c, const Base& b) {
  std::set<AtomicRule, RuleShapeLess> shapes(c.rules().begin(), c.rules().end());
  return std::all_of(b.rules().begin(), b.rules().end(),
                     [&](const AtomicRule& r) { return shapes.count(r) > 0; });
}

namespace {

std::string toggle_dual_name(const std::string& name) {
  constexpr std::string_view kSuffix = "^D";
  if (name.size() >= kSuffix.size() &&
      name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    return name.substr(0, name.size() - kSuffix.size());
  }
  return name + std::string(kSuffix);
}

}  // namespace

AtomicRule dual_rule(const AtomicRule& r) {
  AtomicRule d{toggle_dual_name(r.name), {}, r.conclusion, dual(r.conclusion_polarity)};
  d.premises.reserve(r.premises.size());
  for (const auto& p : r.premises) {
    d.premises.push_back({p.atom, dual(p.polarity), p.discharged_refutations, p.discharged_proofs});
  }
  return d;
}

Base dual_base(const Base& b) {
  std::vector<AtomicRule> rules;
  rules.reserve(b.size());
  for (const auto& r : b.rules()) rules.push_back(dual_rule(r));
  return Base(std::move(rules));
}

AtomSet atoms_of(const AtomicRule& r) {
  AtomSet out{r.conclusion};
  for (const auto& p : r.premises) {
    out.insert(p.atom);
    out.insert(p.discharged_proofs.begin(), p.discharged_proofs.end());
    out.insert(p.discharged_refutations.begin(), p.discharged_refutations.end());
  }
  return out;
}

AtomSet atoms_of(const Base& b) {
  AtomSet out;
  for (const auto& r : b.rules()) {
    auto a = atoms_of(r);
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::string describe_rule(const AtomicRule& r) {
  std::string out = r.name + ": ";
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    const auto& p = r.premises[i];
    if (i) out += ", ";
    for (const auto& a : p.discharged_proofs) out += "[" + a.name() + "]";
    for (const auto& a : p.discharged_refutations) out += "[[" + a.name() + "]]";
    out += p.atom.name() + std::string(to_string(p.polarity));
  }
  out += " => " + r.conclusion.name() + std::string(to_string(r.conclusion_polarity));
  return out;
}

}  // namespace bilat
