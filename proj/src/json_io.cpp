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

#include "bilat/json_io.hpp"

#include <map>

#include <fstream>
#include <sstream>

namespace bilat {

namespace json_detail {

const Json& member(const Json& j, std::string_view key, std::string_view what) {
  if (!j.is_object()) throw Error(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string(what) + ": missing \"" + std::string(key) + "\"");
  return *it;
}

std::string string_member(const Json& j, std::string_view key, std::string_view what) {
  const Json& v = member(j, key, what);
  if (!v.is_string()) throw Error(std::string(what) + ": \"" + std::string(key) + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace json_detail

using json_detail::member;
using json_detail::string_member;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, {}, std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AtomSet atom_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error("atom list: expected an array");
  AtomSet out;
  for (const auto& a : j) {
    if (!a.is_string()) throw Error("atom list: entries must be strings");
    out.insert(Atom(a.get<std::string>()));
  }
  return out;
}

Json to_json(const AtomSet& s) {
  Json out = Json::array();
  for (const auto& a : s) out.push_back(a.name());
  return out;
}

AtomicRule rule_from_json(const Json& j) {
  AtomicRule r{string_member(j, "name", "rule"), {}, Atom(string_member(j, "conclusion", "rule")),
               parse_polarity(string_member(j, "conclusionPolarity", "rule"))};
  const Json& prems = member(j, "premises", "rule '" + r.name + "'");
  if (!prems.is_array()) throw Error("rule '" + r.name + "': premises must be an array");
  for (const auto& p : prems) {
    RulePremise rp{Atom(string_member(p, "atom", "premise")),
                   parse_polarity(string_member(p, "polarity", "premise")), {}, {}};
    if (p.contains("dischargedProofs")) rp.discharged_proofs = atom_set_from_json(p["dischargedProofs"]);
    if (p.contains("dischargedRefutations")) {
      rp.discharged_refutations = atom_set_from_json(p["dischargedRefutations"]);
    }
    r.premises.push_back(std::move(rp));
  }
  return r;
}

Json to_json(const AtomicRule& r) {
  Json prems = Json::array();
  for (const auto& p : r.premises) {
    prems.push_back({{"atom", p.atom.name()},
                     {"polarity", to_string(p.polarity)},
                     {"dischargedProofs", to_json(p.discharged_proofs)},
                     {"dischargedRefutations", to_json(p.discharged_refutations)}});
  }
  return {{"name", r.name},
          {"premises", prems},
          {"conclusion", r.conclusion.name()},
          {"conclusionPolarity", to_string(r.conclusion_polarity)}};
}

Base base_from_json(const Json& j) {
  const Json& rules = member(j, "rules", "base");
  if (!rules.is_array()) throw Error("base: \"rules\" must be an array");
  std::vector<AtomicRule> out;
  for (const auto& r : rules) out.push_back(rule_from_json(r));
  return Base(std::move(out));
}

Json to_json(const Base& b) {
  Json rules = Json::array();
  for (const auto& r : b.rules()) rules.push_back(to_json(r));
  return {{"rules", rules}};
}

AtomicDeduction deduction_from_json(const Json& j) {
  std::string kind = string_member(j, "kind", "deduction");
  if (kind == "assume") {
    return AtomicDeduction::assume(Atom(string_member(j, "atom", "assumption")),
                                   parse_polarity(string_member(j, "polarity", "assumption")));
  }
  if (kind != "rule") throw Error("deduction: unknown kind '" + kind + "'");
  std::vector<AtomicDeduction> children;
  if (j.contains("children")) {
    if (!j["children"].is_array()) throw Error("deduction: children must be an array");
    for (const auto& c : j["children"]) children.push_back(deduction_from_json(c));
  }
  return AtomicDeduction::apply(string_member(j, "rule", "deduction"), std::move(children));
}

Json to_json(const AtomicDeduction& d) {
  if (const auto* leaf = std::get_if<AtomicDeduction::Assumption>(&d.node)) {
    return {{"kind", "assume"}, {"atom", leaf->atom.name()}, {"polarity", to_string(leaf->polarity)}};
  }
  const auto& app = std::get<AtomicDeduction::RuleApp>(d.node);
  Json children = Json::array();
  for (const auto& c : app.children) children.push_back(to_json(c));
  return {{"kind", "rule"}, {"rule", app.rule}, {"children", children}};
}

Json to_json(const AtomicSequent& s) {
  return {{"proofs", to_json(s.proofs)},
          {"refutations", to_json(s.refutations)},
          {"polarity", to_string(s.polarity)},
          {"conclusion", s.conclusion.name()}};
}

FormulaSet formula_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error("formula list: expected an array");
  FormulaSet out;
  for (const auto& f : j) {
    if (!f.is_string()) throw Error("formula list: entries must be strings");
    out.insert(parse_formula(f.get<std::string>()));
  }
  return out;
}

Json to_json(const FormulaSet& s) {
  Json out = Json::array();
  for (const auto& f : s) out.push_back(print_formula(f));
  return out;
}

NDProof nd_from_json(const Json& j) {
  std::string kind = string_member(j, "kind", "proof");
  if (kind == "assume") {
    unsigned label = 0;
    if (j.contains("label")) {
      if (!j["label"].is_number_unsigned()) throw Error("assumption: label must be a non-negative integer");
      label = j["label"].get<unsigned>();
    }
    return NDProof::assume(parse_formula(string_member(j, "formula", "assumption")),
                           parse_polarity(string_member(j, "polarity", "assumption")), label);
  }
  if (kind != "apply") throw Error("proof: unknown kind '" + kind + "'");
  NDRuleTag tag{parse_nd_rule(string_member(j, "rule", "application")), std::nullopt};
  if (j.contains("resultPolarity") && !j["resultPolarity"].is_null()) {
    if (!j["resultPolarity"].is_string()) throw Error("application: resultPolarity must be \"+\", \"-\" or null");
    tag.result = parse_polarity(j["resultPolarity"].get<std::string>());
  }
  std::vector<NDProof> children;
  if (j.contains("children")) {
    if (!j["children"].is_array()) throw Error("application: children must be an array");
    for (const auto& c : j["children"]) children.push_back(nd_from_json(c));
  }
  std::vector<unsigned> discharge;
  if (j.contains("discharge")) {
    if (!j["discharge"].is_array()) throw Error("application: discharge must be an array");
    for (const auto& l : j["discharge"]) {
      if (!l.is_number_unsigned()) throw Error("application: discharge labels must be non-negative integers");
      discharge.push_back(l.get<unsigned>());
    }
  }
  return NDProof::apply(tag, parse_formula(string_member(j, "conclusion", "application")), std::move(children),
                        std::move(discharge));
}

Json to_json(const NDProof& p) {
  if (const auto* a = std::get_if<NDProof::Assume>(&p.node)) {
    return {{"kind", "assume"},
            {"formula", print_formula(a->formula)},
            {"polarity", to_string(a->polarity)},
            {"label", a->label}};
  }
  const auto& app = std::get<NDProof::Apply>(p.node);
  Json children = Json::array();
  for (const auto& c : app.children) children.push_back(to_json(c));
  Json result = app.tag.result ? Json(to_string(*app.tag.result)) : Json(nullptr);
  return {{"kind", "apply"},
          {"rule", to_string(app.tag.rule)},
          {"conclusion", print_formula(app.conclusion)},
          {"resultPolarity", result},
          {"children", children},
          {"discharge", app.discharge}};
}

Json to_json(const NDJudgment& j) {
  return {{"proofs", to_json(j.proofs)},
          {"refutations", to_json(j.refutations)},
          {"polarity", to_string(j.polarity)},
          {"conclusion", print_formula(j.conclusion)}};
}

NDJudgment judgment_from_json(const Json& j) {
  NDJudgment out;
  if (j.contains("proofs")) out.proofs = formula_set_from_json(j["proofs"]);
  if (j.contains("refutations")) out.refutations = formula_set_from_json(j["refutations"]);
  out.polarity = parse_polarity(string_member(j, "polarity", "judgment"));
  out.conclusion = parse_formula(string_member(j, "conclusion", "judgment"));
  return out;
}

RawModel model_from_json(const Json& j) {
  RawModel raw;
  const Json& worlds = member(j, "worlds", "model");
  if (!worlds.is_array()) throw Error("model: \"worlds\" must be an array");
  for (const auto& w : worlds) {
    if (!w.is_string()) throw Error("model: world ids must be strings");
    raw.worlds.push_back(w.get<std::string>());
  }
  if (j.contains("order")) {
    if (!j["order"].is_array()) throw Error("model: \"order\" must be an array of pairs");
    for (const auto& pair : j["order"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw Error("model: order entries must be [lower, upper] pairs of world ids");
      }
      raw.order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  for (const char* key : {"vplus", "vminus"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_object()) throw Error(std::string("model: \"") + key + "\" must be an object");
    auto& target = std::string(key) == "vplus" ? raw.vplus : raw.vminus;
    for (const auto& [w, atoms] : j[key].items()) target[w] = atom_set_from_json(atoms);
  }
  return raw;
}

Json to_json(const KripkeModel& m) {
  RawModel raw = m.to_raw();
  Json order = Json::array();
  for (const auto& [a, b] : raw.order) order.push_back({a, b});
  Json vplus = Json::object(), vminus = Json::object();
  for (const auto& w : raw.worlds) {
    vplus[w] = to_json(raw.vplus[w]);
    vminus[w] = to_json(raw.vminus[w]);
  }
  return {{"worlds", raw.worlds}, {"order", order}, {"vplus", vplus}, {"vminus", vminus}};
}

Json to_json(const AtomicMapping& m) {
  Json out = Json::object();
  for (const auto& [f, a] : m.table()) out[print_formula(f)] = a.name();
  return out;
}

AtomicMapping mapping_from_json(const Json& j) {
  if (!j.is_object()) throw Error("mapping must be a JSON object");
  std::map<Formula, Atom> table;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw Error("mapping value for '" + key + "' must be a string");
    table.emplace(parse_formula(key), Atom(value.get<std::string>()));
  }
  return AtomicMapping(std::move(table));
}

Json to_json(const Justification& j) {
  Json out{{"step", j.step}, {"detail", j.detail}};
  if (!j.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : j.children) kids.push_back(to_json(c));
    out["children"] = std::move(kids);
  }
  return out;
}

Json to_json(const SupportVerdict& v) {
  Json out{{"outcome", std::string(to_string(v.outcome))}};
  if (v.counterextension) {
    Json rules = Json::array();
    for (const auto& r : v.counterextension->added) rules.push_back(to_json(r));
    out["counterextension"] = Json{{"added", std::move(rules)}, {"violation", v.counterextension->violation}};
  } else {
    out["counterextension"] = nullptr;
  }
  RecheckReport rc = recheck(v);
  out["facts"] = Json{{"count", v.facts.size()},
                      {"confirmed", rc.confirmed},
                      {"contradicted", rc.contradicted},
                      {"skipped", rc.skipped}};
  out["truncated"] = v.truncated;
  out["extensions_tried"] = v.extensions_tried;
  out["justification"] = to_json(v.justification);
  return out;
}

Json to_json(const HarmonyReport& r) {
  return Json{{"status", std::string(to_string(r.status))},
              {"original", to_json(r.original)},
              {"dual", to_json(r.dual)}};
}

}  // namespace bilat
