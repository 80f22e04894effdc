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

#include "bilat/support.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

namespace bilat {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "HOLDS";
    case Outcome::Fails: return "FAILS";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(HarmonyStatus s) {
  return s == HarmonyStatus::Consistent ? "CONSISTENT" : "HARMONY-VIOLATION";
}

ExtensionBudget parse_budget(std::string_view text) {
  std::vector<std::size_t> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error("budget field '" + std::string(field) + "' is not a non-negative integer");
    }
    parts.push_back(value);
    start = end + 1;
  }
  if (parts.size() != 4 && parts.size() != 5) throw Error("budget needs the form a,r,p,d or a,r,p,d,cap");
  ExtensionBudget b;
  b.extra_atoms = static_cast<unsigned>(parts[0]);
  b.max_extra_rules = static_cast<unsigned>(parts[1]);
  b.max_premises = static_cast<unsigned>(parts[2]);
  b.max_discharge = static_cast<unsigned>(parts[3]);
  if (parts.size() == 5) b.max_extensions = parts[4];
  if (b.max_discharge > 3) throw Error("budget allows at most 3 discharged atoms per premise");
  return b;
}

std::string format_budget(const ExtensionBudget& b) {
  return std::to_string(b.extra_atoms) + "," + std::to_string(b.max_extra_rules) + "," +
         std::to_string(b.max_premises) + "," + std::to_string(b.max_discharge) + "," +
         std::to_string(b.max_extensions);
}

std::string format_query(const FormulaSet& gamma, const FormulaSet& delta, Polarity pol, const Formula& chi) {
  return format_set(gamma) + "; " + format_set(delta) + (pol == Polarity::Plus ? " ⊩+ " : " ⊩− ") +
         print_formula(chi);
}

namespace {

using BasePtr = std::shared_ptr<const Base>;

constexpr auto kPlus = Polarity::Plus;
constexpr auto kMinus = Polarity::Minus;

/// Full searches try seeded and enumerated extensions; local ones only look
/// for a violation in the current base.
enum class Search { Full, Local };

SupportVerdict verdict(Outcome o, std::string step, std::string detail) {
  SupportVerdict v;
  v.outcome = o;
  v.justification = {std::move(step), std::move(detail), {}};
  return v;
}

SupportVerdict wrap(SupportVerdict sub, std::string step, std::string detail) {
  SupportVerdict v = verdict(sub.outcome, std::move(step), std::move(detail));
  v.counterextension = std::move(sub.counterextension);
  v.facts = std::move(sub.facts);
  v.truncated = sub.truncated;
  v.extensions_tried = sub.extensions_tried;
  v.justification.children.push_back(std::move(sub.justification));
  return v;
}

/// Fails if any part fails, Unknown if any part is undecided, else Holds.
class Conjunction {
 public:
  Conjunction(std::string step, std::string detail) : v_(verdict(Outcome::Holds, std::move(step), std::move(detail))) {}

  /// False once the conjunction has failed.
  bool add(SupportVerdict sub) {
    v_.truncated = v_.truncated || sub.truncated;
    v_.extensions_tried += sub.extensions_tried;
    if (sub.outcome == Outcome::Fails) {
      v_.outcome = Outcome::Fails;
      v_.counterextension = std::move(sub.counterextension);
      v_.facts = std::move(sub.facts);
      v_.justification.children = {std::move(sub.justification)};
      return false;
    }
    if (sub.outcome == Outcome::Unknown) v_.outcome = Outcome::Unknown;
    v_.facts.insert(v_.facts.end(), sub.facts.begin(), sub.facts.end());
    v_.justification.children.push_back(std::move(sub.justification));
    return true;
  }

  SupportVerdict done() {
    if (v_.outcome == Outcome::Unknown) v_.facts.clear();
    return std::move(v_);
  }

 private:
  SupportVerdict v_;
};

Formula atom_formula(const Atom& a) { return make_atom(a); }

AtomSet atoms_of_set(const FormulaSet& fs) {
  AtomSet out;
  for (const auto& f : fs) {
    auto a = atoms_of(f);
    out.insert(a.begin(), a.end());
  }
  return out;
}

bool all_atomic(const FormulaSet& fs) {
  return std::all_of(fs.begin(), fs.end(), [](const Formula& f) { return f.is_atom(); });
}

AtomSet to_atoms(const FormulaSet& fs) {
  AtomSet out;
  for (const auto& f : fs) out.insert(f.atom());
  return out;
}

AtomicRule axiom(const Atom& a, Polarity pol) { return AtomicRule{"", {}, a, pol}; }

AtomicRule unary(const Atom& from, Polarity from_pol, const Atom& to, Polarity to_pol) {
  return AtomicRule{"", {RulePremise{from, from_pol, {}, {}}}, to, to_pol};
}

/// Candidate premises for enumerated rules, in a fixed order.
std::vector<RulePremise> premise_options(const std::vector<Atom>& atoms, unsigned max_discharge) {
  std::vector<std::pair<Atom, Polarity>> dischargeable;
  for (const auto& a : atoms) {
    dischargeable.emplace_back(a, kPlus);
    dischargeable.emplace_back(a, kMinus);
  }
  std::vector<std::vector<std::size_t>> subsets{{}};
  std::function<void(std::size_t, std::vector<std::size_t>&)> grow = [&](std::size_t from,
                                                                         std::vector<std::size_t>& cur) {
    if (cur.size() == max_discharge) return;
    for (std::size_t i = from; i < dischargeable.size(); ++i) {
      cur.push_back(i);
      subsets.push_back(cur);
      grow(i + 1, cur);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> cur;
  grow(0, cur);
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<RulePremise> out;
  for (const auto& sub : subsets) {
    for (const auto& a : atoms) {
      for (Polarity pol : {kPlus, kMinus}) {
        RulePremise p{a, pol, {}, {}};
        for (std::size_t i : sub) {
          const auto& [d, role] = dischargeable[i];
          (role == kPlus ? p.discharged_proofs : p.discharged_refutations).insert(d);
        }
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

/// Lazily enumerates rules by premise count, then premise choice, then
/// conclusion.
class RuleStream {
 public:
  RuleStream(std::vector<Atom> atoms, unsigned max_premises, unsigned max_discharge)
      : atoms_(std::move(atoms)), options_(premise_options(atoms_, max_discharge)), max_premises_(max_premises) {}

  std::optional<AtomicRule> next() {
    while (true) {
      if (arity_ > max_premises_ || atoms_.empty()) return std::nullopt;
      if (tuple_.size() != arity_) {
        tuple_.assign(arity_, 0);
        conclusion_ = 0;
        if (arity_ > 0 && options_.empty()) return std::nullopt;
      }
      if (conclusion_ == 2 * atoms_.size()) {
        conclusion_ = 0;
        if (!advance()) {
          ++arity_;
          continue;
        }
      }
      std::size_t c = conclusion_++;
      AtomicRule r{"", {}, atoms_[c / 2], c % 2 == 0 ? kPlus : kMinus};
      bool trivial = false;
      for (std::size_t i : tuple_) {
        const RulePremise& p = options_[i];
        if (p.atom == r.conclusion && p.polarity == r.conclusion_polarity && p.discharged_proofs.empty() &&
            p.discharged_refutations.empty()) {
          trivial = true;
        }
        r.premises.push_back(p);
      }
      if (!trivial) return r;
    }
  }

 private:
  /// Next non-decreasing tuple; false when exhausted.
  bool advance() {
    if (tuple_.empty()) return false;
    std::size_t i = tuple_.size();
    while (i > 0) {
      --i;
      if (tuple_[i] + 1 < options_.size()) {
        ++tuple_[i];
        for (std::size_t j = i + 1; j < tuple_.size(); ++j) tuple_[j] = tuple_[i];
        return true;
      }
    }
    return false;
  }

  std::vector<Atom> atoms_;
  std::vector<RulePremise> options_;
  unsigned max_premises_;
  unsigned arity_ = 0;
  std::vector<std::size_t> tuple_;
  std::size_t conclusion_ = 0;
};

std::string fresh_name(const std::string& prefix, std::size_t& counter, const AtomSet& taken) {
  while (true) {
    std::string name = prefix + "_" + std::to_string(counter++);
    if (!taken.count(Atom(name))) return name;
  }
}

class Engine {
 public:
  Engine(const SupportOptions& opt, const Base& b, const AtomSet& query_atoms) : opt_(opt) {
    known_ = atoms_of(b);
    known_.insert(query_atoms.begin(), query_atoms.end());
    if (opt_.universe) {
      for (const auto& a : known_) {
        if (!opt_.universe->count(a)) throw Error("atom '" + a.name() + "' is outside the closed universe");
      }
      return;
    }
    std::size_t counter = 0;
    for (unsigned i = 0; i < opt_.budget.extra_atoms; ++i) budget_atoms_.emplace_back(fresh_name("x", counter, known_));
    counter = 0;
    witness_atom_ = Atom(fresh_name("z", counter, known_));
  }

  SupportVerdict query(const BasePtr& b, FormulaSet g, FormulaSet d, Polarity pol, const Formula& chi, Search mode);

 private:
  bool naive() const { return opt_.clauses == Clauses::Naive; }

  /// The atoms "every p ∈ At" ranges over. In the open reading one fresh
  /// atom stands for all atoms the base and query do not mention.
  std::vector<Atom> quantified_atoms(const Base& b) const {
    if (opt_.universe) return {opt_.universe->begin(), opt_.universe->end()};
    AtomSet s = atoms_of(b);
    s.insert(known_.begin(), known_.end());
    std::vector<Atom> out{*witness_atom_};
    out.insert(out.end(), s.begin(), s.end());
    return out;
  }

  std::vector<Atom> search_atoms() const {
    if (opt_.universe) return {opt_.universe->begin(), opt_.universe->end()};
    AtomSet s = known_;
    s.insert(budget_atoms_.begin(), budget_atoms_.end());
    return {s.begin(), s.end()};
  }

  std::optional<SupportVerdict> normalize(FormulaSet& g, FormulaSet& d) const;
  SupportVerdict atomic(const BasePtr& b, const FormulaSet& g, const FormulaSet& d, Polarity pol, const Atom& p);
  SupportVerdict every_atom(const BasePtr& b, const FormulaSet& g, const FormulaSet& d, Polarity pol,
                            const Formula& chi, Search mode);
  SupportVerdict search(const BasePtr& b, const FormulaSet& g, const FormulaSet& d, Polarity pol, const Formula& chi,
                        Search mode);
  std::optional<SupportVerdict> violation_at(const BasePtr& c, const std::vector<AtomicRule>& added,
                                             const FormulaSet& g, const FormulaSet& d, Polarity pol,
                                             const Formula& chi);
  std::optional<std::vector<AtomicRule>> satisfy(const Formula& f, Polarity pol) const;
  std::vector<std::vector<AtomicRule>> refuting_seeds(const Base& b, Polarity pol, const Formula& chi) const;

  const SupportOptions& opt_;
  AtomSet known_;
  std::vector<Atom> budget_atoms_;
  std::optional<Atom> witness_atom_;
};

/// Rewrites antecedents by the clauses that split them exactly. Returns a
/// verdict when an antecedent makes the query hold outright.
std::optional<SupportVerdict> Engine::normalize(FormulaSet& g, FormulaSet& d) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = g.begin(); it != g.end(); ++it) {
      const Formula f = *it;
      switch (f.kind()) {
        case Connective::And:
          g.erase(it);
          g.insert(f.lhs());
          g.insert(f.rhs());
          changed = true;
          break;
        case Connective::CoImp:
          g.erase(it);
          g.insert(f.lhs());
          d.insert(f.rhs());
          changed = true;
          break;
        case Connective::Top:
          g.erase(it);
          changed = true;
          break;
        case Connective::Bot:
          if (opt_.universe) {
            g.erase(it);
            for (const auto& a : *opt_.universe) {
              g.insert(atom_formula(a));
              if (!naive()) d.insert(atom_formula(a));
            }
            changed = true;
            break;
          }
          if (!naive()) return verdict(Outcome::Holds, "ex-falso", "⊥ among the proved antecedents");
          continue;
        default:
          continue;
      }
      break;
    }
    if (changed) continue;
    for (auto it = d.begin(); it != d.end(); ++it) {
      const Formula f = *it;
      switch (f.kind()) {
        case Connective::Or:
          d.erase(it);
          d.insert(f.lhs());
          d.insert(f.rhs());
          changed = true;
          break;
        case Connective::Imp:
          d.erase(it);
          g.insert(f.lhs());
          d.insert(f.rhs());
          changed = true;
          break;
        case Connective::Bot:
          d.erase(it);
          changed = true;
          break;
        case Connective::Top:
          if (opt_.universe) {
            d.erase(it);
            for (const auto& a : *opt_.universe) {
              d.insert(atom_formula(a));
              if (!naive()) g.insert(atom_formula(a));
            }
            changed = true;
            break;
          }
          if (!naive()) return verdict(Outcome::Holds, "ex-falso", "⊤ among the refuted antecedents");
          continue;
        default:
          continue;
      }
      break;
    }
  }
  return std::nullopt;
}

SupportVerdict Engine::atomic(const BasePtr& b, const FormulaSet& g, const FormulaSet& d, Polarity pol,
                              const Atom& p) {
  AtomicSequent s{to_atoms(g), to_atoms(d), pol, p};
  const bool ok = derivable(*b, s);
  SupportVerdict v = verdict(ok ? Outcome::Holds : Outcome::Fails, "atomic",
                             format_sequent(s) + (ok ? "" : " has no deduction"));
  v.facts.push_back({b, s, ok});
  if (ok) return v;
  // Adding one axiom per antecedent makes every antecedent hold while the
  // conclusion stays underivable.
  Counterextension cx;
  for (const auto& a : s.proofs) cx.added.push_back(axiom(a, kPlus));
  for (const auto& a : s.refutations) cx.added.push_back(axiom(a, kMinus));
  if (!cx.added.empty()) {
    std::size_t n = 0;
    for (auto& r : cx.added) {
      do r.name = "ext" + std::to_string(++n);
      while (b->find(r.name));
    }
    auto c = std::make_shared<const Base>(b->with_rules(cx.added));
    AtomicSequent plain{{}, {}, pol, p};
    v.facts.push_back({c, plain, false});
  }
  cx.violation = std::string(pol == kPlus ? "⊢+ " : "⊢− ") + p.name() + " has no deduction" +
                 (cx.added.empty() ? "" : " once the antecedents are added as axioms");
  v.counterextension = std::move(cx);
  return v;
}

SupportVerdict Engine::every_atom(const BasePtr& b, const FormulaSet& g, const FormulaSet& d, Polarity pol,
                                  const Formula& chi, Search mode) {
  std::vector<Polarity> signs;
  if (naive()) {
    signs = {pol};
  } else {
    signs = {kPlus, kMinus};
  }
  Conjunction c("every-atom", print_formula(chi) + " demands every atom with sign " +
                                  (signs.size() == 2 ? "+ and −" : std::string(to_string(pol))));
  for (const auto& a : quantified_atoms(*b)) {
    for (Polarity s : signs) {
      if (!c.add(query(b, g, d, s, atom_formula(a), mode))) return c.done();
    }
  }
  return c.done();
}

SupportVerdict Engine::query(const BasePtr& b, FormulaSet g, FormulaSet d, Polarity pol, const Formula& chi,
                             Search mode) {
  const std::string where = format_query(g, d, pol, chi);
  {
    FormulaSet g2 = g, d2 = d;
    if (auto v = normalize(g2, d2)) {
      v->justification.detail = where + ": " + v->justification.detail;
      return *v;
    }
    if (g2 != g || d2 != d) return wrap(query(b, std::move(g2), std::move(d2), pol, chi, mode), "antecedents", where);
  }

  if ((pol == kPlus && g.count(chi)) || (pol == kMinus && d.count(chi))) {
    return verdict(Outcome::Holds, "assumption", where);
  }

  auto both = [&](const char* step, SupportVerdict first, std::function<SupportVerdict()> second) {
    Conjunction c(step, where);
    if (c.add(std::move(first))) c.add(second());
    return c.done();
  };

  switch (chi.kind()) {
    case Connective::Top:
      if (pol == kPlus) return verdict(Outcome::Holds, "top+", where);
      return every_atom(b, g, d, pol, chi, mode);
    case Connective::Bot:
      if (pol == kMinus) return verdict(Outcome::Holds, "bot-", where);
      return every_atom(b, g, d, pol, chi, mode);
    case Connective::And:
      if (pol == kPlus) {
        return both("and+", query(b, g, d, kPlus, chi.lhs(), mode), [&] { return query(b, g, d, kPlus, chi.rhs(), mode); });
      }
      break;
    case Connective::Or:
      if (pol == kMinus) {
        return both("or-", query(b, g, d, kMinus, chi.lhs(), mode), [&] { return query(b, g, d, kMinus, chi.rhs(), mode); });
      }
      break;
    case Connective::Imp:
      if (pol == kPlus) {
        FormulaSet g2 = g;
        g2.insert(chi.lhs());
        return wrap(query(b, std::move(g2), d, kPlus, chi.rhs(), mode), "imp+", where);
      }
      return both("imp-", query(b, g, d, kPlus, chi.lhs(), mode), [&] { return query(b, g, d, kMinus, chi.rhs(), mode); });
    case Connective::CoImp:
      if (pol == kMinus) {
        FormulaSet d2 = d;
        d2.insert(chi.rhs());
        return wrap(query(b, g, std::move(d2), kMinus, chi.lhs(), mode), "coimp-", where);
      }
      return both("coimp+", query(b, g, d, kPlus, chi.lhs(), mode), [&] { return query(b, g, d, kMinus, chi.rhs(), mode); });
    case Connective::Atom:
      break;
  }

  // A proved disjunction (or refuted conjunction) among the antecedents
  // splits into two cases.
  auto split_target = [&]() -> std::optional<std::pair<Formula, bool>> {
    for (const auto& f : g) {
      if (f.kind() == Connective::Or) return std::make_pair(f, true);
    }
    for (const auto& f : d) {
      if (f.kind() == Connective::And) return std::make_pair(f, false);
    }
    return std::nullopt;
  };
  auto case_query = [&](const Formula& f, bool in_gamma, const Formula& part) {
    FormulaSet g2 = g, d2 = d;
    (in_gamma ? g2 : d2).erase(f);
    (in_gamma ? g2 : d2).insert(part);
    return query(b, std::move(g2), std::move(d2), pol, chi, mode);
  };
  auto split = split_target();
  if (split && !naive()) {
    const auto& [f, in_gamma] = *split;
    return both("cases", case_query(f, in_gamma, f.lhs()), [&] { return case_query(f, in_gamma, f.rhs()); });
  }

  if (chi.is_atom() && all_atomic(g) && all_atomic(d)) return atomic(b, g, d, pol, chi.atom());

  if (!g.empty() || !d.empty()) {
    SupportVerdict plain = query(b, {}, {}, pol, chi, Search::Local);
    if (plain.outcome == Outcome::Holds) return wrap(std::move(plain), "monotonicity", where);
  }

  if ((chi.kind() == Connective::Or && pol == kPlus) || (chi.kind() == Connective::And && pol == kMinus)) {
    for (const Formula& part : {chi.lhs(), chi.rhs()}) {
      SupportVerdict v = query(b, g, d, pol, part, Search::Local);
      if (v.outcome == Outcome::Holds) return wrap(std::move(v), "disjunct", where);
    }
  }

  // Under the naive clauses the case split is only necessary, so a failing
  // case still refutes the query.
  if (split) {
    const auto& [f, in_gamma] = *split;
    for (const Formula& part : {f.lhs(), f.rhs()}) {
      SupportVerdict v = case_query(f, in_gamma, part);
      if (v.outcome == Outcome::Fails) return wrap(std::move(v), "case-fails", where);
    }
  }

  return search(b, g, d, pol, chi, mode);
}

std::optional<std::vector<AtomicRule>> Engine::satisfy(const Formula& f, Polarity pol) const {
  using Rules = std::vector<AtomicRule>;
  auto join = [](std::optional<Rules> a, std::optional<Rules> b) -> std::optional<Rules> {
    if (!a || !b) return std::nullopt;
    a->insert(a->end(), b->begin(), b->end());
    return a;
  };
  switch (f.kind()) {
    case Connective::Atom:
      return Rules{axiom(f.atom(), pol)};
    case Connective::Top:
    case Connective::Bot: {
      if ((f.kind() == Connective::Top) == (pol == kPlus)) return Rules{};
      if (!opt_.universe) return std::nullopt;
      Rules out;
      for (const auto& a : *opt_.universe) {
        out.push_back(axiom(a, pol));
        if (!naive()) out.push_back(axiom(a, dual(pol)));
      }
      return out;
    }
    case Connective::And:
      if (pol == kPlus) return join(satisfy(f.lhs(), kPlus), satisfy(f.rhs(), kPlus));
      if (auto r = satisfy(f.lhs(), kMinus)) return r;
      return satisfy(f.rhs(), kMinus);
    case Connective::Or:
      if (pol == kMinus) return join(satisfy(f.lhs(), kMinus), satisfy(f.rhs(), kMinus));
      if (auto r = satisfy(f.lhs(), kPlus)) return r;
      return satisfy(f.rhs(), kPlus);
    case Connective::Imp:
      if (pol == kMinus) return join(satisfy(f.lhs(), kPlus), satisfy(f.rhs(), kMinus));
      if (f.lhs().is_atom() && f.rhs().is_atom()) return Rules{unary(f.lhs().atom(), kPlus, f.rhs().atom(), kPlus)};
      return satisfy(f.rhs(), kPlus);
    case Connective::CoImp:
      if (pol == kPlus) return join(satisfy(f.lhs(), kPlus), satisfy(f.rhs(), kMinus));
      if (f.lhs().is_atom() && f.rhs().is_atom()) {
        return Rules{unary(f.rhs().atom(), kMinus, f.lhs().atom(), kMinus)};
      }
      return satisfy(f.lhs(), kMinus);
  }
  return std::nullopt;
}

/// For a proved disjunction or refuted conjunction with atomic parts: rules
/// that make both parts lead to one atom, so that atom's underivability
/// breaks the clause.
std::vector<std::vector<AtomicRule>> Engine::refuting_seeds(const Base& b, Polarity pol, const Formula& chi) const {
  std::vector<std::vector<AtomicRule>> out;
  const bool disj = chi.kind() == Connective::Or && pol == kPlus;
  const bool conj = chi.kind() == Connective::And && pol == kMinus;
  if (!(disj || conj) || !chi.lhs().is_atom() || !chi.rhs().is_atom()) return out;
  std::vector<Polarity> signs = naive() ? std::vector<Polarity>{pol} : std::vector<Polarity>{kPlus, kMinus};
  for (const auto& p : quantified_atoms(b)) {
    for (Polarity s : signs) {
      out.push_back({unary(chi.lhs().atom(), pol, p, s), unary(chi.rhs().atom(), pol, p, s)});
    }
  }
  return out;
}

std::optional<SupportVerdict> Engine::violation_at(const BasePtr& c, const std::vector<AtomicRule>& added,
                                                   const FormulaSet& g, const FormulaSet& d, Polarity pol,
                                                   const Formula& chi) {
  Conjunction premises("counterextension", "");
  if (g.empty() && d.empty()) {
    // The clause for a proved disjunction (refuted conjunction): both parts
    // lead to some atom p that nevertheless has no deduction.
    const bool disj = chi.kind() == Connective::Or;
    std::vector<Polarity> signs = naive() ? std::vector<Polarity>{pol} : std::vector<Polarity>{kPlus, kMinus};
    for (const auto& p : quantified_atoms(*c)) {
      for (Polarity s : signs) {
        auto side = [&](const Formula& part) {
          return disj ? query(c, {part}, {}, s, atom_formula(p), Search::Local)
                      : query(c, {}, {part}, s, atom_formula(p), Search::Local);
        };
        SupportVerdict left = side(chi.lhs());
        if (left.outcome != Outcome::Holds) continue;
        SupportVerdict right = side(chi.rhs());
        if (right.outcome != Outcome::Holds) continue;
        SupportVerdict goal = atomic(c, {}, {}, s, p);
        if (goal.outcome != Outcome::Fails) continue;
        Conjunction parts("counterextension", "");
        parts.add(std::move(left));
        parts.add(std::move(right));
        SupportVerdict v = parts.done();
        v.outcome = Outcome::Fails;
        v.facts.insert(v.facts.end(), goal.facts.begin(), goal.facts.end());
        v.justification.children.push_back(std::move(goal.justification));
        std::string what = std::string(disj ? "both disjuncts" : "both conjuncts") + " lead to " + p.name() +
                           (s == kPlus ? "+" : "−") + ", which has no deduction";
        v.justification.detail = what;
        v.counterextension = Counterextension{added, what};
        return v;
      }
    }
    return std::nullopt;
  }

  std::vector<SupportVerdict> held;
  for (const auto& f : g) {
    SupportVerdict v = query(c, {}, {}, kPlus, f, Search::Local);
    if (v.outcome != Outcome::Holds) return std::nullopt;
    held.push_back(std::move(v));
  }
  for (const auto& f : d) {
    SupportVerdict v = query(c, {}, {}, kMinus, f, Search::Local);
    if (v.outcome != Outcome::Holds) return std::nullopt;
    held.push_back(std::move(v));
  }
  SupportVerdict goal = query(c, {}, {}, pol, chi, Search::Local);
  if (goal.outcome != Outcome::Fails) return std::nullopt;
  SupportVerdict v = verdict(Outcome::Fails, "counterextension", "");
  for (auto& h : held) {
    v.facts.insert(v.facts.end(), h.facts.begin(), h.facts.end());
    v.justification.children.push_back(std::move(h.justification));
  }
  v.facts.insert(v.facts.end(), goal.facts.begin(), goal.facts.end());
  v.justification.children.push_back(std::move(goal.justification));
  std::string what = "antecedents hold but " + print_formula(chi) + (pol == kPlus ? " (+)" : " (−)") + " fails";
  v.justification.detail = what;
  v.counterextension = Counterextension{added, what};
  return v;
}

SupportVerdict Engine::search(const BasePtr& b, const FormulaSet& g, const FormulaSet& d, Polarity pol,
                              const Formula& chi, Search mode) {
  const std::string where = format_query(g, d, pol, chi);
  std::size_t tried = 1;
  if (auto v = violation_at(b, {}, g, d, pol, chi)) {
    v->extensions_tried = tried;
    return *v;
  }
  if (mode == Search::Local) {
    return verdict(Outcome::Unknown, "undecided", where + ": no violation in the base itself");
  }

  const std::size_t cap = opt_.budget.max_extensions;
  std::set<AtomicRule, RuleShapeLess> present(b->rules().begin(), b->rules().end());
  std::size_t next_name = 0;
  auto extend = [&](std::vector<AtomicRule> rules) -> std::pair<BasePtr, std::vector<AtomicRule>> {
    std::vector<AtomicRule> added;
    std::set<AtomicRule, RuleShapeLess> seen;
    for (auto& r : rules) {
      if (present.count(r) || !seen.insert(r).second) continue;
      do r.name = "ext" + std::to_string(++next_name);
      while (b->find(r.name));
      added.push_back(std::move(r));
    }
    next_name = 0;
    return {std::make_shared<const Base>(b->with_rules(added)), added};
  };

  std::optional<SupportVerdict> found;
  auto attempt = [&](std::vector<AtomicRule> rules) {
    if (found || tried >= cap) return;
    ++tried;
    auto [c, added] = extend(std::move(rules));
    found = violation_at(c, added, g, d, pol, chi);
  };

  std::vector<AtomicRule> seed;
  bool seeded = true;
  for (const auto& f : g) {
    auto r = satisfy(f, kPlus);
    if (!r) seeded = false;
    else seed.insert(seed.end(), r->begin(), r->end());
  }
  for (const auto& f : d) {
    auto r = satisfy(f, kMinus);
    if (!r) seeded = false;
    else seed.insert(seed.end(), r->begin(), r->end());
  }
  if (!seeded) seed.clear();
  if (!seed.empty()) attempt(seed);
  for (auto& extra : refuting_seeds(*b, pol, chi)) {
    std::vector<AtomicRule> rules = seed;
    rules.insert(rules.end(), extra.begin(), extra.end());
    attempt(std::move(rules));
  }

  // Enumerated extensions: the k-th rule is combined with every set of
  // fewer than max_extra_rules earlier rules.
  bool exhausted = false;
  if (opt_.budget.max_extra_rules > 0) {
    RuleStream stream(search_atoms(), opt_.budget.max_premises, opt_.budget.max_discharge);
    std::vector<AtomicRule> pool;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> combos = [&](std::size_t from) {
      if (found || tried >= cap) return;
      std::vector<AtomicRule> rules = seed;
      for (std::size_t i : pick) rules.push_back(pool[i]);
      rules.push_back(pool.back());
      attempt(std::move(rules));
      if (pick.size() + 1 >= opt_.budget.max_extra_rules) return;
      for (std::size_t i = from; i + 1 < pool.size(); ++i) {
        pick.push_back(i);
        combos(i + 1);
        pick.pop_back();
      }
    };
    while (!found && tried < cap) {
      auto r = stream.next();
      if (!r) {
        exhausted = true;
        break;
      }
      if (present.count(*r)) continue;
      pool.push_back(std::move(*r));
      combos(0);
    }
  } else {
    exhausted = true;
  }

  if (found) {
    found->extensions_tried = tried;
    return *found;
  }
  SupportVerdict v = verdict(Outcome::Unknown, "undecided",
                             where + ": no violation among " + std::to_string(tried) + " extensions (budget " +
                                 format_budget(opt_.budget) + ")");
  v.truncated = !exhausted;
  v.extensions_tried = tried;
  return v;
}

}  // namespace

SupportVerdict support(const SupportQuery& q, const SupportOptions& options) {
  AtomSet atoms = atoms_of_set(q.gamma);
  auto more = atoms_of_set(q.delta);
  atoms.insert(more.begin(), more.end());
  more = atoms_of(q.formula);
  atoms.insert(more.begin(), more.end());
  Engine engine(options, q.base, atoms);
  auto b = std::make_shared<const Base>(q.base);
  return engine.query(b, q.gamma, q.delta, q.polarity, q.formula, Search::Full);
}

RecheckReport recheck(const SupportVerdict& v) {
  constexpr std::size_t kMaxOracleAtoms = 8;
  RecheckReport report;
  std::map<std::pair<const Base*, AtomSet>, std::unique_ptr<FixpointOracle>> oracles;
  for (const auto& fact : v.facts) {
    AtomSet universe = atoms_of(*fact.base);
    universe.insert(fact.sequent.proofs.begin(), fact.sequent.proofs.end());
    universe.insert(fact.sequent.refutations.begin(), fact.sequent.refutations.end());
    universe.insert(fact.sequent.conclusion);
    if (universe.size() > kMaxOracleAtoms) {
      ++report.skipped;
      continue;
    }
    auto& oracle = oracles[{fact.base.get(), universe}];
    if (!oracle) oracle = std::make_unique<FixpointOracle>(*fact.base, universe);
    if (oracle->derivable(fact.sequent) == fact.derivable) {
      ++report.confirmed;
    } else {
      ++report.contradicted;
    }
  }
  return report;
}

namespace {

HarmonyReport compare(SupportVerdict original, SupportVerdict dual_side) {
  HarmonyReport r{std::move(original), std::move(dual_side), HarmonyStatus::Consistent};
  const Outcome a = r.original.outcome;
  const Outcome b = r.dual.outcome;
  if ((a == Outcome::Holds && b == Outcome::Fails) || (a == Outcome::Fails && b == Outcome::Holds)) {
    r.status = HarmonyStatus::Violation;
  }
  return r;
}

}  // namespace

HarmonyReport harmony_check(const Base& b, Polarity pol, const Formula& chi, const SupportOptions& options) {
  return compare(support({b, {}, {}, pol, chi}, options),
                 support({dual_base(b), {}, {}, dual(pol), dual_formula(chi)}, options));
}

HarmonyReport strong_harmony_check(const Base& b, const FormulaSet& gamma, const FormulaSet& delta, Polarity pol,
                                   const Formula& chi, const SupportOptions& options) {
  if (gamma.empty() && delta.empty()) return harmony_check(b, pol, chi, options);
  return compare(support({b, gamma, delta, pol, chi}, options),
                 support({dual_base(b), dual_formulas(delta), dual_formulas(gamma), dual(pol), dual_formula(chi)},
                         options));
}

}  // namespace bilat
