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

#include "doctest.h"

#include "bilat/simulation.hpp"
#include "corpus.hpp"
#include "gen.hpp"

using namespace bilat;
using namespace bilat::testing;

namespace {

constexpr auto kPlus = Polarity::Plus;
constexpr auto kMinus = Polarity::Minus;

Formula F(const char* s) { return parse_formula(s); }

Simulation sim_for(const FormulaSet& theta, AtomSet universe = {}) {
  return build_simulation({theta, std::move(universe)});
}

std::size_t nd_height(const NDProof& p) { return p.height(); }

}  // namespace

TEST_CASE("mapping fixes atoms and names non-atoms in printed order") {
  AtomicMapping m = build_mapping({F("p")});
  CHECK(m.table().size() == 1);
  CHECK(m.at(F("p")) == Atom("p"));

  m = build_mapping({F("p -> q")});
  CHECK(m.table().size() == 3);
  CHECK(m.at(F("p -> q")) == Atom("f_0"));
  CHECK(m.at(F("q")) == Atom("q"));

  m = build_mapping({F("(p & q) | bot")});
  // Printed closure non-atoms: "bot", "p & q", "p & q | bot".
  CHECK(m.at(F("bot")) == Atom("f_0"));
  CHECK(m.at(F("p & q")) == Atom("f_1"));
  CHECK(m.at(F("(p & q) | bot")) == Atom("f_2"));
  CHECK(*m.preimage(Atom("f_1")) == F("p & q"));
  CHECK_FALSE(m.preimage(Atom("f_9")));

  CHECK_THROWS_AS(build_mapping({F("f_3 & p")}), Error);
  CHECK_NOTHROW(build_mapping({F("f_x & f_")}));
}

TEST_CASE("mapping is injective on random closures") {
  Gen g(seed_from_env());
  auto atoms = atom_pool(3);
  for (int i = 0; i < 200; ++i) {
    FormulaSet theta{g.formula(atoms, 4), g.formula(atoms, 3)};
    AtomicMapping m = build_mapping(theta);
    CHECK(m.table().size() == subformula_closure(theta).size());
    CHECK(m.image().size() == m.table().size());
  }
}

TEST_CASE("frozen rule counts") {
  Simulation imp = sim_for({F("p -> q")});
  CHECK(imp.base.size() == 5);
  CHECK(imp.universe == AtomSet{Atom("p"), Atom("q"), Atom("f_0"), Atom("q_fresh")});

  Simulation conj = sim_for({F("p & q")}, {Atom("p"), Atom("q"), Atom("f_0")});
  CHECK(conj.base.size() == 11);
  const AtomicRule* intro = conj.base.find("I(+),f_0");
  REQUIRE(intro);
  CHECK(describe_rule(*intro) == "I(+),f_0: p+, q+ => f_0+");
  const AtomicRule* elim = conj.base.find("E2(-),f_0,q");
  REQUIRE(elim);
  CHECK(describe_rule(*elim) == "E2(-),f_0,q: f_0-, [[p]]q+, [[q]]q+ => q+");

  Simulation top_only = sim_for({F("top")}, {Atom("f_0"), Atom("a")});
  std::vector<std::string> names;
  for (const auto& r : top_only.base.rules()) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{"top(+),f_0", "top(-)1,f_0,a", "top(-)1,f_0,f_0", "top(-)2,f_0,a",
                                          "top(-)2,f_0,f_0"});
  CHECK(describe_rule(*top_only.base.find("top(-)2,f_0,a")) == "top(-)2,f_0,a: f_0- => a+");

  Simulation imp_rules = sim_for({F("p -> q")});
  CHECK(describe_rule(*imp_rules.base.find("I(+),f_0")) == "I(+),f_0: [p]q+ => f_0+");
  CHECK(describe_rule(*imp_rules.base.find("E2(-),f_0")) == "E2(-),f_0: f_0- => q-");

  CHECK_THROWS_AS(sim_for({F("p -> q")}, {Atom("p"), Atom("q")}), Error);
}

TEST_CASE("identity proof maps to a single introduction") {
  NDProof id = NDProof::apply({NDRule::ImpIPlus, std::nullopt}, F("p -> p"), {NDProof::assume(F("p"), kPlus, 1)},
                              {1});
  Simulation sim = sim_for({F("p -> p")});
  AtomicDeduction d = translate_nd_to_atomic(id, sim);
  CHECK(d == AtomicDeduction::apply("I(+),f_0", {AtomicDeduction::assume(Atom("p"), kPlus)}));
  CHECK(check_atomic(sim.base, d) == AtomicSequent{{}, {}, kPlus, Atom("f_0")});
  CHECK(translate_nd_to_atomic(NDProof::assume(F("p"), kPlus), sim) == AtomicDeduction::assume(Atom("p"), kPlus));

  // A lone bottom refutation leaf.
  Simulation bot = sim_for({F("bot")});
  NDProof back = translate_atomic_to_nd(AtomicDeduction::assume(Atom("f_0"), kMinus), bot);
  CHECK(check_nd(back) == NDJudgment{{}, {F("bot")}, kMinus, F("bot")});
}

TEST_CASE("corpus round trip through the simulation base") {
  auto corpus = all_corpus_proofs();
  REQUIRE(corpus.size() >= 4);
  for (const auto& c : corpus) {
    INFO(c.name);
    NDJudgment j = check_nd(c.proof);
    Simulation sim = sim_for(formulas_of(c.proof));
    AtomicDeduction d = translate_nd_to_atomic(c.proof, sim);
    CHECK(d.height() == nd_height(c.proof));
    AtomicSequent s = check_atomic(sim.base, d);
    CHECK(s == map_judgment(j, sim.mapping));
    CHECK(derivable(sim.base, s));

    NDProof back = translate_atomic_to_nd(d, sim);
    CHECK(nd_height(back) == d.height());
    CHECK(check_nd(back) == j);
    CHECK(check_nd(back) == unmap_sequent(s, sim.mapping));
    CHECK(translate_nd_to_atomic(back, sim) == d);
  }
}

TEST_CASE("derivations found in the simulation base translate back") {
  for (const auto& c : all_corpus_proofs()) {
    INFO(c.name);
    NDJudgment j = check_nd(c.proof);
    Simulation sim = sim_for(formulas_of(c.proof));
    AtomicSequent goal = map_judgment(j, sim.mapping);
    auto d = find_deduction(sim.base, goal);
    REQUIRE(d);
    NDJudgment got = check_nd(translate_atomic_to_nd(*d, sim));
    CHECK(establishes(got, j));
  }
}

TEST_CASE("enumerated simulation deductions translate back faithfully") {
  Gen g(seed_from_env());
  auto atoms = atom_pool(2);
  std::size_t checked = 0;
  for (int i = 0; i < 12; ++i) {
    Formula phi = g.formula(atoms, 2);
    Simulation sim = sim_for({phi});
    std::vector<Atom> universe(sim.universe.begin(), sim.universe.end());
    for (const auto& d : enumerate_deductions(sim.base, universe, 3, 400)) {
      AtomicSequent s = check_atomic(sim.base, d);
      NDProof p = translate_atomic_to_nd(d, sim);
      CHECK(check_nd(p) == unmap_sequent(s, sim.mapping));
      CHECK(p.height() == d.height());
      CHECK(translate_nd_to_atomic(p, sim) == d);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("simulation base is monotone in the query universe") {
  Gen g(seed_from_env());
  auto atoms = atom_pool(3);
  for (int i = 0; i < 50; ++i) {
    FormulaSet theta{g.formula(atoms, 3)};
    Simulation small = sim_for(theta);
    AtomSet bigger = small.universe;
    bigger.insert(Atom("extra"));
    CHECK(extends(sim_for(theta, bigger).base, small.base));
  }
}

TEST_CASE("translation errors") {
  Simulation sim = sim_for({F("p -> q")});
  CHECK_THROWS_AS(translate_nd_to_atomic(NDProof::assume(F("r"), kPlus), sim), Error);
  CHECK_THROWS_AS(translate_atomic_to_nd(AtomicDeduction::assume(Atom("zz"), kPlus), sim), Error);
  CHECK_THROWS_AS(translate_atomic_to_nd(AtomicDeduction::apply("nope"), sim), Error);

  Simulation closed = sim_for({F("bot")}, {Atom("f_0")});
  NDProof explode = NDProof::apply({NDRule::BotPlus, kPlus}, F("r"), {NDProof::assume(F("bot"), kPlus, 0)});
  CHECK_THROWS_AS(translate_nd_to_atomic(explode, closed), Error);
}
