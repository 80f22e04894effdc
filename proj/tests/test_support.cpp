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

#include "corpus.hpp"
#include "support_props.hpp"

using namespace bilat;
using namespace bilat::testing;

namespace {

constexpr auto kPlus = Polarity::Plus;
constexpr auto kMinus = Polarity::Minus;

Formula F(const char* s) { return parse_formula(s); }

Outcome outcome(const Base& b, FormulaSet g, FormulaSet d, Polarity pol, const char* chi,
                const SupportOptions& o = {}) {
  SupportVerdict v = support({b, std::move(g), std::move(d), pol, F(chi)}, o);
  RecheckReport rc = recheck(v);
  CHECK(rc.contradicted == 0);
  return v.outcome;
}

SupportOptions closed(Clauses c, std::initializer_list<const char*> atoms) {
  SupportOptions o;
  o.clauses = c;
  o.universe = AtomSet{};
  for (const char* a : atoms) o.universe->insert(Atom(a));
  return o;
}

}  // namespace

TEST_CASE("budget parsing") {
  CHECK(parse_budget("1,2,2,1") == ExtensionBudget{});
  ExtensionBudget b = parse_budget("0,1,3,0,50");
  CHECK(b.extra_atoms == 0);
  CHECK(b.max_premises == 3);
  CHECK(b.max_extensions == 50);
  CHECK(format_budget(b) == "0,1,3,0,50");
  CHECK_THROWS_AS(parse_budget("1,2,2"), Error);
  CHECK_THROWS_AS(parse_budget("1,2,x,1"), Error);
  CHECK_THROWS_AS(parse_budget("1,2,2,1,"), Error);
}

TEST_CASE("constants and atoms") {
  Base empty;
  CHECK(outcome(empty, {}, {}, kPlus, "top") == Outcome::Holds);
  CHECK(outcome(empty, {}, {}, kMinus, "bot") == Outcome::Holds);
  CHECK(outcome(empty, {}, {}, kPlus, "p -> p") == Outcome::Holds);
  CHECK(outcome(empty, {}, {}, kMinus, "p <- p") == Outcome::Holds);
  CHECK(outcome(empty, {}, {}, kPlus, "p") == Outcome::Fails);

  Base ex = corpus_base("ex21.base.json");
  CHECK(outcome(ex, {}, {}, kPlus, "p") == Outcome::Holds);
  CHECK(outcome(ex, {}, {}, kPlus, "r") == Outcome::Fails);
  CHECK(outcome(ex, {}, {}, kPlus, "s") == Outcome::Holds);
  CHECK(outcome(ex, {}, {F("q")}, kMinus, "r") == Outcome::Holds);
  CHECK(outcome(ex, {}, {}, kPlus, "q -> p") == Outcome::Holds);
  CHECK(outcome(ex, {}, {}, kPlus, "p <- q") == Outcome::Fails);
  CHECK(outcome(ex, {}, {}, kMinus, "r <- q") == Outcome::Holds);
}

TEST_CASE("bottom proofs fail with a fresh-atom witness") {
  Base ex = corpus_base("ex21.base.json");
  for (Clauses c : {Clauses::Standard, Clauses::Naive}) {
    SupportOptions o;
    o.clauses = c;
    SupportVerdict v = support({ex, {}, {}, kPlus, bot()}, o);
    REQUIRE(v.outcome == Outcome::Fails);
    REQUIRE(v.counterextension);
    CHECK(v.counterextension->added.empty());
    CHECK(v.counterextension->violation == "⊢+ z_0 has no deduction");
    CHECK(recheck(v).confirmed == v.facts.size());
    CHECK(support({ex, {}, {}, kMinus, top()}, o).outcome == Outcome::Fails);
  }
}

TEST_CASE("antecedent rewriting") {
  Base empty;
  CHECK(outcome(empty, {F("p & q")}, {}, kPlus, "q") == Outcome::Holds);
  CHECK(outcome(empty, {F("p <- q")}, {}, kMinus, "q") == Outcome::Holds);
  CHECK(outcome(empty, {}, {F("p -> q")}, kPlus, "p") == Outcome::Holds);
  CHECK(outcome(empty, {}, {F("p | q")}, kMinus, "q") == Outcome::Holds);
  CHECK(outcome(empty, {F("p | q")}, {}, kPlus, "q | p") == Outcome::Holds);
  CHECK(outcome(empty, {F("bot")}, {}, kMinus, "q") == Outcome::Holds);
  CHECK(outcome(empty, {}, {F("top")}, kPlus, "q & r") == Outcome::Holds);
  CHECK(outcome(empty, {F("p")}, {}, kPlus, "q -> p") == Outcome::Holds);
  CHECK(outcome(empty, {F("p")}, {}, kPlus, "q") == Outcome::Fails);
  CHECK(outcome(empty, {F("p")}, {}, kPlus, "bot") == Outcome::Fails);

  SupportVerdict v = support({empty, {F("p")}, {F("r")}, kPlus, F("q")});
  REQUIRE(v.counterextension);
  CHECK(v.counterextension->added.size() == 2);
  CHECK(recheck(v).confirmed == v.facts.size());
}

TEST_CASE("counterextension search") {
  Base empty;
  SupportVerdict v = support({empty, {}, {}, kPlus, F("p | q")});
  REQUIRE(v.outcome == Outcome::Fails);
  REQUIRE(v.counterextension);
  CHECK(v.counterextension->added.size() == 2);
  CHECK(recheck(v).contradicted == 0);

  SupportOptions tight;
  tight.budget.max_extensions = 1;
  SupportVerdict u = support({empty, {F("p -> q")}, {}, kPlus, F("r")}, tight);
  CHECK(u.outcome != Outcome::Holds);
}

TEST_CASE("naive clauses: finitized counterexamples") {
  // Proof axioms for every atom of {p, q, r}.
  Base item1 = corpus_base("naive_item1.base.json");
  SupportOptions naive = closed(Clauses::Naive, {"p", "q", "r"});
  CHECK(outcome(item1, {}, {}, kPlus, "bot", naive) == Outcome::Holds);
  CHECK_FALSE(derivable(item1, {{}, {}, kMinus, Atom("q")}));
  CHECK(outcome(item1, {F("bot")}, {}, kMinus, "q", naive) == Outcome::Fails);
  CHECK(outcome(item1, {}, {}, kPlus, "bot", closed(Clauses::Standard, {"p", "q", "r"})) == Outcome::Fails);
  CHECK(outcome(item1, {F("bot")}, {}, kMinus, "q") == Outcome::Holds);

  Base item3 = corpus_base("naive_item3.base.json");
  CHECK(outcome(item3, {}, {}, kPlus, "p | q", naive) != Outcome::Fails);
  CHECK(outcome(item3, {F("p")}, {}, kMinus, "r", naive) == Outcome::Holds);
  CHECK(outcome(item3, {F("q")}, {}, kMinus, "r", naive) == Outcome::Holds);
  CHECK_FALSE(derivable(item3, {{}, {}, kMinus, Atom("r")}));
  CHECK(outcome(item3, {}, {}, kMinus, "r", naive) == Outcome::Fails);

  CHECK_THROWS_AS(support({item3, {}, {}, kPlus, F("zz")}, naive), Error);
}

TEST_CASE("harmony examples") {
  Base ex = corpus_base("ex21.base.json");
  for (const char* a : {"p", "q", "r", "s"}) {
    for (Polarity pol : {kPlus, kMinus}) {
      HarmonyReport r = harmony_check(ex, pol, F(a));
      CHECK(r.original.outcome != Outcome::Unknown);
      CHECK(r.original.outcome == r.dual.outcome);
    }
  }
  HarmonyReport top_plus = harmony_check(ex, kPlus, top());
  CHECK(top_plus.original.outcome == Outcome::Holds);
  CHECK(top_plus.dual.outcome == Outcome::Holds);
  HarmonyReport bot_plus = harmony_check(ex, kPlus, bot());
  CHECK(bot_plus.original.outcome == Outcome::Fails);
  CHECK(bot_plus.dual.outcome == Outcome::Fails);

  HarmonyReport s1 = strong_harmony_check(Base{}, {F("p")}, {}, kPlus, F("p"));
  CHECK(s1.original.outcome == Outcome::Holds);
  CHECK(s1.dual.outcome == Outcome::Holds);
  HarmonyReport s2 = strong_harmony_check(ex, {}, {F("q")}, kMinus, F("r"));
  CHECK(s2.original.outcome == Outcome::Holds);
  CHECK(s2.dual.outcome == Outcome::Holds);
  CHECK(s2.status == HarmonyStatus::Consistent);
}

TEST_CASE("property: monotonicity on the exact fragment") {
  Tally t = monotonicity_property(seed_from_env() + 20, 200);
  CHECK_MESSAGE(t.failures == 0, t.first_failure);
  CHECK(t.engaged > 20);
}

TEST_CASE("property: case lemmas and explosion") {
  for (bool conjunctive : {false, true}) {
    Tally t = case_lemma_property(seed_from_env() + 21, 200, conjunctive);
    CHECK_MESSAGE(t.failures == 0, t.first_failure);
    CHECK(t.engaged > 5);
  }
  Tally e = explosion_property(seed_from_env() + 22, 100);
  CHECK_MESSAGE(e.failures == 0, e.first_failure);
}

TEST_CASE("property: harmony on a small population") {
  Tally t = harmony_property(population(seed_from_env() + 23, 30), seed_from_env() + 24, 2);
  CHECK_MESSAGE(t.failures == 0, t.first_failure);
  CHECK(t.decided * 10 >= t.verdicts * 3);
}
