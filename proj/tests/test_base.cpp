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

#include "bilat/json_io.hpp"
#include "gen.hpp"

using namespace bilat;

namespace {

Base example_base() { return parse_base(read_file(BILAT_CORPUS_DIR "/ex21.base.json")); }

}  // namespace

TEST_CASE("parse_base: example base and empty base") {
  Base b = example_base();
  REQUIRE(b.size() == 4);
  const AtomicRule* r4 = b.find("R4");
  REQUIRE(r4 != nullptr);
  CHECK(r4->premises.size() == 1);
  CHECK(r4->premises[0].discharged_refutations == AtomSet{Atom("q")});
  CHECK(b.find("R3")->is_axiom());
  CHECK(parse_base(R"({"rules":[]})").empty());
  CHECK(parse_base(print_base(b)) == b);
}

TEST_CASE("parse_base: errors") {
  CHECK_THROWS_AS(parse_base("{"), ParseError);
  CHECK_THROWS_AS(parse_base(R"({"rules":[{"name":"a","premises":[],"conclusion":"p","conclusionPolarity":"+"},
                                           {"name":"a","premises":[],"conclusion":"q","conclusionPolarity":"+"}]})"),
                  Error);
  CHECK_THROWS_AS(parse_base(R"({"rules":[{"name":"a","premises":[],"conclusion":"Bad","conclusionPolarity":"+"}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_base(R"({"rules":[{"name":"a","premises":[],"conclusion":"p","conclusionPolarity":"*"}]})"),
                  ParseError);
}

TEST_CASE("extends") {
  Base b = example_base();
  CHECK(extends(b, b));
  AtomicRule extra{"new", {}, Atom("t"), Polarity::Plus};
  CHECK(extends(b.with_rules({extra}), b));
  CHECK_FALSE(extends(Base(), b));
  AtomicRule renamed = b.rules()[0];
  renamed.name = "other";
  CHECK(extends(Base({renamed, b.rules()[1], b.rules()[2], b.rules()[3]}), b));
}

TEST_CASE("dual_rule and dual_base") {
  Base b = example_base();
  AtomicRule r3d = dual_rule(*b.find("R3"));
  CHECK(r3d.name == "R3^D");
  CHECK(r3d.is_axiom());
  CHECK(r3d.conclusion_polarity == Polarity::Minus);

  AtomicRule r4d = dual_rule(*b.find("R4"));
  REQUIRE(r4d.premises.size() == 1);
  CHECK(r4d.premises[0].polarity == Polarity::Minus);
  CHECK(r4d.premises[0].discharged_proofs == AtomSet{Atom("q")});
  CHECK(r4d.premises[0].discharged_refutations.empty());
  CHECK(r4d.conclusion_polarity == Polarity::Minus);

  Base d = dual_base(b);
  const AtomicRule* r1d = d.find("R1^D");
  REQUIRE(r1d != nullptr);
  CHECK(r1d->premises[0].polarity == Polarity::Minus);
  CHECK(r1d->premises[1].polarity == Polarity::Plus);
  CHECK(d.find("R2^D")->conclusion_polarity == Polarity::Plus);
  CHECK(dual_base(Base()).empty());
  CHECK(dual_base(d) == b);
}

TEST_CASE("atoms_of") {
  CHECK(atoms_of(Base()).empty());
  CHECK(atoms_of(example_base()) == AtomSet{Atom("p"), Atom("q"), Atom("r"), Atom("s")});
}

TEST_CASE("property: involutions, inversion, extends preorder") {
  testing::Gen g(testing::seed_from_env());
  for (int i = 0; i < 1000; ++i) {
    Base b = g.base(4, 6);
    REQUIRE(dual_base(dual_base(b)) == b);
    REQUIRE(atoms_of(dual_base(b)) == atoms_of(b));
    for (const auto& r : b.rules()) REQUIRE(dual_rule(dual_rule(r)) == r);

    Base c = g.base(4, 6);
    Base cb = b;
    std::vector<AtomicRule> extra;
    for (const auto& r : c.rules()) {
      AtomicRule x = dual_rule(r);
      x.name = "X" + x.name;
      extra.push_back(x);
    }
    Base big = dual_base(b).with_rules(extra);
    REQUIRE(extends(big, dual_base(b)));
    REQUIRE(extends(dual_base(big), b));
    REQUIRE(extends(cb, cb));
    Base mid = b.with_rules({AtomicRule{"Y", {}, Atom("p"), Polarity::Plus}});
    Base top = mid.with_rules({AtomicRule{"Z", {}, Atom("q"), Polarity::Minus}});
    REQUIRE(extends(mid, b));
    REQUIRE(extends(top, mid));
    REQUIRE(extends(top, b));
  }
}
