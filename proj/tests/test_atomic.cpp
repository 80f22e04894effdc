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

Base load_base(const std::string& name) { return parse_base(read_file(BILAT_CORPUS_DIR "/" + name)); }
AtomicDeduction load_deduction(const std::string& name) {
  return deduction_from_json(parse_json(read_file(BILAT_CORPUS_DIR "/" + name)));
}

const Atom p("p"), q("q"), r("r"), s("s");

AtomicSequent seq(AtomSet g, AtomSet d, Polarity pol, Atom c) { return {std::move(g), std::move(d), pol, std::move(c)}; }

bool contained(const AtomicSequent& small, const AtomicSequent& big) {
  return small.polarity == big.polarity && small.conclusion == big.conclusion &&
         std::includes(big.proofs.begin(), big.proofs.end(), small.proofs.begin(), small.proofs.end()) &&
         std::includes(big.refutations.begin(), big.refutations.end(), small.refutations.begin(),
                       small.refutations.end());
}

std::vector<AtomicSequent> all_sequents(const std::vector<Atom>& atoms) {
  std::vector<AtomicSequent> out;
  std::size_t n = atoms.size();
  for (std::uint32_t g = 0; g < (1u << n); ++g) {
    for (std::uint32_t d = 0; d < (1u << n); ++d) {
      AtomSet gs, ds;
      for (std::size_t i = 0; i < n; ++i) {
        if (g & (1u << i)) gs.insert(atoms[i]);
        if (d & (1u << i)) ds.insert(atoms[i]);
      }
      for (const auto& a : atoms) {
        for (Polarity pol : {Polarity::Plus, Polarity::Minus}) out.push_back(seq(gs, ds, pol, a));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("check_atomic: example deductions") {
  Base b = load_base("ex21.base.json");
  CHECK(check_atomic(b, AtomicDeduction::assume(q, Polarity::Minus)) == seq({}, {q}, Polarity::Minus, q));
  CHECK(check_atomic(b, load_deduction("ex21_refute_r.deduction.json")) == seq({}, {q}, Polarity::Minus, r));
  CHECK(check_atomic(b, load_deduction("ex21_prove_s.deduction.json")) == seq({}, {}, Polarity::Plus, s));
}

TEST_CASE("check_atomic: errors name the node") {
  Base b = load_base("ex21.base.json");
  auto expect_kind = [&](const AtomicDeduction& d, AtomicCheckError::Kind k, const std::string& path) {
    try {
      check_atomic(b, d);
      FAIL("accepted");
    } catch (const AtomicCheckError& e) {
      CHECK(e.kind() == k);
      CHECK(e.path() == path);
    }
  };
  using K = AtomicCheckError::Kind;
  expect_kind(AtomicDeduction::apply("R9"), K::UnknownRule, "root");
  expect_kind(AtomicDeduction::apply("R2", {AtomicDeduction::apply("R3")}), K::ChildCount, "root");
  expect_kind(AtomicDeduction::apply("R4", {AtomicDeduction::assume(s, Polarity::Plus)}), K::PremiseAtomMismatch,
              "root/0");
  expect_kind(AtomicDeduction::apply("R2", {AtomicDeduction::apply("R3"),
                                            AtomicDeduction::apply("R2", {AtomicDeduction::apply("R3"),
                                                                          AtomicDeduction::assume(q, Polarity::Minus)})}),
              K::PremiseAtomMismatch, "root/1");
  expect_kind(AtomicDeduction::apply("R2", {AtomicDeduction::apply("R3"), AtomicDeduction::assume(q, Polarity::Plus)}),
              K::PremisePolarityMismatch, "root/1");
}

TEST_CASE("derivable: fixed queries") {
  Base b = load_base("ex21.base.json");
  CHECK(derivable(b, seq({}, {q}, Polarity::Minus, r)));
  CHECK(derivable(b, seq({}, {}, Polarity::Plus, s)));
  CHECK_FALSE(derivable(b, seq({}, {}, Polarity::Minus, r)));
  CHECK(derivable(Base(), seq({p}, {}, Polarity::Plus, p)));
  CHECK_FALSE(derivable(Base(), seq({p}, {}, Polarity::Minus, p)));

  Base item3 = load_base("naive_item3.base.json");
  CHECK_FALSE(derivable(item3, seq({}, {}, Polarity::Minus, r)));
  CHECK(derivable(item3, seq({p}, {}, Polarity::Minus, r)));
  CHECK_FALSE(derivable(item3, seq({}, {}, Polarity::Plus, p)));

  Base item1 = load_base("naive_item1.base.json");
  CHECK_FALSE(derivable(item1, seq({}, {}, Polarity::Minus, q)));
  CHECK(derivable(item1, seq({}, {}, Polarity::Plus, q)));
}

TEST_CASE("find_deduction reconstructs the example witnesses") {
  Base b = load_base("ex21.base.json");
  for (const auto& goal : {seq({}, {q}, Polarity::Minus, r), seq({}, {}, Polarity::Plus, s)}) {
    auto d = find_deduction(b, goal);
    REQUIRE(d.has_value());
    CHECK(contained(check_atomic(b, *d), goal));
  }
  CHECK(*find_deduction(b, seq({}, {q}, Polarity::Minus, r)) == load_deduction("ex21_refute_r.deduction.json"));
  CHECK(*find_deduction(b, seq({}, {}, Polarity::Plus, s)) == load_deduction("ex21_prove_s.deduction.json"));
  CHECK_FALSE(find_deduction(b, seq({}, {}, Polarity::Minus, r)).has_value());
}

TEST_CASE("derivable_fixpoint: small cases") {
  AtomSet u{p, q};
  CHECK_FALSE(derivable_fixpoint(Base(), u, seq({}, {}, Polarity::Plus, p)));
  Base ax({AtomicRule{"A", {}, p, Polarity::Plus}});
  CHECK(derivable_fixpoint(ax, u, seq({}, {}, Polarity::Plus, p)));
  Base b = load_base("ex21.base.json");
  AtomSet u4{p, q, r, s};
  CHECK(derivable_fixpoint(b, u4, seq({}, {q}, Polarity::Minus, r)));
  CHECK_FALSE(derivable_fixpoint(b, u4, seq({}, {}, Polarity::Minus, r)));
  CHECK_THROWS_AS(derivable_fixpoint(b, u, seq({}, {}, Polarity::Plus, p)), Error);
}

TEST_CASE("dual_deduction") {
  CHECK(dual_deduction(AtomicDeduction::assume(p, Polarity::Plus)) == AtomicDeduction::assume(p, Polarity::Minus));
  Base b = load_base("ex21.base.json");
  AtomicDeduction d = load_deduction("ex21_refute_r.deduction.json");
  CHECK(check_atomic(dual_base(b), dual_deduction(d)) == seq({q}, {}, Polarity::Plus, r));
  CHECK(dual_deduction(dual_deduction(d)) == d);
}

TEST_CASE("property: oracle equivalence, weakening, base monotonicity, witnesses") {
  testing::Gen g(testing::seed_from_env());
  auto pool = testing::atom_pool(3);
  AtomSet universe(pool.begin(), pool.end());
  for (int i = 0; i < 60; ++i) {
    Base b = g.base(3, 6);
    Base bigger = b.with_rules({g.rule(pool, "X", 2, 1)});
    FixpointOracle oracle(b, universe);
    for (const auto& sq : all_sequents(pool)) {
      bool fast = derivable(b, sq);
      REQUIRE(fast == oracle.derivable(sq));
      if (fast) {
        auto w = find_deduction(b, sq);
        REQUIRE(w.has_value());
        REQUIRE(contained(check_atomic(b, *w), sq));
        REQUIRE(derivable(bigger, sq));
        AtomicSequent wider = sq;
        wider.proofs.insert(g.pick(pool));
        wider.refutations.insert(g.pick(pool));
        REQUIRE(derivable(b, wider));
      }
    }
  }
}

TEST_CASE("property: closed-sequent harmony and fresh atoms") {
  testing::Gen g(testing::seed_from_env() + 1);
  auto pool = testing::atom_pool(4);
  for (int i = 0; i < 300; ++i) {
    Base b = g.base(4, 6);
    Base d = dual_base(b);
    for (const auto& a : pool) {
      for (Polarity pol : {Polarity::Plus, Polarity::Minus}) {
        REQUIRE(derivable(b, seq({}, {}, pol, a)) == derivable(d, seq({}, {}, dual(pol), a)));
      }
    }
    for (Polarity pol : {Polarity::Plus, Polarity::Minus}) REQUIRE_FALSE(derivable(b, seq({}, {}, pol, Atom("z"))));
  }
}

TEST_CASE("property: duality transport on enumerated deductions") {
  testing::Gen g(testing::seed_from_env() + 2);
  auto pool = testing::atom_pool(3);
  for (int i = 0; i < 50; ++i) {
    Base b = g.base(3, 5);
    Base d = dual_base(b);
    for (const auto& ded : testing::enumerate_deductions(b, pool, 4, 500)) {
      AtomicSequent s1 = check_atomic(b, ded);
      AtomicSequent s2 = check_atomic(d, dual_deduction(ded));
      REQUIRE(s2 == dual_sequent(s1));
      REQUIRE(dual_deduction(dual_deduction(ded)) == ded);
    }
  }
}
