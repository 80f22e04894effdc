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

#ifndef BILAT_TESTS_MODEL_GEN_HPP_
#define BILAT_TESTS_MODEL_GEN_HPP_

#include <string>
#include <vector>

#include "bilat/kripke.hpp"
#include "gen.hpp"

namespace bilat::testing {

/// Random validated model: random order pairs, then valuations grown upward.
inline KripkeModel random_model(Gen& g, const std::vector<Atom>& atoms) {
  RawModel raw;
  int n = g.uniform(1, 4);
  for (int i = 0; i < n; ++i) raw.worlds.push_back("w" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.uniform(0, 2) == 0) raw.order.emplace_back(raw.worlds[i], raw.worlds[j]);
    }
  }
  for (const auto& w : raw.worlds) {
    raw.vplus[w] = g.subset(atoms, 2);
    raw.vminus[w] = g.subset(atoms, 2);
  }
  KripkeModel shape = validate_model(RawModel{raw.worlds, raw.order, {}, {}});
  RawModel grown = raw;
  for (std::size_t a = 0; a < shape.size(); ++a) {
    for (std::size_t b = 0; b < shape.size(); ++b) {
      if (!shape.above(a, b)) continue;
      for (const auto& x : raw.vplus[raw.worlds[a]]) grown.vplus[raw.worlds[b]].insert(x);
      for (const auto& x : raw.vminus[raw.worlds[a]]) grown.vminus[raw.worlds[b]].insert(x);
    }
  }
  return validate_model(grown);
}

}  // namespace bilat::testing

#endif  // BILAT_TESTS_MODEL_GEN_HPP_
