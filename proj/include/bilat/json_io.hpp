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

#ifndef BILAT_JSON_IO_HPP_
#define BILAT_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "bilat/atomic.hpp"
#include "bilat/kripke.hpp"
#include "bilat/nd.hpp"
#include "bilat/simulation.hpp"
#include "bilat/support.hpp"

namespace bilat {

using Json = nlohmann::ordered_json;

/// Throws ParseError carrying the byte offset reported by the JSON reader.
Json parse_json(std::string_view text);

/// Reads a whole file; throws Error naming the path when unreadable.
std::string read_file(const std::string& path);

Base base_from_json(const Json& j);
Json to_json(const Base& b);

AtomicRule rule_from_json(const Json& j);
Json to_json(const AtomicRule& r);

AtomicDeduction deduction_from_json(const Json& j);
Json to_json(const AtomicDeduction& d);

Json to_json(const AtomicSequent& s);

NDProof nd_from_json(const Json& j);
Json to_json(const NDProof& p);
Json to_json(const NDJudgment& j);
NDJudgment judgment_from_json(const Json& j);

RawModel model_from_json(const Json& j);
Json to_json(const KripkeModel& m);

FormulaSet formula_set_from_json(const Json& j);
Json to_json(const FormulaSet& s);

AtomSet atom_set_from_json(const Json& j);
Json to_json(const AtomSet& s);

/// {"p->q":"f_0", ...} keyed by printed formula.
Json to_json(const AtomicMapping& m);
AtomicMapping mapping_from_json(const Json& j);

Json to_json(const Justification& j);
Json to_json(const SupportVerdict& v);
Json to_json(const HarmonyReport& r);

namespace json_detail {

/// Member lookup that reports `what` and the missing key on failure.
const Json& member(const Json& j, std::string_view key, std::string_view what);
std::string string_member(const Json& j, std::string_view key, std::string_view what);

}  // namespace json_detail

}  // namespace bilat

#endif  // BILAT_JSON_IO_HPP_
