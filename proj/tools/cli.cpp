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

#include "bilat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "bilat/json_io.hpp"

namespace bilat::cli {
namespace {

namespace fs = std::filesystem;

/// Raised for unusable input; reported with exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string describe(const ParseError& e) {
  return "offset " + std::to_string(e.offset()) + ": " + e.what();
}

/// Runs `f`, prefixing any library error with `context`.
template <class F>
auto with_context(const std::string& context, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError(context + ": " + describe(e));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(context + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(context + ": " + e.what());
  }
}

Json load(const std::string& path) {
  return with_context(path, [&] { return parse_json(read_file(path)); });
}

template <class T, class Fn>
T load_as(const std::string& path, Fn from_json) {
  Json j = load(path);
  return with_context(path, [&] { return from_json(j); });
}

Formula formula_arg(const std::string& text) {
  return with_context("--formula", [&] { return parse_formula(text); });
}

FormulaSet formulas_arg(const std::string& flag, const std::string& text) {
  return with_context(flag, [&] { return parse_formula_list(text); });
}

AtomSet atoms_arg(const std::string& flag, const std::string& text) {
  return with_context(flag, [&] {
    AtomSet out;
    for (const auto& f : parse_formula_list(text)) {
      if (!f.is_atom()) throw Error("'" + print_formula(f) + "' is not an atom");
      out.insert(f.atom());
    }
    return out;
  });
}

Polarity polarity_arg(const std::string& text) {
  return with_context("--polarity", [&] { return parse_polarity(text); });
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write '" + path + "'");
}

/// Options shared by several commands; CLI11 binds into these.
struct Flags {
  std::string base, deduction, proof, model, formula, polarity = "+", proofs, refutations, atoms, budget, out, goal,
      map, world, dir;
  std::size_t max_worlds = 4;
  bool naive = false;
  bool json = false;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool json;

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

SupportOptions support_options(const Flags& f) {
  SupportOptions o;
  if (!f.budget.empty()) o.budget = with_context("--budget", [&] { return parse_budget(f.budget); });
  o.clauses = f.naive ? Clauses::Naive : Clauses::Standard;
  if (!f.atoms.empty()) o.universe = atoms_arg("--atoms", f.atoms);
  return o;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Holds: return kOk;
    case Outcome::Fails: return kFailed;
    case Outcome::Unknown: return kUnknown;
  }
  return kUnknown;
}

int check_atomic_cmd(const Flags& f, const Io& io) {
  Base b = load_as<Base>(f.base, base_from_json);
  AtomicDeduction d = load_as<AtomicDeduction>(f.deduction, deduction_from_json);
  try {
    AtomicSequent s = check_atomic(b, d);
    if (io.json) {
      io.emit(Json{{"valid", true}, {"sequent", to_json(s)}, {"height", d.height()}});
    } else {
      io.out << format_sequent(s) << "\n";
    }
    return kOk;
  } catch (const AtomicCheckError& e) {
    if (io.json) {
      io.emit(Json{{"valid", false}, {"error", std::string(to_string(e.kind()))}, {"path", e.path()}, {"message", e.what()}});
    } else {
      io.out << "invalid: " << e.what() << "\n";
    }
    return kFailed;
  }
}

int derive_cmd(const Flags& f, const Io& io) {
  Base b = load_as<Base>(f.base, base_from_json);
  if (f.goal.empty()) throw InputError("derive needs --goal");
  AtomicSequent s{atoms_arg("--proofs", f.proofs), atoms_arg("--refutations", f.refutations),
                  polarity_arg(f.polarity), with_context("--goal", [&] { return Atom(f.goal); })};
  auto d = find_deduction(b, s);
  if (io.json) {
    io.emit(Json{{"derivable", d.has_value()},
                 {"sequent", to_json(s)},
                 {"deduction", d ? to_json(*d) : Json(nullptr)}});
  } else if (d) {
    io.out << "derivable: " << format_sequent(s) << "\n" << to_json(*d).dump(2) << "\n";
  } else {
    io.out << "not derivable: " << format_sequent(s) << "\n";
  }
  return d ? kOk : kFailed;
}

int check_nd_cmd(const Flags& f, const Io& io) {
  NDProof p = load_as<NDProof>(f.proof, nd_from_json);
  try {
    NDJudgment j = check_nd(p);
    if (io.json) {
      io.emit(Json{{"valid", true}, {"judgment", to_json(j)}, {"height", p.height()}});
    } else {
      io.out << format_judgment(j) << "\n";
    }
    return kOk;
  } catch (const NDCheckError& e) {
    if (io.json) {
      io.emit(Json{{"valid", false}, {"error", std::string(to_string(e.kind()))}, {"path", e.path()}, {"message", e.what()}});
    } else {
      io.out << "invalid: " << e.what() << "\n";
    }
    return kFailed;
  }
}

int dual_cmd(const Flags& f, const Io& io) {
  const int given = !f.formula.empty() + !f.base.empty() + !f.deduction.empty();
  if (given != 1) throw InputError("dual needs exactly one of --formula, --base, --deduction");
  if (!f.formula.empty()) {
    Formula d = dual_formula(formula_arg(f.formula));
    if (io.json) {
      io.emit(Json{{"formula", print_formula(d)}});
    } else {
      io.out << print_formula(d) << "\n";
    }
  } else if (!f.base.empty()) {
    io.emit(to_json(dual_base(load_as<Base>(f.base, base_from_json))));
  } else {
    io.emit(to_json(dual_deduction(load_as<AtomicDeduction>(f.deduction, deduction_from_json))));
  }
  return kOk;
}

int kripke_check_cmd(const Flags& f, const Io& io) {
  RawModel raw = load_as<RawModel>(f.model, model_from_json);
  KripkeModel m = with_context(f.model, [&] { return validate_model(raw); });
  Formula chi = formula_arg(f.formula);
  Polarity pol = polarity_arg(f.polarity);
  FormulaSet gamma = formulas_arg("--proofs", f.proofs);
  FormulaSet delta = formulas_arg("--refutations", f.refutations);
  std::vector<std::size_t> worlds;
  if (!f.world.empty()) {
    worlds.push_back(with_context("--world", [&] { return m.world(f.world); }));
  } else {
    for (std::size_t w = 0; w < m.size(); ++w) worlds.push_back(w);
  }
  Json failing = Json::array();
  for (std::size_t w : worlds) {
    bool antecedents = true;
    for (const auto& g : gamma) antecedents = antecedents && forces(m, w, Polarity::Plus, g);
    for (const auto& d : delta) antecedents = antecedents && forces(m, w, Polarity::Minus, d);
    if (antecedents && !forces(m, w, pol, chi)) failing.push_back(m.name(w));
  }
  const bool ok = failing.empty();
  if (io.json) {
    io.emit(Json{{"valid", ok}, {"failing_worlds", failing}});
  } else if (ok) {
    io.out << "valid\n";
  } else {
    io.out << "not forced at " << failing.dump() << "\n";
  }
  return ok ? kOk : kFailed;
}

int kripke_countermodel_cmd(const Flags& f, const Io& io) {
  Formula chi = formula_arg(f.formula);
  Polarity pol = polarity_arg(f.polarity);
  FormulaSet gamma = formulas_arg("--proofs", f.proofs);
  FormulaSet delta = formulas_arg("--refutations", f.refutations);
  CountermodelLimits limits;
  limits.max_worlds = f.max_worlds;
  AtomSet universe = f.atoms.empty() ? AtomSet{} : atoms_arg("--atoms", f.atoms);
  auto cm = with_context("kripke-countermodel", [&] { return countermodel_search(gamma, delta, pol, chi, limits, universe); });
  if (io.json) {
    io.emit(Json{{"found", cm.has_value()},
                 {"world", cm ? Json(cm->model.name(cm->world)) : Json(nullptr)},
                 {"model", cm ? to_json(cm->model) : Json(nullptr)}});
  } else if (cm) {
    io.out << "countermodel at world " << cm->model.name(cm->world) << "\n" << to_json(cm->model).dump(2) << "\n";
  } else {
    io.out << "no countermodel with at most " << limits.max_worlds << " worlds\n";
  }
  return cm ? kFailed : kOk;
}

SimulationSpec simulation_spec(const FormulaSet& theta, const Flags& f) {
  return {theta, f.atoms.empty() ? AtomSet{} : atoms_arg("--atoms", f.atoms)};
}

int simulate_build_cmd(const Flags& f, const Io& io) {
  if (f.formula.empty()) throw InputError("simulate-build needs --formula");
  FormulaSet theta = formulas_arg("--formula", f.formula);
  Simulation sim = with_context("simulate-build", [&] { return build_simulation(simulation_spec(theta, f)); });
  Json base = to_json(sim.base);
  Json map = to_json(sim.mapping);
  if (!f.out.empty()) {
    write_file(f.out, base.dump(2) + "\n");
    write_file(f.out + ".map.json", Json{{"map", map}}.dump(2) + "\n");
    if (io.json) {
      io.emit(Json{{"base", f.out}, {"map", f.out + ".map.json"}, {"rules", sim.base.size()}});
    } else {
      io.out << "wrote " << sim.base.size() << " rules to " << f.out << " and the mapping to " << f.out
             << ".map.json\n";
    }
    return kOk;
  }
  io.emit(Json{{"base", base}, {"map", map}});
  return kOk;
}

int simulate_translate_cmd(const Flags& f, const Io& io) {
  if (f.proof.empty() == f.deduction.empty()) throw InputError("simulate-translate needs exactly one of --proof, --deduction");
  if (!f.proof.empty()) {
    NDProof p = load_as<NDProof>(f.proof, nd_from_json);
    NDJudgment j = with_context(f.proof, [&] { return check_nd(p); });
    FormulaSet theta = f.formula.empty() ? formulas_of(p) : formulas_arg("--formula", f.formula);
    Simulation sim = with_context("simulate-translate", [&] { return build_simulation(simulation_spec(theta, f)); });
    AtomicDeduction d = with_context(f.proof, [&] { return translate_nd_to_atomic(p, sim); });
    AtomicSequent s = check_atomic(sim.base, d);
    const bool faithful = s == map_judgment(j, sim.mapping);
    if (io.json) {
      io.emit(Json{{"deduction", to_json(d)}, {"sequent", to_json(s)}, {"map", to_json(sim.mapping)}, {"faithful", faithful}});
    } else {
      io.out << format_sequent(s) << "\n" << to_json(d).dump(2) << "\n";
    }
    return faithful ? kOk : kFailed;
  }
  if (f.map.empty()) throw InputError("translating a deduction needs --map");
  AtomicDeduction d = load_as<AtomicDeduction>(f.deduction, deduction_from_json);
  Json mj = load(f.map);
  AtomicMapping loaded = with_context(f.map, [&] { return mapping_from_json(mj.contains("map") ? mj["map"] : mj); });
  FormulaSet theta;
  for (const auto& [formula, atom] : loaded.table()) theta.insert(formula);
  Simulation sim = with_context("simulate-translate", [&] { return build_simulation(simulation_spec(theta, f)); });
  if (sim.mapping.table() != loaded.table()) throw InputError(f.map + ": not a mapping produced by simulate-build");
  AtomicSequent s = with_context(f.deduction, [&] { return check_atomic(sim.base, d); });
  NDProof p = with_context(f.deduction, [&] { return translate_atomic_to_nd(d, sim); });
  NDJudgment j = check_nd(p);
  const bool faithful = j == unmap_sequent(s, sim.mapping);
  if (io.json) {
    io.emit(Json{{"proof", to_json(p)}, {"judgment", to_json(j)}, {"faithful", faithful}});
  } else {
    io.out << format_judgment(j) << "\n" << to_json(p).dump(2) << "\n";
  }
  return faithful ? kOk : kFailed;
}

void print_justification(std::ostream& out, const Justification& j, int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << j.step;
  if (!j.detail.empty()) out << ": " << j.detail;
  out << "\n";
  for (const auto& c : j.children) print_justification(out, c, indent + 1);
}

void print_verdict(std::ostream& out, const SupportVerdict& v) {
  out << to_string(v.outcome) << "\n";
  print_justification(out, v.justification, 1);
  if (v.counterextension) {
    out << "  counterextension: " << v.counterextension->violation << "\n";
    for (const auto& r : v.counterextension->added) out << "    " << describe_rule(r) << "\n";
  }
}

int support_cmd(const Flags& f, const Io& io) {
  Base b = load_as<Base>(f.base, base_from_json);
  SupportQuery q{b, formulas_arg("--proofs", f.proofs), formulas_arg("--refutations", f.refutations),
                 polarity_arg(f.polarity), formula_arg(f.formula)};
  SupportVerdict v = with_context("bes-support", [&] { return support(q, support_options(f)); });
  if (io.json) {
    Json j{{"query", format_query(q.gamma, q.delta, q.polarity, q.formula)},
           {"clauses", f.naive ? "naive" : "standard"}};
    j.update(to_json(v));
    io.emit(j);
  } else {
    print_verdict(io.out, v);
  }
  return exit_for(v.outcome);
}

int harmony_cmd(const Flags& f, const Io& io) {
  Base b = load_as<Base>(f.base, base_from_json);
  FormulaSet gamma = formulas_arg("--proofs", f.proofs);
  FormulaSet delta = formulas_arg("--refutations", f.refutations);
  Formula chi = formula_arg(f.formula);
  Polarity pol = polarity_arg(f.polarity);
  HarmonyReport r = with_context("harmony", [&] {
    return strong_harmony_check(b, gamma, delta, pol, chi, support_options(f));
  });
  if (io.json) {
    io.emit(to_json(r));
  } else {
    io.out << to_string(r.status) << "\n";
    io.out << "original: ";
    print_verdict(io.out, r.original);
    io.out << "dual: ";
    print_verdict(io.out, r.dual);
  }
  return r.status == HarmonyStatus::Consistent ? kOk : kFailed;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Checks one artifact against its sidecar; returns an empty string on
/// success and the reason otherwise.
std::string check_artifact(const fs::path& dir, const std::string& file) {
  try {
    if (ends_with(file, ".proof.json")) {
      const std::string stem = file.substr(0, file.size() - std::string(".proof.json").size());
      const fs::path sidecar = dir / (stem + ".expect.json");
      if (!fs::exists(sidecar)) return "missing sidecar " + sidecar.filename().string();
      NDProof p = load_as<NDProof>((dir / file).string(), nd_from_json);
      Json expect = load(sidecar.string());
      NDJudgment want = with_context(sidecar.string(), [&] { return judgment_from_json(json_detail::member(expect, "judgment", "expectation")); });
      NDJudgment got = check_nd(p);
      if (got != want) return "judgment " + format_judgment(got) + ", expected " + format_judgment(want);
      return "";
    }
    const std::string stem = file.substr(0, file.size() - std::string(".deduction.json").size());
    const fs::path sidecar = dir / (stem + ".expect.json");
    if (!fs::exists(sidecar)) return "missing sidecar " + sidecar.filename().string();
    AtomicDeduction d = load_as<AtomicDeduction>((dir / file).string(), deduction_from_json);
    Json expect = load(sidecar.string());
    const std::string base_file = with_context(sidecar.string(), [&] { return json_detail::string_member(expect, "base", "expectation"); });
    Base b = load_as<Base>((dir / base_file).string(), base_from_json);
    AtomicSequent got = check_atomic(b, d);
    const Json& want = with_context(sidecar.string(), [&]() -> const Json& { return json_detail::member(expect, "sequent", "expectation"); });
    if (to_json(got) != want) return "sequent " + format_sequent(got) + " differs from the expectation";
    return "";
  } catch (const std::exception& e) {
    return e.what();
  }
}

int corpus_run_cmd(const Flags& f, const Io& io) {
  const fs::path dir(f.dir);
  if (!fs::is_directory(dir)) throw InputError("'" + f.dir + "' is not a directory");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (ends_with(name, ".proof.json") || ends_with(name, ".deduction.json")) files.push_back(name);
  }
  std::sort(files.begin(), files.end());
  Json rows = Json::array();
  std::size_t failed = 0;
  for (const auto& file : files) {
    std::string problem = check_artifact(dir, file);
    if (!problem.empty()) ++failed;
    rows.push_back(Json{{"file", file}, {"ok", problem.empty()}, {"detail", problem}});
    if (!io.json) io.out << (problem.empty() ? "PASS  " : "FAIL  ") << file << (problem.empty() ? "" : "  " + problem) << "\n";
  }
  if (io.json) {
    io.emit(Json{{"checked", files.size()}, {"failed", failed}, {"results", rows}});
  } else {
    io.out << files.size() << " checked, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bilateral base-extension semantics toolkit", "bilat"};
  app.require_subcommand(1);
  Flags f;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_flag("--json", f.json, "Print one JSON document");
    return c;
  };
  auto base_opt = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--base", f.base, "Base JSON file");
    if (required) o->required();
  };
  auto sequent_opts = [&](CLI::App* c) {
    c->add_option("--proofs", f.proofs, "Comma-separated proof assumptions");
    c->add_option("--refutations", f.refutations, "Comma-separated refutation assumptions");
    c->add_option("--polarity", f.polarity, "+ or -");
  };
  auto support_opts = [&](CLI::App* c) {
    c->add_option("--atoms", f.atoms, "Closed atom universe");
    c->add_option("--budget", f.budget, "a,r,p,d[,cap] extension budget");
    c->add_flag("--naive", f.naive, "Use the naive clauses");
  };

  std::vector<std::pair<CLI::App*, std::function<int(const Flags&, const Io&)>>> commands;

  auto* c = add("check-atomic", "Check an atomic deduction against a base");
  base_opt(c, true);
  c->add_option("--deduction", f.deduction, "Deduction JSON file")->required();
  commands.emplace_back(c, check_atomic_cmd);

  c = add("derive", "Decide an atomic sequent and print a witness");
  base_opt(c, true);
  c->add_option("--goal", f.goal, "Conclusion atom")->required();
  sequent_opts(c);
  commands.emplace_back(c, derive_cmd);

  c = add("check-nd", "Check a natural deduction proof");
  c->add_option("--proof", f.proof, "Proof JSON file")->required();
  commands.emplace_back(c, check_nd_cmd);

  c = add("dual", "Dualize a formula, base or deduction");
  c->add_option("--formula", f.formula, "Formula");
  base_opt(c, false);
  c->add_option("--deduction", f.deduction, "Deduction JSON file");
  commands.emplace_back(c, dual_cmd);

  c = add("kripke-check", "Check forcing in a Kripke model");
  c->add_option("--model", f.model, "Model JSON file")->required();
  c->add_option("--formula", f.formula, "Formula")->required();
  c->add_option("--world", f.world, "Only this world");
  sequent_opts(c);
  commands.emplace_back(c, kripke_check_cmd);

  c = add("kripke-countermodel", "Search small Kripke countermodels");
  c->add_option("--formula", f.formula, "Formula")->required();
  c->add_option("--max-worlds", f.max_worlds, "World bound (at most 6)");
  c->add_option("--atoms", f.atoms, "Atoms the valuations range over");
  sequent_opts(c);
  commands.emplace_back(c, kripke_countermodel_cmd);

  c = add("simulate-build", "Build a simulation base");
  c->add_option("--formula", f.formula, "Comma-separated formulas")->required();
  c->add_option("--atoms", f.atoms, "Query universe");
  c->add_option("--out", f.out, "Write the base here and the mapping beside it");
  commands.emplace_back(c, simulate_build_cmd);

  c = add("simulate-translate", "Translate between proofs and simulation deductions");
  c->add_option("--proof", f.proof, "Proof JSON file");
  c->add_option("--deduction", f.deduction, "Deduction JSON file");
  c->add_option("--map", f.map, "Mapping JSON file");
  c->add_option("--formula", f.formula, "Formulas to map (default: those of the proof)");
  c->add_option("--atoms", f.atoms, "Query universe");
  commands.emplace_back(c, simulate_translate_cmd);

  c = add("bes-support", "Check base-relative support");
  base_opt(c, true);
  c->add_option("--formula", f.formula, "Formula")->required();
  sequent_opts(c);
  support_opts(c);
  commands.emplace_back(c, support_cmd);

  c = add("harmony", "Compare a support query with its dual");
  base_opt(c, true);
  c->add_option("--formula", f.formula, "Formula")->required();
  sequent_opts(c);
  support_opts(c);
  commands.emplace_back(c, harmony_cmd);

  c = add("corpus-run", "Check every corpus artifact against its sidecar");
  c->add_option("dir", f.dir, "Corpus directory")->required();
  commands.emplace_back(c, corpus_run_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    for (auto& [cmd, fn] : commands) {
      if (cmd->parsed()) return fn(f, Io{out, err, f.json});
    }
  } catch (const ParseError& e) {
    err << "error: " << describe(e) << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace bilat::cli
