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

#include "bilat/kripke.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bilat {

std::size_t KripkeModel::world(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error("unknown world '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

RawModel KripkeModel::to_raw() const {
  RawModel raw;
  raw.worlds = names_;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (a != b && above(a, b)) raw.order.emplace_back(names_[a], names_[b]);
    }
    raw.vplus[names_[a]] = vplus_[a];
    raw.vminus[names_[a]] = vminus_[a];
  }
  return raw;
}

MonotonicityViolation::MonotonicityViolation(std::string lower, std::string upper, Atom atom, Polarity sign)
    : Error("MonotonicityViolation: " + atom.name() + " is in v" + (sign == Polarity::Plus ? "+" : "-") + "(" +
            lower + ") but not in v" + (sign == Polarity::Plus ? "+" : "-") + "(" + upper + ")"),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      atom_(std::move(atom)),
      sign_(sign) {}

struct KripkeBuilder {
  static KripkeModel make(std::vector<std::string> names, std::vector<bool> above, std::vector<AtomSet> vplus,
                          std::vector<AtomSet> vminus) {
    KripkeModel m;
    m.names_ = std::move(names);
    m.above_ = std::move(above);
    m.vplus_ = std::move(vplus);
    m.vminus_ = std::move(vminus);
    return m;
  }
};

KripkeModel validate_model(const RawModel& raw) {
  const std::size_t n = raw.worlds.size();
  if (n == 0) throw Error("a model needs at least one world");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(raw.worlds[i], i).second) throw Error("duplicate world '" + raw.worlds[i] + "'");
  }
  auto lookup = [&](const std::string& w) {
    auto it = index.find(w);
    if (it == index.end()) throw Error("unknown world '" + w + "'");
    return it->second;
  };
  std::vector<bool> above(n * n, false);
  for (std::size_t i = 0; i < n; ++i) above[i * n + i] = true;
  for (const auto& [a, b] : raw.order) above[lookup(a) * n + lookup(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!above[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (above[k * n + j]) above[i * n + j] = true;
      }
    }
  }
  std::vector<AtomSet> vplus(n), vminus(n);
  for (const auto& [w, s] : raw.vplus) vplus[lookup(w)] = s;
  for (const auto& [w, s] : raw.vminus) vminus[lookup(w)] = s;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !above[i * n + j]) continue;
      for (const auto& a : vplus[i]) {
        if (!vplus[j].count(a)) throw MonotonicityViolation(raw.worlds[i], raw.worlds[j], a, Polarity::Plus);
      }
      for (const auto& a : vminus[i]) {
        if (!vminus[j].count(a)) throw MonotonicityViolation(raw.worlds[i], raw.worlds[j], a, Polarity::Minus);
      }
    }
  }
  return KripkeBuilder::make(raw.worlds, std::move(above), std::move(vplus), std::move(vminus));
}

bool forces(const KripkeModel& m, std::size_t w, Polarity pol, const Formula& f) {
  if (w >= m.size()) throw Error("unknown world index " + std::to_string(w));
  const bool plus = pol == Polarity::Plus;
  switch (f.kind()) {
    case Connective::Atom:
      return (plus ? m.vplus(w) : m.vminus(w)).count(f.atom()) > 0;
    case Connective::Bot:
      return !plus;
    case Connective::Top:
      return plus;
    case Connective::And:
      return plus ? forces(m, w, pol, f.lhs()) && forces(m, w, pol, f.rhs())
                  : forces(m, w, pol, f.lhs()) || forces(m, w, pol, f.rhs());
    case Connective::Or:
      return plus ? forces(m, w, pol, f.lhs()) || forces(m, w, pol, f.rhs())
                  : forces(m, w, pol, f.lhs()) && forces(m, w, pol, f.rhs());
    case Connective::Imp:
      if (!plus) return forces(m, w, Polarity::Plus, f.lhs()) && forces(m, w, Polarity::Minus, f.rhs());
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m.above(w, v) && forces(m, v, Polarity::Plus, f.lhs()) && !forces(m, v, Polarity::Plus, f.rhs())) {
          return false;
        }
      }
      return true;
    case Connective::CoImp:
      if (plus) return forces(m, w, Polarity::Plus, f.lhs()) && forces(m, w, Polarity::Minus, f.rhs());
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m.above(w, v) && forces(m, v, Polarity::Minus, f.rhs()) && !forces(m, v, Polarity::Minus, f.lhs())) {
          return false;
        }
      }
      return true;
  }
  return false;
}

bool model_valid(const KripkeModel& m, Polarity pol, const Formula& f) {
  for (std::size_t w = 0; w < m.size(); ++w) {
    if (!forces(m, w, pol, f)) return false;
  }
  return true;
}

namespace {

bool antecedents_hold(const KripkeModel& m, std::size_t w, const FormulaSet& gamma, const FormulaSet& delta) {
  return std::all_of(gamma.begin(), gamma.end(), [&](const Formula& g) { return forces(m, w, Polarity::Plus, g); }) &&
         std::all_of(delta.begin(), delta.end(), [&](const Formula& d) { return forces(m, w, Polarity::Minus, d); });
}

/// Strict orders on {0..n-1} compatible with the natural labeling, with 0
/// below every other world, one representative per isomorphism class.
/// Each result is the reflexive `above` matrix.
std::vector<std::vector<bool>> rooted_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::size_t> perm(n);
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<bool> above(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      above[i * n + i] = true;
      above[i] = true;
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) above[slots[k].first * n + slots[k].second] = true;
    }
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      for (std::size_t j = 0; j < n && closed; ++j) {
        if (!above[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (above[j * n + k] && !above[i * n + k]) {
            closed = false;
            break;
          }
        }
      }
    }
    if (!closed) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> canon;
    do {
      std::vector<bool> img(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) img[perm[i] * n + perm[j]] = above[i * n + j];
      }
      if (canon.empty() || img < canon) canon = std::move(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canon).second) out.push_back(std::move(above));
  }
  return out;
}

std::vector<std::vector<bool>> up_sets(const std::vector<bool>& above, std::size_t n) {
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (above[i * n + j] && !(mask & (std::uint64_t{1} << j))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

bool entails(const KripkeModel& m, const FormulaSet& gamma, const FormulaSet& delta, Polarity pol,
             const Formula& chi) {
  for (std::size_t w = 0; w < m.size(); ++w) {
    if (antecedents_hold(m, w, gamma, delta) && !forces(m, w, pol, chi)) return false;
  }
  return true;
}

std::optional<Countermodel> countermodel_search(const FormulaSet& gamma, const FormulaSet& delta, Polarity pol,
                                                const Formula& chi, const CountermodelLimits& limits,
                                                const AtomSet& universe) {
  if (limits.max_worlds == 0) throw Error("max_worlds must be at least 1");
  if (limits.max_worlds > 6) throw Error("countermodel search supports at most 6 worlds");
  AtomSet atoms = universe;
  AtomSet needed = atoms_of(chi);
  for (const auto& f : gamma) needed.merge(atoms_of(f));
  for (const auto& f : delta) needed.merge(atoms_of(f));
  if (universe.empty()) atoms = needed;
  for (const auto& a : needed) {
    if (!atoms.count(a)) throw Error("atom universe misses '" + a.name() + "'");
  }
  const std::vector<Atom> atom_list(atoms.begin(), atoms.end());
  const std::size_t slots = 2 * atom_list.size();

  struct Shape {
    std::size_t n;
    std::vector<bool> above;
    std::vector<std::vector<bool>> ups;
  };
  std::vector<Shape> shapes;
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= limits.max_worlds; ++n) {
    for (auto& above : rooted_posets(n)) {
      auto ups = up_sets(above, n);
      total += saturating_pow(ups.size(), slots, limits.ceiling);
      if (total > limits.ceiling) {
        throw Error("countermodel search space exceeds the ceiling of " + std::to_string(limits.ceiling) +
                    " models; lower max_worlds or the atom count");
      }
      shapes.push_back({n, std::move(above), std::move(ups)});
    }
  }

  for (const auto& shape : shapes) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < shape.n; ++i) names.push_back("w" + std::to_string(i));
    std::vector<std::size_t> pick(slots, 0);
    while (true) {
      std::vector<AtomSet> vplus(shape.n), vminus(shape.n);
      for (std::size_t s = 0; s < slots; ++s) {
        const auto& up = shape.ups[pick[s]];
        for (std::size_t w = 0; w < shape.n; ++w) {
          if (up[w]) (s % 2 == 0 ? vplus : vminus)[w].insert(atom_list[s / 2]);
        }
      }
      KripkeModel m = KripkeBuilder::make(names, shape.above, std::move(vplus), std::move(vminus));
      if (antecedents_hold(m, 0, gamma, delta) && !forces(m, 0, pol, chi)) {
        // Independent confirmation through the public validator.
        KripkeModel checked = validate_model(m.to_raw());
        if (!antecedents_hold(checked, 0, gamma, delta) || forces(checked, 0, pol, chi)) {
          throw Error("internal: countermodel failed re-verification");
        }
        return Countermodel{std::move(checked), 0};
      }
      std::size_t k = 0;
      while (k < slots && ++pick[k] == shape.ups.size()) pick[k++] = 0;
      if (k == slots) break;
    }
  }
  return std::nullopt;
}

}  // namespace bilat
