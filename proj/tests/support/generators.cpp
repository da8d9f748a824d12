/* SPDX-License-Identifier: Apache-2.0 */

#include "support/generators.hpp"

namespace exlog::testgen {

Rat rat(Rng& rng, int num, int den) {
  Rat r(rng.pick(-num, num), rng.pick(1, den));
  r.canonicalize();
  return r;
}

Rat nonneg_rat(Rng& rng, int num, int den) {
  Rat r(rng.pick(0, num), rng.pick(1, den));
  r.canonicalize();
  return r;
}

PropPtr prop_formula(Rng& rng, const std::vector<std::string>& props, int depth) {
  if (depth <= 0 || rng.pick(0, 2) == 0) {
    int i = rng.pick(0, static_cast<int>(props.size()));  // one past the end: constants
    if (i == static_cast<int>(props.size())) return rng.flip() ? prop_true() : prop_false();
    return prop(props[i]);
  }
  switch (rng.pick(0, 3)) {
    case 0: return neg(prop_formula(rng, props, depth - 1));
    case 1: return conj(prop_formula(rng, props, depth - 1), prop_formula(rng, props, depth - 1));
    case 2: return disj(prop_formula(rng, props, depth - 1), prop_formula(rng, props, depth - 1));
    default: return impl(prop_formula(rng, props, depth - 1), prop_formula(rng, props, depth - 1));
  }
}

Gamble gamble(Rng& rng, const std::vector<std::string>& props, int max_terms, int depth) {
  Gamble g;
  int terms = rng.pick(1, max_terms);
  for (int i = 0; i < terms; ++i) g.terms.push_back({rat(rng), prop_formula(rng, props, depth)});
  return g;
}

WorldSet worlds(Rng& rng, int n, const std::vector<std::string>& props) {
  WorldSet ws;
  for (int i = 1; i <= n; ++i) {
    World w;
    w.id = "w" + std::to_string(i);
    for (const auto& p : props)
      if (rng.flip()) w.props.insert(p);
    ws.worlds.push_back(std::move(w));
  }
  return ws;
}

namespace {

std::map<std::string, Rat> random_measure(Rng& rng, const WorldSet& ws) {
  // random nonnegative integers normalized exactly
  std::vector<int> raw(ws.worlds.size());
  int total = 0;
  for (auto& x : raw) {
    x = rng.pick(0, 6);
    total += x;
  }
  if (total == 0) {
    raw[rng.pick(0, static_cast<int>(raw.size()) - 1)] = 1;
    total = 1;
  }
  std::map<std::string, Rat> mu;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Rat w(raw[i], total);
    w.canonicalize();
    mu[ws.worlds[i].id] = w;
  }
  return mu;
}

}  // namespace

ProbabilityStructure probability(Rng& rng, int n, const std::vector<std::string>& props) {
  ProbabilityStructure s;
  s.worlds = worlds(rng, n, props);
  s.mu = random_measure(rng, s.worlds);
  return s;
}

CredalStructure credal(Rng& rng, int n, int measures, const std::vector<std::string>& props) {
  CredalStructure s;
  s.worlds = worlds(rng, n, props);
  for (int i = 0; i < measures; ++i) s.measures.push_back(random_measure(rng, s.worlds));
  return s;
}

BeliefStructure belief(Rng& rng, int n, const std::vector<std::string>& props, int focal) {
  BeliefStructure s;
  s.worlds = worlds(rng, n, props);
  std::set<std::vector<std::string>> seen;
  std::vector<std::vector<std::string>> sets;
  for (int tries = 0; tries < 4 * focal && static_cast<int>(sets.size()) < focal; ++tries) {
    std::vector<std::string> set;
    for (const auto& w : s.worlds.worlds)
      if (rng.flip()) set.push_back(w.id);
    if (set.empty()) continue;
    if (seen.insert(set).second) sets.push_back(std::move(set));
  }
  if (sets.empty()) sets.push_back({s.worlds.worlds.front().id});
  std::vector<int> raw(sets.size());
  int total = 0;
  for (auto& x : raw) {
    x = rng.pick(0, 4);
    total += x;
  }
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Rat m(raw[i], total);
    m.canonicalize();
    s.mass.push_back({sets[i], m});
  }
  return s;
}

PossibilityStructure possibility(Rng& rng, int n, const std::vector<std::string>& props) {
  PossibilityStructure s;
  s.worlds = worlds(rng, n, props);
  for (const auto& w : s.worlds.worlds) {
    Rat p(rng.pick(0, 4), 4);
    p.canonicalize();
    s.poss[w.id] = p;
  }
  s.poss[s.worlds.worlds[rng.pick(0, n - 1)].id] = Rat(1);
  return s;
}

MarkedWorlds marked_worlds(int n) {
  MarkedWorlds mw;
  for (int i = 1; i <= n; ++i) {
    std::string marker = "m" + std::to_string(i);
    mw.markers.push_back(marker);
    mw.worlds.worlds.push_back({"w" + std::to_string(i), {marker}});
  }
  return mw;
}

Gamble marked_gamble(const MarkedWorlds& mw, const std::vector<Rat>& values) {
  Gamble g;
  for (std::size_t i = 0; i < values.size(); ++i)
    g.terms.push_back({values[i], prop(mw.markers[i])});
  return g;
}

std::vector<std::vector<Rat>> grid_partitions(int units, int cells, int denom) {
  std::vector<std::vector<Rat>> out;
  std::vector<int> raw(cells, 0);
  std::function<void(int, int)> rec = [&](int cell, int left) {
    if (cell == cells - 1) {
      raw[cell] = left;
      std::vector<Rat> row;
      for (int x : raw) {
        Rat r(x, denom);
        r.canonicalize();
        row.push_back(r);
      }
      out.push_back(std::move(row));
      return;
    }
    for (int take = 0; take <= left; ++take) {
      raw[cell] = take;
      rec(cell + 1, left - take);
    }
  };
  if (cells > 0) rec(0, units);
  return out;
}

}  // namespace exlog::testgen
