/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/expectation.hpp"

#include <algorithm>
#include <map>

#include "exlog/errors.hpp"

namespace exlog {

std::vector<Rat> world_values(const WorldSet& worlds, const Gamble& g) {
  std::vector<Rat> out;
  out.reserve(worlds.worlds.size());
  for (const auto& w : worlds.worlds) out.push_back(gamble_value(g, w.props));
  return out;
}

ValueProfile value_profile(const WorldSet& worlds, const Gamble& g) {
  std::vector<Rat> vals = world_values(worlds, g);
  ValueProfile p;
  p.values = vals;
  std::sort(p.values.begin(), p.values.end());
  p.values.erase(std::unique(p.values.begin(), p.values.end()), p.values.end());
  p.above.resize(p.values.size());
  for (std::size_t i = 0; i < p.values.size(); ++i)
    for (std::size_t w = 0; w < worlds.worlds.size(); ++w)
      if (vals[w] > p.values[i]) p.above[i].insert(worlds.worlds[w].id);
  return p;
}

Rat expect_prob(const ProbabilityStructure& s, const Gamble& g) {
  std::vector<Rat> vals = world_values(s.worlds, g);
  std::map<Rat, Rat> weight_of_value;  // mu(X = x) per distinct value
  for (std::size_t w = 0; w < vals.size(); ++w)
    weight_of_value[vals[w]] += s.mu.at(s.worlds.worlds[w].id);
  Rat total(0);
  for (const auto& [x, mu] : weight_of_value) total += x * mu;
  return total;
}

namespace {

// x1 + sum (x_{i+1} - x_i) * nu(X > x_i) over a value profile.
template <class Nu>
Rat telescope(const ValueProfile& p, Nu&& nu) {
  Rat total = p.values.front();
  for (std::size_t i = 0; i + 1 < p.values.size(); ++i)
    total += (p.values[i + 1] - p.values[i]) * nu(p.above[i]);
  return total;
}

}  // namespace

Rat expect_prob_telescoping(const ProbabilityStructure& s, const Gamble& g) {
  ValueProfile p = value_profile(s.worlds, g);
  return telescope(p, [&](const std::set<std::string>& above) {
    Rat total(0);
    for (const auto& id : above) total += s.mu.at(id);
    return total;
  });
}

ExpectBounds expect_bounds(const CredalStructure& s, const Gamble& g) {
  std::vector<Rat> vals = world_values(s.worlds, g);
  ExpectBounds out;
  for (std::size_t m = 0; m < s.measures.size(); ++m) {
    Rat e(0);
    for (std::size_t w = 0; w < vals.size(); ++w)
      e += vals[w] * s.measures[m].at(s.worlds.worlds[w].id);
    if (m == 0 || e < out.lower) {
      out.lower = e;
      out.lower_index = m;
    }
    if (m == 0 || e > out.upper) {
      out.upper = e;
      out.upper_index = m;
    }
  }
  return out;
}

Rat expect_choquet(const BeliefStructure& s, const Gamble& g, ChoquetMode mode) {
  ValueProfile p = value_profile(s.worlds, g);
  return telescope(p, [&](const std::set<std::string>& above) {
    return mode == ChoquetMode::bel ? belief_of(s, above) : plausibility_of(s, above);
  });
}

Rat expect_poss(const PossibilityStructure& s, const Gamble& g) {
  ValueProfile p = value_profile(s.worlds, g);
  return telescope(p, [&](const std::set<std::string>& above) {
    Rat best(0);
    for (const auto& id : above)
      if (s.poss.at(id) > best) best = s.poss.at(id);
    return best;
  });
}

Rat mass_min_oracle(const BeliefStructure& s, const Gamble& g, MassExtreme mode) {
  Rat total(0);
  for (const auto& fm : s.mass) {
    if (fm.set.empty()) throw Error("focal element empty");
    Rat extreme;
    bool first = true;
    for (const auto& id : fm.set) {
      const World* w = s.worlds.find(id);
      if (!w) throw Error("unknown world id '" + id + "'");
      Rat v = gamble_value(g, w->props);
      if (first || (mode == MassExtreme::min ? v < extreme : v > extreme)) extreme = v;
      first = false;
    }
    total += fm.m * extreme;
  }
  return total;
}

}  // namespace exlog
