/* SPDX-License-Identifier: Apache-2.0 */

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"
#include "exlog/lp.hpp"
#include "exlog/printer.hpp"

namespace exlog::testoracle {

Rat per_world_expectation(const ProbabilityStructure& s, const Gamble& g) {
  Rat total(0);
  for (const auto& w : s.worlds.worlds) total += s.mu.at(w.id) * gamble_value(g, w.props);
  return total;
}

namespace {

struct Lit {
  std::size_t basic;
  bool positive;
};

using Disjunct = std::vector<Lit>;

std::vector<Disjunct> dnf(const ExpPtr& f, const std::vector<std::size_t>& occ) {
  std::size_t pos = 0;
  std::function<std::vector<Disjunct>(const ExpPtr&, bool)> go =
      [&](const ExpPtr& g, bool pol) -> std::vector<Disjunct> {
    switch (g->kind) {
      case BoolKind::basic: return {{Lit{occ[pos++], pol}}};
      case BoolKind::neg: return go(g->lhs, !pol);
      case BoolKind::conj:
      case BoolKind::disj: {
        bool or_like = (g->kind == BoolKind::disj) == pol;
        auto l = go(g->lhs, pol);
        auto r = go(g->rhs, pol);
        if (or_like) {
          l.insert(l.end(), r.begin(), r.end());
          return l;
        }
        std::vector<Disjunct> out;
        for (const auto& dl : l)
          for (const auto& dr : r) {
            Disjunct d = dl;
            d.insert(d.end(), dr.begin(), dr.end());
            out.push_back(std::move(d));
          }
        return out;
      }
      case BoolKind::impl: {
        // a -> b under pol reads as !a | b under pol
        std::size_t save = pos;
        auto l = go(g->lhs, !pol);
        auto r = go(g->rhs, pol);
        (void)save;
        if (pol) {
          l.insert(l.end(), r.begin(), r.end());
          return l;
        }
        std::vector<Disjunct> out;
        for (const auto& dl : l)
          for (const auto& dr : r) {
            Disjunct d = dl;
            d.insert(d.end(), dr.begin(), dr.end());
            out.push_back(std::move(d));
          }
        return out;
      }
    }
    return {};
  };
  return go(f, true);
}

}  // namespace

bool prob_sat_dnf(const ExpPtr& f, int max_props) {
  std::set<std::string> props;
  std::vector<ExpBasic> basics;
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> occ;
  for_each_basic(f, [&](const ExpBasic& b) {
    for (const auto& t : b.terms) collect_props(t.gamble, props);
    std::string key = to_text(b);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, basics.size()).first;
      basics.push_back(b);
    }
    occ.push_back(it->second);
  });
  if (static_cast<int>(props.size()) > max_props) throw Error("oracle: too many propositions");
  AtomSpace space = atom_space_of(props);

  for (const Disjunct& d : dnf(f, occ)) {
    // merge literal polarities; contradictory disjuncts are unsatisfiable
    std::map<std::size_t, bool> wanted;
    bool contradictory = false;
    for (const Lit& lit : d) {
      auto it = wanted.find(lit.basic);
      if (it == wanted.end())
        wanted.emplace(lit.basic, lit.positive);
      else if (it->second != lit.positive)
        contradictory = true;
    }
    if (contradictory) continue;

    LinearSystem sys;
    for (AtomMask a = 0; a < space.size(); ++a) sys.add_var("w" + std::to_string(a), true);
    std::vector<Rat> ones(space.size(), Rat(1));
    sys.add_constraint(std::move(ones), Rel::eq, Rat(1));
    for (const auto& [bi, positive] : wanted) {
      const ExpBasic& b = basics[bi];
      std::vector<Rat> coefs(space.size(), Rat(0));
      for (const auto& t : b.terms)
        for (AtomMask a = 0; a < space.size(); ++a)
          coefs[a] += t.coef * gamble_value(t.gamble, atom_assignment(space, a));
      if (positive) {
        sys.add_constraint(std::move(coefs), Rel::ge, b.rhs);
      } else {
        for (auto& c : coefs) c = -c;
        sys.add_constraint(std::move(coefs), Rel::gt, -b.rhs);
      }
    }
    if (lp_feasible(sys).feasible) return true;
  }
  return false;
}

BeliefStructure consonant_belief(const PossibilityStructure& s) {
  std::vector<Rat> levels;
  for (const auto& [id, p] : s.poss)
    if (p > 0) levels.push_back(p);
  std::sort(levels.begin(), levels.end(), std::greater<Rat>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  BeliefStructure out;
  out.worlds = s.worlds;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    FocalMass fm;
    for (const auto& w : s.worlds.worlds)
      if (s.poss.at(w.id) >= levels[i]) fm.set.push_back(w.id);
    std::sort(fm.set.begin(), fm.set.end());
    fm.m = levels[i] - (i + 1 < levels.size() ? levels[i + 1] : Rat(0));
    out.mass.push_back(std::move(fm));
  }
  return out;
}

}  // namespace exlog::testoracle
