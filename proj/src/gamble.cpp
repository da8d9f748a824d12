/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/gamble.hpp"

#include <algorithm>
#include <map>

#include "exlog/errors.hpp"

namespace exlog {

AtomSpace atom_space_of(const Gamble& g) {
  std::set<std::string> props;
  collect_props(g, props);
  return atom_space_of(props);
}

AtomSpace atom_space_of(const std::set<std::string>& props) {
  AtomSpace s;
  s.props.assign(props.begin(), props.end());
  return s;
}

std::set<std::string> atom_assignment(const AtomSpace& space, AtomMask atom) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < space.props.size(); ++i)
    if (atom & (AtomMask(1) << i)) out.insert(space.props[i]);
  return out;
}

bool atom_satisfies(const AtomSpace& space, AtomMask atom, const PropPtr& f) {
  switch (f->kind) {
    case PropKind::prop: {
      auto it = std::lower_bound(space.props.begin(), space.props.end(), f->name);
      if (it == space.props.end() || *it != f->name) return false;
      return (atom >> (it - space.props.begin())) & 1;
    }
    case PropKind::truth: return true;
    case PropKind::neg: return !atom_satisfies(space, atom, f->lhs);
    case PropKind::conj:
      return atom_satisfies(space, atom, f->lhs) && atom_satisfies(space, atom, f->rhs);
    case PropKind::disj:
      return atom_satisfies(space, atom, f->lhs) || atom_satisfies(space, atom, f->rhs);
    case PropKind::impl:
      return !atom_satisfies(space, atom, f->lhs) || atom_satisfies(space, atom, f->rhs);
  }
  return false;
}

PropPtr atom_formula(const AtomSpace& space, AtomMask atom) {
  if (space.props.empty()) return prop_true();
  PropPtr out;
  for (std::size_t i = 0; i < space.props.size(); ++i) {
    PropPtr lit = prop(space.props[i]);
    if (!((atom >> i) & 1)) lit = neg(lit);
    out = out ? conj(out, lit) : lit;
  }
  return out;
}

Rat gamble_value(const Gamble& g, const std::map<std::string, bool>& atom) {
  std::set<std::string> props;
  collect_props(g, props);
  std::set<std::string> true_props;
  for (const auto& p : props) {
    auto it = atom.find(p);
    if (it == atom.end()) throw Error("unassigned proposition '" + p + "'");
    if (it->second) true_props.insert(p);
  }
  return gamble_value(g, true_props);
}

Rat gamble_value(const Gamble& g, const std::set<std::string>& true_props) {
  Rat total(0);
  for (const auto& t : g.terms)
    if (eval_prop(t.formula, true_props)) total += t.coef;
  return total;
}

namespace {

void check_cap(std::size_t nprops, int atom_cap) {
  if (nprops > static_cast<std::size_t>(atom_cap))
    throw AtomCapError("formula mentions " + std::to_string(nprops) +
                       " propositions, above the atom cap of " + std::to_string(atom_cap));
}

}  // namespace

CanonicalGamble canonical_form(const Gamble& g, int atom_cap) {
  return canonical_form_over(g, atom_space_of(g), atom_cap);
}

CanonicalGamble canonical_form_over(const Gamble& g, const AtomSpace& space, int atom_cap) {
  check_cap(space.props.size(), atom_cap);
  CanonicalGamble c;
  c.space = space;
  c.weights.resize(space.size(), Rat(0));
  for (AtomMask a = 0; a < space.size(); ++a) {
    Rat v(0);
    for (const auto& t : g.terms)
      if (atom_satisfies(space, a, t.formula)) v += t.coef;
    c.weights[a] = v;
  }
  return c;
}

Gamble from_canonical(const CanonicalGamble& c) {
  Gamble g;
  g.terms.reserve(c.weights.size());
  for (AtomMask a = 0; a < c.weights.size(); ++a)
    g.terms.push_back({c.weights[a], atom_formula(c.space, a)});
  return g;
}

Gamble gamble_join(const Gamble& a, const Gamble& b, JoinMode mode, int atom_cap) {
  std::set<std::string> props;
  collect_props(a, props);
  collect_props(b, props);
  AtomSpace space = atom_space_of(props);
  CanonicalGamble ca = canonical_form_over(a, space, atom_cap);
  CanonicalGamble cb = canonical_form_over(b, space, atom_cap);
  CanonicalGamble out;
  out.space = space;
  out.weights.resize(space.size());
  for (AtomMask m = 0; m < space.size(); ++m)
    out.weights[m] = mode == JoinMode::max ? std::max(ca.weights[m], cb.weights[m])
                                           : std::min(ca.weights[m], cb.weights[m]);
  return from_canonical(out);
}

bool gamble_holds(const WorldSet& worlds, const GambleIneqPtr& f) {
  return eval_bool(f, [&](const GambleIneq& lit) {
    for (const auto& w : worlds.worlds)
      if (gamble_value(lit.lhs, w.props) < gamble_value(lit.rhs, w.props)) return false;
    return true;
  });
}

namespace {

// Truth assignments to the distinct literals of a gamble-inequality
// formula, restricted to those satisfying the Boolean skeleton.
struct LiteralTable {
  std::vector<GambleIneq> literals;
  std::vector<int> index_of_basic;  // per basic occurrence, in visit order
};

int literal_index(LiteralTable& t, const GambleIneq& lit) {
  for (std::size_t i = 0; i < t.literals.size(); ++i)
    if (equal(t.literals[i], lit)) return static_cast<int>(i);
  t.literals.push_back(lit);
  return static_cast<int>(t.literals.size()) - 1;
}

bool eval_with(const GambleIneqPtr& f, const LiteralTable& t, const std::vector<bool>& truth) {
  std::size_t pos = 0;
  return eval_bool(f, [&](const GambleIneq&) { return truth[t.index_of_basic[pos++]]; });
}

PlainStructure structure_from_atoms(const AtomSpace& space, std::vector<AtomMask> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  PlainStructure s;
  for (AtomMask a : atoms) s.worlds.worlds.push_back({"w" + std::to_string(a), atom_assignment(space, a)});
  return s;
}

}  // namespace

GambleDecision gamble_formula_check(const GambleIneqPtr& f, int atom_cap) {
  std::set<std::string> props;
  for_each_basic(f, [&](const GambleIneq& lit) {
    collect_props(lit.lhs, props);
    collect_props(lit.rhs, props);
  });
  AtomSpace space = atom_space_of(props);
  check_cap(space.props.size(), atom_cap);

  LiteralTable table;
  for_each_basic(f, [&](const GambleIneq& lit) {
    table.index_of_basic.push_back(literal_index(table, lit));
  });

  // diff[i][a] = lhs - rhs of literal i at atom a
  std::vector<std::vector<Rat>> diff(table.literals.size());
  for (std::size_t i = 0; i < table.literals.size(); ++i) {
    diff[i].resize(space.size());
    for (AtomMask a = 0; a < space.size(); ++a) {
      auto assignment = atom_assignment(space, a);
      diff[i][a] = gamble_value(table.literals[i].lhs, assignment) -
                   gamble_value(table.literals[i].rhs, assignment);
    }
  }

  // A literal assignment is realizable iff some nonempty world set makes
  // every positive literal hold at all of its atoms and every negative
  // literal fail at one of them. The candidate world set is the region
  // where all positive literals hold; negative literals pick witnesses
  // inside it.
  auto realize = [&](const std::vector<bool>& truth) -> std::optional<PlainStructure> {
    std::vector<AtomMask> region;
    for (AtomMask a = 0; a < space.size(); ++a) {
      bool ok = true;
      for (std::size_t i = 0; i < table.literals.size(); ++i)
        if (truth[i] && diff[i][a] < 0) {
          ok = false;
          break;
        }
      if (ok) region.push_back(a);
    }
    if (region.empty()) return std::nullopt;
    std::vector<AtomMask> chosen;
    for (std::size_t i = 0; i < table.literals.size(); ++i) {
      if (truth[i]) continue;
      bool found = false;
      for (AtomMask a : region)
        if (diff[i][a] < 0) {
          chosen.push_back(a);
          found = true;
          break;
        }
      if (!found) return std::nullopt;
    }
    if (chosen.empty()) chosen.push_back(region.front());
    return structure_from_atoms(space, std::move(chosen));
  };

  GambleDecision out;
  const std::size_t k = table.literals.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << k); ++bits) {
    std::vector<bool> truth(k);
    for (std::size_t i = 0; i < k; ++i) truth[i] = (bits >> i) & 1;
    bool makes_true = eval_with(f, table, truth);
    if (makes_true && !out.satisfiable) {
      if (auto m = realize(truth)) {
        if (!gamble_holds(m->worlds, f)) throw Error("internal: witness fails re-check");
        out.satisfiable = true;
        out.witness = std::move(m);
      }
    }
    if (!makes_true && !out.countermodel) {
      if (auto m = realize(truth)) {
        GambleIneqPtr negf = mk_neg(f);
        if (!gamble_holds(m->worlds, negf)) throw Error("internal: countermodel fails re-check");
        out.countermodel = std::move(m);
      }
    }
    if (out.satisfiable && out.countermodel) break;
  }
  out.valid = !out.countermodel.has_value();
  return out;
}

namespace {

struct Implicant {
  AtomMask value = 0;  // bits on cared positions
  AtomMask dontcare = 0;

  bool covers(AtomMask atom) const { return (atom & ~dontcare) == value; }
  bool operator<(const Implicant& o) const {
    if (value != o.value) return value < o.value;
    return dontcare < o.dontcare;
  }
  bool operator==(const Implicant& o) const { return value == o.value && dontcare == o.dontcare; }
};

}  // namespace

PropPtr minimal_dnf(const AtomSpace& space, const std::vector<AtomMask>& atoms) {
  if (atoms.empty()) return prop_false();
  const AtomMask full = static_cast<AtomMask>(space.size() - 1);
  std::set<AtomMask> want(atoms.begin(), atoms.end());
  if (want.size() == space.size()) return prop_true();

  // Quine-McCluskey: repeatedly merge implicants differing in one cared bit.
  std::vector<Implicant> current;
  for (AtomMask a : want) current.push_back({a, 0});
  std::sort(current.begin(), current.end());
  std::vector<Implicant> primes;
  while (!current.empty()) {
    std::vector<bool> merged(current.size(), false);
    std::set<Implicant> next;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i].dontcare != current[j].dontcare) continue;
        AtomMask delta = current[i].value ^ current[j].value;
        if (delta == 0 || (delta & (delta - 1)) != 0) continue;
        next.insert({static_cast<AtomMask>(current[i].value & ~delta),
                     static_cast<AtomMask>(current[i].dontcare | delta)});
        merged[i] = merged[j] = true;
      }
    for (std::size_t i = 0; i < current.size(); ++i)
      if (!merged[i]) primes.push_back(current[i]);
    current.assign(next.begin(), next.end());
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  // Discard primes that stray outside the target set (happens only when the
  // target is not closed under merging, which QM prevents; kept as a guard).
  std::vector<Implicant> usable;
  for (const auto& im : primes) {
    bool ok = true;
    for (AtomMask a = 0; a <= full && ok; ++a)
      if (im.covers(a) && !want.count(a)) ok = false;
    if (ok) usable.push_back(im);
  }

  // Greedy cover: essential primes first, then best coverage, ties by order.
  std::set<AtomMask> uncovered = want;
  std::vector<Implicant> picked;
  while (!uncovered.empty()) {
    std::size_t best = usable.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < usable.size(); ++i) {
      std::size_t gain = 0;
      for (AtomMask a : uncovered)
        if (usable[i].covers(a)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == usable.size()) throw Error("internal: dnf cover failed");
    picked.push_back(usable[best]);
    for (auto it = uncovered.begin(); it != uncovered.end();)
      it = usable[best].covers(*it) ? uncovered.erase(it) : std::next(it);
    usable.erase(usable.begin() + best);
  }
  std::sort(picked.begin(), picked.end());

  PropPtr out;
  for (const auto& im : picked) {
    PropPtr product;
    for (std::size_t i = 0; i < space.props.size(); ++i) {
      AtomMask bit = AtomMask(1) << i;
      if (im.dontcare & bit) continue;
      PropPtr lit = prop(space.props[i]);
      if (!(im.value & bit)) lit = neg(lit);
      product = product ? conj(product, lit) : lit;
    }
    if (!product) product = prop_true();
    out = out ? disj(out, product) : product;
  }
  return out;
}

}  // namespace exlog
