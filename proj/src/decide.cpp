/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/decide.hpp"

#include <algorithm>
#include <map>

#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"
#include "exlog/lp.hpp"
#include "exlog/printer.hpp"

namespace exlog {

Semantics semantics_from_name(const std::string& name) {
  if (name == "prob") return Semantics::prob;
  if (name == "lp") return Semantics::lp;
  if (name == "bel") return Semantics::bel;
  if (name == "poss") return Semantics::poss;
  throw Error("unknown semantics '" + name + "'");
}

std::string semantics_name(Semantics s) {
  switch (s) {
    case Semantics::prob: return "prob";
    case Semantics::lp: return "lp";
    case Semantics::bel: return "bel";
    case Semantics::poss: return "poss";
  }
  return "?";
}

IntegerFormula::IntegerFormula(const ExpPtr& f) {
  f_ = map_basics<ExpBasic, ExpBasic>(f, [](const ExpBasic& b) {
    mpz_class l(1);
    for (const auto& t : b.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.rhs.get_den_mpz_t());
    ExpBasic out = b;
    if (l != 1) {
      Rat scale{l};
      for (auto& t : out.terms) t.coef *= scale;
      out.rhs *= scale;
    }
    return mk_basic(std::move(out));
  });
}

namespace {

struct Row {
  std::vector<std::pair<std::size_t, Rat>> terms;  // (gamble index, coefficient)
  Rat rhs;
};

struct QueryContext {
  ExpPtr f;
  DecideBudget budget;
  AtomSpace space;
  std::vector<ExpBasic> basics;  // distinct, in first-visit order
  std::vector<int> occurrence;   // basic occurrence -> distinct index
  std::vector<Gamble> gambles;   // distinct, in first-visit order
  std::vector<std::vector<Rat>> gval;  // [gamble][atom]
  std::vector<Row> rows;               // per distinct basic
  SatStats stats;

  std::size_t natoms() const { return space.size(); }

  void spend_branch(long& counter) {
    ++counter;
    if (stats.boolean_branches + stats.guess_branches > budget.max_branches)
      throw BudgetError("branch budget of " + std::to_string(budget.max_branches) +
                        " exhausted (" + std::to_string(stats.boolean_branches) + " boolean, " +
                        std::to_string(stats.guess_branches) + " witness)");
  }
};

QueryContext build_context(const ExpPtr& f, const DecideBudget& budget) {
  QueryContext ctx;
  ctx.f = f;
  ctx.budget = budget;

  std::set<std::string> props;
  std::map<std::string, int> basic_index;
  std::map<std::string, std::size_t> gamble_index;
  for_each_basic(f, [&](const ExpBasic& b) {
    for (const auto& t : b.terms) collect_props(t.gamble, props);
    std::string key = to_text(b);
    auto it = basic_index.find(key);
    if (it == basic_index.end()) {
      it = basic_index.emplace(key, static_cast<int>(ctx.basics.size())).first;
      ctx.basics.push_back(b);
    }
    ctx.occurrence.push_back(it->second);
  });

  if (props.size() > static_cast<std::size_t>(budget.max_props))
    throw BudgetError("formula mentions " + std::to_string(props.size()) +
                      " propositions, above the budget of " + std::to_string(budget.max_props));
  ctx.space = atom_space_of(props);

  for (const auto& b : ctx.basics) {
    Row row;
    row.rhs = b.rhs;
    for (const auto& t : b.terms) {
      std::string key = to_text(t.gamble);
      auto it = gamble_index.find(key);
      if (it == gamble_index.end()) {
        it = gamble_index.emplace(key, ctx.gambles.size()).first;
        ctx.gambles.push_back(t.gamble);
      }
      row.terms.emplace_back(it->second, t.coef);
    }
    ctx.rows.push_back(std::move(row));
  }
  if (ctx.gambles.size() > static_cast<std::size_t>(budget.max_terms))
    throw BudgetError("formula has " + std::to_string(ctx.gambles.size()) +
                      " distinct expectation terms, above the budget of " +
                      std::to_string(budget.max_terms));

  ctx.gval.resize(ctx.gambles.size());
  for (std::size_t g = 0; g < ctx.gambles.size(); ++g) {
    ctx.gval[g].resize(ctx.natoms());
    for (AtomMask a = 0; a < ctx.natoms(); ++a)
      ctx.gval[g][a] = gamble_value(ctx.gambles[g], atom_assignment(ctx.space, a));
  }
  return ctx;
}

// Three-valued evaluation under a partial assignment (-1 unknown).
int eval3(const ExpPtr& f, const QueryContext& ctx, const std::vector<int>& assign,
          std::size_t& pos) {
  switch (f->kind) {
    case BoolKind::basic: return assign[ctx.occurrence[pos++]];
    case BoolKind::neg: {
      int v = eval3(f->lhs, ctx, assign, pos);
      return v < 0 ? -1 : 1 - v;
    }
    case BoolKind::conj: {
      int l = eval3(f->lhs, ctx, assign, pos);
      int r = eval3(f->rhs, ctx, assign, pos);
      if (l == 0 || r == 0) return 0;
      if (l == 1 && r == 1) return 1;
      return -1;
    }
    case BoolKind::disj: {
      int l = eval3(f->lhs, ctx, assign, pos);
      int r = eval3(f->rhs, ctx, assign, pos);
      if (l == 1 || r == 1) return 1;
      if (l == 0 && r == 0) return 0;
      return -1;
    }
    case BoolKind::impl: {
      int l = eval3(f->lhs, ctx, assign, pos);
      int r = eval3(f->rhs, ctx, assign, pos);
      if (l == 0 || r == 1) return 1;
      if (l == 1 && r == 0) return 0;
      return -1;
    }
  }
  return -1;
}

int eval3(const QueryContext& ctx, const std::vector<int>& assign) {
  std::size_t pos = 0;
  return eval3(ctx.f, ctx, assign, pos);
}

std::string atom_world_id(AtomMask a) { return "w" + std::to_string(a); }

WorldSet atom_worlds(const AtomSpace& space) {
  WorldSet ws;
  for (AtomMask a = 0; a < (AtomMask(1) << space.props.size()); ++a)
    ws.worlds.push_back({atom_world_id(a), atom_assignment(space, a)});
  return ws;
}

// The basics constrained by the current (possibly partial) assignment.
struct Pattern {
  std::vector<std::pair<std::size_t, bool>> literals;  // (basic index, holds?)
};

// Adds "sum_t coef * e(g_t) (>= | <) rhs" to sys given a linearization of
// e(g) as a row over the LP variables plus a constant.
template <class TermRow>
void add_pattern_rows(LinearSystem& sys, const QueryContext& ctx, const Pattern& pat,
                      TermRow&& term_row) {
  for (const auto& [bi, holds] : pat.literals) {
    const Row& row = ctx.rows[bi];
    std::vector<Rat> coefs(sys.vars.size(), Rat(0));
    Rat constant(0);
    for (const auto& [g, c] : row.terms) term_row(g, c, coefs, constant);
    Rat rhs = row.rhs - constant;
    if (holds) {
      sys.add_constraint(std::move(coefs), Rel::ge, std::move(rhs));
    } else {
      for (auto& x : coefs) x = -x;
      sys.add_constraint(std::move(coefs), Rel::gt, -rhs);
    }
  }
}

// ---- probability: atom weights on a simplex ----

std::optional<Structure> try_prob(QueryContext& ctx, const Pattern& pat) {
  LinearSystem sys;
  for (AtomMask a = 0; a < ctx.natoms(); ++a) sys.add_var("w" + std::to_string(a), true);
  {
    std::vector<Rat> ones(ctx.natoms(), Rat(1));
    sys.add_constraint(std::move(ones), Rel::eq, Rat(1));
  }
  add_pattern_rows(sys, ctx, pat, [&](std::size_t g, const Rat& c, std::vector<Rat>& coefs, Rat&) {
    for (AtomMask a = 0; a < ctx.natoms(); ++a) coefs[a] += c * ctx.gval[g][a];
  });
  ++ctx.stats.lp_solves;
  FeasResult r = lp_feasible(sys);
  if (!r.feasible) return std::nullopt;

  ProbabilityStructure s;
  for (AtomMask a = 0; a < ctx.natoms(); ++a) {
    if (r.witness[a] == 0) continue;
    s.worlds.worlds.push_back({atom_world_id(a), atom_assignment(ctx.space, a)});
    s.mu[atom_world_id(a)] = r.witness[a];
  }
  return Structure{std::move(s)};
}

// ---- credal: one candidate measure per distinct gamble ----

std::optional<Structure> try_credal(QueryContext& ctx, const Pattern& pat) {
  const std::size_t K = std::max<std::size_t>(ctx.gambles.size(), 1);
  const std::size_t n = ctx.natoms();
  LinearSystem sys;
  for (std::size_t j = 0; j < K; ++j)
    for (AtomMask a = 0; a < n; ++a)
      sys.add_var("m" + std::to_string(j) + "_" + std::to_string(a), true);
  auto var = [&](std::size_t j, AtomMask a) { return j * n + a; };

  for (std::size_t j = 0; j < K; ++j) {
    std::vector<Rat> coefs(sys.vars.size(), Rat(0));
    for (AtomMask a = 0; a < n; ++a) coefs[var(j, a)] = Rat(1);
    sys.add_constraint(std::move(coefs), Rel::eq, Rat(1));
  }
  // measure i attains the value of gamble i; every other measure lies
  // weakly above it, so the attained value is the true lower expectation
  for (std::size_t i = 0; i < ctx.gambles.size(); ++i)
    for (std::size_t j = 0; j < K; ++j) {
      if (i == j) continue;
      std::vector<Rat> coefs(sys.vars.size(), Rat(0));
      for (AtomMask a = 0; a < n; ++a) {
        coefs[var(j, a)] += ctx.gval[i][a];
        coefs[var(i, a)] -= ctx.gval[i][a];
      }
      sys.add_constraint(std::move(coefs), Rel::ge, Rat(0));
    }
  add_pattern_rows(sys, ctx, pat, [&](std::size_t g, const Rat& c, std::vector<Rat>& coefs, Rat&) {
    for (AtomMask a = 0; a < n; ++a) coefs[var(g, a)] += c * ctx.gval[g][a];
  });
  ++ctx.stats.lp_solves;
  FeasResult r = lp_feasible(sys);
  if (!r.feasible) return std::nullopt;

  // keep atoms that some measure weights; deduplicate equal measures
  std::vector<std::map<std::string, Rat>> measures;
  std::set<AtomMask> used;
  for (std::size_t j = 0; j < K; ++j)
    for (AtomMask a = 0; a < n; ++a)
      if (r.witness[var(j, a)] != 0) used.insert(a);
  if (used.empty()) used.insert(0);
  CredalStructure s;
  for (AtomMask a : used) s.worlds.worlds.push_back({atom_world_id(a), atom_assignment(ctx.space, a)});
  for (std::size_t j = 0; j < K; ++j) {
    std::map<std::string, Rat> mu;
    for (AtomMask a : used) mu[atom_world_id(a)] = r.witness[var(j, a)];
    if (std::find(s.measures.begin(), s.measures.end(), mu) == s.measures.end())
      s.measures.push_back(std::move(mu));
  }
  return Structure{std::move(s)};
}

// ---- belief: masses over nonempty sets of atoms ----

std::optional<Structure> try_belief(QueryContext& ctx, const Pattern& pat) {
  const std::size_t n = ctx.natoms();
  if (n > 12)
    throw BudgetError("belief mass space over " + std::to_string(n) + " atoms is too large");
  const std::size_t nsets = (std::size_t(1) << n) - 1;

  // minimum of each gamble over each nonempty atom set; e(g) is linear in
  // the masses with these coefficients
  std::vector<std::vector<Rat>> gmin(ctx.gambles.size(), std::vector<Rat>(nsets + 1, Rat(0)));
  for (std::size_t g = 0; g < ctx.gambles.size(); ++g)
    for (std::size_t set = 1; set <= nsets; ++set) {
      bool first = true;
      Rat m(0);
      for (AtomMask a = 0; a < n; ++a) {
        if (!((set >> a) & 1)) continue;
        if (first || ctx.gval[g][a] < m) m = ctx.gval[g][a];
        first = false;
      }
      gmin[g][set] = m;
    }

  LinearSystem sys;
  for (std::size_t set = 1; set <= nsets; ++set) sys.add_var("m" + std::to_string(set), true);
  {
    std::vector<Rat> ones(nsets, Rat(1));
    sys.add_constraint(std::move(ones), Rel::eq, Rat(1));
  }
  add_pattern_rows(sys, ctx, pat, [&](std::size_t g, const Rat& c, std::vector<Rat>& coefs, Rat&) {
    for (std::size_t set = 1; set <= nsets; ++set) coefs[set - 1] += c * gmin[g][set];
  });
  ++ctx.stats.lp_solves;
  FeasResult r = lp_feasible(sys);
  if (!r.feasible) return std::nullopt;

  BeliefStructure s;
  std::set<AtomMask> used;
  for (std::size_t set = 1; set <= nsets; ++set) {
    if (r.witness[set - 1] == 0) continue;
    FocalMass fm;
    fm.m = r.witness[set - 1];
    for (AtomMask a = 0; a < n; ++a)
      if ((set >> a) & 1) {
        fm.set.push_back(atom_world_id(a));
        used.insert(a);
      }
    std::sort(fm.set.begin(), fm.set.end());
    s.mass.push_back(std::move(fm));
  }
  for (AtomMask a : used) s.worlds.worlds.push_back({atom_world_id(a), atom_assignment(ctx.space, a)});
  return Structure{std::move(s)};
}

// ---- possibility: one variable per distinct threshold event ----

struct PossEvent {
  std::vector<AtomMask> members;  // ascending
};

std::optional<Structure> try_poss(QueryContext& ctx, const Pattern& pat) {
  const std::size_t n = ctx.natoms();

  // Threshold events of every gamble constrained by this pattern, plus the
  // full atom set (whose possibility is pinned to 1). The expectation of a
  // gamble is an affine function of the event variables.
  std::set<std::size_t> used_gambles;
  for (const auto& [bi, holds] : pat.literals) {
    (void)holds;
    for (const auto& [g, c] : ctx.rows[bi].terms) {
      (void)c;
      used_gambles.insert(g);
    }
  }

  std::vector<PossEvent> events;
  std::map<std::vector<AtomMask>, std::size_t> event_index;
  auto intern_event = [&](std::vector<AtomMask> members) {
    auto it = event_index.find(members);
    if (it != event_index.end()) return it->second;
    std::size_t idx = events.size();
    event_index.emplace(members, idx);
    events.push_back({std::move(members)});
    return idx;
  };
  {
    std::vector<AtomMask> all;
    for (AtomMask a = 0; a < n; ++a) all.push_back(a);
    intern_event(std::move(all));  // index 0: the full set
  }

  // e(g) = x1 + sum_l (x_{l+1} - x_l) * q_{event(g,l)}
  struct AffineExpectation {
    Rat constant;
    std::vector<std::pair<std::size_t, Rat>> coef;  // (event, weight)
  };
  std::map<std::size_t, AffineExpectation> expect;
  for (std::size_t g : used_gambles) {
    std::vector<Rat> sorted = ctx.gval[g];
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    AffineExpectation e;
    e.constant = sorted.front();
    for (std::size_t l = 0; l + 1 < sorted.size(); ++l) {
      std::vector<AtomMask> above;
      for (AtomMask a = 0; a < n; ++a)
        if (ctx.gval[g][a] > sorted[l]) above.push_back(a);
      e.coef.emplace_back(intern_event(std::move(above)), sorted[l + 1] - sorted[l]);
    }
    expect[g] = std::move(e);
  }

  LinearSystem base;
  for (std::size_t k = 0; k < events.size(); ++k) base.add_var("q" + std::to_string(k), true);
  {
    std::vector<Rat> pin(events.size(), Rat(0));
    pin[0] = Rat(1);
    base.add_constraint(std::move(pin), Rel::eq, Rat(1));  // Poss of everything is 1
  }
  for (std::size_t k = 1; k < events.size(); ++k) {
    std::vector<Rat> cap(events.size(), Rat(0));
    cap[k] = Rat(-1);
    base.add_constraint(std::move(cap), Rel::ge, Rat(-1));  // q_k <= 1
  }
  add_pattern_rows(base, ctx, pat,
                   [&](std::size_t g, const Rat& c, std::vector<Rat>& coefs, Rat& constant) {
                     const AffineExpectation& e = expect.at(g);
                     constant += c * e.constant;
                     for (const auto& [k, w] : e.coef) coefs[k] += c * w;
                   });

  // Depth-first witness choice: event k gets a witness atom, forcing every
  // event containing that atom weakly above it. Realizability of a solution
  // follows by taking each atom's possibility to be the least q over the
  // events containing it. Lowest atom index is tried first.
  std::vector<std::vector<std::size_t>> events_containing(n);
  for (std::size_t k = 0; k < events.size(); ++k)
    for (AtomMask a : events[k].members) events_containing[a].push_back(k);

  LinearSystem sys = base;
  std::optional<FeasResult> found;
  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == events.size()) {
      ++ctx.stats.lp_solves;
      FeasResult r = lp_feasible(sys);
      if (r.feasible) found = std::move(r);
      return found.has_value();
    }
    for (AtomMask a : events[k].members) {
      ctx.spend_branch(ctx.stats.guess_branches);
      LinearSystem saved = sys;
      for (std::size_t other : events_containing[a]) {
        if (other == k) continue;
        std::vector<Rat> coefs(events.size(), Rat(0));
        coefs[other] += Rat(1);
        coefs[k] -= Rat(1);
        sys.add_constraint(std::move(coefs), Rel::ge, Rat(0));
      }
      ++ctx.stats.lp_solves;
      if (lp_feasible(sys).feasible && dfs(k + 1)) return true;
      sys = std::move(saved);
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;

  // possibility of an atom: least event value over the events containing it
  PossibilityStructure s;
  s.worlds = atom_worlds(ctx.space);
  for (AtomMask a = 0; a < n; ++a) {
    Rat p(1);
    for (std::size_t k : events_containing[a])
      if (found->witness[k] < p) p = found->witness[k];
    s.poss[atom_world_id(a)] = p;
  }
  return Structure{std::move(s)};
}

std::optional<Structure> try_pattern(QueryContext& ctx, Semantics sem, const Pattern& pat) {
  switch (sem) {
    case Semantics::prob: return try_prob(ctx, pat);
    case Semantics::lp: return try_credal(ctx, pat);
    case Semantics::bel: return try_belief(ctx, pat);
    case Semantics::poss: return try_poss(ctx, pat);
  }
  return std::nullopt;
}

}  // namespace

SatVerdict satisfiable(const IntegerFormula& f, Semantics sem, const DecideBudget& budget) {
  QueryContext ctx = build_context(f.formula(), budget);
  const std::size_t m = ctx.basics.size();
  std::vector<int> assign(m, -1);
  std::optional<Structure> certificate;

  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    int v = eval3(ctx, assign);
    if (v == 0) return false;
    if (v == 1) {
      ctx.spend_branch(ctx.stats.boolean_branches);
      Pattern pat;
      for (std::size_t i = 0; i < m; ++i)
        if (assign[i] >= 0) pat.literals.emplace_back(i, assign[i] == 1);
      certificate = try_pattern(ctx, sem, pat);
      return certificate.has_value();
    }
    while (depth < m && assign[depth] >= 0) ++depth;
    if (depth == m) return false;  // unreachable: full assignments are decided
    for (int value : {1, 0}) {
      assign[depth] = value;
      if (dfs(depth + 1)) return true;
    }
    assign[depth] = -1;
    return false;
  };

  SatVerdict out;
  out.sat = dfs(0);
  if (out.sat) {
    if (!check(*certificate, ctx.f).verdict)
      throw Error("internal: certificate failed model-checker re-verification");
    out.certificate = std::move(certificate);
  }
  out.stats = ctx.stats;
  return out;
}

ValidVerdict valid(const IntegerFormula& f, Semantics sem, const DecideBudget& budget) {
  SatVerdict neg = satisfiable(IntegerFormula(mk_neg(f.formula())), sem, budget);
  ValidVerdict out;
  out.valid = !neg.sat;
  out.countermodel = std::move(neg.certificate);
  out.stats = neg.stats;
  return out;
}

std::vector<ExpBasic> assumption_list(const ExpPtr& f) {
  std::vector<ExpBasic> out;
  std::function<void(const ExpPtr&)> walk = [&](const ExpPtr& g) {
    if (g->kind == BoolKind::basic) {
      out.push_back(g->atom);
      return;
    }
    if (g->kind != BoolKind::conj)
      throw Error("assumptions must be a conjunction of basic inequalities");
    walk(g->lhs);
    walk(g->rhs);
  };
  walk(f);
  return out;
}

EntailResult infer_lower_bound(const std::vector<ExpBasic>& assumptions, const Gamble& g0,
                               const DecideBudget& budget) {
  // The query is phrased as one conjunction so the shared context code can
  // collect gambles and atom values; the goal gamble rides along with a
  // vacuous constraint e(g0) >= e(g0).
  ExpPtr all;
  {
    ExpBasic goal;
    goal.terms.push_back({Rat(0), g0});
    goal.rhs = Rat(0);
    all = mk_basic(std::move(goal));
    for (const auto& b : assumptions) all = mk_conj(all, mk_basic(b));
  }
  QueryContext ctx = build_context(all, budget);
  const std::size_t K = ctx.gambles.size();
  const std::size_t n = ctx.natoms();
  const std::size_t goal_index = 0;  // g0 enters the context first

  LinearSystem sys;
  for (std::size_t j = 0; j < K; ++j)
    for (AtomMask a = 0; a < n; ++a)
      sys.add_var("m" + std::to_string(j) + "_" + std::to_string(a), true);
  auto var = [&](std::size_t j, AtomMask a) { return j * n + a; };
  for (std::size_t j = 0; j < K; ++j) {
    std::vector<Rat> coefs(sys.vars.size(), Rat(0));
    for (AtomMask a = 0; a < n; ++a) coefs[var(j, a)] = Rat(1);
    sys.add_constraint(std::move(coefs), Rel::eq, Rat(1));
  }
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) {
      if (i == j) continue;
      std::vector<Rat> coefs(sys.vars.size(), Rat(0));
      for (AtomMask a = 0; a < n; ++a) {
        coefs[var(j, a)] += ctx.gval[i][a];
        coefs[var(i, a)] -= ctx.gval[i][a];
      }
      sys.add_constraint(std::move(coefs), Rel::ge, Rat(0));
    }
  Pattern pat;
  for (std::size_t i = 1; i < ctx.basics.size(); ++i) pat.literals.emplace_back(i, true);
  add_pattern_rows(sys, ctx, pat, [&](std::size_t g, const Rat& c, std::vector<Rat>& coefs, Rat&) {
    for (AtomMask a = 0; a < n; ++a) coefs[var(g, a)] += c * ctx.gval[g][a];
  });

  std::vector<Rat> objective(sys.vars.size(), Rat(0));
  for (AtomMask a = 0; a < n; ++a) objective[var(goal_index, a)] = ctx.gval[goal_index][a];
  sys.objective = std::move(objective);
  sys.maximize = false;

  LpResult r = lp_optimize(sys);
  EntailResult out;
  if (r.status == LpStatus::infeasible) {
    out.status = EntailResult::Status::inconsistent;
    return out;
  }
  if (r.status == LpStatus::unbounded)
    throw Error("internal: natural-extension bound cannot be unbounded below");
  out.status = EntailResult::Status::bounded;
  out.bound = r.objective_value;

  CredalStructure s;
  s.worlds = atom_worlds(ctx.space);
  for (std::size_t j = 0; j < K; ++j) {
    std::map<std::string, Rat> mu;
    for (AtomMask a = 0; a < n; ++a) mu[atom_world_id(a)] = r.witness[var(j, a)];
    if (std::find(s.measures.begin(), s.measures.end(), mu) == s.measures.end())
      s.measures.push_back(std::move(mu));
  }
  Structure cert{std::move(s)};
  // the witness model attains the bound and satisfies every assumption
  if (eval_term(cert, g0) != out.bound)
    throw Error("internal: entailment witness does not attain the bound");
  for (const auto& b : assumptions)
    if (!check(cert, ExpPtr(mk_basic(b))).verdict)
      throw Error("internal: entailment witness violates an assumption");
  out.witness = std::move(cert);
  return out;
}

}  // namespace exlog
