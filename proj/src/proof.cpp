/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/proof.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"
#include "exlog/lp.hpp"
#include "exlog/parser.hpp"
#include "exlog/printer.hpp"

namespace exlog {

using nlohmann::json;

namespace {

const std::map<std::string, std::vector<std::string>>& system_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"axprob", {"Taut", "Ineq", "E1", "E2", "E3", "E4", "E5"}},
      {"axlp", {"Taut", "Ineq", "E5", "E6", "E7", "E8"}},
      {"axbel", {"Taut", "Ineq", "E5", "E7", "E8", "E9", "E10"}},
      {"axposs", {"Taut", "Ineq", "E5", "E7", "E8", "E10", "E11"}},
      {"axg", {"Taut", "Ineq", "G1", "G2"}},
  };
  return table;
}

bool is_gamble_system(const std::string& system) { return system == "axg"; }

AxiomMatch no(std::string reason) { return {false, std::move(reason)}; }
AxiomMatch yes() { return {true, {}}; }

// ---- small structural helpers -------------------------------------------

bool unit_gamble(const Gamble& g, PropPtr& formula) {
  if (g.terms.size() != 1 || g.terms[0].coef != 1) return false;
  formula = g.terms[0].formula;
  return true;
}

// f = And(b, mirror of b): the two halves of an expanded equality.
const ExpBasic* match_equality(const ExpPtr& f) {
  if (f->kind != BoolKind::conj) return nullptr;
  if (f->lhs->kind != BoolKind::basic || f->rhs->kind != BoolKind::basic) return nullptr;
  const ExpBasic& ge = f->lhs->atom;
  const ExpBasic& le = f->rhs->atom;
  if (ge.terms.size() != le.terms.size() || le.rhs != -ge.rhs) return nullptr;
  for (std::size_t i = 0; i < ge.terms.size(); ++i)
    if (le.terms[i].coef != -ge.terms[i].coef || !equal(le.terms[i].gamble, ge.terms[i].gamble))
      return nullptr;
  return &ge;
}

// ---- tautology checking ---------------------------------------------------

bool propositional_tautology(const PropPtr& f, std::string& falsifying) {
  std::set<std::string> props;
  collect_props(f, props);
  if (props.size() > 20) {
    falsifying = "side condition mentions more than 20 propositions";
    return false;
  }
  std::vector<std::string> order(props.begin(), props.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << order.size()); ++bits) {
    std::set<std::string> truth;
    for (std::size_t i = 0; i < order.size(); ++i)
      if ((bits >> i) & 1) truth.insert(order[i]);
    if (!eval_prop(f, truth)) {
      std::ostringstream os;
      for (std::size_t i = 0; i < order.size(); ++i)
        os << (i ? ", " : "") << order[i] << '=' << (truth.count(order[i]) ? "true" : "false");
      falsifying = order.empty() ? "constant false" : os.str();
      return false;
    }
  }
  return true;
}

// Truth-table discharge with every syntactically distinct basic abstracted
// to its own propositional variable.
template <class Basic>
AxiomMatch check_taut(const BoolPtr<Basic>& f) {
  std::vector<std::string> keys;
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> occ;
  for_each_basic(f, [&](const Basic& b) {
    std::string k = to_text(b);
    auto it = index.find(k);
    if (it == index.end()) it = index.emplace(k, keys.size()).first, keys.push_back(k);
    occ.push_back(it->second);
  });
  if (keys.size() > 20) return no("Taut: more than 20 distinct basic inequalities");
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << keys.size()); ++bits) {
    std::size_t pos = 0;
    bool v = eval_bool(f, [&](const Basic&) -> bool { return (bits >> occ[pos++]) & 1; });
    if (!v) {
      std::ostringstream os;
      os << "Taut: falsified by ";
      for (std::size_t i = 0; i < keys.size(); ++i)
        os << (i ? "; " : "") << '[' << keys[i] << "]=" << (((bits >> i) & 1) ? "true" : "false");
      return no(os.str());
    }
  }
  return yes();
}

// ---- linear-inequality validity (Ineq) ------------------------------------

// A literal of the abstracted skeleton: row . x >= rhs, or its negation.
struct AbstractRow {
  std::vector<Rat> coefs;  // over the abstraction variables
  Rat rhs;
};

struct SkeletonLiteral {
  std::size_t row = 0;
  bool positive = true;
};

using SkeletonClause = std::vector<SkeletonLiteral>;

// Conjunctive normal form of the Boolean skeleton over abstract literals.
template <class Basic, class RowOf>
std::vector<SkeletonClause> skeleton_cnf(const BoolPtr<Basic>& f, RowOf&& row_of,
                                         std::size_t clause_cap) {
  std::vector<SkeletonClause> clauses;
  // cnf(f, pol): recursion producing clause sets; disjunction distributes
  std::function<std::vector<SkeletonClause>(const BoolPtr<Basic>&, bool)> go =
      [&](const BoolPtr<Basic>& g, bool pol) -> std::vector<SkeletonClause> {
    switch (g->kind) {
      case BoolKind::basic:
        return {{SkeletonLiteral{row_of(g->atom), pol}}};
      case BoolKind::neg: return go(g->lhs, !pol);
      case BoolKind::conj:
      case BoolKind::disj: {
        bool conj_like = (g->kind == BoolKind::conj) == pol;
        auto l = go(g->lhs, pol), r = go(g->rhs, pol);
        if (conj_like) {
          l.insert(l.end(), r.begin(), r.end());
          return l;
        }
        std::vector<SkeletonClause> out;
        if (l.size() * r.size() > clause_cap) throw Error("Ineq: clause explosion");
        for (const auto& cl : l)
          for (const auto& cr : r) {
            SkeletonClause c = cl;
            c.insert(c.end(), cr.begin(), cr.end());
            out.push_back(std::move(c));
          }
        return out;
      }
      case BoolKind::impl: {
        auto as_disj = mk_disj(mk_neg(g->lhs), g->rhs);
        return go(as_disj, pol);
      }
    }
    return {};
  };
  clauses = go(f, true);
  if (clauses.size() > clause_cap) throw Error("Ineq: clause explosion");
  return clauses;
}

// Valid over the reals iff the negation of every clause is infeasible.
// `horn_required` additionally demands at most one positive literal per
// clause: with more, real-validity does not lift to the world-quantified
// reading of gamble inequalities.
AxiomMatch check_ineq_rows(const std::vector<AbstractRow>& rows,
                           const std::vector<SkeletonClause>& clauses, std::size_t nvars,
                           const std::vector<std::string>& var_names, bool horn_required) {
  for (const auto& clause : clauses) {
    if (horn_required) {
      std::size_t positives = 0;
      for (const auto& lit : clause) positives += lit.positive;
      if (positives > 1)
        return no("Ineq: clause with " + std::to_string(positives) +
                  " positive inequalities does not lift to a pointwise reading");
    }
    LinearSystem sys;
    for (std::size_t i = 0; i < nvars; ++i) sys.add_var(var_names[i], false);
    for (const auto& lit : clause) {
      const AbstractRow& row = rows[lit.row];
      std::vector<Rat> coefs = row.coefs;
      coefs.resize(nvars, Rat(0));
      if (lit.positive) {
        // negate the literal: row . x < rhs
        for (auto& c : coefs) c = -c;
        sys.add_constraint(std::move(coefs), Rel::gt, -row.rhs);
      } else {
        sys.add_constraint(std::move(coefs), Rel::ge, row.rhs);
      }
    }
    FeasResult r = lp_feasible(sys);
    if (r.feasible) {
      std::ostringstream os;
      os << "Ineq: not valid; counter-assignment";
      for (std::size_t i = 0; i < nvars; ++i)
        os << (i ? "," : "") << ' ' << var_names[i] << '=' << rat_string(r.witness[i]);
      return no(os.str());
    }
  }
  return yes();
}

AxiomMatch check_ineq_expectation(const ExpPtr& f) {
  std::vector<std::string> var_names;
  std::map<std::string, std::size_t> var_index;
  auto var_of_gamble = [&](const Gamble& g) {
    std::string key = to_text(g);
    auto it = var_index.find(key);
    if (it == var_index.end()) {
      it = var_index.emplace(key, var_names.size()).first;
      var_names.push_back("e(" + key + ")");
    }
    return it->second;
  };

  std::vector<AbstractRow> rows;
  std::vector<std::string> row_keys;
  std::map<std::string, std::size_t> row_index;
  auto row_of = [&](const ExpBasic& b) {
    std::string key = to_text(b);
    auto it = row_index.find(key);
    if (it != row_index.end()) return it->second;
    AbstractRow row;
    row.rhs = b.rhs;
    for (const auto& t : b.terms) {
      std::size_t v = var_of_gamble(t.gamble);
      row.coefs.resize(std::max(row.coefs.size(), v + 1), Rat(0));
      row.coefs[v] += t.coef;
    }
    row_index.emplace(key, rows.size());
    rows.push_back(std::move(row));
    return rows.size() - 1;
  };

  std::vector<SkeletonClause> clauses;
  try {
    clauses = skeleton_cnf(f, row_of, 4096);
  } catch (const Error& e) {
    return no(e.what());
  }
  return check_ineq_rows(rows, clauses, var_names.size(), var_names, false);
}

AxiomMatch check_ineq_gamble(const GambleIneqPtr& f) {
  // abstraction variable per distinct propositional formula; a gamble is a
  // linear combination of those variables
  std::vector<std::string> var_names;
  std::map<std::string, std::size_t> var_index;
  auto var_of = [&](const PropPtr& p) {
    std::string key = to_text(p);
    auto it = var_index.find(key);
    if (it == var_index.end()) {
      it = var_index.emplace(key, var_names.size()).first;
      var_names.push_back(key);
    }
    return it->second;
  };

  std::vector<AbstractRow> rows;
  std::map<std::string, std::size_t> row_index;
  auto row_of = [&](const GambleIneq& b) {
    std::string key = to_text(b);
    auto it = row_index.find(key);
    if (it != row_index.end()) return it->second;
    AbstractRow row;
    row.rhs = Rat(0);
    auto add = [&](const Gamble& g, int sign) {
      for (const auto& t : g.terms) {
        std::size_t v = var_of(t.formula);
        row.coefs.resize(std::max(row.coefs.size(), v + 1), Rat(0));
        row.coefs[v] += sign * t.coef;
      }
    };
    add(b.lhs, 1);
    add(b.rhs, -1);
    row_index.emplace(key, rows.size());
    rows.push_back(std::move(row));
    return rows.size() - 1;
  };

  std::vector<SkeletonClause> clauses;
  try {
    clauses = skeleton_cnf(f, row_of, 4096);
  } catch (const Error& e) {
    return no(e.what());
  }
  return check_ineq_rows(rows, clauses, var_names.size(), var_names, true);
}

// ---- expectation axiom schemata -------------------------------------------

AxiomMatch match_e1(const ExpPtr& f) {
  const ExpBasic* ge = match_equality(f);
  if (!ge || ge->terms.size() != 3 || ge->rhs != 0)
    return no("E1: expected e(g1 + g2) = e(g1) + e(g2)");
  if (ge->terms[0].coef != 1 || ge->terms[1].coef != -1 || ge->terms[2].coef != -1)
    return no("E1: coefficient pattern must be (1, -1, -1)");
  if (!equal(ge->terms[0].gamble, concat(ge->terms[1].gamble, ge->terms[2].gamble)))
    return no("E1: left gamble is not the concatenation of the right gambles");
  return yes();
}

AxiomMatch match_e2(const ExpPtr& f) {
  const ExpBasic* ge = match_equality(f);
  if (!ge || ge->terms.size() != 2 || ge->rhs != 0) return no("E2: expected e(a phi) = a e(phi)");
  const Gamble& scaled = ge->terms[0].gamble;
  const Gamble& unit = ge->terms[1].gamble;
  PropPtr phi;
  if (ge->terms[0].coef != 1 || scaled.terms.size() != 1 || !unit_gamble(unit, phi))
    return no("E2: expected e(a phi) = a e(phi)");
  const Rat& a = scaled.terms[0].coef;
  if (!equal(scaled.terms[0].formula, phi)) return no("E2: the two formulas differ");
  if (ge->terms[1].coef != -a) return no("E2: scale factor mismatch");
  return yes();
}

AxiomMatch match_const(const ExpPtr& f, const PropPtr& constant, const Rat& value,
                       const std::string& name) {
  const ExpBasic* ge = match_equality(f);
  PropPtr phi;
  if (!ge || ge->terms.size() != 1 || ge->terms[0].coef != 1 ||
      !unit_gamble(ge->terms[0].gamble, phi))
    return no(name + ": expected e(" + to_text(constant) + ") = " + rat_string(value));
  if (!equal(phi, constant)) return no(name + ": argument is not " + to_text(constant));
  if (ge->rhs != value) return no(name + ": value must be " + rat_string(value));
  return yes();
}

AxiomMatch match_e5(const ExpPtr& f) {
  if (f->kind != BoolKind::basic) return no("E5: expected e(g1) <= e(g2)");
  const ExpBasic& b = f->atom;
  if (b.terms.size() != 2 || b.rhs != 0) return no("E5: expected e(g1) <= e(g2)");
  const ExpTerm *low = nullptr, *high = nullptr;
  for (const auto& t : b.terms) {
    if (t.coef == 1) high = &t;
    if (t.coef == -1) low = &t;
  }
  if (!low || !high) return no("E5: coefficients must be +1 and -1");
  GambleDecision d = gamble_formula_check(gamble_cmp(high->gamble, low->gamble, ">="));
  if (!d.valid) {
    std::string world = d.countermodel->worlds.worlds.front().id;
    std::string props;
    for (const auto& p : d.countermodel->worlds.worlds.front().props) props += " " + p;
    return no("E5: side condition fails; the gambles compare the wrong way at the atom {" +
              (props.empty() ? std::string() : props.substr(1)) + "}");
  }
  return yes();
}

AxiomMatch match_e6(const ExpPtr& f) {
  if (f->kind != BoolKind::basic) return no("E6: expected e(g1 + g2) >= e(g1) + e(g2)");
  const ExpBasic& b = f->atom;
  if (b.terms.size() != 3 || b.rhs != 0 || b.terms[0].coef != 1 || b.terms[1].coef != -1 ||
      b.terms[2].coef != -1)
    return no("E6: expected e(g1 + g2) >= e(g1) + e(g2)");
  if (!equal(b.terms[0].gamble, concat(b.terms[1].gamble, b.terms[2].gamble)))
    return no("E6: left gamble is not the concatenation of the right gambles");
  return yes();
}

// shared shape of E7 (pad with b true) and E8 (pad with b false)
AxiomMatch match_e7_e8(const ExpPtr& f, bool pad_true, const std::string& name) {
  const ExpBasic* ge = match_equality(f);
  if (!ge || ge->terms.size() != 2)
    return no(name + ": expected e(a g + b " + (pad_true ? "true" : "false") + ") = a e(g)" +
              (pad_true ? " + b" : ""));
  const Gamble& padded = ge->terms[0].gamble;
  const Gamble& plain = ge->terms[1].gamble;
  if (ge->terms[0].coef != 1 || padded.terms.empty())
    return no(name + ": left side must be a single e(...) with coefficient 1");
  Rat a = -ge->terms[1].coef;
  if (a < 0) return no(name + ": requires a >= 0");
  const GambleTerm& pad = padded.terms.back();
  bool pad_ok = pad_true ? pad.formula->kind == PropKind::truth : is_false(pad.formula);
  if (!pad_ok)
    return no(name + ": last term of the left gamble must be b " +
              (pad_true ? "true" : "false"));
  if (pad_true && ge->rhs != pad.coef) return no(name + ": constant b mismatch");
  if (!pad_true && ge->rhs != 0) return no(name + ": right-hand side must be a e(g) exactly");
  Gamble prefix;
  prefix.terms.assign(padded.terms.begin(), padded.terms.end() - 1);
  if (!equal(prefix, scale(plain, a))) return no(name + ": left gamble is not a-scaled g plus the pad");
  return yes();
}

// canonical subset order of E9: by size, then lexicographically
std::vector<std::vector<std::size_t>> subsets_in_order(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
      if (k == size) {
        out.push_back(idx);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        idx[k] = i;
        rec(i + 1, k + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

AxiomMatch match_e9(const ExpPtr& f) {
  const ExpBasic* ge = match_equality(f);
  if (!ge || ge->rhs != 0) return no("E9: expected the inclusion-exclusion equality");
  // 1 + (2^n - 1) terms
  std::size_t n = 0;
  while ((std::size_t(1) << (n + 1)) <= ge->terms.size()) ++n;
  if ((std::size_t(1) << n) != ge->terms.size() || n == 0)
    return no("E9: term count must be a power of two");
  if (ge->terms[0].coef != 1) return no("E9: the join term must carry coefficient 1");

  auto order = subsets_in_order(n);
  std::vector<Gamble> parts(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] = ge->terms[1 + i].gamble;  // singletons first

  Gamble vee = parts[0];
  for (std::size_t i = 1; i < n; ++i) vee = gamble_join(vee, parts[i], JoinMode::max);
  if (!equal(ge->terms[0].gamble, vee))
    return no("E9: left gamble is not the max-join of the component gambles");

  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto& I = order[s];
    const ExpTerm& term = ge->terms[1 + s];
    Rat expect_coef = (I.size() % 2 == 1) ? Rat(-1) : Rat(1);  // moved across the equality
    if (term.coef != expect_coef)
      return no("E9: wrong sign on the subset of size " + std::to_string(I.size()));
    if (I.size() == 1) continue;
    Gamble wedge = parts[I[0]];
    for (std::size_t k = 1; k < I.size(); ++k) wedge = gamble_join(wedge, parts[I[k]], JoinMode::min);
    if (!equal(term.gamble, wedge))
      return no("E9: subset term is not the min-join of its components");
  }
  return yes();
}

AxiomMatch match_e10(const ExpPtr& f) {
  const ExpBasic* ge = match_equality(f);
  if (!ge || ge->rhs != 0 || ge->terms.size() < 2 || ge->terms[0].coef != 1)
    return no("E10: expected e(b1 f1 + ... + bn fn) = b1 e(f1) + ... + bn e(fn)");
  const Gamble& g = ge->terms[0].gamble;
  const std::size_t n = g.terms.size();
  if (ge->terms.size() != n + 1) return no("E10: term count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    const Rat& b = g.terms[i].coef;
    if (b < 0) return no("E10: requires nonnegative coefficients");
    PropPtr phi;
    if (!unit_gamble(ge->terms[1 + i].gamble, phi) || !equal(phi, g.terms[i].formula))
      return no("E10: right-hand term " + std::to_string(i + 1) + " does not match the gamble");
    if (ge->terms[1 + i].coef != -b)
      return no("E10: coefficient mismatch on term " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::string falsifying;
    if (!propositional_tautology(impl(g.terms[i + 1].formula, g.terms[i].formula), falsifying))
      return no("E10: chain condition fails, " + to_text(g.terms[i + 1].formula) + " -> " +
                to_text(g.terms[i].formula) + " falsified by " + falsifying);
  }
  return yes();
}

AxiomMatch match_e11(const ExpPtr& f) {
  if (f->kind != BoolKind::impl) return no("E11: expected (e(f1) >= e(f2)) -> (e(f1 | f2) = e(f1))");
  const ExpPtr& lhs = f->lhs;
  if (lhs->kind != BoolKind::basic) return no("E11: antecedent must be e(f1) >= e(f2)");
  const ExpBasic& cmp = lhs->atom;
  PropPtr f1, f2;
  if (cmp.terms.size() != 2 || cmp.rhs != 0 || cmp.terms[0].coef != 1 ||
      cmp.terms[1].coef != -1 || !unit_gamble(cmp.terms[0].gamble, f1) ||
      !unit_gamble(cmp.terms[1].gamble, f2))
    return no("E11: antecedent must be e(f1) >= e(f2) on unit formulas");
  const ExpBasic* ge = match_equality(f->rhs);
  PropPtr joined, again;
  if (!ge || ge->terms.size() != 2 || ge->rhs != 0 || ge->terms[0].coef != 1 ||
      ge->terms[1].coef != -1 || !unit_gamble(ge->terms[0].gamble, joined) ||
      !unit_gamble(ge->terms[1].gamble, again))
    return no("E11: consequent must be e(f1 | f2) = e(f1)");
  if (joined->kind != PropKind::disj || !equal(joined->lhs, f1) || !equal(joined->rhs, f2))
    return no("E11: consequent argument is not f1 | f2");
  if (!equal(again, f1)) return no("E11: consequent must equate with e(f1)");
  return yes();
}

// ---- gamble axiom schemata -------------------------------------------------

const GambleIneq* match_gamble_equality(const GambleIneqPtr& f) {
  if (f->kind != BoolKind::conj || f->lhs->kind != BoolKind::basic ||
      f->rhs->kind != BoolKind::basic)
    return nullptr;
  const GambleIneq& a = f->lhs->atom;
  const GambleIneq& b = f->rhs->atom;
  if (!equal(a.lhs, b.rhs) || !equal(a.rhs, b.lhs)) return nullptr;
  return &a;
}

AxiomMatch match_g1(const GambleIneqPtr& f) {
  const GambleIneq* eq = match_gamble_equality(f);
  if (!eq) return no("G1: expected f | g = 1 f + 1 g");
  PropPtr joined;
  const Gamble *or_side = nullptr, *sum_side = nullptr;
  if (unit_gamble(eq->lhs, joined) && joined->kind == PropKind::disj) {
    or_side = &eq->lhs;
    sum_side = &eq->rhs;
  } else if (unit_gamble(eq->rhs, joined) && joined->kind == PropKind::disj) {
    or_side = &eq->rhs;
    sum_side = &eq->lhs;
  } else {
    return no("G1: one side must be a unit disjunction");
  }
  (void)or_side;
  if (sum_side->terms.size() != 2 || sum_side->terms[0].coef != 1 || sum_side->terms[1].coef != 1)
    return no("G1: the other side must be 1 f + 1 g");
  if (!equal(sum_side->terms[0].formula, joined->lhs) ||
      !equal(sum_side->terms[1].formula, joined->rhs))
    return no("G1: the disjunction does not mention the summed formulas");
  std::string falsifying;
  if (!propositional_tautology(neg(conj(joined->lhs, joined->rhs)), falsifying))
    return no("G1: side condition fails, the formulas are jointly satisfiable at " + falsifying);
  return yes();
}

AxiomMatch match_g2(const GambleIneqPtr& f) {
  if (f->kind != BoolKind::basic) return no("G2: expected f <= g");
  PropPtr low, high;
  if (!unit_gamble(f->atom.rhs, low) || !unit_gamble(f->atom.lhs, high))
    return no("G2: both sides must be unit formulas");
  std::string falsifying;
  if (!propositional_tautology(impl(low, high), falsifying))
    return no("G2: side condition fails, " + to_text(low) + " -> " + to_text(high) +
              " falsified by " + falsifying);
  return yes();
}

AxiomMatch dispatch(const AnyFormula& f, const std::string& axiom, const std::string& system) {
  const bool gamble_lang = is_gamble_system(system);
  if (gamble_lang) {
    const auto* g = std::get_if<GambleIneqPtr>(&f);
    if (!g) return no("formula is not a gamble-inequality formula");
    if (axiom == "Taut") return check_taut(*g);
    if (axiom == "Ineq") return check_ineq_gamble(*g);
    if (axiom == "G1") return match_g1(*g);
    if (axiom == "G2") return match_g2(*g);
    return no("unknown axiom '" + axiom + "'");
  }
  const auto* e = std::get_if<ExpPtr>(&f);
  if (!e) return no("formula is not an expectation formula");
  if (axiom == "Taut") return check_taut(*e);
  if (axiom == "Ineq") return check_ineq_expectation(*e);
  if (axiom == "E1") return match_e1(*e);
  if (axiom == "E2") return match_e2(*e);
  if (axiom == "E3") return match_const(*e, prop_false(), Rat(0), "E3");
  if (axiom == "E4") return match_const(*e, prop_true(), Rat(1), "E4");
  if (axiom == "E5") return match_e5(*e);
  if (axiom == "E6") return match_e6(*e);
  if (axiom == "E7") return match_e7_e8(*e, true, "E7");
  if (axiom == "E8") return match_e7_e8(*e, false, "E8");
  if (axiom == "E9") return match_e9(*e);
  if (axiom == "E10") return match_e10(*e);
  if (axiom == "E11") return match_e11(*e);
  return no("unknown axiom '" + axiom + "'");
}

std::optional<Justification> parse_justification(const std::string& by) {
  std::istringstream is(by);
  std::string head;
  if (!(is >> head)) return std::nullopt;
  if (head == "MP") {
    Justification j;
    j.kind = Justification::Kind::mp;
    if (!(is >> j.from >> j.via)) return std::nullopt;
    std::string extra;
    if (is >> extra) return std::nullopt;
    return j;
  }
  std::string extra;
  if (is >> extra) return std::nullopt;
  Justification j;
  j.kind = Justification::Kind::axiom;
  j.axiom = head;
  return j;
}

template <class Ptr>
bool is_mp_conclusion(const Ptr& premise, const Ptr& implication, const Ptr& conclusion) {
  return implication->kind == BoolKind::impl && equal(implication->lhs, premise) &&
         equal(implication->rhs, conclusion);
}

}  // namespace

std::vector<std::string> system_axioms(const std::string& system) {
  auto it = system_table().find(system);
  if (it == system_table().end()) throw Error("unknown axiom system '" + system + "'");
  return it->second;
}

Derivation load_derivation(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("derivation is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("system") || !doc["system"].is_string())
    throw SchemaError("derivation needs a 'system' string");
  Derivation d;
  d.system = doc["system"].get<std::string>();
  if (system_table().find(d.system) == system_table().end())
    throw SchemaError("unknown axiom system '" + d.system + "'");
  if (!doc.contains("lines") || !doc["lines"].is_array() || doc["lines"].empty())
    throw SchemaError("derivation needs a nonempty 'lines' array");
  for (const auto& jl : doc["lines"]) {
    if (!jl.is_object() || !jl.contains("formula") || !jl["formula"].is_string() ||
        !jl.contains("by") || !jl["by"].is_string())
      throw SchemaError("each line needs 'formula' and 'by' strings");
    ProofLine line;
    line.formula_text = jl["formula"].get<std::string>();
    line.by_text = jl["by"].get<std::string>();
    try {
      if (is_gamble_system(d.system))
        line.formula = AnyFormula{parse_gamble_ineq(line.formula_text)};
      else
        line.formula = AnyFormula{parse_expectation(line.formula_text)};
    } catch (const ParseError& e) {
      line.parse_error = e.what();
    }
    d.lines.push_back(std::move(line));
  }
  return d;
}

ProofOutcome check_proof(const Derivation& d) {
  auto reject = [](int line, std::string reason) {
    return ProofOutcome{false, line, std::move(reason)};
  };
  const auto axioms = system_axioms(d.system);

  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const ProofLine& line = d.lines[i];
    if (!line.formula) return reject(lineno, "formula does not parse: " + line.parse_error);

    auto j = parse_justification(line.by_text);
    if (!j) return reject(lineno, "malformed justification '" + line.by_text + "'");

    if (j->kind == Justification::Kind::mp) {
      if (j->from < 1 || j->via < 1 || j->from >= lineno || j->via >= lineno)
        return reject(lineno, "MP must reference earlier lines");
      const AnyFormula& premise = *d.lines[j->from - 1].formula;
      const AnyFormula& implication = *d.lines[j->via - 1].formula;
      bool ok = false;
      if (is_gamble_system(d.system)) {
        ok = is_mp_conclusion(std::get<GambleIneqPtr>(premise), std::get<GambleIneqPtr>(implication),
                              std::get<GambleIneqPtr>(*line.formula));
      } else {
        ok = is_mp_conclusion(std::get<ExpPtr>(premise), std::get<ExpPtr>(implication),
                              std::get<ExpPtr>(*line.formula));
      }
      if (!ok)
        return reject(lineno, "MP shape mismatch: line " + std::to_string(j->via) +
                                  " is not (line " + std::to_string(j->from) + " -> this line)");
      continue;
    }

    if (std::find(axioms.begin(), axioms.end(), j->axiom) == axioms.end())
      return reject(lineno, j->axiom + " not in " + d.system);
    AxiomMatch m = dispatch(*line.formula, j->axiom, d.system);
    if (!m.ok) return reject(lineno, m.reason);
  }
  return {true, 0, {}};
}

AxiomMatch is_axiom_instance(const AnyFormula& f, const std::string& axiom,
                             const std::string& system) {
  const auto axioms = system_axioms(system);
  if (std::find(axioms.begin(), axioms.end(), axiom) == axioms.end())
    return {false, axiom + " not in " + system};
  return dispatch(f, axiom, system);
}

}  // namespace exlog
