/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/formula.hpp"

#include "exlog/errors.hpp"

namespace exlog {

namespace {

PropPtr mk(PropKind k, std::string name, PropPtr l, PropPtr r) {
  auto n = std::make_shared<PropFormula>();
  n->kind = k;
  n->name = std::move(name);
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

}  // namespace

PropPtr prop(std::string name) { return mk(PropKind::prop, std::move(name), nullptr, nullptr); }
PropPtr prop_true() {
  static const PropPtr t = mk(PropKind::truth, "", nullptr, nullptr);
  return t;
}
PropPtr prop_false() {
  static const PropPtr f = neg(prop_true());
  return f;
}
PropPtr neg(PropPtr f) { return mk(PropKind::neg, "", std::move(f), nullptr); }
PropPtr conj(PropPtr a, PropPtr b) { return mk(PropKind::conj, "", std::move(a), std::move(b)); }
PropPtr disj(PropPtr a, PropPtr b) { return mk(PropKind::disj, "", std::move(a), std::move(b)); }
PropPtr impl(PropPtr a, PropPtr b) { return mk(PropKind::impl, "", std::move(a), std::move(b)); }

bool equal(const PropPtr& a, const PropPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case PropKind::prop: return a->name == b->name;
    case PropKind::truth: return true;
    case PropKind::neg: return equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

bool is_false(const PropPtr& f) {
  return f && f->kind == PropKind::neg && f->lhs->kind == PropKind::truth;
}

void collect_props(const PropPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == PropKind::prop) {
    out.insert(f->name);
    return;
  }
  collect_props(f->lhs, out);
  collect_props(f->rhs, out);
}

bool eval_prop(const PropPtr& f, const std::set<std::string>& true_props) {
  switch (f->kind) {
    case PropKind::prop: return true_props.count(f->name) > 0;
    case PropKind::truth: return true;
    case PropKind::neg: return !eval_prop(f->lhs, true_props);
    case PropKind::conj: return eval_prop(f->lhs, true_props) && eval_prop(f->rhs, true_props);
    case PropKind::disj: return eval_prop(f->lhs, true_props) || eval_prop(f->rhs, true_props);
    case PropKind::impl: return !eval_prop(f->lhs, true_props) || eval_prop(f->rhs, true_props);
  }
  return false;
}

std::size_t node_count(const PropPtr& f) {
  if (!f) return 0;
  return 1 + node_count(f->lhs) + node_count(f->rhs);
}

bool equal(const Gamble& a, const Gamble& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].coef != b.terms[i].coef || !equal(a.terms[i].formula, b.terms[i].formula))
      return false;
  return true;
}

Gamble scale(const Gamble& g, const Rat& a) {
  Gamble out;
  out.terms.reserve(g.terms.size());
  for (const auto& t : g.terms) out.terms.push_back({t.coef * a, t.formula});
  return out;
}

Gamble concat(const Gamble& a, const Gamble& b) {
  Gamble out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

void collect_props(const Gamble& g, std::set<std::string>& out) {
  for (const auto& t : g.terms) collect_props(t.formula, out);
}

std::size_t node_count(const Gamble& g) {
  std::size_t n = 1;
  for (const auto& t : g.terms) n += 1 + node_count(t.formula);
  return n;
}

bool equal(const ExpBasic& a, const ExpBasic& b) {
  if (a.rhs != b.rhs || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].coef != b.terms[i].coef || !equal(a.terms[i].gamble, b.terms[i].gamble))
      return false;
  return true;
}

bool equal(const LikBasic& a, const LikBasic& b) {
  if (a.rhs != b.rhs || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].coef != b.terms[i].coef || !equal(a.terms[i].formula, b.terms[i].formula))
      return false;
  return true;
}

bool equal(const GambleIneq& a, const GambleIneq& b) {
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

std::size_t node_count(const ExpPtr& f) {
  if (!f) return 0;
  if (f->kind == BoolKind::basic) {
    std::size_t n = 1;
    for (const auto& t : f->atom.terms) n += 1 + node_count(t.gamble);
    return n;
  }
  return 1 + node_count(f->lhs) + node_count(f->rhs);
}

std::size_t node_count(const LikPtr& f) {
  if (!f) return 0;
  if (f->kind == BoolKind::basic) {
    std::size_t n = 1;
    for (const auto& t : f->atom.terms) n += 1 + node_count(t.formula);
    return n;
  }
  return 1 + node_count(f->lhs) + node_count(f->rhs);
}

namespace {

template <class Term>
std::vector<Term> negated(std::vector<Term> ts) {
  for (auto& t : ts) t.coef = -t.coef;
  return ts;
}

// Generic "L rel R" expansion over a basic type with (terms, rhs).
template <class Basic, class Term>
BoolPtr<Basic> cmp_impl(std::vector<Term> lhs_terms, const Rat& lhs_const,
                        std::vector<Term> rhs_terms, const Rat& rhs_const,
                        const std::string& rel) {
  std::vector<Term> terms = std::move(lhs_terms);
  for (auto& t : rhs_terms) {
    t.coef = -t.coef;
    terms.push_back(std::move(t));
  }
  Rat rhs = rhs_const - lhs_const;
  if (terms.empty()) throw Error("inequality needs at least one term");

  auto ge = [&] {
    Basic b;
    b.terms = terms;
    b.rhs = rhs;
    return mk_basic(std::move(b));
  };
  auto le = [&] {
    Basic b;
    b.terms = negated(terms);
    b.rhs = -rhs;
    return mk_basic(std::move(b));
  };

  if (rel == ">=") return ge();
  if (rel == "<=") return le();
  if (rel == "=") return mk_conj(ge(), le());
  if (rel == "<") return mk_neg(ge());
  if (rel == ">") return mk_neg(le());
  throw Error("unknown relation '" + rel + "'");
}

}  // namespace

ExpPtr exp_cmp(std::vector<ExpTerm> lhs_terms, const Rat& lhs_const,
               std::vector<ExpTerm> rhs_terms, const Rat& rhs_const,
               const std::string& rel) {
  return cmp_impl<ExpBasic>(std::move(lhs_terms), lhs_const, std::move(rhs_terms), rhs_const, rel);
}

LikPtr lik_cmp(std::vector<LikTerm> lhs_terms, const Rat& lhs_const,
               std::vector<LikTerm> rhs_terms, const Rat& rhs_const,
               const std::string& rel) {
  return cmp_impl<LikBasic>(std::move(lhs_terms), lhs_const, std::move(rhs_terms), rhs_const, rel);
}

GambleIneqPtr gamble_cmp(Gamble lhs, Gamble rhs, const std::string& rel) {
  auto lit = [](Gamble a, Gamble b) { return mk_basic(GambleIneq{std::move(a), std::move(b)}); };
  if (rel == ">=") return lit(std::move(lhs), std::move(rhs));
  if (rel == "<=") return lit(std::move(rhs), std::move(lhs));
  if (rel == "=") return mk_conj(lit(lhs, rhs), lit(rhs, lhs));
  if (rel == "<") return mk_neg(lit(std::move(lhs), std::move(rhs)));
  if (rel == ">") return mk_neg(lit(std::move(rhs), std::move(lhs)));
  throw Error("unknown relation '" + rel + "'");
}

ExpPtr to_expectation(const LikPtr& f) {
  return map_basics<LikBasic, ExpBasic>(f, [](const LikBasic& b) {
    ExpBasic out;
    out.rhs = b.rhs;
    for (const auto& t : b.terms) {
      Gamble g;
      g.terms.push_back({Rat(1), t.formula});
      out.terms.push_back({t.coef, std::move(g)});
    }
    return mk_basic(std::move(out));
  });
}

}  // namespace exlog
