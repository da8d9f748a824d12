/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "exlog/rational.hpp"

namespace exlog {

/* Syntax trees for the five surface languages:
 *   - propositional formulas over named propositions,
 *   - gambles (linear combinations of propositional formulas),
 *   - expectation formulas (Boolean trees over "sum of e-terms >= rhs"),
 *   - likelihood formulas   (same with l-terms over propositional args),
 *   - gamble-inequality formulas (Boolean trees over "gamble >= gamble").
 *
 * Trees are immutable and shared; copies are cheap. The surface
 * abbreviations (<=, <, =, >, false, gamble \/ and /\) are expanded by
 * the parser, so downstream code only ever sees the core connectives.
 */

// ---------------------------------------------------------------------------
// propositional formulas

enum class PropKind { prop, truth, neg, conj, disj, impl };

struct PropFormula;
using PropPtr = std::shared_ptr<const PropFormula>;

// `truth` is the distinguished constant; "false" is spelled neg(truth)
// and prints back as "false".
struct PropFormula {
  PropKind kind;
  std::string name;  // kind == prop
  PropPtr lhs, rhs;  // children; rhs unused for neg
};

PropPtr prop(std::string name);
PropPtr prop_true();
PropPtr prop_false();  // neg(true)
PropPtr neg(PropPtr f);
PropPtr conj(PropPtr a, PropPtr b);
PropPtr disj(PropPtr a, PropPtr b);
PropPtr impl(PropPtr a, PropPtr b);

bool equal(const PropPtr& a, const PropPtr& b);
bool is_false(const PropPtr& f);  // structurally neg(truth)
void collect_props(const PropPtr& f, std::set<std::string>& out);

// Truth value under a valuation given as the set of true propositions;
// propositions not in the set are false.
bool eval_prop(const PropPtr& f, const std::set<std::string>& true_props);

std::size_t node_count(const PropPtr& f);

// ---------------------------------------------------------------------------
// gambles

struct GambleTerm {
  Rat coef;
  PropPtr formula;
};

// b1*f1 + ... + bn*fn; the empty term list is the constant-0 gamble and
// prints as "0". Zero coefficients are allowed and preserved.
struct Gamble {
  std::vector<GambleTerm> terms;
};

bool equal(const Gamble& a, const Gamble& b);
Gamble scale(const Gamble& g, const Rat& a);
Gamble concat(const Gamble& a, const Gamble& b);
void collect_props(const Gamble& g, std::set<std::string>& out);
std::size_t node_count(const Gamble& g);

// ---------------------------------------------------------------------------
// Boolean skeleton shared by the three inequality languages

enum class BoolKind { basic, neg, conj, disj, impl };

template <class Basic>
struct BoolFormula;

template <class Basic>
using BoolPtr = std::shared_ptr<const BoolFormula<Basic>>;

template <class Basic>
struct BoolFormula {
  BoolKind kind = BoolKind::basic;
  Basic atom{};            // kind == basic
  BoolPtr<Basic> lhs, rhs;  // children; rhs unused for neg
};

template <class Basic>
BoolPtr<Basic> mk_basic(Basic b) {
  auto n = std::make_shared<BoolFormula<Basic>>();
  n->kind = BoolKind::basic;
  n->atom = std::move(b);
  return n;
}

template <class Basic>
BoolPtr<Basic> mk_node(BoolKind k, BoolPtr<Basic> l, BoolPtr<Basic> r) {
  auto n = std::make_shared<BoolFormula<Basic>>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

template <class Basic>
BoolPtr<Basic> mk_neg(BoolPtr<Basic> f) {
  return mk_node(BoolKind::neg, std::move(f), BoolPtr<Basic>{});
}

template <class Basic>
BoolPtr<Basic> mk_conj(BoolPtr<Basic> a, BoolPtr<Basic> b) {
  return mk_node(BoolKind::conj, std::move(a), std::move(b));
}

template <class Basic>
BoolPtr<Basic> mk_disj(BoolPtr<Basic> a, BoolPtr<Basic> b) {
  return mk_node(BoolKind::disj, std::move(a), std::move(b));
}

template <class Basic>
BoolPtr<Basic> mk_impl(BoolPtr<Basic> a, BoolPtr<Basic> b) {
  return mk_node(BoolKind::impl, std::move(a), std::move(b));
}

template <class Basic, class Fn>
void for_each_basic(const BoolPtr<Basic>& f, Fn&& fn) {
  if (!f) return;
  if (f->kind == BoolKind::basic) {
    fn(f->atom);
    return;
  }
  for_each_basic(f->lhs, fn);
  for_each_basic(f->rhs, fn);
}

// Evaluates the Boolean skeleton; `leaf` maps a Basic to bool.
template <class Basic, class Fn>
bool eval_bool(const BoolPtr<Basic>& f, Fn&& leaf) {
  switch (f->kind) {
    case BoolKind::basic: return leaf(f->atom);
    case BoolKind::neg: return !eval_bool(f->lhs, leaf);
    case BoolKind::conj: return eval_bool(f->lhs, leaf) && eval_bool(f->rhs, leaf);
    case BoolKind::disj: return eval_bool(f->lhs, leaf) || eval_bool(f->rhs, leaf);
    case BoolKind::impl: return !eval_bool(f->lhs, leaf) || eval_bool(f->rhs, leaf);
  }
  return false;
}

// Rebuilds the skeleton with every basic replaced by `fn(basic)`.
template <class Basic, class Out, class Fn>
BoolPtr<Out> map_basics(const BoolPtr<Basic>& f, Fn&& fn) {
  if (f->kind == BoolKind::basic) return fn(f->atom);
  BoolPtr<Out> l = map_basics<Basic, Out>(f->lhs, fn);
  BoolPtr<Out> r = f->rhs ? map_basics<Basic, Out>(f->rhs, fn) : BoolPtr<Out>{};
  return mk_node(f->kind, std::move(l), std::move(r));
}

template <class Basic>
bool equal(const BoolPtr<Basic>& a, const BoolPtr<Basic>& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == BoolKind::basic) return equal(a->atom, b->atom);
  if (!equal(a->lhs, b->lhs)) return false;
  if (a->kind == BoolKind::neg) return true;
  return equal(a->rhs, b->rhs);
}

// ---------------------------------------------------------------------------
// the three inequality languages

struct ExpTerm {
  Rat coef;
  Gamble gamble;
};

// coef1*e(g1) + ... + coefk*e(gk) >= rhs, k >= 1.
struct ExpBasic {
  std::vector<ExpTerm> terms;
  Rat rhs;
};

using ExpFormula = BoolFormula<ExpBasic>;
using ExpPtr = BoolPtr<ExpBasic>;

struct LikTerm {
  Rat coef;
  PropPtr formula;
};

struct LikBasic {
  std::vector<LikTerm> terms;
  Rat rhs;
};

using LikFormula = BoolFormula<LikBasic>;
using LikPtr = BoolPtr<LikBasic>;

// lhs >= rhs, pointwise over all worlds of a structure.
struct GambleIneq {
  Gamble lhs, rhs;
};

using GambleIneqFormula = BoolFormula<GambleIneq>;
using GambleIneqPtr = BoolPtr<GambleIneq>;

bool equal(const ExpBasic& a, const ExpBasic& b);
bool equal(const LikBasic& a, const LikBasic& b);
bool equal(const GambleIneq& a, const GambleIneq& b);

std::size_t node_count(const ExpPtr& f);
std::size_t node_count(const LikPtr& f);

// ---------------------------------------------------------------------------
// abbreviation expansion
//
// A comparison "L rel R" between linear combinations is normalized by
// moving R's terms to the left with negated coefficients and folding
// constants into the right-hand side, then:
//   >=  stays a single basic;
//   <=  negates every coefficient and the rhs;
//   =   becomes (>=) and (<=);
//   <   is the negation of >=;  > is the negation of <=.
// These helpers produce exactly the parser's expansion so that other
// modules (axiom matching, generators) agree with parsed text.

ExpPtr exp_cmp(std::vector<ExpTerm> lhs_terms, const Rat& lhs_const,
               std::vector<ExpTerm> rhs_terms, const Rat& rhs_const,
               const std::string& rel);
LikPtr lik_cmp(std::vector<LikTerm> lhs_terms, const Rat& lhs_const,
               std::vector<LikTerm> rhs_terms, const Rat& rhs_const,
               const std::string& rel);
GambleIneqPtr gamble_cmp(Gamble lhs, Gamble rhs, const std::string& rel);

// Embedding of likelihood formulas into expectation formulas:
// l(phi) becomes e(1 phi).
ExpPtr to_expectation(const LikPtr& f);

// ---------------------------------------------------------------------------

enum class Lang { prop, gamble, expectation, likelihood, gamble_ineq };

using AnyFormula = std::variant<PropPtr, Gamble, ExpPtr, LikPtr, GambleIneqPtr>;

}  // namespace exlog
