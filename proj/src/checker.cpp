/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/checker.hpp"

#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"
#include "exlog/printer.hpp"

namespace exlog {

Rat eval_term(const Structure& s, const Gamble& g) {
  if (const auto* p = std::get_if<ProbabilityStructure>(&s)) return expect_prob(*p, g);
  if (const auto* c = std::get_if<CredalStructure>(&s)) return expect_bounds(*c, g).lower;
  if (const auto* b = std::get_if<BeliefStructure>(&s)) return expect_choquet(*b, g, ChoquetMode::bel);
  if (const auto* q = std::get_if<PossibilityStructure>(&s)) return expect_poss(*q, g);
  throw KindError("plain structures carry no expectation");
}

Rat eval_likelihood_term(const Structure& s, const PropPtr& f) {
  std::set<std::string> event;
  for (const auto& w : worlds_of(s).worlds)
    if (eval_prop(f, w.props)) event.insert(w.id);
  switch (kind_of(s)) {
    case StructKind::prob: return event_weight(s, event, WeightMode::point);
    case StructKind::credal: return event_weight(s, event, WeightMode::lower);
    case StructKind::belief: return event_weight(s, event, WeightMode::point);
    case StructKind::poss: return event_weight(s, event, WeightMode::point);
    case StructKind::plain: break;
  }
  throw KindError("plain structures carry no likelihood");
}

namespace {

// Every basic inequality is evaluated (no short-circuiting) so the trace
// covers each one exactly once, in visit order.
template <class Basic, class Eval>
bool run_check(const BoolPtr<Basic>& f, std::vector<TraceEntry>& trace, Eval&& eval) {
  switch (f->kind) {
    case BoolKind::basic: {
      trace.push_back(eval(f->atom));
      return trace.back().holds;
    }
    case BoolKind::neg: return !run_check(f->lhs, trace, eval);
    case BoolKind::conj: {
      bool l = run_check(f->lhs, trace, eval);
      bool r = run_check(f->rhs, trace, eval);
      return l && r;
    }
    case BoolKind::disj: {
      bool l = run_check(f->lhs, trace, eval);
      bool r = run_check(f->rhs, trace, eval);
      return l || r;
    }
    case BoolKind::impl: {
      bool l = run_check(f->lhs, trace, eval);
      bool r = run_check(f->rhs, trace, eval);
      return !l || r;
    }
  }
  return false;
}

}  // namespace

CheckResult check(const Structure& s, const ExpPtr& f) {
  CheckResult out;
  out.verdict = run_check(f, out.trace, [&](const ExpBasic& b) {
    Rat lhs(0);
    for (const auto& t : b.terms) lhs += t.coef * eval_term(s, t.gamble);
    return TraceEntry{to_text(b), lhs, b.rhs, lhs >= b.rhs};
  });
  return out;
}

CheckResult check(const Structure& s, const LikPtr& f) {
  CheckResult out;
  out.verdict = run_check(f, out.trace, [&](const LikBasic& b) {
    Rat lhs(0);
    for (const auto& t : b.terms) lhs += t.coef * eval_likelihood_term(s, t.formula);
    return TraceEntry{to_text(b), lhs, b.rhs, lhs >= b.rhs};
  });
  return out;
}

CheckResult check(const Structure& s, const GambleIneqPtr& f) {
  const WorldSet& ws = worlds_of(s);
  CheckResult out;
  out.verdict = run_check(f, out.trace, [&](const GambleIneq& b) {
    // slack = min over worlds of lhs - rhs; the literal holds iff it is >= 0
    Rat slack;
    bool first = true;
    for (const auto& w : ws.worlds) {
      Rat d = gamble_value(b.lhs, w.props) - gamble_value(b.rhs, w.props);
      if (first || d < slack) slack = d;
      first = false;
    }
    if (first) throw KindError("structure has no worlds");
    return TraceEntry{to_text(b), slack, Rat(0), slack >= 0};
  });
  return out;
}

CheckResult check(const Structure& s, const AnyFormula& f) {
  if (const auto* e = std::get_if<ExpPtr>(&f)) return check(s, *e);
  if (const auto* l = std::get_if<LikPtr>(&f)) return check(s, *l);
  if (const auto* g = std::get_if<GambleIneqPtr>(&f)) return check(s, *g);
  throw KindError("only inequality formulas can be model-checked");
}

}  // namespace exlog
