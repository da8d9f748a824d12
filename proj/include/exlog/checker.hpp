/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "exlog/expectation.hpp"
#include "exlog/formula.hpp"
#include "exlog/structures.hpp"

namespace exlog {

/* The satisfaction relation M |= f for the three inequality languages.
 * Expectation terms are interpreted per structure kind: probabilistic
 * expectation, credal LOWER expectation, belief expectation, possibilistic
 * expectation. Likelihood terms follow the same convention (point weight,
 * lower probability, Bel, Poss). Gamble inequalities quantify over all
 * worlds of any structure kind.
 */

struct TraceEntry {
  std::string basic;  // canonical spelling of the inequality
  Rat lhs;            // evaluated left-hand side (min slack for gamble literals)
  Rat rhs;
  bool holds;
};

struct CheckResult {
  bool verdict = false;
  std::vector<TraceEntry> trace;  // one entry per basic inequality, in order
};

// e(g) in M; plain structures raise KindError.
Rat eval_term(const Structure& s, const Gamble& g);

// l(f) in M; plain structures raise KindError.
Rat eval_likelihood_term(const Structure& s, const PropPtr& f);

CheckResult check(const Structure& s, const ExpPtr& f);
CheckResult check(const Structure& s, const LikPtr& f);
CheckResult check(const Structure& s, const GambleIneqPtr& f);
CheckResult check(const Structure& s, const AnyFormula& f);

}  // namespace exlog
