/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <vector>

#include "exlog/checker.hpp"
#include "exlog/formula.hpp"
#include "exlog/structures.hpp"

namespace exlog {

/* Satisfiability and validity per semantics, with certificates that are
 * re-verified by the model checker before they are returned, plus
 * natural-extension bound inference for the credal semantics.
 *
 * Shared skeleton: enumerate truth assignments to the distinct basic
 * inequalities that satisfy the Boolean skeleton (pruned depth-first),
 * and ask an exact LP whether the assignment is realizable. Per
 * semantics the LP sees:
 *   prob  atom weights on a simplex; e(g) is linear in them;
 *   lp    one candidate measure per distinct gamble; the value of e(g_i)
 *         is pinned to its own measure and every other measure is
 *         constrained to lie weakly above it (restricting any model to
 *         the set of measures attaining the constrained infima preserves
 *         every constrained lower expectation, so the small model loses
 *         nothing);
 *   bel   masses on nonempty sets of atoms; e(g) is linear via the
 *         mass-extreme identity;
 *   poss  one variable per distinct threshold event; a witness atom is
 *         guessed per event (depth-first with LP pruning, lowest atom
 *         first) which linearizes every max.
 */

enum class Semantics { prob, lp, bel, poss };

Semantics semantics_from_name(const std::string& name);
std::string semantics_name(Semantics s);

// An expectation formula whose coefficients and right-hand sides are all
// integers; rational input is scaled basic-by-basic (multiplying an
// inequality through by the lcm of its denominators changes nothing).
class IntegerFormula {
 public:
  explicit IntegerFormula(const ExpPtr& f);

  const ExpPtr& formula() const { return f_; }

 private:
  ExpPtr f_;
};

struct DecideBudget {
  int max_props = 3;        // propositions mentioned by the formula
  int max_terms = 4;        // distinct gambles under e(...)
  long max_branches = 10000;  // boolean assignments plus witness guesses
};

struct SatStats {
  long boolean_branches = 0;
  long guess_branches = 0;  // possibility witness guesses
  long lp_solves = 0;
};

struct SatVerdict {
  bool sat = false;
  std::optional<Structure> certificate;  // set iff sat; check() passes it
  SatStats stats;
};

SatVerdict satisfiable(const IntegerFormula& f, Semantics sem, const DecideBudget& budget = {});

struct ValidVerdict {
  bool valid = false;
  std::optional<Structure> countermodel;  // set iff not valid
  SatStats stats;
};

ValidVerdict valid(const IntegerFormula& f, Semantics sem, const DecideBudget& budget = {});

// Largest b such that the assumptions entail e(g0) >= b over credal
// structures. Assumptions are non-negated basic inequalities (a formula
// built from conjunctions of basics is accepted and flattened).
struct EntailResult {
  enum class Status { bounded, inconsistent } status = Status::bounded;
  Rat bound;                              // meaningful when bounded
  std::optional<Structure> witness;       // credal model attaining the bound
};

EntailResult infer_lower_bound(const std::vector<ExpBasic>& assumptions, const Gamble& g0,
                               const DecideBudget& budget = {});

// Flattens a conjunction of basic inequalities; anything else raises Error.
std::vector<ExpBasic> assumption_list(const ExpPtr& f);

}  // namespace exlog
