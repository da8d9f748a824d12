/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "exlog/formula.hpp"
#include "exlog/structures.hpp"

namespace exlog::testoracle {

/* Independent reference computations. These deliberately avoid the main
 * implementation paths (telescoping, branch-and-prune): expectations sum
 * per world, satisfiability expands to disjunctive normal form first.
 */

// sum over worlds of mu(w) * value(g, w)
Rat per_world_expectation(const ProbabilityStructure& s, const Gamble& g);

// probability satisfiability by explicit DNF expansion: one atom-weight
// LP per disjunct, no boolean pruning shared with the main procedure
bool prob_sat_dnf(const ExpPtr& f, int max_props = 6);

// consonant mass function of a possibility structure: nested focal sets
// from the sorted distinct possibility values
BeliefStructure consonant_belief(const PossibilityStructure& s);

}  // namespace exlog::testoracle
