/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "exlog/formula.hpp"
#include "exlog/gamble.hpp"
#include "exlog/structures.hpp"

namespace exlog {

/* The expectation operators for the four uncertainty kinds, plus the
 * independent identities used to cross-check them.
 */

// Sorted distinct values of a gamble over a world set, with the worlds
// strictly above each value. The threshold sets shrink as values grow;
// the set above the largest value is empty.
struct ValueProfile {
  std::vector<Rat> values;                       // strictly increasing
  std::vector<std::set<std::string>> above;      // above[i] = worlds with X > values[i]
};

ValueProfile value_profile(const WorldSet& worlds, const Gamble& g);

// Per-world value of a gamble (worlds with equal valuations are distinct
// sample points and appear separately).
std::vector<Rat> world_values(const WorldSet& worlds, const Gamble& g);

// Expected value grouped by gamble value: sum over x of x * mu(X = x).
Rat expect_prob(const ProbabilityStructure& s, const Gamble& g);

// Same number computed by threshold telescoping:
// x1 + sum_i (x_{i+1} - x_i) * mu(X > x_i).
Rat expect_prob_telescoping(const ProbabilityStructure& s, const Gamble& g);

struct ExpectBounds {
  Rat lower, upper;
  std::size_t lower_index = 0, upper_index = 0;  // attaining measures
};

// Min and max of the per-measure expectations over the listed measures.
ExpectBounds expect_bounds(const CredalStructure& s, const Gamble& g);

enum class ChoquetMode { bel, plaus };

// Threshold telescoping against Bel or Plaus (duplicate values merged).
Rat expect_choquet(const BeliefStructure& s, const Gamble& g, ChoquetMode mode);

// Threshold telescoping against Poss.
Rat expect_poss(const PossibilityStructure& s, const Gamble& g);

enum class MassExtreme { min, max };

// Sum over focal sets of mass(A) * (min or max of the gamble over A).
// Independent of the telescoping route; equal to expect_choquet with
// bel <-> min and plaus <-> max.
Rat mass_min_oracle(const BeliefStructure& s, const Gamble& g, MassExtreme mode);

}  // namespace exlog
