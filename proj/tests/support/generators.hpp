/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <random>
#include <string>
#include <vector>

#include "exlog/formula.hpp"
#include "exlog/structures.hpp"

namespace exlog::testgen {

/* Deterministic random generators shared by the unit and acceptance
 * suites. All rationals come from small grids so equalities stay exact.
 */

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  int pick(int lo, int hi) {  // inclusive
    std::uniform_int_distribution<int> d(lo, hi);
    return d(engine);
  }
  bool flip() { return pick(0, 1) == 1; }
};

// rational with numerator in [-num..num] and denominator in {1..den}
Rat rat(Rng& rng, int num = 4, int den = 4);
// nonnegative rational
Rat nonneg_rat(Rng& rng, int num = 4, int den = 4);

PropPtr prop_formula(Rng& rng, const std::vector<std::string>& props, int depth);
Gamble gamble(Rng& rng, const std::vector<std::string>& props, int max_terms = 3, int depth = 1);

// worlds w1..wn with random valuations over the given propositions
WorldSet worlds(Rng& rng, int n, const std::vector<std::string>& props);

ProbabilityStructure probability(Rng& rng, int n, const std::vector<std::string>& props);
CredalStructure credal(Rng& rng, int n, int measures, const std::vector<std::string>& props);
BeliefStructure belief(Rng& rng, int n, const std::vector<std::string>& props, int focal = 3);
PossibilityStructure possibility(Rng& rng, int n, const std::vector<std::string>& props);

// n worlds, world i true exactly on marker proposition m<i>, so a gamble
// sum_i v_i m<i> takes value v_i at world i
struct MarkedWorlds {
  WorldSet worlds;
  std::vector<std::string> markers;
};
MarkedWorlds marked_worlds(int n);
Gamble marked_gamble(const MarkedWorlds& mw, const std::vector<Rat>& values);

// all ways to split `units` grid steps of size 1/denom over k cells
std::vector<std::vector<Rat>> grid_partitions(int units, int cells, int denom);

}  // namespace exlog::testgen
