/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "exlog/rational.hpp"

namespace exlog {

/* The five structure kinds a formula can be checked against. Worlds carry
 * an id and the set of propositions true at the world; ids are unique but
 * valuations may repeat (two worlds with equal valuations are distinct
 * sample points). Structures are immutable after load.
 */

struct World {
  std::string id;
  std::set<std::string> props;  // true propositions; everything else is false
};

struct WorldSet {
  std::vector<World> worlds;  // nonempty, ids unique

  const World* find(const std::string& id) const;
  std::vector<std::string> ids() const;
};

struct PlainStructure {
  WorldSet worlds;
};

struct ProbabilityStructure {
  WorldSet worlds;
  std::map<std::string, Rat> mu;  // one entry per world, >= 0, sums to 1
};

struct CredalStructure {
  WorldSet worlds;
  std::vector<std::map<std::string, Rat>> measures;  // nonempty, each a probability
};

struct FocalMass {
  std::vector<std::string> set;  // nonempty, sorted, unique world ids
  Rat m;
};

struct BeliefStructure {
  WorldSet worlds;
  std::vector<FocalMass> mass;  // masses >= 0, sum to 1, distinct focal sets
};

struct PossibilityStructure {
  WorldSet worlds;
  std::map<std::string, Rat> poss;  // per world in [0,1], max equals 1
};

using Structure = std::variant<PlainStructure, ProbabilityStructure, CredalStructure,
                               BeliefStructure, PossibilityStructure>;

enum class StructKind { plain, prob, credal, belief, poss };

StructKind kind_of(const Structure& s);
const WorldSet& worlds_of(const Structure& s);
std::string kind_name(StructKind k);

// Loads a structure document (JSON text; see docs/formats.md). Shape
// problems raise SchemaError; invariant violations raise ValidationError
// naming the violated invariant. Rationals must be exact "p/q" strings.
Structure load_structure(const std::string& document);

// Serializes back to the document format; load_structure(save_structure(s))
// reproduces s.
std::string save_structure(const Structure& s);

// Returns the list of violated invariants (empty means ok). Only invariant
// violations are reported here; malformed documents never construct a
// Structure in the first place.
std::vector<std::string> validate(const Structure& s);

enum class WeightMode { point, lower, upper };

// Event weight of a set of world ids:
//   prob            point            mu(U)
//   credal          lower/upper      min/max over the listed measures
//   belief          point/lower Bel  upper Plaus(U) = 1 - Bel(complement)
//   poss            point/upper      max poss over U (0 on the empty set)
// Unknown ids or a mode the kind does not support raise KindError.
Rat event_weight(const Structure& s, const std::set<std::string>& event, WeightMode mode);

// Bel(U) and Plaus(U) for a belief structure, by world ids.
Rat belief_of(const BeliefStructure& s, const std::set<std::string>& event);
Rat plausibility_of(const BeliefStructure& s, const std::set<std::string>& event);

}  // namespace exlog
