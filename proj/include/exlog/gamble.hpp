/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exlog/formula.hpp"
#include "exlog/structures.hpp"

namespace exlog {

/* Gambles as functions of truth assignments. An atom is a complete
 * assignment to an ordered proposition list, encoded as a bit mask
 * (bit i set means props[i] is true); the atoms of a space are mutually
 * exclusive and exhaustive by construction. Enumerations are guarded by
 * an atom cap because the canonical decomposition is exponential in the
 * number of propositions.
 */

inline constexpr int kDefaultAtomCap = 16;

struct AtomSpace {
  std::vector<std::string> props;  // sorted, unique

  std::size_t size() const { return std::size_t(1) << props.size(); }
};

using AtomMask = std::uint32_t;

AtomSpace atom_space_of(const Gamble& g);
AtomSpace atom_space_of(const std::set<std::string>& props);

// The set of true propositions an atom assigns.
std::set<std::string> atom_assignment(const AtomSpace& space, AtomMask atom);

bool atom_satisfies(const AtomSpace& space, AtomMask atom, const PropPtr& f);

// Complete conjunction of literals, e.g. p & !q for the atom {p}.
PropPtr atom_formula(const AtomSpace& space, AtomMask atom);

// Value of a gamble under an explicit assignment. Throws Error if some
// proposition of the gamble is unassigned.
Rat gamble_value(const Gamble& g, const std::map<std::string, bool>& atom);

// Value of a gamble at a world valuation (absent propositions are false).
Rat gamble_value(const Gamble& g, const std::set<std::string>& true_props);

// Per-atom weights of a gamble: weights[atom] equals the gamble's value
// at that atom, for every atom of the space. Zero weights are retained.
struct CanonicalGamble {
  AtomSpace space;
  std::vector<Rat> weights;  // indexed by AtomMask, size space.size()
};

CanonicalGamble canonical_form(const Gamble& g, int atom_cap = kDefaultAtomCap);
CanonicalGamble canonical_form_over(const Gamble& g, const AtomSpace& space,
                                    int atom_cap = kDefaultAtomCap);

// The gamble "sum over atoms of weight * atom_formula", one term per atom.
Gamble from_canonical(const CanonicalGamble& c);

enum class JoinMode { max, min };

// Pointwise max/min of two gambles over the union of their propositions,
// expressed over the mutually exclusive atom formulas.
Gamble gamble_join(const Gamble& a, const Gamble& b, JoinMode mode,
                   int atom_cap = kDefaultAtomCap);

// M |= g1 >= g2 iff the comparison holds pointwise at every world.
bool gamble_holds(const WorldSet& worlds, const GambleIneqPtr& f);

// Satisfiability and validity of a gamble-inequality formula over plain
// structures. Returned structures contain only the witness atoms (worlds
// deduplicated) and are re-verified with gamble_holds before returning.
struct GambleDecision {
  bool valid = false;
  std::optional<PlainStructure> countermodel;  // set iff not valid
  bool satisfiable = false;
  std::optional<PlainStructure> witness;  // set iff satisfiable
};

GambleDecision gamble_formula_check(const GambleIneqPtr& f, int atom_cap = kDefaultAtomCap);

// Smallest-looking disjunction of conjunctions covering exactly the given
// atoms (prime implicants, greedy cover). Returns true for all atoms of
// the space and false for the empty set.
PropPtr minimal_dnf(const AtomSpace& space, const std::vector<AtomMask>& atoms);

}  // namespace exlog
