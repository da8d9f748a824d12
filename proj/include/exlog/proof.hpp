/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exlog/formula.hpp"

namespace exlog {

/* Line-by-line derivation checking for the five axiom systems:
 *
 *   axprob  Taut MP Ineq E1 E2 E3 E4 E5        (expectation formulas)
 *   axlp    Taut MP Ineq E5 E6 E7 E8           (expectation formulas)
 *   axbel   Taut MP Ineq E5 E7 E8 E9 E10       (expectation formulas)
 *   axposs  Taut MP Ineq E5 E7 E8 E10 E11      (expectation formulas)
 *   axg     Taut MP Ineq G1 G2                 (gamble inequalities)
 *
 * Schema matching is syntactic up to reduced-rational spelling: a line
 * must have exactly the shape the abbreviation expansion of the schema
 * produces (no implicit reordering of terms). Side conditions are
 * discharged algorithmically: tautologies by truth table, inequality
 * validity by LP on the negation of each clause, gamble inequalities by
 * the atom analysis.
 */

struct Justification {
  enum class Kind { axiom, mp } kind = Kind::axiom;
  std::string axiom;  // kind == axiom
  int from = 0, via = 0;  // kind == mp, 1-based line numbers: via == (from -> this)
};

struct ProofLine {
  std::string formula_text;
  std::string by_text;
  std::optional<AnyFormula> formula;  // unset if the text failed to parse
  std::string parse_error;            // set iff formula is unset
};

struct Derivation {
  std::string system;  // axprob | axlp | axbel | axposs | axg
  std::vector<ProofLine> lines;
};

// Reads a derivation document (JSON text; see docs/formats.md). Document
// shape problems raise SchemaError; unparsable line formulas are kept and
// rejected by check_proof with the parse message.
Derivation load_derivation(const std::string& document);

struct ProofOutcome {
  bool accepted = false;
  int line = 0;        // 1-based line of the first failure; 0 when accepted
  std::string reason;  // machine-checkable explanation for the failure
};

ProofOutcome check_proof(const Derivation& d);

struct AxiomMatch {
  bool ok = false;
  std::string reason;  // set when !ok
};

// Does f instantiate the axiom schema (side conditions included) within
// the given system? The axiom must belong to the system.
AxiomMatch is_axiom_instance(const AnyFormula& f, const std::string& axiom,
                             const std::string& system);

// Axioms usable in a system (Taut/Ineq included; MP is the rule).
std::vector<std::string> system_axioms(const std::string& system);

}  // namespace exlog
