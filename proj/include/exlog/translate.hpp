/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>

#include "exlog/decide.hpp"
#include "exlog/formula.hpp"

namespace exlog {

/* Rewriting of expectation formulas into likelihood formulas of equal
 * meaning. Under probability semantics e(.) distributes linearly over the
 * gamble, which keeps the output linear in the input. Under belief and
 * possibility semantics each e(.) is expanded through its threshold
 * telescoping: the value of a gamble below, between and above its atom
 * values pins e(g) to an affine combination of the likelihoods of the
 * threshold events, each emitted as a minimal disjunction of atom
 * conjunctions. No translation exists for the credal semantics, which is
 * strictly more expressive than likelihood; requesting it is an error.
 */

struct TranslationReport {
  LikPtr output;
  std::size_t input_size = 0;   // syntax-tree node count
  std::size_t output_size = 0;  // syntax-tree node count
  double blowup = 0.0;          // output_size / input_size
};

TranslationReport translate(const ExpPtr& f, Semantics sem, int atom_cap = kDefaultAtomCap);

}  // namespace exlog
