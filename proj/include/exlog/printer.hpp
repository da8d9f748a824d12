/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>

#include "exlog/formula.hpp"

namespace exlog {

/* Canonical printers. Coefficients are always explicit ("1 e(1 p) >= 0"),
 * rationals are reduced, neg(true) prints as "false", and only the core
 * connectives appear (the parser's abbreviation expansion is not undone).
 * parse(print(f)) is the identity on syntax trees.
 */

std::string to_text(const PropPtr& f);
std::string to_text(const Gamble& g);
std::string to_text(const ExpPtr& f);
std::string to_text(const LikPtr& f);
std::string to_text(const GambleIneqPtr& f);
std::string to_text(const ExpBasic& b);
std::string to_text(const LikBasic& b);
std::string to_text(const GambleIneq& b);
std::string to_text(const AnyFormula& f);

}  // namespace exlog
