/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>

#include "exlog/formula.hpp"

namespace exlog {

/* Recursive-descent parsers for the published grammar (docs/grammar.md).
 * Abbreviations (<=, <, =, >, "false", gamble \/ and /\) are expanded
 * during parsing, so the returned trees contain core connectives only.
 * Errors raise ParseError with offset, line and column.
 */

PropPtr parse_prop(const std::string& text);
Gamble parse_gamble(const std::string& text);
ExpPtr parse_expectation(const std::string& text);
LikPtr parse_likelihood(const std::string& text);
GambleIneqPtr parse_gamble_ineq(const std::string& text);

AnyFormula parse_formula(const std::string& text, Lang lang);

// Guesses the language of an inequality formula from its tokens: e(...)
// means expectation, l(...) likelihood, neither means gamble-inequality.
Lang detect_lang(const std::string& text);

}  // namespace exlog
