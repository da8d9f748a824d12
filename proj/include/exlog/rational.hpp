/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <string>

namespace exlog {

// Exact rational scalar used everywhere a verdict depends on a number.
// GMP keeps values canonical (reduced, positive denominator) under
// arithmetic; values built from strings are canonicalized on parse.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after reduction). Throws Error on
// malformed input or a zero denominator. No float syntax is accepted.
Rat parse_rational(const std::string& text);

// Reduced spelling: "3/2", "-1", "0".
std::string rat_string(const Rat& r);

}  // namespace exlog
