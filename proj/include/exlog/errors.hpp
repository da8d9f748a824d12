/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exlog {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in formula text. Offsets are 0-based
// character positions; line/column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset, int line, int col)
      : Error(msg + " at offset " + std::to_string(offset) + " (line " +
              std::to_string(line) + ", column " + std::to_string(col) + ")"),
        offset(offset), line(line), col(col) {}

  std::size_t offset;
  int line;
  int col;
};

// Document does not match the structure/proof schema.
struct SchemaError : Error {
  using Error::Error;
};

// A structure violates an invariant of its kind.
struct ValidationError : Error {
  using Error::Error;
};

// A query would enumerate more atoms than the configured cap allows.
struct AtomCapError : Error {
  using Error::Error;
};

// A decision-procedure budget was exhausted before a verdict was reached.
struct BudgetError : Error {
  using Error::Error;
};

// Operation applied to a structure kind or language that does not support it.
struct KindError : Error {
  using Error::Error;
};

}  // namespace exlog
