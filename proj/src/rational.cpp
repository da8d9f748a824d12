/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/rational.hpp"

#include <cctype>

#include "exlog/errors.hpp"

namespace exlog {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error("malformed rational '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw Error("rational with zero denominator '" + text + "'");
  Rat r(mpz_class(num), d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string rat_string(const Rat& r) { return r.get_str(); }

}  // namespace exlog
