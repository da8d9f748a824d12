/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"
#include "exlog/parser.hpp"
#include "exlog/printer.hpp"
#include "support/generators.hpp"

using namespace exlog;

TEST_CASE("rationals parse reduced and reject zero denominators") {
  CHECK(rat_string(parse_rational("6/4")) == "3/2");
  CHECK(rat_string(parse_rational("-6/4")) == "-3/2");
  CHECK(rat_string(parse_rational("0")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("expectation basics parse with explicit structure") {
  ExpPtr f = parse_expectation("2 e(1 p + 3 q) >= 1");
  REQUIRE(f->kind == BoolKind::basic);
  const ExpBasic& b = f->atom;
  REQUIRE(b.terms.size() == 1);
  CHECK(b.terms[0].coef == 2);
  CHECK(b.terms[0].gamble.terms.size() == 2);
  CHECK(b.rhs == 1);
}

TEST_CASE("strict comparison expands to a negated core inequality") {
  ExpPtr f = parse_expectation("e(p) < 1");
  REQUIRE(f->kind == BoolKind::neg);
  REQUIRE(f->lhs->kind == BoolKind::basic);
  const ExpBasic& b = f->lhs->atom;
  REQUIRE(b.terms.size() == 1);
  CHECK(b.terms[0].coef == 1);
  CHECK(b.rhs == 1);
  CHECK(to_text(f) == "!(1 e(1 p) >= 1)");
}

TEST_CASE("equality expands to both directions") {
  ExpPtr f = parse_expectation("e(p) + e(!p) = 1");
  REQUIRE(f->kind == BoolKind::conj);
  CHECK(f->lhs->kind == BoolKind::basic);
  CHECK(f->rhs->kind == BoolKind::basic);
  CHECK(f->lhs->atom.rhs == 1);
  CHECK(f->rhs->atom.rhs == -1);
}

TEST_CASE("less-or-equal negates coefficients") {
  // "a1 t1 <= b" abbreviates "-a1 t1 >= -b"
  ExpPtr f = parse_expectation("2 e(p) <= 3");
  REQUIRE(f->kind == BoolKind::basic);
  CHECK(f->atom.terms[0].coef == -2);
  CHECK(f->atom.rhs == -3);
}

TEST_CASE("terms may appear on both sides") {
  ExpPtr a = parse_expectation("e(p) >= e(q)");
  REQUIRE(a->kind == BoolKind::basic);
  REQUIRE(a->atom.terms.size() == 2);
  CHECK(a->atom.terms[0].coef == 1);
  CHECK(a->atom.terms[1].coef == -1);
  CHECK(a->atom.rhs == 0);

  ExpPtr b = parse_expectation("e(p) + 1/2 >= e(q) - 1");
  CHECK(b->atom.rhs == Rat(-3, 2));
}

TEST_CASE("syntax errors carry offsets") {
  try {
    parse_expectation("e(p");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
    CHECK(e.line == 1);
    CHECK(e.col == 4);
  }
  CHECK_THROWS_AS(parse_expectation("e(1/0 p) >= 0"), ParseError);
  CHECK_THROWS_AS(parse_prop("e"), ParseError);  // e and l are reserved
}

TEST_CASE("canonical printing spells out coefficients") {
  CHECK(to_text(parse_expectation("e(p) >= 0")) == "1 e(1 p) >= 0");
  CHECK(to_text(parse_gamble("p + 2 q&r")) == "1 p + 2 (q&r)");
  CHECK(to_text(parse_gamble("0")) == "0");
  CHECK(to_text(parse_prop("!true")) == "false");
  CHECK(to_text(parse_prop("p -> q -> r")) == "p -> q -> r");
  CHECK(to_text(parse_prop("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(to_text(parse_expectation("6/4 e(p) >= 2/4")) == "3/2 e(1 p) >= 1/2");
}

TEST_CASE("gamble joins expand to atom form at parse time") {
  Gamble g = parse_gamble("1 p \\/ 1 q");
  // four atoms over {p, q}, weights 0/1/1/1
  REQUIRE(g.terms.size() == 4);
  Gamble direct = parse_gamble("1 (p|q)");
  for (const auto& t : g.terms) {
    std::set<std::string> props;
    collect_props(t.formula, props);
  }
  // pointwise equal to the indicator of p|q
  for (int mask = 0; mask < 4; ++mask) {
    std::set<std::string> val;
    if (mask & 1) val.insert("p");
    if (mask & 2) val.insert("q");
    CHECK(gamble_value(g, val) == gamble_value(direct, val));
  }
}

TEST_CASE("likelihood formulas parse and embed into expectation formulas") {
  LikPtr f = parse_likelihood("2 l(p) + 6 l(q) >= 1");
  REQUIRE(f->kind == BoolKind::basic);
  CHECK(f->atom.terms.size() == 2);
  ExpPtr e = to_expectation(f);
  CHECK(to_text(e) == "2 e(1 p) + 6 e(1 q) >= 1");
}

TEST_CASE("gamble inequalities parse with parenthesized formulas and boolean structure") {
  GambleIneqPtr f = parse_gamble_ineq("(p&q) >= 1 q & !(1 p >= 1 q)");
  CHECK(f->kind == BoolKind::conj);
  GambleIneqPtr g = parse_gamble_ineq("p = p&q + p&!q");
  CHECK(g->kind == BoolKind::conj);  // equality of gambles
}

TEST_CASE("round trip: parse after print is the identity on random trees") {
  testgen::Rng rng(20260810);
  std::vector<std::string> props = {"p", "q", "r"};
  for (int i = 0; i < 1000; ++i) {
    switch (i % 3) {
      case 0: {
        Gamble g = testgen::gamble(rng, props, 3, 2);
        CHECK(equal(g, parse_gamble(to_text(g))));
        break;
      }
      case 1: {
        // boolean tree over random basics
        std::vector<ExpPtr> pool;
        for (int k = 0; k < 3; ++k) {
          ExpBasic b;
          int terms = rng.pick(1, 2);
          for (int t = 0; t < terms; ++t)
            b.terms.push_back({testgen::rat(rng), testgen::gamble(rng, props, 2, 1)});
          b.rhs = testgen::rat(rng);
          pool.push_back(mk_basic(std::move(b)));
        }
        ExpPtr f = pool[0];
        for (std::size_t k = 1; k < pool.size(); ++k) {
          switch (rng.pick(0, 3)) {
            case 0: f = mk_conj(f, pool[k]); break;
            case 1: f = mk_disj(f, pool[k]); break;
            case 2: f = mk_impl(f, pool[k]); break;
            default: f = mk_neg(f); break;
          }
        }
        CHECK(equal(f, parse_expectation(to_text(f))));
        break;
      }
      default: {
        PropPtr f = testgen::prop_formula(rng, props, 4);
        CHECK(equal(f, parse_prop(to_text(f))));
        break;
      }
    }
  }
}

TEST_CASE("print after parse is idempotent canonicalization") {
  for (const char* text : {
           "e(p)>=0",
           "  2 e( 1 p + 3 q ) >= 1 ",
           "e(p) < 1",
           "e(p) = e(q)",
           "(e(p) >= e(q)) -> (e(p|q) = e(p))",
           "1 p \\/ 1 q >= 1 p /\\ 1 q",
       }) {
    Lang lang = detect_lang(text);
    std::string once = to_text(parse_formula(text, lang));
    std::string twice = to_text(parse_formula(once, lang));
    CHECK(once == twice);
  }
}

TEST_CASE("language detection") {
  CHECK(detect_lang("e(p) >= 0") == Lang::expectation);
  CHECK(detect_lang("l(p) >= 0") == Lang::likelihood);
  CHECK(detect_lang("1 p >= 1 q") == Lang::gamble_ineq);
  CHECK_THROWS_AS(detect_lang("e(p) + l(q) >= 0"), Error);
}
