/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/parser.hpp"

#include <cctype>
#include <functional>

#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"

namespace exlog {

namespace {

enum class Tok {
  ident, number, kw_true, kw_false, kw_e, kw_l,
  lparen, rparen, plus, minus, bang, amp, pipe, arrow,
  ge, le, eq, gt, lt, vee, wedge, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

struct Lexer {
  std::string src;
  std::vector<Token> toks;

  explicit Lexer(std::string s) : src(std::move(s)) { run(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t off) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < off && i < src.size(); ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, off, line, col);
  }

  void run() {
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
      char c = src[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        // "p/q" continues the number only when a digit follows the slash
        if (j < n && src[j] == '/' && j + 1 < n &&
            std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
          ++j;
          while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        }
        toks.push_back({Tok::number, src.substr(i, j - i), start});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
        std::string word = src.substr(i, j - i);
        Tok k = word == "true"    ? Tok::kw_true
                : word == "false" ? Tok::kw_false
                : word == "e"     ? Tok::kw_e
                : word == "l"     ? Tok::kw_l
                                  : Tok::ident;
        toks.push_back({k, std::move(word), start});
        i = j;
        continue;
      }
      auto two = [&](char a, char b) { return c == a && i + 1 < n && src[i + 1] == b; };
      if (two('-', '>')) { toks.push_back({Tok::arrow, "->", start}); i += 2; continue; }
      if (two('>', '=')) { toks.push_back({Tok::ge, ">=", start}); i += 2; continue; }
      if (two('<', '=')) { toks.push_back({Tok::le, "<=", start}); i += 2; continue; }
      if (two('\\', '/')) { toks.push_back({Tok::vee, "\\/", start}); i += 2; continue; }
      if (two('/', '\\')) { toks.push_back({Tok::wedge, "/\\", start}); i += 2; continue; }
      switch (c) {
        case '(': toks.push_back({Tok::lparen, "(", start}); break;
        case ')': toks.push_back({Tok::rparen, ")", start}); break;
        case '+': toks.push_back({Tok::plus, "+", start}); break;
        case '-': toks.push_back({Tok::minus, "-", start}); break;
        case '!': toks.push_back({Tok::bang, "!", start}); break;
        case '&': toks.push_back({Tok::amp, "&", start}); break;
        case '|': toks.push_back({Tok::pipe, "|", start}); break;
        case '=': toks.push_back({Tok::eq, "=", start}); break;
        case '>': toks.push_back({Tok::gt, ">", start}); break;
        case '<': toks.push_back({Tok::lt, "<", start}); break;
        default: fail(std::string("unexpected character '") + c + "'", start);
      }
      ++i;
    }
    toks.push_back({Tok::end, "", n});
  }
};

struct Parser {
  Lexer lex;
  std::size_t pos = 0;

  explicit Parser(std::string text) : lex(std::move(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos + ahead;
    return i < lex.toks.size() ? lex.toks[i] : lex.toks.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::end) ++pos;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) lex.fail("expected " + what, peek().offset);
  }
  [[noreturn]] void fail(const std::string& msg) { lex.fail(msg, peek().offset); }

  // ---- propositional formulas: impl > disj > conj > unary ----

  PropPtr p_prop() {
    PropPtr lhs = p_prop_or();
    if (accept(Tok::arrow)) return impl(std::move(lhs), p_prop());
    return lhs;
  }
  PropPtr p_prop_or() {
    PropPtr f = p_prop_and();
    while (accept(Tok::pipe)) f = disj(std::move(f), p_prop_and());
    return f;
  }
  PropPtr p_prop_and() {
    PropPtr f = p_prop_unary();
    while (accept(Tok::amp)) f = conj(std::move(f), p_prop_unary());
    return f;
  }
  PropPtr p_prop_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::bang: next(); return neg(p_prop_unary());
      case Tok::lparen: {
        next();
        PropPtr f = p_prop();
        expect(Tok::rparen, "')'");
        return f;
      }
      case Tok::kw_true: next(); return prop_true();
      case Tok::kw_false: next(); return prop_false();
      case Tok::ident: next(); return prop(t.text);
      default: fail("expected a propositional formula");
    }
  }

  bool starts_prop() const {
    switch (peek().kind) {
      case Tok::bang:
      case Tok::lparen:
      case Tok::kw_true:
      case Tok::kw_false:
      case Tok::ident: return true;
      default: return false;
    }
  }

  // ---- gambles ----

  Rat p_number() {
    const Token& t = peek();
    if (t.kind != Tok::number) fail("expected a number");
    next();
    try {
      return parse_rational(t.text);
    } catch (const Error& e) {
      lex.fail(e.what(), t.offset);
    }
  }

  // gamble := gsum ((\/ | /\) gsum)*   joins expand to atom form eagerly
  Gamble p_gamble(int atom_cap) {
    Gamble g = p_gamble_sum();
    while (peek().kind == Tok::vee || peek().kind == Tok::wedge) {
      JoinMode mode = next().kind == Tok::vee ? JoinMode::max : JoinMode::min;
      Gamble rhs = p_gamble_sum();
      g = gamble_join(g, rhs, mode, atom_cap);
    }
    return g;
  }

  // gsum := ['-'] term (('+'|'-') term)*     term := [number] prop
  // The single token "0" with no formula denotes the constant-0 gamble.
  Gamble p_gamble_sum() {
    Gamble g;
    bool negate = accept(Tok::minus);
    if (peek().kind == Tok::number && peek().text == "0" && !starts_prop_at(1) && !negate) {
      next();
      return g;  // the empty gamble
    }
    g.terms.push_back(p_gamble_term(negate));
    for (;;) {
      if (accept(Tok::plus)) {
        g.terms.push_back(p_gamble_term(false));
      } else if (accept(Tok::minus)) {
        g.terms.push_back(p_gamble_term(true));
      } else {
        break;
      }
    }
    return g;
  }

  bool starts_prop_at(std::size_t ahead) const {
    switch (peek(ahead).kind) {
      case Tok::bang:
      case Tok::lparen:
      case Tok::kw_true:
      case Tok::kw_false:
      case Tok::ident: return true;
      default: return false;
    }
  }

  GambleTerm p_gamble_term(bool negate) {
    Rat coef(1);
    if (peek().kind == Tok::number) coef = p_number();
    if (negate) coef = -coef;
    if (!starts_prop()) fail("expected a formula after the coefficient");
    return {std::move(coef), p_prop()};
  }

  // ---- linear combinations of e(...) / l(...) terms ----

  struct ExpComb {
    std::vector<ExpTerm> terms;
    Rat constant{0};
  };
  struct LikComb {
    std::vector<LikTerm> terms;
    Rat constant{0};
  };

  template <class Comb, class TermParser>
  Comb p_comb(TermParser&& term) {
    Comb comb;
    bool negate = accept(Tok::minus);
    term(comb, negate);
    for (;;) {
      if (accept(Tok::plus)) {
        term(comb, false);
      } else if (accept(Tok::minus)) {
        term(comb, true);
      } else {
        break;
      }
    }
    return comb;
  }

  ExpComb p_exp_comb(int atom_cap) {
    return p_comb<ExpComb>([&](ExpComb& comb, bool negate) {
      Rat coef(1);
      bool saw_number = false;
      if (peek().kind == Tok::number) {
        coef = p_number();
        saw_number = true;
      }
      if (negate) coef = -coef;
      if (accept(Tok::kw_e)) {
        expect(Tok::lparen, "'(' after e");
        Gamble g = p_gamble(atom_cap);
        expect(Tok::rparen, "')'");
        comb.terms.push_back({std::move(coef), std::move(g)});
      } else if (saw_number) {
        comb.constant += coef;
      } else {
        fail("expected an e(...) term or a number");
      }
    });
  }

  LikComb p_lik_comb() {
    return p_comb<LikComb>([&](LikComb& comb, bool negate) {
      Rat coef(1);
      bool saw_number = false;
      if (peek().kind == Tok::number) {
        coef = p_number();
        saw_number = true;
      }
      if (negate) coef = -coef;
      if (accept(Tok::kw_l)) {
        expect(Tok::lparen, "'(' after l");
        PropPtr f = p_prop();
        expect(Tok::rparen, "')'");
        comb.terms.push_back({std::move(coef), std::move(f)});
      } else if (saw_number) {
        comb.constant += coef;
      } else {
        fail("expected an l(...) term or a number");
      }
    });
  }

  std::string p_relop() {
    switch (peek().kind) {
      case Tok::ge: next(); return ">=";
      case Tok::le: next(); return "<=";
      case Tok::eq: next(); return "=";
      case Tok::gt: next(); return ">";
      case Tok::lt: next(); return "<";
      default: fail("expected a comparison operator");
    }
  }

  // ---- boolean levels shared by the three inequality languages ----
  //
  // A leading "(" can open either a parenthesized boolean formula or (for
  // gamble inequalities) a parenthesized formula inside a gamble term, so
  // the boolean reading is tried first and rolled back on failure.

  template <class Basic, class BasicParser>
  BoolPtr<Basic> p_bool(BasicParser&& basic) {
    BoolPtr<Basic> lhs = p_bool_or<Basic>(basic);
    if (accept(Tok::arrow)) return mk_impl(std::move(lhs), p_bool<Basic>(basic));
    return lhs;
  }
  template <class Basic, class BasicParser>
  BoolPtr<Basic> p_bool_or(BasicParser&& basic) {
    BoolPtr<Basic> f = p_bool_and<Basic>(basic);
    while (accept(Tok::pipe)) f = mk_disj(std::move(f), p_bool_and<Basic>(basic));
    return f;
  }
  template <class Basic, class BasicParser>
  BoolPtr<Basic> p_bool_and(BasicParser&& basic) {
    BoolPtr<Basic> f = p_bool_unary<Basic>(basic);
    while (accept(Tok::amp)) f = mk_conj(std::move(f), p_bool_unary<Basic>(basic));
    return f;
  }
  template <class Basic, class BasicParser>
  BoolPtr<Basic> p_bool_unary(BasicParser&& basic) {
    if (accept(Tok::bang)) return mk_neg(p_bool_unary<Basic>(basic));
    if (peek().kind == Tok::lparen) {
      std::size_t save = pos;
      next();
      try {
        BoolPtr<Basic> f = p_bool<Basic>(basic);
        expect(Tok::rparen, "')'");
        return f;
      } catch (const ParseError&) {
        pos = save;  // fall through to a basic that itself starts with '('
      }
    }
    return basic();
  }

 public:
  ExpPtr exp_formula(int atom_cap) {
    auto basic = [&]() -> ExpPtr {
      ExpComb lhs = p_exp_comb(atom_cap);
      std::string rel = p_relop();
      ExpComb rhs = p_exp_comb(atom_cap);
      return exp_cmp(std::move(lhs.terms), lhs.constant, std::move(rhs.terms), rhs.constant, rel);
    };
    ExpPtr f = p_bool<ExpBasic>(basic);
    expect(Tok::end, "end of input");
    return f;
  }

  LikPtr lik_formula() {
    auto basic = [&]() -> LikPtr {
      LikComb lhs = p_lik_comb();
      std::string rel = p_relop();
      LikComb rhs = p_lik_comb();
      return lik_cmp(std::move(lhs.terms), lhs.constant, std::move(rhs.terms), rhs.constant, rel);
    };
    LikPtr f = p_bool<LikBasic>(basic);
    expect(Tok::end, "end of input");
    return f;
  }

  GambleIneqPtr gamble_ineq_formula(int atom_cap) {
    auto basic = [&]() -> GambleIneqPtr {
      Gamble lhs = p_gamble(atom_cap);
      std::string rel = p_relop();
      Gamble rhs = p_gamble(atom_cap);
      return gamble_cmp(std::move(lhs), std::move(rhs), rel);
    };
    GambleIneqPtr f = p_bool<GambleIneq>(basic);
    expect(Tok::end, "end of input");
    return f;
  }

  PropPtr prop_formula() {
    PropPtr f = p_prop();
    expect(Tok::end, "end of input");
    return f;
  }

  Gamble gamble(int atom_cap) {
    Gamble g = p_gamble(atom_cap);
    expect(Tok::end, "end of input");
    return g;
  }
};

}  // namespace

PropPtr parse_prop(const std::string& text) { return Parser(text).prop_formula(); }

Gamble parse_gamble(const std::string& text) { return Parser(text).gamble(kDefaultAtomCap); }

ExpPtr parse_expectation(const std::string& text) {
  return Parser(text).exp_formula(kDefaultAtomCap);
}

LikPtr parse_likelihood(const std::string& text) { return Parser(text).lik_formula(); }

GambleIneqPtr parse_gamble_ineq(const std::string& text) {
  return Parser(text).gamble_ineq_formula(kDefaultAtomCap);
}

AnyFormula parse_formula(const std::string& text, Lang lang) {
  switch (lang) {
    case Lang::prop: return parse_prop(text);
    case Lang::gamble: return parse_gamble(text);
    case Lang::expectation: return parse_expectation(text);
    case Lang::likelihood: return parse_likelihood(text);
    case Lang::gamble_ineq: return parse_gamble_ineq(text);
  }
  throw Error("unknown language");
}

Lang detect_lang(const std::string& text) {
  Lexer lex(text);
  bool has_e = false, has_l = false;
  for (const auto& t : lex.toks) {
    if (t.kind == Tok::kw_e) has_e = true;
    if (t.kind == Tok::kw_l) has_l = true;
  }
  if (has_e && has_l) throw Error("formula mixes e(...) and l(...) terms");
  if (has_e) return Lang::expectation;
  if (has_l) return Lang::likelihood;
  return Lang::gamble_ineq;
}

}  // namespace exlog
