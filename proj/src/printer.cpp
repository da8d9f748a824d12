/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/printer.hpp"

#include <sstream>

namespace exlog {

namespace {

// precedence: impl < disj < conj < neg < atoms
int prec(PropKind k) {
  switch (k) {
    case PropKind::impl: return 1;
    case PropKind::disj: return 2;
    case PropKind::conj: return 3;
    case PropKind::neg: return 4;
    default: return 5;
  }
}

void print_prop(std::ostream& os, const PropPtr& f, int parent, bool right_of_same);

void print_prop_child(std::ostream& os, const PropPtr& f, int parent, bool right_of_same) {
  int p = prec(f->kind);
  bool parens = p < parent || (p == parent && right_of_same);
  if (parens) os << '(';
  print_prop(os, f, 0, false);
  if (parens) os << ')';
}

void print_prop(std::ostream& os, const PropPtr& f, int, bool) {
  switch (f->kind) {
    case PropKind::prop: os << f->name; return;
    case PropKind::truth: os << "true"; return;
    case PropKind::neg:
      if (is_false(f)) {
        os << "false";
        return;
      }
      os << '!';
      print_prop_child(os, f->lhs, prec(PropKind::neg), false);
      return;
    case PropKind::conj:
      // left-associative: the right child needs parens at equal precedence
      print_prop_child(os, f->lhs, prec(PropKind::conj), false);
      os << '&';
      print_prop_child(os, f->rhs, prec(PropKind::conj), true);
      return;
    case PropKind::disj:
      print_prop_child(os, f->lhs, prec(PropKind::disj), false);
      os << '|';
      print_prop_child(os, f->rhs, prec(PropKind::disj), true);
      return;
    case PropKind::impl:
      // right-associative: the left child needs parens at equal precedence
      print_prop_child(os, f->lhs, prec(PropKind::impl) + 1, false);
      os << " -> ";
      print_prop_child(os, f->rhs, prec(PropKind::impl), false);
      return;
  }
}

bool atomic_term_formula(const PropPtr& f) {
  return f->kind == PropKind::prop || f->kind == PropKind::truth || is_false(f);
}

void print_term_formula(std::ostream& os, const PropPtr& f) {
  if (atomic_term_formula(f)) {
    print_prop(os, f, 0, false);
  } else {
    os << '(';
    print_prop(os, f, 0, false);
    os << ')';
  }
}

// Shared "c1 X1 + c2 X2 - c3 X3" layout for gambles and term sums.
template <class Term, class PrintBody>
void print_linear(std::ostream& os, const std::vector<Term>& terms, PrintBody&& body) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Rat& c = terms[i].coef;
    if (i == 0) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << rat_string(abs(c)) << ' ';
    body(os, terms[i]);
  }
}

void print_gamble(std::ostream& os, const Gamble& g) {
  if (g.terms.empty()) {
    os << '0';
    return;
  }
  print_linear(os, g.terms,
               [](std::ostream& o, const GambleTerm& t) { print_term_formula(o, t.formula); });
}

template <class Basic, class PrintBasic>
void print_bool(std::ostream& os, const BoolPtr<Basic>& f, PrintBasic&& pb) {
  switch (f->kind) {
    case BoolKind::basic: pb(os, f->atom); return;
    case BoolKind::neg:
      os << '!';
      if (f->lhs->kind == BoolKind::neg) {
        print_bool(os, f->lhs, pb);
      } else {
        os << '(';
        print_bool(os, f->lhs, pb);
        os << ')';
      }
      return;
    default: {
      const char* op = f->kind == BoolKind::conj ? " & " : f->kind == BoolKind::disj ? " | " : " -> ";
      auto child = [&](const BoolPtr<Basic>& c, bool needs_parens) {
        if (needs_parens) os << '(';
        print_bool(os, c, pb);
        if (needs_parens) os << ')';
      };
      // basics never need parens (their grammar cannot swallow a
      // boolean operator); boolean children of a different or equal
      // binder always get them for an unambiguous reparse
      auto binary = [&](const BoolPtr<Basic>& c, bool same_ok) {
        bool parens = !(c->kind == BoolKind::basic || c->kind == BoolKind::neg ||
                        (same_ok && c->kind == f->kind));
        child(c, parens);
      };
      binary(f->lhs, f->kind != BoolKind::impl);
      os << op;
      binary(f->rhs, f->kind == BoolKind::impl);
      return;
    }
  }
}

void print_exp_basic(std::ostream& os, const ExpBasic& b) {
  print_linear(os, b.terms, [](std::ostream& o, const ExpTerm& t) {
    o << "e(";
    print_gamble(o, t.gamble);
    o << ')';
  });
  os << " >= " << rat_string(b.rhs);
}

void print_lik_basic(std::ostream& os, const LikBasic& b) {
  print_linear(os, b.terms, [](std::ostream& o, const LikTerm& t) {
    o << "l(";
    print_prop(o, t.formula, 0, false);
    o << ')';
  });
  os << " >= " << rat_string(b.rhs);
}

void print_gamble_ineq(std::ostream& os, const GambleIneq& b) {
  print_gamble(os, b.lhs);
  os << " >= ";
  print_gamble(os, b.rhs);
}

}  // namespace

std::string to_text(const PropPtr& f) {
  std::ostringstream os;
  print_prop(os, f, 0, false);
  return os.str();
}

std::string to_text(const Gamble& g) {
  std::ostringstream os;
  print_gamble(os, g);
  return os.str();
}

std::string to_text(const ExpPtr& f) {
  std::ostringstream os;
  print_bool(os, f, print_exp_basic);
  return os.str();
}

std::string to_text(const LikPtr& f) {
  std::ostringstream os;
  print_bool(os, f, print_lik_basic);
  return os.str();
}

std::string to_text(const GambleIneqPtr& f) {
  std::ostringstream os;
  print_bool(os, f, print_gamble_ineq);
  return os.str();
}

std::string to_text(const ExpBasic& b) {
  std::ostringstream os;
  print_exp_basic(os, b);
  return os.str();
}

std::string to_text(const LikBasic& b) {
  std::ostringstream os;
  print_lik_basic(os, b);
  return os.str();
}

std::string to_text(const GambleIneq& b) {
  std::ostringstream os;
  print_gamble_ineq(os, b);
  return os.str();
}

std::string to_text(const AnyFormula& f) {
  return std::visit([](const auto& x) { return to_text(x); }, f);
}

}  // namespace exlog
