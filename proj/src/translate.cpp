/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/translate.hpp"

#include <algorithm>

#include "exlog/errors.hpp"
#include "exlog/gamble.hpp"

namespace exlog {

namespace {

LikBasic pad_if_empty(LikBasic b) {
  // a basic likelihood formula needs at least one term; 0*l(true) keeps a
  // degenerate inequality well-formed without changing its meaning
  if (b.terms.empty()) b.terms.push_back({Rat(0), prop_true()});
  return b;
}

LikPtr translate_prob_basic(const ExpBasic& b) {
  LikBasic out;
  out.rhs = b.rhs;
  for (const auto& t : b.terms)
    for (const auto& g : t.gamble.terms) out.terms.push_back({t.coef * g.coef, g.formula});
  return mk_basic(pad_if_empty(std::move(out)));
}

// e(g) = x1 + sum_l (x_{l+1} - x_l) * l({g > x_l}); the threshold events
// are exact unions of atoms, emitted as minimal disjunctions. Constant
// parts move to the right-hand side.
LikPtr translate_choquet_basic(const ExpBasic& b, int atom_cap) {
  LikBasic out;
  out.rhs = b.rhs;
  for (const auto& t : b.terms) {
    CanonicalGamble c = canonical_form(t.gamble, atom_cap);
    std::vector<Rat> sorted = c.weights;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.rhs -= t.coef * sorted.front();
    for (std::size_t l = 0; l + 1 < sorted.size(); ++l) {
      std::vector<AtomMask> above;
      for (AtomMask a = 0; a < c.weights.size(); ++a)
        if (c.weights[a] > sorted[l]) above.push_back(a);
      out.terms.push_back(
          {t.coef * (sorted[l + 1] - sorted[l]), minimal_dnf(c.space, above)});
    }
  }
  return mk_basic(pad_if_empty(std::move(out)));
}

}  // namespace

TranslationReport translate(const ExpPtr& f, Semantics sem, int atom_cap) {
  if (sem == Semantics::lp)
    throw KindError(
        "no likelihood translation exists for the credal semantics; expectation "
        "formulas are strictly more expressive there");

  TranslationReport report;
  report.input_size = node_count(f);
  if (sem == Semantics::prob) {
    report.output = map_basics<ExpBasic, LikBasic>(
        f, [](const ExpBasic& b) { return translate_prob_basic(b); });
  } else {
    report.output = map_basics<ExpBasic, LikBasic>(
        f, [&](const ExpBasic& b) { return translate_choquet_basic(b, atom_cap); });
  }
  report.output_size = node_count(report.output);
  report.blowup = static_cast<double>(report.output_size) / static_cast<double>(report.input_size);
  if (sem == Semantics::prob && report.output_size > 2 * report.input_size)
    throw Error("internal: probability translation must stay linear in the input");
  return report;
}

}  // namespace exlog
