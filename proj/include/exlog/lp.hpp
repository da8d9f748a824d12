/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exlog/rational.hpp"

namespace exlog {

/* Exact rational linear programming. Dense two-phase primal simplex with
 * Bland's rule, so identical inputs always produce identical witnesses
 * and cycling cannot occur. No floating point anywhere.
 */

enum class Rel { ge, gt, eq };

struct Constraint {
  std::vector<Rat> a;  // one coefficient per variable
  Rel rel = Rel::ge;
  Rat rhs;
};

struct LinearSystem {
  std::vector<std::string> vars;
  std::vector<bool> nonneg;  // per variable; absent entries default to free
  std::vector<Constraint> cons;
  std::optional<std::vector<Rat>> objective;
  bool maximize = true;

  std::size_t add_var(std::string name, bool nonnegative);
  void add_constraint(std::vector<Rat> coefs, Rel rel, Rat rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat objective_value;      // meaningful when optimal
  std::vector<Rat> witness;  // per variable, meaningful when optimal
};

// Exact optimum subject to non-strict constraints only (strict constraints
// are rejected: optimization against an open set may have no attained
// optimum). Requires an objective. Witnesses are substitution-checked
// against every constraint before they are returned.
LpResult lp_optimize(const LinearSystem& sys);

struct FeasResult {
  bool feasible = false;
  std::vector<Rat> witness;  // per variable, meaningful when feasible
};

// Feasibility with mixed strict/non-strict constraints. Strict rows are
// relaxed by a slack eps which is then maximized; the system is feasible
// as stated iff the relaxation attains eps > 0. The witness satisfies
// every constraint as stated, strictness included.
FeasResult lp_feasible(const LinearSystem& sys);

// Human-readable dump of a system (see docs/formats.md).
std::string lp_dump(const LinearSystem& sys);

}  // namespace exlog
