/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/lp.hpp"

#include <sstream>

#include "exlog/errors.hpp"

namespace exlog {

std::size_t LinearSystem::add_var(std::string name, bool nonnegative) {
  vars.push_back(std::move(name));
  nonneg.resize(vars.size(), false);
  nonneg[vars.size() - 1] = nonnegative;
  return vars.size() - 1;
}

void LinearSystem::add_constraint(std::vector<Rat> coefs, Rel rel, Rat rhs) {
  coefs.resize(vars.size(), Rat(0));
  cons.push_back({std::move(coefs), rel, std::move(rhs)});
}

namespace {

// min c.x  s.t.  T x = b, x >= 0, b >= 0; basis starts as an identity of
// artificial columns appended on the right.
struct Tableau {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Rat>> T;
  std::vector<Rat> b;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c, std::vector<Rat>& z) {
    const Rat piv = T[r][c];
    for (std::size_t j = 0; j < cols; ++j) T[r][j] /= piv;
    b[r] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || T[i][c] == 0) continue;
      const Rat factor = T[i][c];
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= factor * T[r][j];
      b[i] -= factor * b[r];
    }
    if (z[c] != 0) {
      const Rat factor = z[c];
      for (std::size_t j = 0; j < cols; ++j) z[j] -= factor * T[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule: entering column is the lowest index with a negative
  // reduced cost; the leaving row breaks ratio ties on the lowest basis
  // index. Returns optimal/unbounded.
  LpStatus iterate(std::vector<Rat>& z) {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (z[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return LpStatus::optimal;
      std::size_t leave = rows;
      Rat best_ratio;
      for (std::size_t i = 0; i < rows; ++i) {
        if (T[i][enter] <= 0) continue;
        Rat ratio = b[i] / T[i][enter];
        if (leave == rows || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave == rows) return LpStatus::unbounded;
      pivot(leave, enter, z);
    }
  }
};

std::vector<Rat> reduced_costs(const Tableau& t, const std::vector<Rat>& c) {
  std::vector<Rat> z = c;
  z.resize(t.cols, Rat(0));
  for (std::size_t i = 0; i < t.rows; ++i) {
    const Rat ci = t.basis[i] < c.size() ? c[t.basis[i]] : Rat(0);
    if (ci == 0) continue;
    for (std::size_t j = 0; j < t.cols; ++j) z[j] -= ci * t.T[i][j];
  }
  return z;
}

struct CoreResult {
  LpStatus status;
  std::vector<Rat> witness;  // user variables
  Rat objective;             // in the user's direction
};

// Shared solver: builds the computational form (free variables split into
// a difference of nonnegatives, surplus columns for >= rows), runs the
// two phases, maps the solution back. Only ge/eq rows are accepted here.
CoreResult solve_core(const LinearSystem& sys, const std::vector<Rat>& objective, bool maximize) {
  const std::size_t nv = sys.vars.size();
  std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    pos_col[i] = cols++;
    if (!(i < sys.nonneg.size() && sys.nonneg[i])) neg_col[i] = cols++;
  }
  const std::size_t structural = cols + [&] {
    std::size_t surplus = 0;
    for (const auto& con : sys.cons)
      if (con.rel == Rel::ge) ++surplus;
    return surplus;
  }();

  Tableau t;
  t.rows = sys.cons.size();
  t.cols = structural + t.rows;  // artificials on the right
  t.T.assign(t.rows, std::vector<Rat>(t.cols, Rat(0)));
  t.b.assign(t.rows, Rat(0));
  t.basis.resize(t.rows);

  std::size_t next_surplus = cols;
  for (std::size_t r = 0; r < sys.cons.size(); ++r) {
    const auto& con = sys.cons[r];
    if (con.rel == Rel::gt) throw Error("strict constraint not supported by the optimizer");
    for (std::size_t i = 0; i < nv && i < con.a.size(); ++i) {
      t.T[r][pos_col[i]] = con.a[i];
      if (neg_col[i] != SIZE_MAX) t.T[r][neg_col[i]] = -con.a[i];
    }
    if (con.rel == Rel::ge) t.T[r][next_surplus++] = Rat(-1);
    t.b[r] = con.rhs;
    if (t.b[r] < 0) {
      for (std::size_t j = 0; j < structural; ++j) t.T[r][j] = -t.T[r][j];
      t.b[r] = -t.b[r];
    }
    t.T[r][structural + r] = Rat(1);
    t.basis[r] = structural + r;
  }

  // phase 1: minimize the sum of artificials
  std::vector<Rat> phase1_cost(t.cols, Rat(0));
  for (std::size_t r = 0; r < t.rows; ++r) phase1_cost[structural + r] = Rat(1);
  std::vector<Rat> z = reduced_costs(t, phase1_cost);
  if (t.iterate(z) != LpStatus::optimal) throw Error("internal: phase 1 unbounded");
  Rat art_total(0);
  for (std::size_t r = 0; r < t.rows; ++r)
    if (t.basis[r] >= structural) art_total += t.b[r];
  if (art_total > 0) return {LpStatus::infeasible, {}, Rat(0)};

  // drive leftover artificials out of the basis; rows that cannot pivot
  // are redundant and get dropped
  for (std::size_t r = 0; r < t.rows;) {
    if (t.basis[r] < structural) {
      ++r;
      continue;
    }
    std::size_t c = structural;
    for (std::size_t j = 0; j < structural; ++j)
      if (t.T[r][j] != 0) {
        c = j;
        break;
      }
    if (c < structural) {
      std::vector<Rat> dummy(t.cols, Rat(0));
      t.pivot(r, c, dummy);
      ++r;
    } else {
      t.T.erase(t.T.begin() + r);
      t.b.erase(t.b.begin() + r);
      t.basis.erase(t.basis.begin() + r);
      --t.rows;
    }
  }

  // phase 2 over structural columns only
  for (auto& row : t.T) row.resize(structural);
  t.cols = structural;
  std::vector<Rat> cost(structural, Rat(0));
  for (std::size_t i = 0; i < nv; ++i) {
    Rat c = i < objective.size() ? objective[i] : Rat(0);
    if (maximize) c = -c;
    cost[pos_col[i]] = c;
    if (neg_col[i] != SIZE_MAX) cost[neg_col[i]] = -c;
  }
  z = reduced_costs(t, cost);
  LpStatus status = t.iterate(z);
  if (status == LpStatus::unbounded) return {LpStatus::unbounded, {}, Rat(0)};

  std::vector<Rat> col_value(structural, Rat(0));
  for (std::size_t r = 0; r < t.rows; ++r) col_value[t.basis[r]] = t.b[r];
  std::vector<Rat> witness(nv, Rat(0));
  Rat obj(0);
  for (std::size_t i = 0; i < nv; ++i) {
    witness[i] = col_value[pos_col[i]];
    if (neg_col[i] != SIZE_MAX) witness[i] -= col_value[neg_col[i]];
    if (i < objective.size()) obj += objective[i] * witness[i];
  }
  return {LpStatus::optimal, std::move(witness), std::move(obj)};
}

void verify_witness(const LinearSystem& sys, const std::vector<Rat>& witness) {
  for (const auto& con : sys.cons) {
    Rat lhs(0);
    for (std::size_t i = 0; i < con.a.size() && i < witness.size(); ++i)
      lhs += con.a[i] * witness[i];
    bool ok = con.rel == Rel::ge ? lhs >= con.rhs
              : con.rel == Rel::gt ? lhs > con.rhs
                                   : lhs == con.rhs;
    if (!ok) throw Error("internal: simplex witness violates a constraint");
  }
  for (std::size_t i = 0; i < sys.vars.size(); ++i)
    if (i < sys.nonneg.size() && sys.nonneg[i] && witness[i] < 0)
      throw Error("internal: simplex witness violates nonnegativity");
}

}  // namespace

LpResult lp_optimize(const LinearSystem& sys) {
  if (!sys.objective) throw Error("lp_optimize requires an objective");
  CoreResult core = solve_core(sys, *sys.objective, sys.maximize);
  LpResult out;
  out.status = core.status;
  if (core.status == LpStatus::optimal) {
    out.objective_value = core.objective;
    out.witness = core.witness;
    verify_witness(sys, out.witness);
  }
  return out;
}

FeasResult lp_feasible(const LinearSystem& sys) {
  bool has_strict = false;
  for (const auto& con : sys.cons)
    if (con.rel == Rel::gt) has_strict = true;

  if (!has_strict) {
    std::vector<Rat> zero(sys.vars.size(), Rat(0));
    CoreResult core = solve_core(sys, zero, false);
    if (core.status != LpStatus::optimal) return {false, {}};
    verify_witness(sys, core.witness);
    return {true, core.witness};
  }

  // relax each strict row by a shared slack and maximize it; the original
  // system is satisfiable exactly when the slack can be made positive
  LinearSystem relaxed = sys;
  const std::size_t eps = relaxed.add_var("_eps", true);
  for (auto& con : relaxed.cons) {
    con.a.resize(relaxed.vars.size(), Rat(0));
    if (con.rel == Rel::gt) {
      con.a[eps] = Rat(-1);
      con.rel = Rel::ge;
    }
  }
  {
    std::vector<Rat> cap(relaxed.vars.size(), Rat(0));
    cap[eps] = Rat(-1);
    relaxed.add_constraint(std::move(cap), Rel::ge, Rat(-1));  // eps <= 1
  }
  std::vector<Rat> objective(relaxed.vars.size(), Rat(0));
  objective[eps] = Rat(1);
  CoreResult core = solve_core(relaxed, objective, true);
  if (core.status != LpStatus::optimal || core.objective <= 0) return {false, {}};
  core.witness.resize(sys.vars.size());
  verify_witness(sys, core.witness);
  return {true, core.witness};
}

std::string lp_dump(const LinearSystem& sys) {
  std::ostringstream os;
  os << "vars:";
  for (std::size_t i = 0; i < sys.vars.size(); ++i) {
    os << ' ' << sys.vars[i];
    if (i < sys.nonneg.size() && sys.nonneg[i]) os << ">=0";
  }
  os << '\n';
  if (sys.objective) {
    os << (sys.maximize ? "max:" : "min:");
    for (std::size_t i = 0; i < sys.objective->size(); ++i)
      if ((*sys.objective)[i] != 0)
        os << ' ' << rat_string((*sys.objective)[i]) << '*' << sys.vars[i];
    os << '\n';
  }
  for (const auto& con : sys.cons) {
    bool first = true;
    for (std::size_t i = 0; i < con.a.size(); ++i) {
      if (con.a[i] == 0) continue;
      if (!first) os << " + ";
      os << rat_string(con.a[i]) << '*' << sys.vars[i];
      first = false;
    }
    if (first) os << '0';
    os << (con.rel == Rel::ge ? " >= " : con.rel == Rel::gt ? " > " : " = ");
    os << rat_string(con.rhs) << '\n';
  }
  return os.str();
}

}  // namespace exlog
