#pragma once

#include "ecp/number.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ecp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective = 0;
  std::vector<Rational> x;
  /// One multiplier per constraint (optimal solution of the dual program).
  std::vector<Rational> duals;
};

/// maximize c.x subject to a_i.x (<=, =, >=) b_i and x >= 0, over exact
/// rationals. Dense two-phase tableau simplex with Bland's rule, which is
/// enough for the small, highly degenerate systems used here.
class LinearProgram {
 public:
  enum class Relation { LessEqual, Equal, GreaterEqual };

  explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars), objective_(num_vars) {}

  void set_objective(std::vector<Rational> c) {
    if (c.size() != num_vars_) throw std::invalid_argument("objective size mismatch");
    objective_ = std::move(c);
  }

  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    if (coeffs.size() != num_vars_) throw std::invalid_argument("constraint size mismatch");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  std::size_t num_constraints() const { return rows_.size(); }

  LpResult solve() const {
    const std::size_t m = rows_.size();
    // Column layout: structural | one identity column per row (slack or
    // artificial) | surplus columns for >= rows.
    std::vector<bool> flipped(m), artificial(m);
    std::vector<std::size_t> surplus_col(m, npos);
    std::size_t ncols = num_vars_ + m;
    for (std::size_t i = 0; i < m; ++i) {
      Relation rel = rows_[i].rel;
      flipped[i] = rows_[i].rhs < 0;
      if (flipped[i] && rel != Relation::Equal) rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
      artificial[i] = rel != Relation::LessEqual;
      if (rel == Relation::GreaterEqual) surplus_col[i] = ncols++;
    }
    Tableau t(m, ncols);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational sign = flipped[i] ? -1 : 1;
      for (std::size_t j = 0; j < num_vars_; ++j) t.at(i, j) = sign * rows_[i].coeffs[j];
      t.at(i, num_vars_ + i) = 1;
      if (surplus_col[i] != npos) t.at(i, surplus_col[i]) = -1;
      t.rhs(i) = sign * rows_[i].rhs;
      t.basis[i] = num_vars_ + i;
    }
    std::vector<bool> allowed(ncols, true);

    bool any_artificial = false;
    for (std::size_t i = 0; i < m; ++i) any_artificial = any_artificial || artificial[i];
    if (any_artificial) {
      std::vector<Rational> phase1(ncols, 0);
      for (std::size_t i = 0; i < m; ++i)
        if (artificial[i]) phase1[num_vars_ + i] = -1;
      t.set_objective(phase1);
      if (t.run(allowed) != LpStatus::Optimal) throw std::logic_error("phase I cannot be unbounded");
      if (t.objective_value() < 0) return {LpStatus::Infeasible, 0, {}, {}};
      for (std::size_t i = 0; i < m; ++i)
        if (artificial[i]) allowed[num_vars_ + i] = false;
      // Drive zero-level artificials out of the basis where possible.
      for (std::size_t r = 0; r < m; ++r) {
        const std::size_t b = t.basis[r];
        if (b < num_vars_ || b >= num_vars_ + m || !artificial[b - num_vars_]) continue;
        for (std::size_t j = 0; j < ncols; ++j)
          if (allowed[j] && t.at(r, j) != 0) {
            t.pivot(r, j);
            break;
          }
      }
    }

    std::vector<Rational> cost(ncols, 0);
    for (std::size_t j = 0; j < num_vars_; ++j) cost[j] = objective_[j];
    t.set_objective(cost);
    const LpStatus status = t.run(allowed);
    if (status != LpStatus::Optimal) return {status, 0, {}, {}};

    LpResult result{LpStatus::Optimal, t.objective_value(), std::vector<Rational>(num_vars_, 0), std::vector<Rational>(m, 0)};
    for (std::size_t r = 0; r < m; ++r)
      if (t.basis[r] < num_vars_) result.x[t.basis[r]] = t.rhs(r);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational y = t.reduced_cost(num_vars_ + i);
      result.duals[i] = flipped[i] ? Rational(-y) : y;
    }
    return result;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Row {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
  };

  struct Tableau {
    Tableau(std::size_t rows, std::size_t cols)
        : m(rows), n(cols), cells(rows * (cols + 1)), obj(cols + 1), basis(rows) {}

    Rational& at(std::size_t r, std::size_t c) { return cells[r * (n + 1) + c]; }
    Rational& rhs(std::size_t r) { return cells[r * (n + 1) + n]; }
    Rational reduced_cost(std::size_t c) const { return obj[c]; }
    Rational objective_value() const { return obj[n]; }

    // obj holds z_j - c_j for maximizing c.x, made consistent with the basis.
    void set_objective(const std::vector<Rational>& c) {
      for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];
      obj[n] = 0;
      for (std::size_t r = 0; r < m; ++r) {
        const Rational cb = c[basis[r]];
        if (cb == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) obj[j] += cb * at(r, j);
      }
    }

    void pivot(std::size_t pr, std::size_t pc) {
      const Rational inv = Rational(1) / at(pr, pc);
      for (std::size_t j = 0; j <= n; ++j) at(pr, j) *= inv;
      auto eliminate = [&](Rational* row) {
        const Rational factor = row[pc];
        if (factor == 0) return;
        for (std::size_t j = 0; j <= n; ++j)
          if (at(pr, j) != 0) row[j] -= factor * at(pr, j);
      };
      for (std::size_t r = 0; r < m; ++r)
        if (r != pr) eliminate(&cells[r * (n + 1)]);
      eliminate(obj.data());
      basis[pr] = pc;
    }

    // Dantzig's rule for a bounded number of pivots, then Bland's rule, which
    // cannot cycle.
    LpStatus run(const std::vector<bool>& allowed) {
      const std::size_t dantzig_budget = 10 * (m + n);
      for (std::size_t pivots = 0;; ++pivots) {
        std::size_t enter = npos;
        const bool bland = pivots >= dantzig_budget;
        for (std::size_t j = 0; j < n; ++j)
          if (allowed[j] && obj[j] < 0 && (enter == npos || (!bland && obj[j] < obj[enter]))) {
            enter = j;
            if (bland) break;
          }
        if (enter == npos) return LpStatus::Optimal;
        std::size_t leave = npos;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
          if (at(r, enter) <= 0) continue;
          Rational ratio = rhs(r) / at(r, enter);
          if (leave == npos || ratio < best || (ratio == best && basis[r] < basis[leave])) {
            leave = r;
            best = std::move(ratio);
          }
        }
        if (leave == npos) return LpStatus::Unbounded;
        pivot(leave, enter);
      }
    }

    std::size_t m, n;
    std::vector<Rational> cells;
    std::vector<Rational> obj;
    std::vector<std::size_t> basis;
  };

  std::size_t num_vars_;
  std::vector<Rational> objective_;
  std::vector<Row> rows_;
};

}  // namespace ecp
