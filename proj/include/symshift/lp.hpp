#pragma once

#include <stdexcept>
#include <vector>

#include "symshift/numeric.hpp"

namespace symshift {

// Feasibility of { x >= 0 : A x (<= or ==) b } decided exactly over the
// rationals with a phase-1 simplex.  Bland's rule, so termination is
// unconditional.  Sizes here are tiny (rows ~ n, cols ~ #generators).
class LpFeasibility {
 public:
  LpFeasibility(int nvars) : nvars_(nvars) {}

  void add_le(std::vector<Rat> row, Rat rhs) { add(std::move(row), std::move(rhs), false); }
  void add_eq(std::vector<Rat> row, Rat rhs) { add(std::move(row), std::move(rhs), true); }

  bool feasible() const {
    const int m = static_cast<int>(rows_.size());
    int nslack = 0;
    for (bool e : eq_)
      if (!e) ++nslack;
    const int ncols = nvars_ + nslack + m;  // structural + slacks + artificials

    // tableau[i] = row of the constraint system, rhs last; basis_ = artificials
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(ncols + 1, Rat(0)));
    std::vector<int> basis(m);
    int slack_at = nvars_;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < nvars_; ++j) T[i][j] = rows_[i][j];
      Rat rhs = rhs_[i];
      if (!eq_[i]) T[i][slack_at++] = 1;
      if (rhs < 0) {  // flip the whole row so rhs >= 0
        for (int j = 0; j < ncols; ++j) T[i][j] = -T[i][j];
        rhs = -rhs;
      }
      T[i][nvars_ + nslack + i] = 1;
      T[i][ncols] = rhs;
      basis[i] = nvars_ + nslack + i;
    }

    // phase-1 objective: minimize sum of artificials; cost row d_j = -sum_i T[i][j]
    std::vector<Rat> d(ncols + 1, Rat(0));
    for (int j = 0; j <= ncols; ++j) {
      for (int i = 0; i < m; ++i) d[j] -= T[i][j];
      if (j >= nvars_ + nslack && j < ncols) d[j] = 0;  // artificial columns start basic
    }

    while (true) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (d[j] < 0) {
          enter = j;
          break;  // Bland: first improving column
        }
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (T[i][enter] <= 0) continue;
        Rat ratio = T[i][ncols] / T[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("lp: phase-1 objective unbounded");
      pivot(T, d, basis, leave, enter, ncols);
    }
    return -d[ncols] == 0;  // w* = sum of artificials
  }

 private:
  void add(std::vector<Rat> row, Rat rhs, bool eq) {
    if (static_cast<int>(row.size()) != nvars_) throw std::invalid_argument("lp: row width mismatch");
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
    eq_.push_back(eq);
  }

  static void pivot(std::vector<std::vector<Rat>>& T, std::vector<Rat>& d, std::vector<int>& basis,
                    int r, int c, int ncols) {
    const Rat p = T[r][c];
    for (int j = 0; j <= ncols; ++j) T[r][j] /= p;
    for (size_t i = 0; i < T.size(); ++i) {
      if (static_cast<int>(i) == r || T[i][c] == 0) continue;
      const Rat f = T[i][c];
      for (int j = 0; j <= ncols; ++j) T[i][j] -= f * T[r][j];
    }
    if (d[c] != 0) {
      const Rat f = d[c];
      for (int j = 0; j <= ncols; ++j) d[j] -= f * T[r][j];
    }
    basis[r] = c;
  }

  int nvars_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<bool> eq_;
};

}  // namespace symshift
