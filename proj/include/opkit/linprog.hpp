// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#ifndef OPKIT_LINPROG_HPP
#define OPKIT_LINPROG_HPP

#include "opkit/types.hpp"

namespace opkit {

struct LpResult {
  bool feasible = false;
  bool bounded = true;
  double value = 0.0;
  Vec x;
};

/// Dense two-phase tableau simplex for small problems.
///
///   maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x free.
///
/// Free variables are split internally. Bland's rule, so no cycling. All
/// problems in this codebase have a handful of variables; no effort is made
/// to be fast on large instances.
class SimplexSolver {
 public:
  static LpResult solve(const Vec& c, const Mat& a_ub, const Vec& b_ub,
                        const Mat& a_eq, const Vec& b_eq,
                        double eps = 1e-9) {
    const int n = static_cast<int>(c.size());
    const int m_ub = static_cast<int>(b_ub.size());
    const int m_eq = static_cast<int>(b_eq.size());
    const int m = m_ub + m_eq;
    // Columns: x+ (n), x- (n), slacks (m_ub), artificials (m).
    const int nx = 2 * n + m_ub;
    const int ncols = nx + m;

    Mat t = Mat::Zero(m, ncols);
    Vec b(m);
    for (int i = 0; i < m_ub; ++i) {
      t.block(i, 0, 1, n) = a_ub.row(i);
      t.block(i, n, 1, n) = -a_ub.row(i);
      t(i, 2 * n + i) = 1.0;
      b(i) = b_ub(i);
    }
    for (int i = 0; i < m_eq; ++i) {
      t.block(m_ub + i, 0, 1, n) = a_eq.row(i);
      t.block(m_ub + i, n, 1, n) = -a_eq.row(i);
      b(m_ub + i) = b_eq(i);
    }
    for (int i = 0; i < m; ++i) {
      if (b(i) < 0) {
        t.row(i) *= -1.0;
        b(i) = -b(i);
      }
      t(i, nx + i) = 1.0;
    }

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = nx + i;

    // Phase 1: minimize sum of artificials.
    Vec obj1 = Vec::Zero(ncols);
    for (int i = 0; i < m; ++i) obj1(nx + i) = -1.0;
    double val = run(t, b, basis, obj1, ncols, eps, nullptr);
    if (val < -eps) return {};  // infeasible

    // Drive remaining artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= nx) {
        int piv = -1;
        for (int j = 0; j < nx; ++j) {
          if (std::abs(t(i, j)) > eps) {
            piv = j;
            break;
          }
        }
        if (piv >= 0) pivot(t, b, basis, i, piv);
      }
    }

    // Phase 2 on the original objective (artificial columns frozen).
    Vec obj2 = Vec::Zero(ncols);
    obj2.head(n) = c;
    obj2.segment(n, n) = -c;
    bool unbounded = false;
    run(t, b, basis, obj2, nx, eps, &unbounded);

    LpResult r;
    r.feasible = true;
    r.bounded = !unbounded;
    if (!r.bounded) return r;
    Vec z = Vec::Zero(ncols);
    for (int i = 0; i < m; ++i) z(basis[i]) = b(i);
    r.x = z.head(n) - z.segment(n, n);
    r.value = c.dot(r.x);
    return r;
  }

  /// Feasibility of A_ub x <= b_ub, A_eq x = b_eq.
  static LpResult feasible_point(const Mat& a_ub, const Vec& b_ub,
                                 const Mat& a_eq, const Vec& b_eq,
                                 double eps = 1e-9) {
    int n = static_cast<int>(a_ub.cols() > 0 ? a_ub.cols() : a_eq.cols());
    return solve(Vec::Zero(n), a_ub, b_ub, a_eq, b_eq, eps);
  }

 private:
  static void pivot(Mat& t, Vec& b, std::vector<int>& basis, int row,
                    int col) {
    double p = t(row, col);
    t.row(row) /= p;
    b(row) /= p;
    for (int i = 0; i < t.rows(); ++i) {
      if (i == row) continue;
      double f = t(i, col);
      if (f != 0.0) {
        t.row(i) -= f * t.row(row);
        b(i) -= f * b(row);
      }
    }
    basis[static_cast<size_t>(row)] = col;
  }

  // Simplex iterations maximizing obj over the first `active` columns.
  // Returns the objective value at the final basic solution.
  static double run(Mat& t, Vec& b, std::vector<int>& basis, const Vec& obj,
                    int active, double eps, bool* unbounded) {
    const int m = static_cast<int>(t.rows());
    for (int iter = 0; iter < 20000; ++iter) {
      // Reduced costs r_j = obj_j - y . col_j with y from the basis.
      Vec cb(m);
      for (int i = 0; i < m; ++i) cb(i) = obj(basis[static_cast<size_t>(i)]);
      int enter = -1;
      for (int j = 0; j < active; ++j) {
        double rj = obj(j) - cb.dot(t.col(j));
        if (rj > eps) {
          enter = j;  // Bland: first improving column
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (t(i, enter) > eps) {
          double ratio = b(i) / t(i, enter);
          if (leave < 0 || ratio < best - eps ||
              (ratio < best + eps &&
               basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) {
        if (unbounded) *unbounded = true;
        break;
      }
      pivot(t, b, basis, leave, enter);
    }
    double v = 0.0;
    for (int i = 0; i < m; ++i) v += obj(basis[static_cast<size_t>(i)]) * b(i);
    return v;
  }
};

}  // namespace opkit

#endif
