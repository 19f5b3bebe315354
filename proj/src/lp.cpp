#include "rpt/lp.hpp"

#include <cassert>

#include "rpt/error.hpp"

namespace rpt {

LPFeasibility lp_equality_feasible(RatMat a, RatVec b) {
  const int m = static_cast<int>(a.size());
  const int k = m ? static_cast<int>(a[0].size()) : 0;
  assert(static_cast<int>(b.size()) == m);

  // Keep the original system for the certificate checks.
  const RatMat a0 = a;
  const RatVec b0 = b;

  std::vector<int> flip(m, 1);
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) {
      flip[i] = -1;
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  }

  // Tableau [A | I | b], basis starts on the artificials. Objective:
  // minimize the sum of artificials.
  const int cols = k + m;
  RatMat t(m, RatVec(cols + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) t[i][j] = a[i][j];
    t[i][k + i] = 1;
    t[i][cols] = b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = k + i;

  // Reduced costs: cost[j] = c_j - sum over rows of c_basis * t[i][j].
  RatVec cost(cols + 1, Rat(0));
  for (int j = 0; j < cols; ++j) {
    Rat s = (j >= k) ? Rat(1) : Rat(0);
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= k) s -= t[i][j];
    }
    cost[j] = s;
  }
  Rat objective = 0;
  for (int i = 0; i < m; ++i) objective -= t[i][cols];

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;  // Bland: smallest index
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best = 0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Error("lp: phase-1 objective unbounded (cannot happen)");
    // pivot (leave, enter)
    Rat piv = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rat fc = cost[enter];
    for (int j = 0; j <= cols; ++j) cost[j] -= fc * t[leave][j];
    objective -= fc * t[leave][cols];
    basis[leave] = enter;
  }

  LPFeasibility out;
  // objective holds -(current sum of artificials)
  Rat art_sum = -objective;
  if (art_sum == 0) {
    out.feasible = true;
    out.z.assign(k, Rat(0));
    for (int i = 0; i < m; ++i) {
      if (basis[i] < k) out.z[basis[i]] = t[i][cols];
    }
    // substitution check
    for (int i = 0; i < m; ++i) {
      Rat s = 0;
      for (int j = 0; j < k; ++j) s += a0[i][j] * out.z[j];
      if (s != b0[i]) throw Error("lp: solution fails substitution");
    }
    for (const Rat& v : out.z) {
      if (v < 0) throw Error("lp: solution is not nonnegative");
    }
  } else {
    out.feasible = false;
    // Dual values from the artificial columns: y_i = 1 - cost[k+i], valid for
    // the sign-normalized system; flip back for the original one.
    out.farkas.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) out.farkas[i] = (Rat(1) - cost[k + i]) * flip[i];
    Rat yb = 0;
    for (int i = 0; i < m; ++i) yb += out.farkas[i] * b0[i];
    if (yb <= 0) throw Error("lp: Farkas certificate fails y.b > 0");
    for (int j = 0; j < k; ++j) {
      Rat s = 0;
      for (int i = 0; i < m; ++i) s += out.farkas[i] * a0[i][j];
      if (s > 0) throw Error("lp: Farkas certificate fails y.A <= 0");
    }
  }
  return out;
}

}  // namespace rpt
