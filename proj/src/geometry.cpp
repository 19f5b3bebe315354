#include "rpt/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "rpt/error.hpp"
#include "rpt/lp.hpp"

namespace rpt {

Rat Hyperplane::eval(const std::vector<int>& coeffs) const {
  assert(coeffs.size() == normal.size());
  Rat s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += normal[i] * coeffs[i];
  return s;
}

Rat Hyperplane::eval(const RatVec& x) const {
  assert(x.size() == normal.size());
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += normal[i] * x[i];
  return s;
}

bool Hyperplane::is_zero() const {
  for (const Rat& v : normal) {
    if (v != 0) return false;
  }
  return true;
}

namespace {

// Sign of the orientation determinant of x against the facet f (rows f[i]-f[0]
// and x-f[0]).
int side_of(const std::vector<std::vector<Int>>& pts, const std::vector<int>& facet,
            const IntVec& x) {
  const int d = static_cast<int>(x.size());
  IntMat m(d, IntVec(d));
  const IntVec& base = pts[facet[0]];
  for (int i = 1; i < d; ++i) {
    for (int j = 0; j < d; ++j) m[i - 1][j] = pts[facet[i]][j] - base[j];
  }
  for (int j = 0; j < d; ++j) m[d - 1][j] = x[j] - base[j];
  return rank_det(std::move(m)).det.sign();
}

Int abs_affine_det(const std::vector<std::vector<Int>>& pts, const std::vector<int>& simplex) {
  const int d = static_cast<int>(simplex.size()) - 1;
  IntMat m(d, IntVec(d));
  const IntVec& base = pts[simplex[0]];
  for (int i = 1; i <= d; ++i) {
    for (int j = 0; j < d; ++j) m[i - 1][j] = pts[simplex[i]][j] - base[j];
  }
  Int det = rank_det(std::move(m)).det;
  return det < 0 ? Int(-det) : det;
}

}  // namespace

Int oracle_volume(std::vector<std::vector<Int>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw DegenerateInput("oracle_volume: no points");
  const int d = static_cast<int>(points[0].size());
  if (d == 0) return 1;  // a single point, zero-dimensional simplex

  const int np = static_cast<int>(points.size());
  // Greedy affinely independent start, in lexicographic order.
  std::vector<int> start{0};
  IntMat dirs;
  for (int i = 1; i < np && static_cast<int>(start.size()) < d + 1; ++i) {
    IntVec diff(d);
    for (int j = 0; j < d; ++j) diff[j] = points[i][j] - points[0][j];
    dirs.push_back(diff);
    if (rank_of(dirs) == static_cast<int>(dirs.size())) {
      start.push_back(i);
    } else {
      dirs.pop_back();
    }
  }
  if (static_cast<int>(start.size()) != d + 1) {
    throw DegenerateInput("oracle_volume: points do not affinely span the space");
  }

  // Reference interior point: (d+1) * centroid of the start simplex, kept
  // integral by scaling all side tests consistently.
  IntVec ref(d, Int(0));
  for (int id : start) {
    for (int j = 0; j < d; ++j) ref[j] += points[id][j];
  }
  auto side_ref = [&](const std::vector<int>& facet) {
    // side of the scaled centroid: multiply base point by (d+1)
    IntMat m(d, IntVec(d));
    const IntVec& base = points[facet[0]];
    for (int i = 1; i < d; ++i) {
      for (int j = 0; j < d; ++j) m[i - 1][j] = points[facet[i]][j] - base[j];
    }
    for (int j = 0; j < d; ++j) m[d - 1][j] = ref[j] - Int(d + 1) * base[j];
    return rank_det(std::move(m)).det.sign();
  };

  std::vector<std::vector<int>> simplices{start};
  Int total = abs_affine_det(points, start);
  assert(total > 0);

  // Boundary facets of the current hull.
  std::set<std::vector<int>> boundary;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> f;
    for (int i = 0; i <= d; ++i) {
      if (i != skip) f.push_back(start[i]);
    }
    boundary.insert(f);
  }

  std::set<int> used(start.begin(), start.end());
  for (int p = 0; p < np; ++p) {
    if (used.count(p)) continue;
    std::vector<std::vector<int>> visible;
    for (const auto& f : boundary) {
      int s_ref = side_ref(f);
      assert(s_ref != 0);
      int s_p = side_of(points, f, points[p]);
      if (s_p != 0 && s_p != s_ref) visible.push_back(f);
    }
    if (visible.empty()) continue;  // inside or on the boundary of the hull
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& f : visible) {
      boundary.erase(f);
      std::vector<int> simplex = f;
      simplex.push_back(p);
      std::sort(simplex.begin(), simplex.end());
      simplices.push_back(simplex);
      Int vol = abs_affine_det(points, simplex);
      if (vol <= 0) throw Error("oracle_volume: degenerate simplex created");
      total += vol;
      for (int skip = 0; skip < d; ++skip) {
        std::vector<int> ridge;
        for (int i = 0; i < d; ++i) {
          if (i != skip) ridge.push_back(f[i]);
        }
        ridge_count[ridge] += 1;
      }
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count == 1) {  // horizon ridge
        std::vector<int> nf = ridge;
        nf.push_back(p);
        std::sort(nf.begin(), nf.end());
        boundary.insert(nf);
      }
    }
    used.insert(p);
  }

  // Independent re-derivation: cone-splitting from the lexicographically
  // least vertex over the final boundary.
  Int total2 = 0;
  for (const auto& f : boundary) {
    std::vector<int> simplex = f;
    simplex.push_back(0);  // points are sorted, so index 0 is lex-least
    total2 += abs_affine_det(points, simplex);
  }
  if (total != total2) throw Error("oracle_volume: self-check failed");
  return total;
}

std::optional<Hyperplane> separating_hyperplane(const std::vector<std::vector<int>>& r1,
                                                const std::vector<std::vector<int>>& r2) {
  std::set<std::vector<int>> s1(r1.begin(), r1.end());
  std::set<std::vector<int>> s2(r2.begin(), r2.end());
  std::vector<std::vector<int>> only1, only2, shared;
  for (const auto& p : s1) (s2.count(p) ? shared : only1).push_back(p);
  for (const auto& p : s2) {
    if (!s1.count(p)) only2.push_back(p);
  }
  const int n = static_cast<int>(
      (!s1.empty() ? s1.begin()->size() : (!s2.empty() ? s2.begin()->size() : 0)));

  // Variables: nu = u - v (n+n), c = cp - cm (1+1), slacks (one per strict
  // constraint). Rows:
  //   r in shared : nu.r - c                  = 0
  //   r in only1  : nu.r - c + s_r            = -1
  //   r in only2  : nu.r - c - s_r            = +1
  const int strict = static_cast<int>(only1.size() + only2.size());
  const int cols = 2 * n + 2 + strict;
  RatMat a;
  RatVec b;
  auto push_row = [&](const std::vector<int>& p, int slack_index, int slack_sign, int rhs) {
    RatVec row(cols, Rat(0));
    for (int j = 0; j < n; ++j) {
      row[j] = p[j];
      row[n + j] = -p[j];
    }
    row[2 * n] = -1;
    row[2 * n + 1] = 1;
    if (slack_index >= 0) row[2 * n + 2 + slack_index] = slack_sign;
    a.push_back(std::move(row));
    b.push_back(rhs);
  };
  int si = 0;
  for (const auto& p : shared) push_row(p, -1, 0, 0);
  for (const auto& p : only1) push_row(p, si++, 1, -1);
  for (const auto& p : only2) push_row(p, si++, -1, 1);

  LPFeasibility lp = lp_equality_feasible(std::move(a), std::move(b));
  if (!lp.feasible) return std::nullopt;
  Hyperplane h;
  h.normal.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) h.normal[j] = lp.z[j] - lp.z[n + j];
  h.offset = lp.z[2 * n] - lp.z[2 * n + 1];
  // Contract check by direct evaluation.
  for (const auto& p : shared) {
    if (h.eval(p) != h.offset) throw Error("separating_hyperplane: contact violated");
  }
  for (const auto& p : only1) {
    if (h.eval(p) > h.offset - 1) throw Error("separating_hyperplane: margin violated");
  }
  for (const auto& p : only2) {
    if (h.eval(p) < h.offset + 1) throw Error("separating_hyperplane: margin violated");
  }
  return h;
}

bool cone_membership(const RatVec& x, const std::vector<std::vector<int>>& generators) {
  const int n = static_cast<int>(x.size());
  const int k = static_cast<int>(generators.size());
  RatMat a(n, RatVec(k, Rat(0)));
  for (int j = 0; j < k; ++j) {
    assert(static_cast<int>(generators[j].size()) == n);
    for (int i = 0; i < n; ++i) a[i][j] = generators[j][i];
  }
  return lp_equality_feasible(std::move(a), RatVec(x)).feasible;
}

}  // namespace rpt
