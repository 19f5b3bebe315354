#include "rpt/linalg.hpp"

#include <cassert>
#include <utility>

#include "rpt/error.hpp"

namespace rpt {

std::string rat_str(const Rat& x) {
  Int num = numerator(x);
  Int den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw Error("rat_parse: zero denominator");
  return Rat(num, den);
}

RankDet rank_det(IntMat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  RankDet out;
  if (rows == 0 || cols == 0) {
    out.rank = 0;
    out.det = 1;  // empty matrix
    return out;
  }
  Int prev = 1;
  int r = 0;
  int sgn = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sgn = -sgn;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  out.rank = r;
  if (rows == cols) {
    if (r < rows) {
      out.det = 0;
    } else {
      out.det = sgn * m[rows - 1][rows - 1];
    }
  }
  return out;
}

RankDetRat rank_det_rat(const RatMat& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  IntMat im(rows, IntVec(cols));
  Rat scale = 1;  // det(m) = det(im) / scale
  for (int i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (int j = 0; j < cols; ++j) {
      Int d = denominator(m[i][j]);
      lcm = lcm / gcd(lcm, d) * d;
    }
    for (int j = 0; j < cols; ++j) {
      Rat v = m[i][j] * lcm;
      assert(denominator(v) == 1);
      im[i][j] = numerator(v);
    }
    scale *= lcm;
  }
  RankDet rd = rank_det(std::move(im));
  RankDetRat out;
  out.rank = rd.rank;
  out.det = (rows == cols && rows > 0) ? Rat(rd.det) / scale : Rat(rd.det);
  return out;
}

int rank_of(const IntMat& m) { return rank_det(m).rank; }

int rank_of_rat(const RatMat& m) { return rank_det_rat(m).rank; }

bool solve_rat(const RatMat& m, const RatVec& rhs, RatVec& x) {
  const int n = static_cast<int>(m.size());
  if (n == 0) {
    x.clear();
    return true;
  }
  assert(static_cast<int>(rhs.size()) == n);
  RatMat a(n, RatVec(n + 1));
  for (int i = 0; i < n; ++i) {
    assert(static_cast<int>(m[i].size()) == n);
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = rhs[i];
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(a[pivot], a[c]);
    Rat p = a[c][c];
    for (int j = c; j <= n; ++j) a[c][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  x.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return true;
}

bool solve_in_span(const std::vector<RatVec>& cols, const RatVec& target, RatVec& x) {
  const int k = static_cast<int>(cols.size());
  const int n = static_cast<int>(target.size());
  RatMat a(n, RatVec(k + 1, Rat(0)));
  for (int j = 0; j < k; ++j) {
    assert(static_cast<int>(cols[j].size()) == n);
    for (int i = 0; i < n; ++i) a[i][j] = cols[j][i];
  }
  for (int i = 0; i < n; ++i) a[i][k] = target[i];
  std::vector<int> pivot_col(n, -1);
  int r = 0;
  for (int c = 0; c < k && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rat pv = a[r][c];
    for (int j = c; j <= k; ++j) a[r][j] /= pv;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < n; ++i) {
    if (a[i][k] != 0) return false;  // inconsistent
  }
  x.assign(k, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = a[i][k];
  return true;
}

}  // namespace rpt
