#pragma once

#include "rpt/rational.hpp"

namespace rpt {

struct RankDet {
  int rank = 0;
  Int det = 0;  // meaningful only for square input
};

// Bareiss fraction-free elimination. Exact; no divisions outside the
// fraction-free schema.
RankDet rank_det(IntMat m);

// Same for rational input: denominators are cleared row by row first.
struct RankDetRat {
  int rank = 0;
  Rat det = 0;
};
RankDetRat rank_det_rat(const RatMat& m);

int rank_of(const IntMat& m);
int rank_of_rat(const RatMat& m);

// Solves m * x = rhs exactly when m is square nonsingular.
// Returns false if m is singular.
bool solve_rat(const RatMat& m, const RatVec& rhs, RatVec& x);

// Solves sum_j x_j * cols[j] = target; returns false when target is outside
// the span. When the columns are dependent an arbitrary solution is picked.
bool solve_in_span(const std::vector<RatVec>& cols, const RatVec& target, RatVec& x);

}  // namespace rpt
