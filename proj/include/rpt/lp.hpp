#pragma once

#include "rpt/rational.hpp"

namespace rpt {

// Feasibility of { z : A z = b, z >= 0 } by an exact phase-1 simplex with
// Bland's rule. Answers are self-certifying: a feasible answer carries z and
// has been substituted back; an infeasible one carries a Farkas vector y with
// y^T A <= 0 and y^T b > 0, also substituted back.
struct LPFeasibility {
  bool feasible = false;
  RatVec z;
  RatVec farkas;
};

LPFeasibility lp_equality_feasible(RatMat a, RatVec b);

}  // namespace rpt
