#pragma once

#include <optional>
#include <vector>

#include "rpt/linalg.hpp"
#include "rpt/rational.hpp"

namespace rpt {

// A hyperplane (normal, x) = offset. Normals live in dual coordinates, so
// evaluating on a root is a plain dot product with its coefficient vector.
struct Hyperplane {
  RatVec normal;
  Rat offset = 0;

  Rat eval(const std::vector<int>& coeffs) const;
  Rat eval(const RatVec& x) const;
  bool is_zero() const;
};

// Normalized lattice volume of conv(points) via an incremental placing
// (beneath-beyond) triangulation with lexicographic insertion order and exact
// orientation tests. Validates itself: every simplex full rank, and the total
// re-derived by cone-splitting from the lexicographically least vertex.
// Throws DegenerateInput when the points do not affinely span dimension d.
Int oracle_volume(std::vector<std::vector<Int>> points);

// Margin-1 exact separation: returns (nu, c) with
//   (nu, r) <= c-1  for r in R1 only,
//   (nu, r) >= c+1  for r in R2 only,
//   (nu, r)  = c    for shared points,
// or nullopt when no such hyperplane exists. Scale invariance of the inputs
// makes the unit margin equivalent to strict separation.
std::optional<Hyperplane> separating_hyperplane(const std::vector<std::vector<int>>& r1,
                                                const std::vector<std::vector<int>>& r2);

// Exact LP test for x in cone(generators); the empty cone contains only 0.
bool cone_membership(const RatVec& x, const std::vector<std::vector<int>>& generators);

}  // namespace rpt
