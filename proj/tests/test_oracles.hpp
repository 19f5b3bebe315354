#pragma once

// Independent test oracles. Everything here deliberately avoids the library
// code paths it is used to check.

#include <vector>

#include "rpt/rational.hpp"
#include "rpt/root_system.hpp"

namespace rpt::test {

// Positive roots obtained by closing {±Pi} under all reflections, then
// keeping the positive half. Independent of the root-string enumeration.
std::vector<std::vector<int>> closure_positive_roots(const RootSystem& rs);

// Determinant by cofactor expansion (small matrices only).
Int det_cofactor(const IntMat& m);

// Every system in the acceptance scope.
std::vector<RootSystemSpec> supported_specs();

// Rank <= 5 scope used by the exhaustive law suites.
std::vector<RootSystemSpec> law_scope_specs();

}  // namespace rpt::test
