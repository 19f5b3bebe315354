#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace rpt {

// All geometry in this project is exact. Int/Rat are arbitrary precision;
// root coefficient vectors themselves stay in plain int.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline int sign(const Rat& x) { return x.sign(); }
inline int sign(const Int& x) { return x.sign(); }

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string rat_str(const Rat& x);
Rat rat_parse(const std::string& s);

}  // namespace rpt
