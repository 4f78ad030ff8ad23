#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace fbca {

// Exact rationals everywhere; relation coefficients are +-1 but elimination
// intermediates are not.
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat &r) { return r.str(); }

Rat rat_from_string(const std::string &s);

} // namespace fbca
