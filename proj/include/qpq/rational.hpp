#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qpq {

// Exact arbitrary-precision rationals. Everything in this library is exact;
// there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace qpq
