#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rivercross {

/// Arbitrary-precision integer used for every path count.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used for recurrence fitting.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace rivercross
