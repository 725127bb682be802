#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrct {

// Multiplicities and table counts grow combinatorially, so every count in the
// public API is an exact unbounded integer.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace lrct
