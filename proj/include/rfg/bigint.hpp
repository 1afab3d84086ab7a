#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rfg {

using BigInt = boost::multiprecision::cpp_int;

// Natural log of a positive BigInt, accurate even far beyond double range.
double log_big(const BigInt& x);

}  // namespace rfg
