#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace excal {

// Exact scalars. Rationals are kept canonical by the backend: lowest terms,
// positive denominator, zero represented as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace excal
