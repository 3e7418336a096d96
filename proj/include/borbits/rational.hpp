#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace borbits {

// Arbitrary-precision exact arithmetic; no floating point anywhere in the
// library.  cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form we rely on for equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Exact integer square root test.
inline bool is_perfect_square(const BigInt& x, BigInt& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

}  // namespace borbits
