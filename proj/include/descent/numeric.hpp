#pragma once

// Arbitrary-precision integers/rationals and small combinatorial helpers.

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace descent {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(x, k) for any integer x and k >= 0. The product of k consecutive integers
// is divisible by k!, so the division below is exact even for negative x.
inline BigInt binomial(const BigInt& x, int k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    BigInt num = 1;
    for (int i = 0; i < k; ++i) num *= x - i;
    return num / factorial(k);
}

// x (x-1) ... (x-m+1)
inline BigInt falling_factorial(const BigInt& x, int m) {
    BigInt r = 1;
    for (int i = 0; i < m; ++i) r *= x - i;
    return r;
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const Rational& q) {
    if (!is_integer(q))
        throw std::domain_error("to_integer: " + q.str() + " is not an integer");
    return boost::multiprecision::numerator(q);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

}  // namespace descent
