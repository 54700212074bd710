#pragma once

// Exact integer and rational scalar types plus the handful of combinatorial
// counting helpers used throughout the library.  Everything here is
// arbitrary-precision; no routine in rectfill ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectfill {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown whenever a computation would exceed its configured work cap
// (enumeration steps, memo states).  Callers that catch it can retry with a
// larger budget; the message names the offending quantity.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// n * (n-1) * ... * (n-k+1), the falling factorial with k factors.
inline Int falling_factorial(long n, long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

inline Int catalan_number(long n) {
    if (n < 0) throw std::invalid_argument("catalan_number: negative index");
    return binomial(2 * n, n) / (n + 1);
}

// Motzkin numbers by the standard recurrence
//   M_{n+1} = M_n + sum_{i=0}^{n-1} M_i M_{n-1-i}.
inline Int motzkin_number(long n) {
    if (n < 0) throw std::invalid_argument("motzkin_number: negative index");
    std::vector<Int> m(static_cast<size_t>(n) + 1);
    m[0] = 1;
    for (long i = 0; i < n; ++i) {
        Int next = m[i];
        for (long j = 0; j < i; ++j) next += m[j] * m[i - 1 - j];
        m[i + 1] = next;
    }
    return m[static_cast<size_t>(n)];
}

inline std::string to_decimal(const Int& v) { return v.str(); }

// "p/q" with q > 0 and gcd(p,q) = 1; boost keeps cpp_rational canonical.
inline std::string to_fraction(const Rat& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline Rat parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_fraction: zero denominator");
    return Rat(num, den);
}

}  // namespace rectfill
