#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "laurent/errors.hpp"

namespace laurent {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rat(Int(num), Int(den));
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int int_pow(Int base, unsigned exp) {
    Int out = 1;
    while (exp) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

inline Rat rat_pow(const Rat& base, long long exp) {
    if (exp == 0) return Rat(1);
    if (exp < 0) {
        if (base == 0) throw DivisionByZero("0 to a negative power");
        return Rat(1) / rat_pow(base, -exp);
    }
    Rat out = 1, b = base;
    long long e = exp;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Int factorial(unsigned n) {
    Int out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

/// Generalized binomial binom(m, n) = m(m-1)...(m-n+1)/n! for rational m, n >= 0.
inline Rat binomial(const Rat& m, unsigned n) {
    Rat out = 1;
    for (unsigned j = 0; j < n; ++j) out *= (m - Rat(j));
    return out / Rat(factorial(n));
}

inline Int binomial_int(long long m, long long n) {
    if (n < 0) return 0;
    Int out = 1;
    for (long long j = 0; j < n; ++j) out *= Int(m - j);
    return out / factorial(static_cast<unsigned>(n));
}

/// Pochhammer rising factorial (x)_n = x(x+1)...(x+n-1).
inline Rat pochhammer(const Rat& x, unsigned n) {
    Rat out = 1;
    for (unsigned j = 0; j < n; ++j) out *= (x + Rat(j));
    return out;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_str(const Rat& r) {
    std::string out = rat_num(r).str();
    if (!is_integer(r)) out += "/" + rat_den(r).str();
    return out;
}

} // namespace laurent
