#pragma once

#include <string>

#include "laurent/poly.hpp"

namespace laurent {

/// Rational function over Q: num/den with gcd(num, den) = 1 and monic den.
class RatFunc {
public:
    Poly num, den;

    RatFunc() : num(), den(Rat(1)) {}
    RatFunc(const Rat& r) : num(r), den(Rat(1)) {}
    RatFunc(long long n) : num(n), den(Rat(1)) {}
    RatFunc(const Poly& p) : num(p), den(Rat(1)) {}
    RatFunc(const Poly& n, const Poly& d) { assign(n, d); }

    static RatFunc t() { return RatFunc(Poly::x()); }

    void assign(const Poly& n, const Poly& d) {
        if (d.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (n.is_zero()) { num = Poly(); den = Poly(Rat(1)); return; }
        Poly g = gcd(n, d);
        Poly nn = n.divmod(g).first, dd = d.divmod(g).first;
        Rat lead = dd.lead();
        num = nn * (Rat(1) / lead);
        den = dd * (Rat(1) / lead);
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    RatFunc operator-() const {
        RatFunc out = *this;
        out.num = -out.num;
        return out;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero rational function");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend RatFunc operator*(const RatFunc& a, const Rat& r) {
        return RatFunc(a.num * r, a.den);
    }
    friend RatFunc operator*(const Rat& r, const RatFunc& a) { return a * r; }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }

    RatFunc derivative() const {
        return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
    }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RatFunc(den, num);
    }

    Rat eval(const Rat& x0) const {
        Rat d = den.eval(x0);
        if (d == 0) throw EvaluationPole("rational function has a pole at t0 = " + rat_str(x0));
        return num.eval(x0) / d;
    }

    bool finite_at(const Rat& x0) const { return den.eval(x0) != 0; }

    std::string str(const std::string& var = "t") const {
        if (is_poly()) return num.str(var);
        return "(" + num.str(var) + ") / (" + den.str(var) + ")";
    }
};

/// Value-preserving normalization of a num/den pair (spec operation).
inline RatFunc ratfunc_normalize(const Poly& num, const Poly& den) {
    return RatFunc(num, den);
}

} // namespace laurent
