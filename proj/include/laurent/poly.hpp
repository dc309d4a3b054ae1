#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "laurent/rational.hpp"

namespace laurent {

/// Dense univariate polynomial over Q, coefficients ascending by degree.
/// degree() of the zero polynomial is the sentinel -1.
class Poly {
public:
    std::vector<Rat> c;

    Poly() = default;
    Poly(const Rat& r) { if (r != 0) c = {r}; }
    Poly(long long n) { if (n != 0) c = {Rat(n)}; }
    Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c(coeffs) { trim(); }

    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    static Poly monomial(const Rat& coeff, int deg) {
        if (coeff == 0) return Poly();
        std::vector<Rat> v(deg + 1, Rat(0));
        v[deg] = coeff;
        return Poly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    const Rat& lead() const {
        static const Rat z(0);
        return c.empty() ? z : c.back();
    }

    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rat(0);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> out(std::max(a.c.size(), b.c.size()), Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> out(std::max(a.c.size(), b.c.size()), Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
        return Poly(std::move(out));
    }
    Poly operator-() const {
        Poly out = *this;
        for (auto& x : out.c) x = -x;
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> out(a.c.size() + b.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                out[i + j] += a.c[i] * b.c[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Rat& r) {
        Poly out = a;
        for (auto& x : out.c) x *= r;
        out.trim();
        return out;
    }
    friend Poly operator*(const Rat& r, const Poly& a) { return a * r; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<Rat> out(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rat(static_cast<long long>(i));
        return Poly(std::move(out));
    }

    Rat eval(const Rat& x0) const {
        Rat out = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x0 + *it;
        return out;
    }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly r = *this, q;
        q.c.assign(std::max<int>(0, degree() - d.degree() + 1), Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rat factor = r.lead() / d.lead();
            q.c[shift] += factor;
            for (std::size_t i = 0; i < d.c.size(); ++i)
                r.c[shift + i] -= factor * d.c[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += rat_str(c[i]);
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rat(1) / a.lead());  // monic normal form
    return a;
}

} // namespace laurent
