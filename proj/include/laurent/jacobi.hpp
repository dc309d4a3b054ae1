#pragma once

#include "laurent/poly.hpp"

namespace laurent {

/// Jacobi polynomial P_r^{(alpha,beta)} as an exact Poly in x:
///   sum_s binom(r+alpha, r-s) binom(r+beta, s) ((x+1)/2)^{r-s} ((x-1)/2)^s.
inline Poly jacobi_polynomial(int r, const Rat& alpha, const Rat& beta) {
    if (r < 0) throw ArgumentError("jacobi_polynomial needs r >= 0");
    Poly xp1_half({Rat(1, 2), Rat(1, 2)});   // (x+1)/2
    Poly xm1_half({Rat(-1, 2), Rat(1, 2)});  // (x-1)/2
    Poly out;
    for (int s = 0; s <= r; ++s) {
        Rat c = binomial(alpha + r, static_cast<unsigned>(r - s)) *
                binomial(beta + r, static_cast<unsigned>(s));
        if (c == 0) continue;
        Poly term(c);
        for (int i = 0; i < r - s; ++i) term *= xp1_half;
        for (int i = 0; i < s; ++i) term *= xm1_half;
        out += term;
    }
    return out;
}

inline Rat jacobi_value(int r, const Rat& alpha, const Rat& beta, const Rat& x) {
    if (r < 0) throw ArgumentError("jacobi_value needs r >= 0");
    // evaluate the defining sum directly; exact in Q
    Rat xp = (x + 1) / 2, xm = (x - 1) / 2;
    Rat out = 0;
    for (int s = 0; s <= r; ++s) {
        Rat c = binomial(alpha + r, static_cast<unsigned>(r - s)) *
                binomial(beta + r, static_cast<unsigned>(s));
        out += c * rat_pow(xp, r - s) * rat_pow(xm, s);
    }
    return out;
}

/// Physicist's Hermite polynomial H_l = (2 xi - d/dxi)^l . 1, integer coefficients.
inline Poly hermite_polynomial(int l) {
    if (l < 0) throw ArgumentError("hermite needs l >= 0");
    Poly h(Rat(1));
    Poly two_x({Rat(0), Rat(2)});
    for (int i = 0; i < l; ++i) h = two_x * h - h.derivative();
    return h;
}

inline Rat hermite_value(int l, const Rat& xi) { return hermite_polynomial(l).eval(xi); }

} // namespace laurent
