#pragma once

#include <cctype>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "laurent/qseries.hpp"
#include "laurent/ratfunc.hpp"

namespace laurent {

using QRat = QSeries<Rat>;

namespace detail {
inline Int sigma(long long n, int k) {
    Int s = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += int_pow(Int(d), k);
        long long e = n / d;
        if (e != d) s += int_pow(Int(e), k);
    }
    return s;
}
} // namespace detail

/// Eisenstein series E_k = 1 + c_k sum sigma_{k-1}(n) q^n for k in {2,4,6},
/// exact to `order` terms (exponents 0..order-1 known).
inline QRat eisenstein(int k, long long order) {
    long long c = k == 2 ? -24 : k == 4 ? 240 : -504;
    if (k != 2 && k != 4 && k != 6) throw ArgumentError("eisenstein: k must be 2, 4 or 6");
    QRat out(1, 2 * k, order - 1);
    out.set(Coset(), 0, Rat(1));
    for (long long n = 1; n < order; ++n)
        out.set(Coset(), n, Rat(c) * Rat(detail::sigma(n, k - 1)));
    return out;
}

/// eta(tau)^e as a q-series with exponent denominator 24 (exponents e/24 + n).
inline QRat eta_power(int e, long long order) {
    if (e < 0) return qseries_invert(eta_power(-e, order));
    // prod (1-q^n)^e up to q^{order-1}
    std::vector<Rat> c(static_cast<std::size_t>(order), Rat(0));
    c[0] = 1;
    for (long long n = 1; n < order; ++n) {
        // multiply by (1-q^n)^e using binomials
        std::vector<Rat> next(c.size(), Rat(0));
        for (long long j = 0; j * n < order && j <= e; ++j) {
            Rat b = Rat(binomial_int(e, j));
            if (j % 2 == 1) b = -b;
            for (long long i = 0; i + j * n < order; ++i)
                if (c[i] != 0) next[i + j * n] += c[i] * b;
        }
        c = std::move(next);
    }
    QRat out(24, e, 24 * (order - 1) + e);
    for (long long n = 0; n < order; ++n)
        if (c[n] != 0) out.set(Coset(), 24 * n + e, c[n]);
    return out;
}

/// Delta = (E4^3 - E6^2)/1728, exact.
inline QRat delta_series(long long order) {
    QRat e4 = eisenstein(4, order), e6 = eisenstein(6, order);
    QRat num = e4 * e4 * e4 - e6 * e6;
    QRat out = num.scaled_rat(Rat(1, 1728));
    out.weight2 = 24;
    return out;
}

// ---------------------------------------------------------------------------
// Modular-form expressions
// ---------------------------------------------------------------------------

enum class FormAtom { E2, E4, E6, Delta, Eta, J };

/// Expression tree over the level-one atoms with +, -, *, /, integer powers
/// and rational constants.  Weights are half-integers (weight2 = 2*weight).
struct FormExpr {
    enum class Kind { Atom, Number, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind;
    FormAtom atom = FormAtom::E4;
    Rat number;
    long long exponent = 0;
    std::shared_ptr<const FormExpr> lhs, rhs;

    using Ptr = std::shared_ptr<const FormExpr>;

    static Ptr make_atom(FormAtom a) {
        auto e = std::make_shared<FormExpr>();
        e->kind = Kind::Atom;
        e->atom = a;
        return e;
    }
    static Ptr make_number(const Rat& r) {
        auto e = std::make_shared<FormExpr>();
        e->kind = Kind::Number;
        e->number = r;
        return e;
    }
    static Ptr make_unary(Kind k, Ptr a) {
        auto e = std::make_shared<FormExpr>();
        e->kind = k;
        e->lhs = std::move(a);
        return e;
    }
    static Ptr make_binary(Kind k, Ptr a, Ptr b) {
        auto e = std::make_shared<FormExpr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static Ptr make_pow(Ptr a, long long n) {
        auto e = std::make_shared<FormExpr>();
        e->kind = Kind::Pow;
        e->lhs = std::move(a);
        e->exponent = n;
        return e;
    }
};

inline int atom_weight2(FormAtom a) {
    switch (a) {
        case FormAtom::E2: return 4;
        case FormAtom::E4: return 8;
        case FormAtom::E6: return 12;
        case FormAtom::Delta: return 24;
        case FormAtom::Eta: return 1;
        case FormAtom::J: return 0;
    }
    return 0;
}

inline const char* atom_name(FormAtom a) {
    switch (a) {
        case FormAtom::E2: return "E2";
        case FormAtom::E4: return "E4";
        case FormAtom::E6: return "E6";
        case FormAtom::Delta: return "Delta";
        case FormAtom::Eta: return "eta";
        case FormAtom::J: return "j";
    }
    return "?";
}

/// Inferred weight (doubled).  Addition of unequal weights raises WeightError
/// with the two offending weights; rational constants are weight 0.
inline int infer_weight2(const FormExpr& e) {
    using K = FormExpr::Kind;
    switch (e.kind) {
        case K::Atom: return atom_weight2(e.atom);
        case K::Number: return 0;
        case K::Neg: return infer_weight2(*e.lhs);
        case K::Add:
        case K::Sub: {
            int a = infer_weight2(*e.lhs), b = infer_weight2(*e.rhs);
            if (a != b) throw WeightError(a, b);
            return a;
        }
        case K::Mul: return infer_weight2(*e.lhs) + infer_weight2(*e.rhs);
        case K::Div: return infer_weight2(*e.lhs) - infer_weight2(*e.rhs);
        case K::Pow: return static_cast<int>(infer_weight2(*e.lhs) * e.exponent);
    }
    return 0;
}

/// Exact q-expansion to the requested number of integer q-orders.
inline QRat q_expansion(const FormExpr& e, long long order) {
    if (order < 1) throw ArgumentError("q_expansion needs order >= 1");
    using K = FormExpr::Kind;
    switch (e.kind) {
        case K::Atom:
            switch (e.atom) {
                case FormAtom::E2: return eisenstein(2, order);
                case FormAtom::E4: return eisenstein(4, order);
                case FormAtom::E6: return eisenstein(6, order);
                case FormAtom::Delta: return delta_series(order);
                case FormAtom::Eta: return eta_power(1, order);
                case FormAtom::J: {
                    QRat e4 = eisenstein(4, order + 1);
                    QRat num = e4 * e4 * e4;
                    QRat out = num * qseries_invert(delta_series(order + 1));
                    out.weight2 = 0;
                    return out;
                }
            }
            break;
        case K::Number:
            return QRat::constant(e.number, 0, kFullCoverage);
        case K::Neg: return -q_expansion(*e.lhs, order);
        case K::Add: return q_expansion(*e.lhs, order) + q_expansion(*e.rhs, order);
        case K::Sub: return q_expansion(*e.lhs, order) - q_expansion(*e.rhs, order);
        case K::Mul: return q_expansion(*e.lhs, order) * q_expansion(*e.rhs, order);
        case K::Div: {
            QRat num = q_expansion(*e.lhs, order);
            QRat den = q_expansion(*e.rhs, order);
            QRat out = num * qseries_invert(den);
            out.weight2 = infer_weight2(e);
            return out;
        }
        case K::Pow: {
            if (e.lhs->kind == K::Atom && e.lhs->atom == FormAtom::Eta)
                return eta_power(static_cast<int>(e.exponent), order);
            return qseries_pow(q_expansion(*e.lhs, order), e.exponent);
        }
    }
    throw ArgumentError("malformed expression");
}

/// Substitute the weight-0 coordinate of a CM point: E4 -> t, E6 -> 1 for the
/// zeta chart (t = E4 E6^{-2/3}) or E4 -> 1, E6 -> t for the i chart
/// (t = E6 E4^{-3/2}).  Valid for expressions rational in E4, E6; E2 and odd
/// eta powers are rejected.
inline RatFunc substitute_t(const FormExpr& e, bool zeta_chart) {
    using K = FormExpr::Kind;
    switch (e.kind) {
        case K::Atom:
            switch (e.atom) {
                case FormAtom::E4: return zeta_chart ? RatFunc::t() : RatFunc(Rat(1));
                case FormAtom::E6: return zeta_chart ? RatFunc(Rat(1)) : RatFunc::t();
                case FormAtom::Delta: {
                    RatFunc e4 = substitute_t(*FormExpr::make_atom(FormAtom::E4), zeta_chart);
                    RatFunc e6 = substitute_t(*FormExpr::make_atom(FormAtom::E6), zeta_chart);
                    return (e4 * e4 * e4 - e6 * e6) * Rat(1, 1728);
                }
                case FormAtom::J: {
                    RatFunc e4 = substitute_t(*FormExpr::make_atom(FormAtom::E4), zeta_chart);
                    RatFunc e6 = substitute_t(*FormExpr::make_atom(FormAtom::E6), zeta_chart);
                    RatFunc d = (e4 * e4 * e4 - e6 * e6) * Rat(1, 1728);
                    return e4 * e4 * e4 / d;
                }
                case FormAtom::E2:
                case FormAtom::Eta:
                    throw ExpressionNotLevelOne(std::string(atom_name(e.atom)) +
                                                " is not a rational expression in E4, E6");
            }
            break;
        case K::Number: return RatFunc(e.number);
        case K::Neg: return -substitute_t(*e.lhs, zeta_chart);
        case K::Add: return substitute_t(*e.lhs, zeta_chart) + substitute_t(*e.rhs, zeta_chart);
        case K::Sub: return substitute_t(*e.lhs, zeta_chart) - substitute_t(*e.rhs, zeta_chart);
        case K::Mul: return substitute_t(*e.lhs, zeta_chart) * substitute_t(*e.rhs, zeta_chart);
        case K::Div: return substitute_t(*e.lhs, zeta_chart) / substitute_t(*e.rhs, zeta_chart);
        case K::Pow: {
            if (e.lhs->kind == K::Atom && e.lhs->atom == FormAtom::Eta) {
                long long ep = e.exponent;
                if (ep % 24 == 0) {
                    RatFunc d = substitute_t(*FormExpr::make_atom(FormAtom::Delta), zeta_chart);
                    RatFunc out(Rat(1));
                    for (long long i = 0; i < std::abs(ep) / 24; ++i) out = out * d;
                    return ep > 0 ? out : RatFunc(Rat(1)) / out;
                }
                throw ExpressionNotLevelOne("eta^" + std::to_string(ep) +
                                            " is not a rational expression in E4, E6");
            }
            RatFunc base = substitute_t(*e.lhs, zeta_chart);
            RatFunc out(Rat(1));
            for (long long i = 0; i < std::abs(e.exponent); ++i) out = out * base;
            return e.exponent >= 0 ? out : RatFunc(Rat(1)) / out;
        }
    }
    throw ArgumentError("malformed expression");
}

inline std::string print_expr(const FormExpr& e) {
    using K = FormExpr::Kind;
    switch (e.kind) {
        case K::Atom: return atom_name(e.atom);
        case K::Number: return rat_str(e.number);
        case K::Neg: return "-" + print_expr(*e.lhs);
        case K::Add: return "(" + print_expr(*e.lhs) + " + " + print_expr(*e.rhs) + ")";
        case K::Sub: return "(" + print_expr(*e.lhs) + " - " + print_expr(*e.rhs) + ")";
        case K::Mul: return "(" + print_expr(*e.lhs) + " * " + print_expr(*e.rhs) + ")";
        case K::Div: return "(" + print_expr(*e.lhs) + " / " + print_expr(*e.rhs) + ")";
        case K::Pow: return print_expr(*e.lhs) + "^" + std::to_string(e.exponent);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Serre derivative tower
// ---------------------------------------------------------------------------

/// theta_phi f = q df/dq - k phi f for f of weight k.
inline QRat serre_derivative(const QRat& f, const QRat& phi) {
    QRat out = f.qdq();
    QRat corr = (phi * f).scaled_rat(Rat(f.weight2, 2));
    corr.weight2 = out.weight2;
    out = out - corr;
    out.weight2 = f.weight2 + 4;
    return out;
}

/// The tower theta^{[0]} f, ..., theta^{[depth]} f with
///   theta^{[m+1]} f = theta(theta^{[m]} f) + m (m+k-1) Phi theta^{[m-1]} f,
/// Phi = phi' - phi^2 of weight 4.  Each entry is modular of weight k + 2m.
inline std::vector<QRat> serre_tower(const QRat& f, const QRat& phi, const QRat& Phi, int depth) {
    if (depth < 0) throw ArgumentError("serre_tower needs depth >= 0");
    Rat k(f.weight2, 2);
    std::vector<QRat> out{f};
    for (int m = 0; m < depth; ++m) {
        QRat next = serre_derivative(out.back(), phi);
        if (m >= 1) {
            QRat corr = (Phi * out[m - 1]).scaled_rat(Rat(m) * (Rat(m) + k - 1));
            corr.weight2 = next.weight2;
            next = next + corr;
        }
        out.push_back(std::move(next));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Nearly-holomorphic forms and the raising operator
// ---------------------------------------------------------------------------

/// sum_j y^{-j} f_j(q) of weight k; coefficients are ScaledScalar so the pi
/// powers introduced by raising stay exact.
struct NearlyHolomorphic {
    int weight2 = 0;
    std::vector<QSeries<ScaledScalar>> parts;  // index j = power of 1/y

    static NearlyHolomorphic from_holomorphic(const QRat& f) {
        NearlyHolomorphic out;
        out.weight2 = f.weight2;
        QSeries<ScaledScalar> p(f.den, f.weight2, f.coverage);
        for (const auto& [key, v] : f.terms) p.set(key.first, key.second, ScaledScalar(v));
        out.parts.push_back(std::move(p));
        return out;
    }

    bool holomorphic() const {
        for (std::size_t j = 1; j < parts.size(); ++j)
            if (!parts[j].is_zero()) return false;
        return true;
    }
};

/// One application of R_k = 2i d/dz + k/y on sum_j y^{-j} f_j:
///   part_j      gains -4 pi n per q^n        (from 2i d/dz on f_j)
///   part_{j+1}  gains (k - j) f_j            (from k/y and d/dz of y^{-j}).
inline NearlyHolomorphic raise_once(const NearlyHolomorphic& f) {
    NearlyHolomorphic out;
    out.weight2 = f.weight2 + 4;
    Rat k(f.weight2, 2);
    long long den = f.parts.empty() ? 1 : f.parts[0].den;
    long long cov = kFullCoverage;
    for (const auto& p : f.parts) {
        if (p.den != den) throw ArgumentError("mixed exponent denominators across parts");
        cov = std::min(cov, p.coverage);
    }
    out.parts.assign(f.parts.size() + 1, QSeries<ScaledScalar>(den, out.weight2, cov));
    for (std::size_t j = 0; j < f.parts.size(); ++j) {
        const auto& pj = f.parts[j];
        for (const auto& [key, v] : pj.terms) {
            Rat n = pj.exponent(key.second);
            if (n != 0)
                out.parts[j].add_to(key.first, key.second,
                                    v * ScaledScalar::pi_pow(1) * (Rat(-4) * n));
            Rat lift = k - Rat(static_cast<long long>(j));
            if (lift != 0)
                out.parts[j + 1].add_to(key.first, key.second, v * lift);
        }
    }
    return out;
}

/// Iterated raising operator R^m with weight bookkeeping.
inline NearlyHolomorphic raise_iterated(const NearlyHolomorphic& f, int m) {
    if (m < 0) throw ArgumentError("raise_iterated needs m >= 0");
    NearlyHolomorphic out = f;
    for (int i = 0; i < m; ++i) out = raise_once(out);
    return out;
}

} // namespace laurent
