#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laurent/classical.hpp"
#include "laurent/ratfunc.hpp"
#include "laurent/scaled_scalar.hpp"
#include "laurent/trunc_series.hpp"

namespace laurent {

/// A CM expansion point together with the quasi-recursion data attached to
/// its weight-0 coordinate t.  The recursion coefficients are
///   a1(t),  a_i(x, y, t) = x a_{i,1}(t) + y a_{i,2}(t)   (i = 2, 3),
/// and the unit normalization records t0 = t(z0), y0 = Im z0 and the exact
/// relation Omega_unit^2 = sqrt_unit * Omega_{-D}^2, where Omega_unit is the
/// period with E4(i) = Omega_unit^4 resp. E6(zeta) = Omega_unit^6.
struct RecursionSpec {
    std::string name;            // "i" or "zeta" for the built-ins
    int D = 0;                   // |discriminant|
    Rat t0;                      // t(z0), 0 for the built-ins
    ScaledScalar y0;             // Im z0, exact
    ScaledScalar sqrt_unit;      // Omega_unit^2 / Omega_{-D}^2 (= 2 sqrt3 built-in)
    bool zeta_chart = false;     // which t-coordinate substitute_t uses
    Poly a1, a21, a22, a31, a32;

    Poly a2(const Rat& x, const Rat& y) const { return a21 * x + a22 * y; }
    Poly a3(const Rat& x, const Rat& y) const { return a31 * x + a32 * y; }
    RatFunc a2r(const Rat& x, const Rat& y) const { return RatFunc(a2(x, y)); }
    RatFunc a3r(const Rat& x, const Rat& y) const { return RatFunc(a3(x, y)); }

    /// Leading Laurent coefficient h~_1 of the coordinate function h = t
    /// (simple zero at z0); equals a1(t0) by one step of the recursion.
    Rat htilde1() const { return a1.eval(t0); }
};

/// Built-in point z0 = i: D = 4, t = E6 E4^{-3/2}, phi = E2/12.
inline RecursionSpec spec_i() {
    RecursionSpec s;
    s.name = "i";
    s.D = 4;
    s.t0 = 0;
    s.y0 = ScaledScalar::one();
    s.sqrt_unit = ScaledScalar::unit(Rat(2), 0, 1, 0, 0);  // 2 sqrt3: E4(i) = 12 Om^4
    s.zeta_chart = false;
    s.a1 = Poly({Rat(-1, 2), Rat(0), Rat(1, 2)});          // (t^2-1)/2
    s.a21 = Poly({Rat(0), Rat(-1, 6)});                    // -t/6
    s.a22 = Poly({Rat(0), Rat(-1, 12)});                   // -t/12
    s.a31 = Poly(Rat(-1, 144));
    s.a32 = Poly(Rat(-1, 144));
    return s;
}

/// Built-in point z0 = zeta = (-1 + sqrt(-3))/2: D = 3, t = E4 E6^{-2/3}.
inline RecursionSpec spec_zeta() {
    RecursionSpec s;
    s.name = "zeta";
    s.D = 3;
    s.t0 = 0;
    s.y0 = ScaledScalar::unit(Rat(1, 2), 0, 1, 0, 0);      // sqrt3/2
    s.sqrt_unit = ScaledScalar::unit(Rat(2), 0, 1, 0, 0);  // 2 sqrt3: E6(zeta) = 24 sqrt3 Om^6
    s.zeta_chart = true;
    s.a1 = Poly({Rat(-1, 3), Rat(0), Rat(0), Rat(1, 3)});  // (t^3-1)/3
    s.a21 = Poly({Rat(0), Rat(0), Rat(-1, 6)});            // -t^2/6
    s.a22 = Poly({Rat(0), Rat(0), Rat(-1, 12)});           // -t^2/12
    s.a31 = Poly({Rat(0), Rat(-1, 144)});                  // -t/144
    s.a32 = Poly({Rat(0), Rat(-1, 144)});
    return s;
}

inline RecursionSpec builtin_spec(const std::string& name) {
    if (name == "i") return spec_i();
    if (name == "zeta") return spec_zeta();
    throw ArgumentError("unknown point '" + name + "' (built-ins: i, zeta)");
}

// ---------------------------------------------------------------------------
// Recursions
// ---------------------------------------------------------------------------

/// Rodriguez-Villegas--Zagier quasi-recursion
///   (m+1) p_{m+1} = a1 p_m' + a2(m, k, t) p_m + a3(m-1, k, t) p_{m-1},
/// starting from p_{-1} = 0 and the supplied p_0 (RatFunc initial data is
/// accepted; polynomial input stays polynomial).
inline std::vector<RatFunc> rvz_sequence(const RecursionSpec& s, int k, const RatFunc& p0,
                                         int count) {
    if (count < 1) throw ArgumentError("rvz_sequence needs count >= 1");
    std::vector<RatFunc> ps{p0};
    RatFunc prev;  // p_{-1} = 0
    RatFunc a1(s.a1);
    for (int m = 0; m + 1 < count; ++m) {
        RatFunc next = a1 * ps.back().derivative() + s.a2r(Rat(m), Rat(k)) * ps.back() +
                       s.a3r(Rat(m - 1), Rat(k)) * prev;
        next = next * Rat(1, m + 1);
        prev = ps.back();
        ps.push_back(std::move(next));
    }
    return ps;
}

/// The introduction's recursion for Delta at z0 = i (O'Sullivan--Risager
/// normalization):  p_0 = 1, p_1 = 0,
///   p_{m+1} = -2 m t p_m + 6 (t^2 - 1) p_m' - m (m + 11) p_{m-1};
/// all coefficients are integers.
inline std::vector<Poly> intro_delta_sequence(int count) {
    if (count < 2) throw ArgumentError("intro_delta_sequence needs count >= 2");
    std::vector<Poly> ps{Poly(Rat(1)), Poly()};
    Poly six_t2m1({Rat(-6), Rat(0), Rat(6)});
    Poly neg2t({Rat(0), Rat(-2)});
    for (int m = 1; m + 1 < count; ++m) {
        Poly next = neg2t * Rat(m) * ps[m] + six_t2m1 * ps[m].derivative() -
                    Rat(static_cast<long long>(m) * (m + 11)) * ps[m - 1];
        ps.push_back(std::move(next));
    }
    return ps;
}

/// The linear differential operator
///   L_k = a1(t) d/dt + (a31 X^2 + a21 X - 1) d/dX + (a32 X + a22) k
/// applied to a truncated series over Q(t).  The -1 d/dX term lowers the
/// guaranteed order by one.
inline TruncSeries<RatFunc> apply_L(const RecursionSpec& s, int k,
                                    const TruncSeries<RatFunc>& series) {
    RatFunc a1(s.a1), a21(s.a21), a22(s.a22), a31(s.a31), a32(s.a32);
    TruncSeries<RatFunc> out;
    out.lowest = series.lowest - 1;
    out.trunc = series.trunc - 1;
    out.c.assign(std::max<int>(0, out.trunc - out.lowest), RatFunc());
    auto add = [&](int m, const RatFunc& v) {
        if (m < out.lowest || m >= out.trunc || v.is_zero()) return;
        out.c[m - out.lowest] += v;
    };
    for (int m = series.lowest; m < series.trunc; ++m) {
        RatFunc cm = series.coeff(m);
        if (cm.is_zero()) continue;
        add(m, a1 * cm.derivative());
        // (a31 X^2 + a21 X - 1) * m X^{m-1}
        add(m + 1, a31 * cm * Rat(m));
        add(m, a21 * cm * Rat(m));
        add(m - 1, RatFunc(Rat(-m)) * cm);
        // (a32 X + a22) k
        add(m + 1, a32 * cm * Rat(k));
        add(m, a22 * cm * Rat(k));
    }
    TruncSeries<RatFunc> res(out.lowest, out.c, out.trunc);
    return res;
}

/// Non-linear recursion for the Laurent coefficients of a meromorphic form of
/// weight k with a pole of order N >= 1 (first method):
///   (m+1+2N) q_{m+1} = a1 q_m' + a2(m,k,t) q_m + a3(m-1,k,t) q_{m-1}
///       - A sum_{j=-N}^{m} q_j q_{m-N-j} - B sum_{j=1-N}^{m} q_j q_{m+1-N-j}
///       - C sum_{j=-N}^{m-1} q_j q_{m-1-N-j}.
/// C = 0 gives the plain two-sum scheme; the constant-q_{-N} normalization
/// (see nonlinear_laurent_qs) needs the extra C convolution.
inline std::vector<RatFunc> nonlinear_recursion(const RecursionSpec& s, int k, int N,
                                                std::pair<RatFunc, RatFunc> qm_init,
                                                const RatFunc& A, const RatFunc& B, int count,
                                                const RatFunc& C = RatFunc()) {
    if (N < 1) throw ArgumentError("nonlinear_recursion needs pole order N >= 1");
    if (count < 2) throw ArgumentError("nonlinear_recursion needs count >= 2");
    std::map<int, RatFunc> q;
    q[-N] = qm_init.first;
    q[1 - N] = qm_init.second;
    RatFunc a1(s.a1);
    auto at = [&](int j) -> RatFunc {
        auto it = q.find(j);
        return it == q.end() ? RatFunc() : it->second;
    };
    for (int m = 1 - N; m - (-N) + 1 < count; ++m) {
        RatFunc acc = a1 * at(m).derivative() + s.a2r(Rat(m), Rat(k)) * at(m) +
                      s.a3r(Rat(m - 1), Rat(k)) * at(m - 1);
        RatFunc sa, sb, sc;
        for (int j = -N; j <= m; ++j) sa += at(j) * at(m - N - j);
        for (int j = 1 - N; j <= m; ++j) sb += at(j) * at(m + 1 - N - j);
        for (int j = -N; j <= m - 1; ++j) sc += at(j) * at(m - 1 - N - j);
        acc = acc - A * sa - B * sb - C * sc;
        q[m + 1] = acc * Rat(1, m + 1 + 2 * N);
    }
    std::vector<RatFunc> out;
    for (int j = -N; j - (-N) < count; ++j) out.push_back(at(j));
    return out;
}

/// Linear recursion of the second method:
///   (m+1+N) q_{m+1} = a1 q_m' + a2(m,k,t) q_m + a3(m-1,k,t) q_{m-1}
///     - N sum_{j=-N}^{m} q_j (h_{m-j} - a2(1,0,t) h_{m-j-1} - a3(1,0,t) h_{m-j-2})
/// where h_{-1} = 1, h_0, h_1, ... are the Laurent coefficients of h'/h at z0
/// and q_{-N} = p_0(t) h~_1^{-N}, q_{-N-1} = 0.  N = 0 reduces to the plain
/// quasi-recursion.
inline std::vector<RatFunc> linear_recursion(const RecursionSpec& s, int k, int N,
                                             const RatFunc& q_init,
                                             const std::vector<Rat>& h_coeffs, int count) {
    if (N < 0) throw ArgumentError("linear_recursion needs N >= 0");
    if (count < 1) throw ArgumentError("linear_recursion needs count >= 1");
    if (N == 0) return rvz_sequence(s, k, q_init, count);
    // h_coeffs[i] = h_{i-1}; the step to q_{m+1} reads h up to index m+N
    if (static_cast<int>(h_coeffs.size()) < count + 2 * N - 2)
        throw InsufficientCoverage("need " + std::to_string(count + 2 * N - 2) +
                                   " h-coefficients, got " + std::to_string(h_coeffs.size()));
    if (h_coeffs[0] != 1)
        throw ArgumentError("h-coefficients must be normalized with h_{-1} = 1");
    auto h = [&](int i) -> Rat {  // h_i for i >= -1
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(h_coeffs.size())) return Rat(0);
        return h_coeffs[idx];
    };
    RatFunc a1(s.a1), a21(s.a21), a31(s.a31);
    std::map<int, RatFunc> q;
    q[-N] = q_init;
    auto at = [&](int j) -> RatFunc {
        auto it = q.find(j);
        return it == q.end() ? RatFunc() : it->second;
    };
    for (int m = -N; m - (-N) + 1 < count; ++m) {
        RatFunc acc = a1 * at(m).derivative() + s.a2r(Rat(m), Rat(k)) * at(m) +
                      s.a3r(Rat(m - 1), Rat(k)) * at(m - 1);
        RatFunc tail;
        for (int j = -N; j <= m; ++j) {
            RatFunc bracket = RatFunc(h(m - j)) - a21 * h(m - j - 1) - a31 * h(m - j - 2);
            tail += at(j) * bracket;
        }
        acc = acc - RatFunc(Rat(N)) * tail;
        q[m + 1] = acc * Rat(1, m + 1 + N);
    }
    std::vector<RatFunc> out;
    for (int j = -N; j - (-N) < count; ++j) out.push_back(at(j));
    return out;
}

// ---------------------------------------------------------------------------
// Pipelines from a modular-form expression
// ---------------------------------------------------------------------------

/// Weight-0 initial datum p_0 for a weight-k expression: substitute the
/// point's t-coordinate.  substitute_t is a ring homomorphism on the atoms
/// rational in (E4, E6), so the result is exact; atoms outside that ring
/// (E2, odd eta powers) raise ExpressionNotLevelOne.
inline RatFunc p0_from_form(const FormExpr& g, const RecursionSpec& s) {
    infer_weight2(g);  // surfaces weight mismatches before substitution
    return substitute_t(g, s.zeta_chart);
}

/// p-sequence of g^{-1} (weight -k) used by the first method.
inline std::vector<RatFunc> inverse_p_sequence(const FormExpr& g, const RecursionSpec& s, int k,
                                               int count) {
    auto inv = FormExpr::make_binary(FormExpr::Kind::Div, FormExpr::make_number(Rat(1)),
                                     std::make_shared<FormExpr>(g));
    RatFunc p0 = p0_from_form(*inv, s);
    return rvz_sequence(s, -k, p0, count);
}

/// Remark-route coefficients of the plain two-sum scheme:
///   A = a3(N-1, -k, t) p_{N-1},  B = N p_N.
inline std::pair<RatFunc, RatFunc> nonlinear_AB(const RecursionSpec& s, int k, int N,
                                                const std::vector<RatFunc>& ps) {
    RatFunc A = s.a3r(Rat(N - 1), Rat(-k)) * ps[N - 1];
    RatFunc B = RatFunc(Rat(N)) * ps[N];
    return {A, B};
}

/// Statement-route coefficients recovered from the initial data
///   q_{-N} = 1/p_N, q_{1-N} = -p_{N+1}/p_N^2:
///   A = (a1 q_{-N}' - a2(N,-k,t) q_{-N} - (N+1) q_{1-N}) / q_{-N}^2,  B = N/q_{-N}.
inline std::pair<RatFunc, RatFunc> nonlinear_AB_from_q(const RecursionSpec& s, int k, int N,
                                                       const RatFunc& q_mN,
                                                       const RatFunc& q_1mN) {
    RatFunc a1(s.a1);
    RatFunc A = (a1 * q_mN.derivative() - s.a2r(Rat(N), Rat(-k)) * q_mN -
                 RatFunc(Rat(N + 1)) * q_1mN) /
                (q_mN * q_mN);
    RatFunc B = RatFunc(Rat(N)) / q_mN;
    return {A, B};
}

/// Laurent q-family of a weight-k form g with pole order N at the point, by
/// the non-linear method with the constant-leading normalization
/// 1/Q = p_N(t0) X^N + sum_{m>N} p_m X^m:
///   q_{-N} = 1/p_N(t0),  q_{1-N} = -p_{N+1}/p_N(t0)^2,
///   B' = N p_N(t0),
///   A' = (N+1) p_{N+1} - a2(N,-k,t) p_N(t0),
///   C' = a3(N,-k,t) (p_N - p_N(t0)).
inline std::vector<RatFunc> nonlinear_laurent_qs(const FormExpr& g, const RecursionSpec& s, int k,
                                                 int N, int count) {
    if (N < 1) throw ArgumentError("nonlinear method needs pole order N >= 1");
    auto ps = inverse_p_sequence(g, s, k, N + 2);
    Rat pN0;
    {
        if (!ps[N].finite_at(s.t0)) throw EvaluationPole("p_N has a pole at t0");
        pN0 = ps[N].eval(s.t0);
    }
    if (pN0 == 0) throw PoleOrderMismatch("p_N(t0) = 0: stated pole order is too large");
    for (int m = 0; m < N; ++m)
        if (ps[m].finite_at(s.t0) && ps[m].eval(s.t0) != 0)
            throw PoleOrderMismatch("p_" + std::to_string(m) +
                                    "(t0) != 0: stated pole order is too small");
    RatFunc q_mN(Rat(1) / pN0);
    RatFunc q_1mN = -ps[N + 1] * (Rat(1) / (pN0 * pN0));
    RatFunc Bp = RatFunc(Rat(N) * pN0);
    RatFunc Ap = RatFunc(Rat(N + 1)) * ps[N + 1] - s.a2r(Rat(N), Rat(-k)) * RatFunc(pN0);
    RatFunc Cp = s.a3r(Rat(N), Rat(-k)) * (ps[N] - RatFunc(pN0));
    return nonlinear_recursion(s, k, N, {q_mN, q_1mN}, Ap, Bp, count, Cp);
}

/// Laurent coefficients of h'/h for the point's coordinate function (or any
/// supplied weight-2 expression with a simple pole and residue h_{-1} = 1),
/// evaluated at t0.  Computed with the non-linear method at N = 1.
inline std::vector<Rat> dlog_h_coefficients(const FormExpr& dlog_h, const RecursionSpec& s,
                                            int count) {
    if (count < 1) throw ArgumentError("dlog_h_coefficients needs count >= 1");
    int w2 = infer_weight2(dlog_h);
    if (w2 != 4) throw WeightError(w2, 4);
    auto qs = nonlinear_laurent_qs(dlog_h, s, 2, 1, count + 1);
    std::vector<Rat> out;
    for (const auto& q : qs) {
        if (!q.finite_at(s.t0)) throw EvaluationPole("h-coefficient has a pole at t0");
        out.push_back(q.eval(s.t0));
    }
    if (out[0] != 1)
        throw PoleOrderMismatch("q_{-1}(t0) = " + rat_str(out[0]) +
                                ", expected residue normalization 1");
    out.resize(count);
    return out;
}

/// Built-in dlog-h expression for a point's coordinate function h = t:
///   i:     d log h = E6/(2 E4) - E4^2/(2 E6)
///   zeta:  d log h = E4^2/(3 E6) - E6/(3 E4)
inline FormExpr::Ptr builtin_dlog_h(const RecursionSpec& s) {
    auto e4 = FormExpr::make_atom(FormAtom::E4);
    auto e6 = FormExpr::make_atom(FormAtom::E6);
    auto frac = [](FormExpr::Ptr n, FormExpr::Ptr d) {
        return FormExpr::make_binary(FormExpr::Kind::Div, std::move(n), std::move(d));
    };
    auto num = [](long long v) { return FormExpr::make_number(Rat(v)); };
    if (s.zeta_chart) {
        // E4^2/(3 E6) - E6/(3 E4)
        auto lhsv = frac(FormExpr::make_pow(e4, 2),
                         FormExpr::make_binary(FormExpr::Kind::Mul, num(3), e6));
        auto rhsv = frac(e6, FormExpr::make_binary(FormExpr::Kind::Mul, num(3), e4));
        return FormExpr::make_binary(FormExpr::Kind::Sub, lhsv, rhsv);
    }
    auto lhsv = frac(e6, FormExpr::make_binary(FormExpr::Kind::Mul, num(2), e4));
    auto rhsv = frac(FormExpr::make_pow(e4, 2),
                     FormExpr::make_binary(FormExpr::Kind::Mul, num(2), e6));
    return FormExpr::make_binary(FormExpr::Kind::Sub, lhsv, rhsv);
}

/// Laurent q-family by the linear method: the p-sequence of f = g h^N with
/// p_0 = (t-expression of g) * t^N, initial q_{-N} = p_0 h~_1^{-N}, and the
/// cached h'/h coefficients.
inline std::vector<RatFunc> linear_laurent_qs(const FormExpr& g, const RecursionSpec& s, int k,
                                              int N, const std::vector<Rat>& h_coeffs,
                                              int count) {
    RatFunc p0 = p0_from_form(g, s);
    for (int i = 0; i < N; ++i) p0 = p0 * RatFunc::t();
    Rat ht1 = s.htilde1();
    RatFunc q_init = p0 * rat_pow(ht1, -N);
    return linear_recursion(s, k, N, q_init, h_coeffs, count);
}

// ---------------------------------------------------------------------------
// Assembly into exact Laurent coefficients
// ---------------------------------------------------------------------------

/// Exact Laurent expansion data at a CM point:
///   (1 - w)^{-k} g = sum_m  coeffs[m] w^m,
///   coeffs[m] = q_m(t0) * sqrt_unit^{(k+2m)/2} * Omega^{k+2m} * (-4 pi y0)^m.
struct LaurentExpansion {
    int k = 0;
    int N = 0;
    std::string point;
    int D = 0;
    std::map<int, ScaledScalar> coeffs;
    std::map<int, RatFunc> symbolic;
};

inline LaurentExpansion assemble_expansion(const RecursionSpec& s, int k, int N,
                                           const std::vector<RatFunc>& qs) {
    LaurentExpansion out;
    out.k = k;
    out.N = N;
    out.point = s.name;
    out.D = s.D;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        int m = static_cast<int>(i) - N;
        if (!qs[i].finite_at(s.t0))
            throw EvaluationPole("q_" + std::to_string(m) + " has a pole at t0");
        Rat v = qs[i].eval(s.t0);
        if ((k + 2 * m) % 2 != 0) throw ArgumentError("odd total weight in unit fold");
        ScaledScalar unit = s.sqrt_unit.pow((k + 2 * m) / 2) *
                            ScaledScalar::omega_pow(k + 2 * m) *
                            (ScaledScalar::pi_pow(1) * Rat(-4) * ScaledScalar::one()).pow(m) *
                            s.y0.pow(m);
        out.coeffs[m] = unit * v;
        out.symbolic[m] = qs[i];
    }
    return out;
}

} // namespace laurent
