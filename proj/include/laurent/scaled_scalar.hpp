#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "laurent/rational.hpp"

namespace laurent {

/// Exact number rho * (sqrt2)^{e2} (sqrt3)^{e3} * pi^{a} * Omega^{b}.
///
/// The field part lives in Q(sqrt2, sqrt3), stored on the basis
/// (1, sqrt2, sqrt3, sqrt6).  The unit monomial pi^a Omega^b is shared by
/// the whole value; addition of values with different unit monomials is an
/// error (zero compares equal to zero regardless of units).  Internally the
/// pi exponent is kept in half-integer steps so that sqrt(pi) factors from
/// unary theta coefficients circulate exactly; every final Laurent
/// coefficient has an integral pi power.
class ScaledScalar {
public:
    std::array<Rat, 4> f{Rat(0), Rat(0), Rat(0), Rat(0)};  // 1, sqrt2, sqrt3, sqrt6
    int pi2 = 0;    // exponent of sqrt(pi): value carries pi^{pi2/2}
    int omega = 0;  // exponent of Omega

    ScaledScalar() = default;
    ScaledScalar(const Rat& r) { f[0] = r; }
    ScaledScalar(long long n) { f[0] = Rat(n); }

    static ScaledScalar zero() { return ScaledScalar(); }
    static ScaledScalar one() { return ScaledScalar(Rat(1)); }

    static ScaledScalar unit(const Rat& rho, int e2, int e3, int pi_exp, int omega_exp) {
        ScaledScalar s;
        int idx = (e2 % 2 != 0 ? 1 : 0) + (e3 % 2 != 0 ? 2 : 0);
        Rat extra = rat_pow(Rat(2), e2 / 2) * rat_pow(Rat(3), e3 / 2);
        s.f[idx] = rho * extra;
        s.pi2 = 2 * pi_exp;
        s.omega = omega_exp;
        return s;
    }

    static ScaledScalar sqrt2() { return unit(Rat(1), 1, 0, 0, 0); }
    static ScaledScalar sqrt3() { return unit(Rat(1), 0, 1, 0, 0); }
    static ScaledScalar pi_pow(int a) { return unit(Rat(1), 0, 0, a, 0); }
    static ScaledScalar omega_pow(int b) { return unit(Rat(1), 0, 0, 0, b); }
    static ScaledScalar sqrt_pi() {
        ScaledScalar s = one();
        s.pi2 = 1;
        return s;
    }

    bool is_zero() const {
        return f[0] == 0 && f[1] == 0 && f[2] == 0 && f[3] == 0;
    }

    bool is_rational() const {
        return f[1] == 0 && f[2] == 0 && f[3] == 0 && pi2 == 0 && omega == 0;
    }

    /// Zero values drop their unit monomial so that units never block 0 + x.
    void normalize() {
        if (is_zero()) { pi2 = 0; omega = 0; }
    }

    friend ScaledScalar operator+(const ScaledScalar& a, const ScaledScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.pi2 != b.pi2 || a.omega != b.omega)
            throw UnitMismatch("cannot add pi^" + std::to_string(a.pi2) + "/2 Omega^" +
                               std::to_string(a.omega) + " to pi^" + std::to_string(b.pi2) +
                               "/2 Omega^" + std::to_string(b.omega));
        ScaledScalar out = a;
        for (int i = 0; i < 4; ++i) out.f[i] += b.f[i];
        out.normalize();
        return out;
    }

    ScaledScalar operator-() const {
        ScaledScalar out = *this;
        for (auto& x : out.f) x = -x;
        return out;
    }

    friend ScaledScalar operator-(const ScaledScalar& a, const ScaledScalar& b) { return a + (-b); }

    friend ScaledScalar operator*(const ScaledScalar& a, const ScaledScalar& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        ScaledScalar out;
        out.pi2 = a.pi2 + b.pi2;
        out.omega = a.omega + b.omega;
        // basis products: index bit0 = sqrt2 present, bit1 = sqrt3 present
        static const Rat squares[4] = {Rat(1), Rat(2), Rat(3), Rat(6)};
        for (int i = 0; i < 4; ++i) {
            if (a.f[i] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (b.f[j] == 0) continue;
                int k = i ^ j;
                Rat scale = squares[i & j];  // repeated radicals square out
                out.f[k] += a.f[i] * b.f[j] * scale;
            }
        }
        out.normalize();
        return out;
    }

    ScaledScalar& operator+=(const ScaledScalar& o) { return *this = *this + o; }
    ScaledScalar& operator-=(const ScaledScalar& o) { return *this = *this - o; }
    ScaledScalar& operator*=(const ScaledScalar& o) { return *this = *this * o; }

    friend ScaledScalar operator*(const ScaledScalar& a, const Rat& r) {
        ScaledScalar out = a;
        for (auto& x : out.f) x *= r;
        out.normalize();
        return out;
    }
    friend ScaledScalar operator*(const Rat& r, const ScaledScalar& a) { return a * r; }

    ScaledScalar inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero ScaledScalar");
        // rationalize by conjugating over sqrt2, then over sqrt3
        ScaledScalar c2 = *this;
        c2.f[1] = -c2.f[1]; c2.f[3] = -c2.f[3];
        ScaledScalar p = *this * c2;            // free of sqrt2
        ScaledScalar c3 = p;
        c3.f[2] = -c3.f[2]; c3.f[3] = -c3.f[3];
        ScaledScalar n = p * c3;                // field part is rational
        ScaledScalar out = c2 * c3;
        for (auto& x : out.f) x /= n.f[0];
        out.pi2 = -pi2;
        out.omega = -omega;
        out.normalize();
        return out;
    }

    friend ScaledScalar operator/(const ScaledScalar& a, const ScaledScalar& b) {
        return a * b.inverse();
    }

    ScaledScalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        ScaledScalar out = one(), b = *this;
        while (e) {
            if (e & 1) out = out * b;
            b = b * b;
            e >>= 1;
        }
        return out;
    }

    friend bool operator==(const ScaledScalar& a, const ScaledScalar& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.f == b.f && a.pi2 == b.pi2 && a.omega == b.omega;
    }
    friend bool operator!=(const ScaledScalar& a, const ScaledScalar& b) { return !(a == b); }

    int pi_exp() const {
        if (pi2 % 2 != 0)
            throw Unsupported("value carries a half-integer power of pi");
        return pi2 / 2;
    }

    /// Substitute floats for pi, Omega and the radicals.
    double to_double(double omega_value) const {
        double field = rat_dbl(f[0]) + rat_dbl(f[1]) * std::sqrt(2.0) +
                       rat_dbl(f[2]) * std::sqrt(3.0) + rat_dbl(f[3]) * std::sqrt(6.0);
        return field * std::pow(M_PI, pi2 / 2.0) * std::pow(omega_value, omega);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        const char* radicals[4] = {"", "*sqrt2", "*sqrt3", "*sqrt6"};
        for (int i = 0; i < 4; ++i) {
            if (f[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += rat_str(f[i]) + radicals[i];
        }
        if (pi2 != 0) out += (pi2 % 2 == 0) ? "*pi^" + std::to_string(pi2 / 2)
                                            : "*pi^(" + std::to_string(pi2) + "/2)";
        if (omega != 0) out += "*Om^" + std::to_string(omega);
        return out;
    }

private:
    static double rat_dbl(const Rat& r) { return r.convert_to<double>(); }
};

/// sqrt of a nonnegative rational as a ScaledScalar, when it lies in
/// Q(sqrt2, sqrt3): r = s^2 * u with u in {1, 2, 3, 6}.
inline std::optional<ScaledScalar> sqrt_rational(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return ScaledScalar::zero();
    Int n = rat_num(r), d = rat_den(r);
    // sqrt(n/d) = sqrt(n d)/d
    Int nd = n * d;
    Int root = boost::multiprecision::sqrt(nd);
    for (Int u : {Int(1), Int(2), Int(3), Int(6)}) {
        if (nd % u != 0) continue;
        Int sq = nd / u;
        Int s = boost::multiprecision::sqrt(sq);
        if (s * s == sq) {
            ScaledScalar out = ScaledScalar::unit(Rat(s, d), u == 2 || u == 6 ? 1 : 0,
                                                  u == 3 || u == 6 ? 1 : 0, 0, 0);
            return out;
        }
    }
    (void)root;
    return std::nullopt;
}

} // namespace laurent
