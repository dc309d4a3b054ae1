#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "laurent/rational.hpp"
#include "laurent/scaled_scalar.hpp"

namespace laurent {

/// Coset label of a vector-valued form component.  Scalar series use "".
using Coset = std::string;

namespace detail {
inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const ScaledScalar& x) { return x.is_zero(); }
inline Rat scalar_mul_rat(const Rat& x, const Rat& r) { return x * r; }
inline ScaledScalar scalar_mul_rat(const ScaledScalar& x, const Rat& r) { return x * r; }
} // namespace detail

/// Fourier series with exponents in (1/den) Z, coefficients in a pluggable
/// scalar ring, vector-valued via coset labels.  Exponent numerators above
/// `coverage` are unknown; no zero coefficients are stored.
template <class S>
class QSeries {
public:
    long long den = 1;       // exponent denominator
    int weight2 = 0;         // twice the weight (half-integers exact)
    long long coverage = 0;  // largest guaranteed-complete exponent numerator
    std::map<std::pair<Coset, long long>, S> terms;

    QSeries() = default;
    QSeries(long long den_, int weight2_, long long coverage_)
        : den(den_), weight2(weight2_), coverage(coverage_) {}

    static QSeries constant(const S& value, int weight2_, long long coverage_) {
        QSeries out(1, weight2_, coverage_);
        out.set(Coset(), 0, value);
        return out;
    }

    void set(const Coset& mu, long long num, const S& value) {
        if (detail::scalar_is_zero(value)) terms.erase({mu, num});
        else terms[{mu, num}] = value;
    }

    void add_to(const Coset& mu, long long num, const S& value) {
        auto key = std::make_pair(mu, num);
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (!detail::scalar_is_zero(value)) terms.emplace(key, value);
        } else {
            it->second = it->second + value;
            if (detail::scalar_is_zero(it->second)) terms.erase(it);
        }
    }

    S coeff(const Coset& mu, long long num) const {
        auto it = terms.find({mu, num});
        return it == terms.end() ? S(0) : it->second;
    }

    /// Exponent of a term as an exact rational.
    Rat exponent(long long num) const { return Rat(Int(num), Int(den)); }

    std::optional<long long> lowest_num() const {
        std::optional<long long> out;
        for (const auto& [key, v] : terms)
            if (!out || key.second < *out) out = key.second;
        return out;
    }

    bool is_zero() const { return terms.empty(); }

    QSeries rescaled(long long new_den) const {
        if (new_den % den != 0) throw ArgumentError("exponent denominator must refine");
        long long f = new_den / den;
        QSeries out(new_den, weight2, coverage * f);
        for (const auto& [key, v] : terms) out.terms[{key.first, key.second * f}] = v;
        return out;
    }

    static long long lcm(long long a, long long b) { return a / std::gcd(a, b) * b; }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        if (a.weight2 != b.weight2) throw WeightError(a.weight2, b.weight2);
        long long d = lcm(a.den, b.den);
        QSeries ra = a.rescaled(d), rb = b.rescaled(d);
        QSeries out(d, a.weight2, std::min(ra.coverage, rb.coverage));
        for (const auto& [key, v] : ra.terms)
            if (key.second <= out.coverage) out.add_to(key.first, key.second, v);
        for (const auto& [key, v] : rb.terms)
            if (key.second <= out.coverage) out.add_to(key.first, key.second, v);
        return out;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
    QSeries operator-() const {
        QSeries out = *this;
        for (auto& [key, v] : out.terms) v = -v;
        return out;
    }

    /// Product over matching exponents; coset labels are concatenated only
    /// through tensor_product, so plain * is for scalar (single-coset) series.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long long d = lcm(a.den, b.den);
        QSeries ra = a.rescaled(d), rb = b.rescaled(d);
        auto la = ra.lowest_num(), lb = rb.lowest_num();
        QSeries out(d, a.weight2 + b.weight2, 0);
        if (!la || !lb) {
            // one factor identically zero as far as known
            out.coverage = !la ? (ra.coverage + (lb ? *lb : 0))
                               : (rb.coverage + (la ? *la : 0));
            return out;
        }
        out.coverage = std::min(ra.coverage + *lb, rb.coverage + *la);
        for (const auto& [ka, va] : ra.terms)
            for (const auto& [kb, vb] : rb.terms) {
                if (ka.first != kb.first && !ka.first.empty() && !kb.first.empty())
                    throw ArgumentError("component-wise product needs tensor_product");
                long long e = ka.second + kb.second;
                if (e > out.coverage) continue;
                Coset mu = ka.first.empty() ? kb.first : ka.first;
                out.add_to(mu, e, va * vb);
            }
        return out;
    }

    QSeries scaled(const S& s) const {
        QSeries out(den, weight2, coverage);
        for (const auto& [key, v] : terms) out.set(key.first, key.second, v * s);
        return out;
    }

    QSeries scaled_rat(const Rat& r) const {
        QSeries out(den, weight2, coverage);
        for (const auto& [key, v] : terms)
            out.set(key.first, key.second, detail::scalar_mul_rat(v, r));
        return out;
    }

    /// q d/dq: multiplies each term by its exponent (weight2 rises by 4,
    /// quasimodular; tracked so bracket totals come out right).
    QSeries qdq() const {
        QSeries out(den, weight2 + 4, coverage);
        for (const auto& [key, v] : terms)
            out.set(key.first, key.second, detail::scalar_mul_rat(v, exponent(key.second)));
        return out;
    }

    /// Truncate coverage (drops terms beyond it).
    QSeries truncated(long long new_cov) const {
        QSeries out(den, weight2, std::min(coverage, new_cov));
        for (const auto& [key, v] : terms)
            if (key.second <= out.coverage) out.terms.insert({key, v});
        return out;
    }
};

/// Multiplicative inverse of a scalar (single-coset) series with invertible
/// leading coefficient.
template <class S>
QSeries<S> qseries_invert(const QSeries<S>& a) {
    auto low = a.lowest_num();
    if (!low) throw NonInvertible("cannot invert a zero series");
    S lead = a.coeff(Coset(), *low);
    if (detail::scalar_is_zero(lead)) throw NonInvertible("zero leading coefficient");
    long long n = a.coverage - *low;  // known length
    if (n < 0) throw NonInvertible("series has no known terms");
    QSeries<S> out(a.den, -a.weight2, -*low + n);
    S lead_inv = S(1) / lead;
    std::vector<S> inv(static_cast<std::size_t>(n) + 1, S(0));
    inv[0] = lead_inv;
    for (long long m = 1; m <= n; ++m) {
        S acc(0);
        for (long long j = 1; j <= m; ++j) {
            S aj = a.coeff(Coset(), *low + j);
            if (!detail::scalar_is_zero(aj)) acc = acc + aj * inv[static_cast<std::size_t>(m - j)];
        }
        inv[static_cast<std::size_t>(m)] = -(lead_inv * acc);
    }
    for (long long m = 0; m <= n; ++m)
        out.set(Coset(), -*low + m, inv[static_cast<std::size_t>(m)]);
    return out;
}

/// Coverage sentinel for exactly-known series (constants, finite sums).
inline constexpr long long kFullCoverage = 1LL << 56;

template <class S>
QSeries<S> qseries_pow(const QSeries<S>& a, long long e) {
    if (e < 0) return qseries_pow(qseries_invert(a), -e);
    if (e == 0) return QSeries<S>::constant(S(1), 0, kFullCoverage);
    QSeries<S> acc = a;
    for (long long i = 1; i < e; ++i) acc = acc * a;
    return acc;
}

/// Tensor product of two vector-valued series with a label combiner.
template <class S>
QSeries<S> tensor_product(const QSeries<S>& a, const QSeries<S>& b,
                          const std::function<std::optional<Coset>(const Coset&, const Coset&)>& combine) {
    long long d = QSeries<S>::lcm(a.den, b.den);
    QSeries<S> ra = a.rescaled(d), rb = b.rescaled(d);
    auto la = ra.lowest_num(), lb = rb.lowest_num();
    QSeries<S> out(d, a.weight2 + b.weight2, 0);
    if (!la || !lb) {
        out.coverage = !la ? (ra.coverage + (lb ? *lb : 0)) : (rb.coverage + (la ? *la : 0));
        return out;
    }
    out.coverage = std::min(ra.coverage + *lb, rb.coverage + *la);
    for (const auto& [ka, va] : ra.terms)
        for (const auto& [kb, vb] : rb.terms) {
            long long e = ka.second + kb.second;
            if (e > out.coverage) continue;
            auto mu = combine(ka.first, kb.first);
            if (!mu) continue;
            out.add_to(*mu, e, va * vb);
        }
    return out;
}

/// Rankin--Cohen bracket [f, g]_r with (2 pi i)^{-r} d^r realized as (q d/dq)^r:
///   [f, g]_r = sum_s (-1)^s binom(k1+r-1, s) binom(k2+r-1, r-s) D^{r-s} f D^s g.
/// Weights may be half-integral; generalized binomials are exact rationals.
template <class S>
QSeries<S> rankin_cohen(const QSeries<S>& f, const QSeries<S>& g, int r) {
    if (r < 0) throw ArgumentError("Rankin-Cohen bracket needs r >= 0");
    Rat k1 = Rat(f.weight2, 2), k2 = Rat(g.weight2, 2);
    std::vector<QSeries<S>> df{f}, dg{g};
    for (int j = 0; j < r; ++j) {
        df.push_back(df.back().qdq());
        dg.push_back(dg.back().qdq());
    }
    QSeries<S> out = (f * g).scaled_rat(Rat(0));
    out.weight2 = f.weight2 + g.weight2 + 4 * r;
    for (int s = 0; s <= r; ++s) {
        Rat c = binomial(k1 + r - 1, static_cast<unsigned>(s)) *
                binomial(k2 + r - 1, static_cast<unsigned>(r - s));
        if (s % 2 == 1) c = -c;
        if (c == 0) continue;
        QSeries<S> piece = (df[r - s] * dg[s]).scaled_rat(c);
        piece.weight2 = out.weight2;
        out = out + piece;
    }
    return out;
}

/// Same bracket but tensoring components instead of multiplying them.
template <class S>
QSeries<S> rankin_cohen_tensor(const QSeries<S>& f, const QSeries<S>& g, int r,
                               const std::function<std::optional<Coset>(const Coset&, const Coset&)>& combine) {
    if (r < 0) throw ArgumentError("Rankin-Cohen bracket needs r >= 0");
    Rat k1 = Rat(f.weight2, 2), k2 = Rat(g.weight2, 2);
    std::vector<QSeries<S>> df{f}, dg{g};
    for (int j = 0; j < r; ++j) {
        df.push_back(df.back().qdq());
        dg.push_back(dg.back().qdq());
    }
    QSeries<S> out = tensor_product(f, g, combine).scaled_rat(Rat(0));
    out.weight2 = f.weight2 + g.weight2 + 4 * r;
    for (int s = 0; s <= r; ++s) {
        Rat c = binomial(k1 + r - 1, static_cast<unsigned>(s)) *
                binomial(k2 + r - 1, static_cast<unsigned>(r - s));
        if (s % 2 == 1) c = -c;
        if (c == 0) continue;
        QSeries<S> piece = tensor_product(df[r - s], dg[s], combine).scaled_rat(c);
        piece.weight2 = out.weight2;
        out = out + piece;
    }
    return out;
}

/// Constant term of <f, g> with the delta pairing on coset labels:
///   sum over cosets mu and exponents n + n' = 0 of f[mu,n] g[mu,n'].
/// Coverage certification: every negative-exponent term of one operand must
/// be matched inside the other's coverage, else InsufficientCoverage.
template <class S>
S ct_pairing(const QSeries<S>& f, const QSeries<S>& g) {
    long long d = QSeries<S>::lcm(f.den, g.den);
    QSeries<S> rf = f.rescaled(d), rg = g.rescaled(d);
    for (const auto& [key, v] : rf.terms)
        if (-key.second > rg.coverage)
            throw InsufficientCoverage("pairing needs exponent " +
                                       rat_str(Rat(Int(-key.second), Int(d))) +
                                       " beyond second operand's coverage");
    for (const auto& [key, v] : rg.terms)
        if (-key.second > rf.coverage)
            throw InsufficientCoverage("pairing needs exponent " +
                                       rat_str(Rat(Int(-key.second), Int(d))) +
                                       " beyond first operand's coverage");
    if (rf.coverage + rg.coverage < 0)
        throw InsufficientCoverage("coverage windows leave an unknown-by-unknown band");
    S acc(0);
    for (const auto& [key, v] : rf.terms) {
        S w = rg.coeff(key.first, -key.second);
        if (!detail::scalar_is_zero(w)) acc = acc + v * w;
    }
    return acc;
}

} // namespace laurent
