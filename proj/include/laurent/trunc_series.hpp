#pragma once

#include <algorithm>
#include <vector>

#include "laurent/errors.hpp"
#include "laurent/rational.hpp"

namespace laurent {

namespace detail {
template <class R> bool ring_is_zero(const R& x) { return x.is_zero(); }
inline bool ring_is_zero(const Rat& x) { return x == 0; }
template <class R> R ring_one() { return R(1); }
} // namespace detail

/// Truncated Laurent series sum_{m >= lowest} coeffs[m - lowest] X^m with
/// exponents >= trunc unknown.  Truncation bookkeeping is pessimistic: an
/// operation's result is only claimed where both operands are known.
template <class R>
class TruncSeries {
public:
    int lowest = 0;
    int trunc = 0;              // exclusive: exponents in [lowest, trunc) stored
    std::vector<R> c;

    TruncSeries() = default;
    TruncSeries(int low, std::vector<R> coeffs, int trunc_order)
        : lowest(low), trunc(trunc_order), c(std::move(coeffs)) {
        c.resize(std::max<int>(0, trunc - lowest), R(0));
        normalize();
    }

    static TruncSeries zero_to(int trunc_order) {
        return TruncSeries(0, {}, trunc_order);
    }

    R coeff(int m) const {
        if (m < lowest || m >= trunc) return R(0);
        return c[m - lowest];
    }

    bool known(int m) const { return m < trunc; }

    /// Drop leading stored zeros (raises `lowest`, keeps `trunc`).
    void normalize() {
        std::size_t skip = 0;
        while (skip < c.size() && detail::ring_is_zero(c[skip])) ++skip;
        if (skip > 0) {
            c.erase(c.begin(), c.begin() + static_cast<long>(skip));
            lowest += static_cast<int>(skip);
        }
        if (c.empty()) lowest = trunc;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int low = std::min(a.lowest, b.lowest);
        int tr = std::min(a.trunc, b.trunc);
        std::vector<R> out(std::max<int>(0, tr - low), R(0));
        for (int m = low; m < tr; ++m) out[m - low] = a.coeff(m) + b.coeff(m);
        return TruncSeries(low, std::move(out), tr);
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        int low = std::min(a.lowest, b.lowest);
        int tr = std::min(a.trunc, b.trunc);
        std::vector<R> out(std::max<int>(0, tr - low), R(0));
        for (int m = low; m < tr; ++m) out[m - low] = a.coeff(m) - b.coeff(m);
        return TruncSeries(low, std::move(out), tr);
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        // unknown tails propagate: a is known on [a.low, a.trunc)
        int low = a.lowest + b.lowest;
        int tr = std::min(a.trunc + b.lowest, b.trunc + a.lowest);
        std::vector<R> out(std::max<int>(0, tr - low), R(0));
        for (int i = a.lowest; i < a.trunc; ++i) {
            if (detail::ring_is_zero(a.coeff(i))) continue;
            for (int j = b.lowest; j < b.trunc && i + j < tr; ++j)
                out[i + j - low] = out[i + j - low] + a.coeff(i) * b.coeff(j);
        }
        return TruncSeries(low, std::move(out), tr);
    }

    TruncSeries operator-() const {
        TruncSeries out = *this;
        for (auto& x : out.c) x = -x;
        return out;
    }

    friend TruncSeries operator*(const TruncSeries& a, const R& s) {
        TruncSeries out = a;
        for (auto& x : out.c) x = x * s;
        return out;
    }

    /// Multiply by X^k.
    TruncSeries shifted(int k) const {
        TruncSeries out = *this;
        out.lowest += k;
        out.trunc += k;
        return out;
    }

    /// d/dX, term-wise.  The guaranteed order drops by one.
    TruncSeries derivative_X() const {
        TruncSeries out;
        out.lowest = lowest - 1;
        out.trunc = trunc - 1;
        out.c.assign(std::max<int>(0, out.trunc - out.lowest), R(0));
        for (int m = lowest; m < trunc; ++m) {
            if (m == 0) continue;
            out.c[m - 1 - out.lowest] = coeff(m) * Rat(m);
        }
        return out;
    }
};

/// Series inverse: s * result = 1 up to truncation; result.lowest = -s.lowest.
template <class R>
TruncSeries<R> series_invert(const TruncSeries<R>& s) {
    TruncSeries<R> a = s;
    a.normalize();
    if (a.c.empty() || detail::ring_is_zero(a.c.front()))
        throw NonInvertible("series has zero leading coefficient");
    int n = a.trunc - a.lowest;  // number of known coefficients
    R lead = a.c.front();
    R lead_inv = detail::ring_one<R>() / lead;
    std::vector<R> inv(n, R(0));
    inv[0] = lead_inv;
    for (int m = 1; m < n; ++m) {
        R acc(0);
        for (int j = 1; j <= m; ++j) {
            if (j < static_cast<int>(a.c.size()))
                acc = acc + a.c[j] * inv[m - j];
        }
        inv[m] = -(lead_inv * acc);
    }
    return TruncSeries<R>(-a.lowest, std::move(inv), -a.lowest + n);
}

} // namespace laurent
