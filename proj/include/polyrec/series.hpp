#pragma once

#include "polyrec/poly.hpp"

namespace polyrec {

// Truncated formal series S(x) = sum_{k>=0} s_k / x^{k+1}. Only the stored
// prefix is known; every operation computes exactly as many coefficients as
// its contract permits and never zero-pads.
template <class R>
struct Series {
    R ring;
    std::vector<typename R::Elem> c;

    int len() const { return (int)c.size(); }
    const typename R::Elem& operator[](int k) const { return c[k]; }
};

using ZSeries = Series<ZRing>;
using QSeries = Series<QRing>;
using ModSeries = Series<ModRing>;

template <class R>
Series<R> make_series(R ring, std::vector<typename R::Elem> coeffs) {
    for (auto& x : coeffs) x = ring.canon(x);
    return Series<R>{std::move(ring), std::move(coeffs)};
}

template <class R>
Series<R> series_add(const Series<R>& a, const Series<R>& b) {
    require_same_ring(a.ring, b.ring);
    int m = std::min(a.len(), b.len());
    std::vector<typename R::Elem> out(m);
    for (int k = 0; k < m; ++k) out[k] = a.ring.canon(a.c[k] + b.c[k]);
    return Series<R>{a.ring, std::move(out)};
}

template <class R>
Series<R> series_sub(const Series<R>& a, const Series<R>& b) {
    require_same_ring(a.ring, b.ring);
    int m = std::min(a.len(), b.len());
    std::vector<typename R::Elem> out(m);
    for (int k = 0; k < m; ++k) out[k] = a.ring.canon(a.c[k] - b.c[k]);
    return Series<R>{a.ring, std::move(out)};
}

// product prefix: coefficient 0 vanishes and coefficient k (k>=1) is
// sum_{i=0}^{k-1} s_i t_{k-1-i}; m input coefficients determine m+1.
template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
    require_same_ring(a.ring, b.ring);
    int m = std::min(a.len(), b.len());
    std::vector<typename R::Elem> out(m + 1, a.ring.zero());
    for (int k = 1; k <= m; ++k) {
        typename R::Elem acc = a.ring.zero();
        for (int i = 0; i < k; ++i) acc = a.ring.canon(acc + a.c[i] * b.c[k - 1 - i]);
        out[k] = acc;
    }
    return Series<R>{a.ring, std::move(out)};
}

namespace detail {
inline Int halve(const ZRing&, const Int& x, const Int& s0) {
    return div_exact(x, 2 * s0, "series square root (non-square input)");
}
inline Rat halve(const QRing&, const Rat& x, const Rat& s0) { return x / (2 * s0); }
}  // namespace detail

// first m-1 coefficients of S from the first m coefficients of S^2 and the
// known leading coefficient s_0 != 0 (2 s_0 must divide exactly over Z)
template <class R>
Series<R> sqrt_prefix(const Series<R>& u, const typename R::Elem& s0) {
    static_assert(!R::modular, "sqrt_prefix needs invertible 2; use sqrt_mod4_to_mod2 for Z4");
    if (u.len() < 1 || !u.ring.is_zero(u.c[0]))
        throw inconsistent_error("series square root: u_0 must be 0");
    if (u.ring.is_zero(s0)) throw std::invalid_argument("series square root: s_0 must be nonzero");
    int m = u.len();
    std::vector<typename R::Elem> s;
    s.reserve(m - 1);
    if (m >= 2) {
        if (!u.ring.is_zero(u.ring.canon(u.c[1] - s0 * s0)))
            throw inconsistent_error("series square root: u_1 != s_0^2");
        s.push_back(s0);
    }
    for (int k = 2; k < m; ++k) {
        // u_k = sum_{i=0}^{k-1} s_i s_{k-1-i}  =>  2 s_0 s_{k-1} = u_k - sum_{i=1}^{k-2} s_i s_{k-1-i}
        typename R::Elem rhs = u.c[k];
        for (int i = 1; i <= k - 2; ++i) rhs = u.ring.canon(rhs - s[i] * s[k - 1 - i]);
        s.push_back(detail::halve(u.ring, rhs, s0));
    }
    return Series<R>{u.ring, std::move(s)};
}

// expansion prefix of p/q for monic q of degree deg(p)+1: the unit lower
// triangular system  s_k = a_k - sum_{j=1}^{k} b_j s_{k-j};
// m coefficients require the top m coefficients of both p and q.
template <class R>
Series<R> ratio_prefix(const TopPoly<R>& num, const TopPoly<R>& den, int m) {
    require_same_ring(num.ring, den.ring);
    if (den.degree != num.degree + 1) throw std::invalid_argument("ratio_prefix: deg q != deg p + 1");
    if (!den.monic()) throw std::invalid_argument("ratio_prefix: q must be monic");
    if (m < 0 || (long)m > std::min((long)num.avail(), (long)den.avail()))
        throw std::invalid_argument("ratio_prefix: truncation too short for requested length");
    std::vector<typename R::Elem> s(m);
    for (int k = 0; k < m; ++k) {
        typename R::Elem acc = num.top(k);
        for (int j = 1; j <= k; ++j) acc = num.ring.canon(acc - den.top(j) * s[k - j]);
        s[k] = num.ring.canon(acc);
    }
    return Series<R>{num.ring, std::move(s)};
}

// forward direction of the same triangular system: numerator coefficients
// a_k = sum_{j=0}^{k} b_j s_{k-j} of p = q*S, for k < count.
template <class R>
TopPoly<R> numerator_prefix(const TopPoly<R>& den, const Series<R>& s, int count) {
    require_same_ring(den.ring, s.ring);
    if (!den.monic()) throw std::invalid_argument("numerator_prefix: q must be monic");
    if (count > s.len() || (long)count > (long)den.avail())
        throw std::invalid_argument("numerator_prefix: not enough data");
    std::vector<typename R::Elem> a(count);
    for (int k = 0; k < count; ++k) {
        typename R::Elem acc = den.ring.zero();
        for (int j = 0; j <= k; ++j) acc = den.ring.canon(acc + den.top(j) * s.c[k - j]);
        a[k] = acc;
    }
    return TopPoly<R>{den.ring, den.degree - 1, std::move(a)};
}

// ---- mod-4 / mod-2 special forms (Props. for Z4 arithmetic) ----

inline const ModRing& z4() { static const ModRing r{Int(4)}; return r; }
inline const ModRing& z2() { static const ModRing r{Int(2)}; return r; }

// invert series_mul mod 4: given U = S*T (m+1 coefficients) and S (m, s_0 odd),
// recover T (m coefficients).
ModSeries deconvolve_mod4(const ModSeries& u, const ModSeries& s);

// first m+1 coefficients of S^2 mod 4 from the first m coefficients of S mod 2
// (squares and doubles mod 4 depend only on residues mod 2)
ModSeries square_mod2_to_mod4(const ModSeries& s);

// inverse: first m coefficients of S mod 2 from the first m+1 of S^2 mod 4,
// assuming s_0 is odd
ModSeries sqrt_mod4_to_mod2(const ModSeries& u);

inline ModSeries reduce_series(const ZSeries& s, const ModRing& ring) {
    std::vector<Int> c;
    c.reserve(s.c.size());
    for (const auto& x : s.c) c.push_back(ring.canon(x));
    return ModSeries{ring, std::move(c)};
}

}  // namespace polyrec
