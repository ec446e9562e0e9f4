#pragma once

#include <climits>
#include <vector>

#include "polyrec/graph.hpp"
#include "polyrec/ring.hpp"

namespace polyrec {

// Dense univariate polynomial over ring R, stored from the leading term down,
// possibly truncated to its top coefficients. `degree` is the nominal degree:
// over mod-M rings a monic polynomial keeps its leading 1 even when lower
// coefficients vanish, and truncated cards know the degree they came from.
template <class R>
struct TopPoly {
    R ring;
    int degree = -1;  // -1 encodes the zero polynomial
    std::vector<typename R::Elem> coeffs;

    bool full() const { return degree < 0 || (int)coeffs.size() == degree + 1; }
    int avail() const { return full() ? INT_MAX : (int)coeffs.size(); }

    // coefficient of x^(degree - k)
    typename R::Elem top(int k) const {
        if (k < 0) throw std::logic_error("negative coefficient index");
        if (k < (int)coeffs.size()) return coeffs[k];
        if (full()) return ring.zero();
        throw std::logic_error("coefficient beyond truncation");
    }

    bool monic() const { return degree >= 0 && !coeffs.empty() && coeffs[0] == ring.one(); }

    bool operator==(const TopPoly& o) const {
        return degree == o.degree && coeffs == o.coeffs && ring.same(o.ring);
    }
};

using Poly = TopPoly<ZRing>;
using QPoly = TopPoly<QRing>;
using ModPoly = TopPoly<ModRing>;

template <class R>
TopPoly<R> make_poly(R ring, int degree, std::vector<typename R::Elem> coeffs) {
    for (auto& c : coeffs) c = ring.canon(c);
    if ((int)coeffs.size() > degree + 1) throw std::invalid_argument("more coefficients than degree+1");
    return TopPoly<R>{std::move(ring), degree, std::move(coeffs)};
}

inline Poly make_zpoly(std::vector<Int> coeffs) {
    // full polynomial, leading zeros trimmed (exact-ring invariant)
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
    return Poly{ZRing{}, (int)coeffs.size() - 1, std::move(coeffs)};
}

// sign-alternating coefficient view:  phi = x^n - b_1 x^(n-1) + b_2 x^(n-2) - ...
// so b_k = (-1)^k * (coefficient of x^(n-k)).
template <class R>
typename R::Elem bk(const TopPoly<R>& p, int k) {
    auto c = p.top(k);
    return p.ring.canon(k % 2 == 0 ? c : typename R::Elem(-c));
}

template <class R>
TopPoly<R> truncate_top(const TopPoly<R>& p, int count) {
    if (count > (int)p.coeffs.size()) throw std::invalid_argument("cannot extend a truncation");
    TopPoly<R> q{p.ring, p.degree, {p.coeffs.begin(), p.coeffs.begin() + count}};
    return q;
}

inline ModPoly reduce_mod(const Poly& p, const Int& m) {
    ModRing ring(m);
    std::vector<Int> c;
    c.reserve(p.coeffs.size());
    for (const auto& x : p.coeffs) c.push_back(ring.canon(x));
    return ModPoly{ring, p.degree, std::move(c)};
}

// formal derivative (full polynomials)
inline Poly derivative(const Poly& p) {
    if (!p.full()) throw std::invalid_argument("derivative needs a full polynomial");
    if (p.degree <= 0) return make_zpoly({});
    std::vector<Int> c(p.degree);
    for (int k = 0; k < p.degree; ++k) c[k] = Int(p.degree - k) * p.coeffs[k];
    return make_zpoly(std::move(c));
}

// (-1)^parity * p(-x-1); works on top-coefficient prefixes because the
// coefficient of x^(d-k) of the result only involves the top k+1 inputs.
template <class R>
TopPoly<R> substitute_neg_shift(const TopPoly<R>& p, int parity) {
    const int d = p.degree;
    if (d < 0) return p;
    const int count = p.full() ? d + 1 : (int)p.coeffs.size();
    std::vector<typename R::Elem> out(count, p.ring.zero());
    for (int k = 0; k < count; ++k) {
        typename R::Elem acc = p.ring.zero();
        for (int j = 0; j <= k; ++j) {
            Int bc = binom((unsigned long)(d - j), (unsigned long)(k - j));
            typename R::Elem term = p.ring.canon(p.top(j) * p.ring.from_integer(bc));
            if ((parity - d + j) % 2 != 0) term = p.ring.canon(-term);
            acc = p.ring.canon(acc + term);
        }
        out[k] = acc;
    }
    return TopPoly<R>{p.ring, d, std::move(out)};
}

// numerator of the total-walk generating function:
//   N = (-1)^n phibar(-x-1) - phi ,  nominal degree n-1.
// The leading x^n terms must cancel; anything else is corrupt input.
template <class R>
TopPoly<R> pair_numerator(const TopPoly<R>& phi, const TopPoly<R>& phibar) {
    const int n = phi.degree;
    if (phibar.degree != n) throw std::invalid_argument("pair_numerator: degree mismatch");
    require_same_ring(phi.ring, phibar.ring);
    TopPoly<R> s = substitute_neg_shift(phibar, n);
    int count = std::min((long)phi.avail(), (long)s.avail());
    if (count > n + 1) count = n + 1;
    if (count < 1) throw std::invalid_argument("pair_numerator: no coefficients available");
    if (!phi.ring.is_zero(phi.ring.canon(s.top(0) - phi.top(0))))
        throw inconsistent_error("pair numerator: leading terms do not cancel");
    std::vector<typename R::Elem> out;
    out.reserve(count - 1);
    for (int k = 1; k < count; ++k) out.push_back(phi.ring.canon(s.top(k) - phi.top(k)));
    return TopPoly<R>{phi.ring, n - 1, std::move(out)};
}

// inverse direction: given phi and the numerator N, recover phibar
// from phibar = (-1)^n (phi + N)(-x-1).
template <class R>
TopPoly<R> complement_from_numerator(const TopPoly<R>& phi, const TopPoly<R>& num) {
    const int n = phi.degree;
    if (num.degree != n - 1) throw std::invalid_argument("complement_from_numerator: degree mismatch");
    require_same_ring(phi.ring, num.ring);
    long avail = std::min((long)phi.avail(), (long)num.avail() + 1);
    int count = (int)std::min(avail, (long)n + 1);
    std::vector<typename R::Elem> sum;
    sum.reserve(count);
    for (int k = 0; k < count; ++k)
        sum.push_back(phi.ring.canon(phi.top(k) + (k >= 1 ? num.top(k - 1) : phi.ring.zero())));
    TopPoly<R> s{phi.ring, n, std::move(sum)};
    return substitute_neg_shift(s, n);
}

// phi^G(x) = det(xI - A), exact integer coefficients
Poly charpoly(const Graph& g);

// Polynomial deck: cards[i] = top card_len coefficients of phi^{G\i}
// (degree n-1), optionally paired with co-cards for the complement.
// File order is vertex order; multiset semantics are recovered by sorting.
struct Deck {
    int n = 0;
    int card_len = 0;
    std::vector<std::vector<Int>> cards;
    int co_len = 0;  // 0 when no co-cards
    std::vector<std::vector<Int>> co_cards;

    bool generalized() const { return co_len > 0; }
    Poly card_poly(int i) const;     // full cards only
    TopPoly<ZRing> card_top(int i) const;
    TopPoly<ZRing> co_card_top(int i) const;
};

Deck make_deck(const Graph& g, bool generalized = false, int truncate_co = -1);
void truncate_deck_cards(Deck& d, int t);
void truncate_deck_co(Deck& d, int s);

// Integrates the card sum through d/dx phi = sum of cards: returns the top
// `card_len` coefficients of a monic degree-n polynomial (never the constant).
TopPoly<ZRing> integrate_deck(const Deck& d);
TopPoly<ZRing> integrate_cards(int n, const std::vector<std::vector<Int>>& cards, int len);

}  // namespace polyrec
