#include "polyrec/walks.hpp"

namespace polyrec {

WalkMatrix walk_matrix(const Graph& g) {
    const int n = g.order();
    auto table = g.walk_counts(n - 1);
    WalkMatrix w;
    w.n = n;
    w.cols.assign(n, std::vector<Int>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) w.cols[k][i] = table[i][k];
    return w;
}

int rank_q(const WalkMatrix& w) {
    std::vector<std::vector<Int>> m(w.n, std::vector<Int>(w.n));
    for (int i = 0; i < w.n; ++i)
        for (int k = 0; k < w.n; ++k) m[i][k] = w.cols[k][i];
    return rank_int_matrix(m);
}

int rank_f2(const WalkMatrix& w) {
    std::vector<std::uint64_t> cols(w.n, 0);
    for (int k = 0; k < w.n; ++k)
        for (int i = 0; i < w.n; ++i)
            if (mod_canon(w.cols[k][i], Int(2)) == 1) cols[k] |= std::uint64_t(1) << i;
    return rank_gf2(std::move(cols), w.n);
}

ZSeries wii_prefix(const TopPoly<ZRing>& card, const TopPoly<ZRing>& phi_top, int m) {
    if (card.degree != phi_top.degree - 1) throw std::invalid_argument("wii_prefix: degree mismatch");
    return ratio_prefix(card, phi_top, m);
}

WalkMatrix walk_matrix_from_generalized_deck(const Deck& d, const Poly& phi, const Poly& phibar) {
    const int n = d.n;
    if (!d.generalized() || d.co_len != n || d.card_len != n)
        throw std::invalid_argument("walk matrix recovery needs a full generalized deck");
    if (phi.degree != n || phibar.degree != n) throw std::invalid_argument("pair degree mismatch");

    // series lengths provisioned at n+1 to absorb the mul(+1)/sqrt(-1) bookkeeping
    const int len = n + 1;
    ZSeries wg = total_walks_from_pair(phi, phibar, len);
    WalkMatrix w;
    w.n = n;
    w.cols.assign(n, std::vector<Int>(n));
    std::vector<Int> sums(len, 0);
    for (int i = 0; i < n; ++i) {
        Poly card = d.card_poly(i);
        Poly co{ZRing{}, n - 1, d.co_cards[i]};
        ZSeries wgi = total_walks_from_pair(card, co, len);
        ZSeries wii = wii_prefix(d.card_top(i), TopPoly<ZRing>{ZRing{}, n, phi.coeffs}, len);
        ZSeries sq = wi_squared_prefix(wg, wgi, wii);
        ZSeries wi = sqrt_prefix(sq, Int(1));
        if (wi.len() < n) throw std::logic_error("walk row shorter than n");
        for (int k = 0; k < n; ++k) w.cols[k][i] = wi.c[k];
        for (int k = 0; k < wi.len() && k < len; ++k) sums[k] += wi.c[k];
    }
    // the rows must add back up to the total-walk series
    for (int k = 0; k < n; ++k)
        if (sums[k] != wg.c[k])
            throw inconsistent_error("walk rows do not sum to the total-walk series");
    return w;
}

}  // namespace polyrec
