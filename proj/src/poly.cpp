#include "polyrec/poly.hpp"

namespace polyrec {

// Faddeev-LeVerrier over exact rationals: M_1 = A, c_1 = -tr M_1,
// M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k. O(n^4) and exact;
// the final coefficients are asserted integral.
Poly charpoly(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, 0)), next(n, std::vector<Rat>(n));
    std::vector<Rat> c(n + 1);
    c[0] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = g.has_edge(i, j) ? 1 : 0;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // next = A * (M + c_{k-1} I)
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    Rat s = 0;
                    for (int u = 0; u < n; ++u) {
                        if (!g.has_edge(i, u)) continue;
                        s += (u == j) ? M[u][j] + c[k - 1] : M[u][j];
                    }
                    next[i][j] = s;
                }
            }
            M.swap(next);
        }
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += M[i][i];
        c[k] = -tr / k;
    }
    std::vector<Int> out(n + 1);
    for (int k = 0; k <= n; ++k) out[k] = to_int(c[k], "charpoly coefficient");
    return Poly{ZRing{}, n, std::move(out)};
}

Poly Deck::card_poly(int i) const {
    if (card_len != n) throw std::invalid_argument("card is truncated; full card required");
    return Poly{ZRing{}, n - 1, cards[i]};
}

TopPoly<ZRing> Deck::card_top(int i) const { return TopPoly<ZRing>{ZRing{}, n - 1, cards[i]}; }

TopPoly<ZRing> Deck::co_card_top(int i) const {
    if (!generalized()) throw std::invalid_argument("deck has no co-cards");
    return TopPoly<ZRing>{ZRing{}, n - 1, co_cards[i]};
}

Deck make_deck(const Graph& g, bool generalized, int truncate_co) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("deck needs n >= 2");
    Deck d;
    d.n = n;
    d.card_len = n;
    for (int i = 0; i < n; ++i) d.cards.push_back(charpoly(g.delete_vertex(i)).coeffs);
    if (generalized) {
        const Graph gc = g.complement();
        int s = (truncate_co < 0) ? n : std::min(truncate_co, n);
        if (s < 1) throw std::invalid_argument("co-card truncation must keep at least one coefficient");
        d.co_len = s;
        for (int i = 0; i < n; ++i) {
            auto co = charpoly(gc.delete_vertex(i)).coeffs;
            co.resize(s);
            d.co_cards.push_back(std::move(co));
        }
    }
    return d;
}

void truncate_deck_cards(Deck& d, int t) {
    if (t < 1 || t > d.card_len) throw std::invalid_argument("card truncation out of range");
    d.card_len = t;
    for (auto& c : d.cards) c.resize(t);
}

void truncate_deck_co(Deck& d, int s) {
    if (!d.generalized()) throw std::invalid_argument("deck has no co-cards");
    if (s < 1 || s > d.co_len) throw std::invalid_argument("co-card truncation out of range");
    d.co_len = s;
    for (auto& c : d.co_cards) c.resize(s);
}

TopPoly<ZRing> integrate_cards(int n, const std::vector<std::vector<Int>>& cards, int len) {
    if ((int)cards.size() != n) throw std::invalid_argument("card count must equal n");
    std::vector<Int> sum(len, 0);
    for (const auto& c : cards) {
        if ((int)c.size() < len) throw std::invalid_argument("card shorter than stated truncation");
        for (int k = 0; k < len; ++k) sum[k] += c[k];
    }
    // sum holds the top coefficients of d/dx phi; coefficient of x^(n-1-k)
    // equals (n-k) * (coefficient of x^(n-k) of phi).
    std::vector<Int> out(len);
    for (int k = 0; k < len; ++k)
        out[k] = div_exact(sum[k], Int(n - k), "deck integration (card sum is not a derivative)");
    if (out[0] != 1) throw inconsistent_error("integrated deck is not monic");
    return TopPoly<ZRing>{ZRing{}, n, std::move(out)};
}

TopPoly<ZRing> integrate_deck(const Deck& d) { return integrate_cards(d.n, d.cards, d.card_len); }

}  // namespace polyrec
