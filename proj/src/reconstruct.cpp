#include "polyrec/reconstruct.hpp"

namespace polyrec {

namespace {

void validate_deck(const Deck& d, bool need_co) {
    if (d.n < 2) throw std::invalid_argument("deck order must be >= 2");
    if ((int)d.cards.size() != d.n) throw std::invalid_argument("card count != n");
    if (d.card_len < 1 || d.card_len > d.n) throw std::invalid_argument("card truncation out of range");
    for (const auto& c : d.cards)
        if ((int)c.size() != d.card_len || c[0] != 1)
            throw std::invalid_argument("cards must be monic prefixes of the stated length");
    if (need_co) {
        if (!d.generalized()) throw std::invalid_argument("generalized deck required");
        if ((int)d.co_cards.size() != d.n) throw std::invalid_argument("co-card count != n");
        for (const auto& c : d.co_cards)
            if ((int)c.size() != d.co_len || c[0] != 1)
                throw std::invalid_argument("co-cards must be monic prefixes of the stated length");
    }
}

// appends Gram-identity coefficients w_{k+l} = sum_i (row_i)_k (row_i)_l to
// the total-walk series, asserting consistency on the already-known prefix
void gram_extend(ZSeries& wg, const std::vector<ZSeries>& rows) {
    if (rows.empty()) return;
    const int L = rows[0].len();
    const int target = 2 * L - 1;
    for (int r = 0; r < target; ++r) {
        const int k = r / 2, l = r - k;
        Int v = 0;
        for (const auto& row : rows) v += row.c[k] * row.c[l];
        if (r < wg.len()) {
            if (wg.c[r] != v)
                throw inconsistent_error("Gram identity contradicts the walk series at index " + std::to_string(r));
        } else if (r == wg.len()) {
            wg.c.push_back(std::move(v));
        }
    }
}

// common tail: phi known fully, walk series known to >= n coefficients
ReconstructionOutcome finish_pair(const Poly& phi, const ZSeries& wg,
                                  const TopPoly<ZRing>* phibar_top) {
    TopPoly<ZRing> num = numerator_prefix(TopPoly<ZRing>{ZRing{}, phi.degree, phi.coeffs}, wg, phi.degree);
    TopPoly<ZRing> pb = complement_from_numerator(TopPoly<ZRing>{ZRing{}, phi.degree, phi.coeffs}, num);
    Poly phibar{ZRing{}, pb.degree, pb.coeffs};
    if (!phibar.monic() || phibar.coeffs[1] != 0)
        throw inconsistent_error("recovered complement polynomial is not a charpoly shape");
    if (phibar_top) {
        for (std::size_t k = 0; k < phibar_top->coeffs.size(); ++k)
            if (phibar.coeffs[k] != phibar_top->coeffs[k])
                throw inconsistent_error("recovered complement polynomial contradicts the co-card sum");
    }
    return ReconstructionOutcome::success(phi, std::move(phibar));
}

}  // namespace

ReconstructionOutcome reconstruct_general(const Deck& d) {
    validate_deck(d, true);
    const int n = d.n, t = d.card_len, s = d.co_len;

    TopPoly<ZRing> phi_top = integrate_cards(n, d.cards, t);
    TopPoly<ZRing> phibar_top = integrate_cards(n, d.co_cards, s);

    // usable top-coefficient counts; full degree-(n-1) cards determine their
    // polynomial entirely, so their series expand to any length
    const long big = 4L * n + 8;
    const long card_avail = (t == n) ? big : t;
    const long co_avail = (s == n) ? big : s;
    const int wgi_len = (int)std::min(std::min(card_avail, co_avail) - 1, (long)(2 * n + 2));
    const int wg_init = std::min(s, t) - 1;
    if (wg_init < 1) throw std::invalid_argument("truncations leave no walk coefficients");

    ZSeries wg = total_walks_from_pair(phi_top, phibar_top, wg_init);
    std::vector<ZSeries> wgi, wii;
    wgi.reserve(n);
    wii.reserve(n);
    for (int i = 0; i < n; ++i) {
        wgi.push_back(total_walks_from_pair(d.card_top(i), d.co_card_top(i), wgi_len));
        wii.push_back(wii_prefix(d.card_top(i), phi_top, t));
    }

    // Godsil-McKay + Gram, iterated to a length fixpoint. One pass reaches
    // the 2s-3 coefficients of the truncated regime; full decks keep growing
    // until the w_{i,i} length caps the rows at n.
    std::vector<ZSeries> rows(n, ZSeries{ZRing{}, {}});
    int row_len = 0;
    for (;;) {
        int next_len = wg.len();
        for (int i = 0; i < n; ++i) next_len = std::min(next_len, std::min(wgi[i].len(), wii[i].len()));
        if (next_len <= row_len) break;
        for (int i = 0; i < n; ++i) {
            ZSeries sq = wi_squared_prefix(wg, wgi[i], wii[i]);
            rows[i] = sqrt_prefix(sq, Int(1));
        }
        row_len = rows[0].len();
        const int old = wg.len();
        gram_extend(wg, rows);
        if (wg.len() == old) break;
    }

    const int l = n + 1 - t;
    if (t == n) {
        // only the constant is missing; the "rank test" block is [w_0] = [n]
        if (wg.len() < 1) throw std::invalid_argument("no walk data");
    } else if (wg.len() < 2 * l - 1) {
        throw std::invalid_argument("deck truncations leave too little data for the rank test");
    }
    if (!hankel_invertible(wg.c, l)) return ReconstructionOutcome::rank_too_low(l);
    if (wg.len() < 2 * n - t + 1)
        throw std::invalid_argument("rank test passed but the solve needs s + t/2 >= n + 2");

    std::vector<Int> known(phi_top.coeffs.begin() + 1, phi_top.coeffs.begin() + t);
    auto tail = hankel_tail_solve(wg.c, n, known);
    if (!tail) return ReconstructionOutcome::rank_too_low(l);  // unreachable after the test

    std::vector<Int> coeffs;
    coeffs.reserve(n + 1);
    coeffs.push_back(1);
    coeffs.insert(coeffs.end(), known.begin(), known.end());
    coeffs.insert(coeffs.end(), tail->begin(), tail->end());
    Poly phi{ZRing{}, n, std::move(coeffs)};
    return finish_pair(phi, wg, &phibar_top);
}

ReconstructionOutcome reconstruct_full(const Deck& d) {
    validate_deck(d, true);
    const int n = d.n;
    if (n < 3) throw std::invalid_argument("reconstruct_full needs n >= 3");
    if (d.card_len != n) throw std::invalid_argument("reconstruct_full needs full cards");
    const int s_req = std::min((n + 5) / 2, n);  // ceil((n+4)/2), clamped to the card size
    if (d.co_len < s_req)
        throw std::invalid_argument("co-cards truncated below ceil((n+4)/2)");
    Deck work = d;
    if (work.co_len > s_req) truncate_deck_co(work, s_req);
    return reconstruct_general(work);
}

ReconstructionOutcome reconstruct_controllable(const Deck& d) {
    validate_deck(d, true);
    const int n = d.n;
    if (n < 3) throw std::invalid_argument("reconstruct_controllable needs n >= 3");
    const int k = std::min((2 * n + 6) / 3, n);  // ceil((2n+4)/3), clamped
    if (d.card_len < k || d.co_len < k)
        throw std::invalid_argument("both families must carry at least ceil((2n+4)/3) coefficients");
    Deck work = d;
    if (work.card_len > k) truncate_deck_cards(work, k);
    if (work.co_len > k) truncate_deck_co(work, k);
    return reconstruct_general(work);
}

namespace {

struct C4Data {
    TopPoly<ZRing> phi_top;
    std::vector<ZSeries> wii;  // length n each
    std::vector<Int> deg;      // d_i
    Int trace4;
    Int q;  // number of 4-cycles
};

C4Data c4_prelude(const Deck& d) {
    if (d.n < 5) throw not_applicable_error("n < 5: tr A^4 is not visible in the deck");
    validate_deck(d, false);
    if (d.card_len != d.n) throw std::invalid_argument("full plain cards required");
    const int n = d.n;
    C4Data out;
    out.phi_top = integrate_deck(d);
    if (out.phi_top.coeffs[1] != 0) throw inconsistent_error("x^{n-1} coefficient of phi is nonzero");
    const Int m_edges = -out.phi_top.coeffs[2];
    Int sum_corr = 0;
    out.trace4 = 0;
    for (int i = 0; i < n; ++i) {
        out.wii.push_back(wii_prefix(d.card_top(i), out.phi_top, n));
        // degree two ways: edge-count drop m(G) - m(G\i) and the closed-walk value e_i^T A^2 e_i
        Int di = m_edges - (-d.cards[i][2]);
        if (di != out.wii[i].c[2])
            throw inconsistent_error("degree of vertex " + std::to_string(i) + " inconsistent across the deck");
        out.deg.push_back(di);
        out.trace4 += out.wii[i].c[4];
        sum_corr += di * (2 * di - 1);
    }
    out.q = div_exact(out.trace4 - sum_corr, Int(8), "4-cycle count");
    if (out.q < 0) throw inconsistent_error("negative 4-cycle count");
    return out;
}

}  // namespace

Int count_c4_from_deck(const Deck& d) { return c4_prelude(d).q; }

ReconstructionOutcome reconstruct_c4free_lowrank(const Deck& d) {
    if (d.n < 5) return ReconstructionOutcome::not_applicable("n < 5");
    C4Data pre = c4_prelude(d);
    if (pre.q > 0) return ReconstructionOutcome::not_applicable("has C4");
    const int n = d.n;

    // first three walk-matrix columns; in a C4-free graph
    // e_i^T A^2 1 = e_i^T A^4 e_i - d_i (d_i - 1).
    std::vector<Int> col2(n);
    std::vector<std::vector<Int>> first3(n, std::vector<Int>(3));
    for (int i = 0; i < n; ++i) {
        col2[i] = pre.wii[i].c[4] - pre.deg[i] * (pre.deg[i] - 1);
        first3[i] = {Int(1), pre.deg[i], col2[i]};
    }
    const int rank = rank_int_matrix(first3);
    if (rank > 2) return ReconstructionOutcome::not_applicable("rank > 2");

    // extend the columns by the linear recurrence the low rank forces
    const int wlen = 2 * n + 2;
    std::vector<Int> wg(wlen, 0);
    if (rank == 1) {
        const Int r = pre.deg[0];
        for (int i = 0; i < n; ++i)
            if (pre.deg[i] != r || col2[i] != r * r)
                throw inconsistent_error("rank-1 walk matrix but non-regular degree data");
        Int p = 1;
        for (int k = 0; k < wlen; ++k) {
            wg[k] = Int(n) * p;
            p *= r;
        }
    } else {
        int i0 = 0, i1 = -1;
        for (int i = 1; i < n; ++i)
            if (pre.deg[i] != pre.deg[i0]) { i1 = i; break; }
        if (i1 < 0) throw inconsistent_error("rank-2 walk matrix with constant degrees");
        // monic relation: A^2 1 = a*1 + b*A1
        auto sol = solve_rational({{Rat(1), Rat(pre.deg[i0])}, {Rat(1), Rat(pre.deg[i1])}},
                                  {Rat(col2[i0]), Rat(col2[i1])});
        const Rat a = (*sol)[0], b = (*sol)[1];
        std::vector<Rat> prev(n), cur(n);
        for (int i = 0; i < n; ++i) {
            if (Rat(col2[i]) != a + b * pre.deg[i])
                throw inconsistent_error("third walk column escapes the rank-2 span");
            prev[i] = 1;
            cur[i] = pre.deg[i];
        }
        wg[0] = n;
        Rat w1 = 0;
        for (int i = 0; i < n; ++i) w1 += cur[i];
        wg[1] = to_int(w1, "walk coefficient");
        for (int k = 2; k < wlen; ++k) {
            Rat sum = 0;
            for (int i = 0; i < n; ++i) {
                Rat nxt = a * prev[i] + b * cur[i];
                prev[i] = cur[i];
                cur[i] = nxt;
                sum += nxt;
            }
            wg[k] = to_int(sum, "walk coefficient");
        }
    }

    std::vector<Int> known(pre.phi_top.coeffs.begin() + 1, pre.phi_top.coeffs.end());
    auto tail = hankel_tail_solve(wg, n, known);
    if (!tail) throw inconsistent_error("w_0 = n block unexpectedly singular");
    std::vector<Int> coeffs;
    coeffs.push_back(1);
    coeffs.insert(coeffs.end(), known.begin(), known.end());
    coeffs.push_back((*tail)[0]);
    Poly phi{ZRing{}, n, std::move(coeffs)};

    ZSeries wgs{ZRing{}, wg};
    TopPoly<ZRing> num = numerator_prefix(TopPoly<ZRing>{ZRing{}, n, phi.coeffs}, wgs, n);
    TopPoly<ZRing> pb = complement_from_numerator(TopPoly<ZRing>{ZRing{}, n, phi.coeffs}, num);
    return ReconstructionOutcome::success(std::move(phi), Poly{ZRing{}, pb.degree, pb.coeffs});
}

}  // namespace polyrec
