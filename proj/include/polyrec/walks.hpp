#pragma once

#include "polyrec/linalg.hpp"
#include "polyrec/series.hpp"

namespace polyrec {

// W^G = (1  A1  ...  A^{n-1} 1), columns kept exactly.
struct WalkMatrix {
    int n = 0;
    std::vector<std::vector<Int>> cols;  // cols[k][i] = e_i^T A^k 1
};

WalkMatrix walk_matrix(const Graph& g);
int rank_q(const WalkMatrix& w);
int rank_f2(const WalkMatrix& w);

// closed-walk series at a vertex: w_{i,i} = phi^{G\i} / phi^G (Eq. (1))
ZSeries wii_prefix(const TopPoly<ZRing>& card, const TopPoly<ZRing>& phi_top, int m);

// total-walk series from the pair (Eq. (4)); phibar may be truncated, in
// which case m is limited to one less than its truncation
template <class R>
Series<R> total_walks_from_pair(const TopPoly<R>& phi, const TopPoly<R>& phibar, int m) {
    TopPoly<R> num = pair_numerator(phi, phibar);
    return ratio_prefix(num, phi, m);
}

// Godsil-McKay: w_i^2 = (w^G - w^{G\i}) * w_{i,i}
template <class R>
Series<R> wi_squared_prefix(const Series<R>& wg, const Series<R>& wg_minus_i, const Series<R>& wii) {
    return series_mul(series_sub(wg, wg_minus_i), wii);
}

// Recovers W^G from a full generalized deck and the pair (phi, phibar):
// per-vertex Godsil-McKay plus a series square root. Row order follows card
// order. Throws inconsistent_error when the deck cannot come from a graph
// with this pair.
WalkMatrix walk_matrix_from_generalized_deck(const Deck& d, const Poly& phi, const Poly& phibar);

}  // namespace polyrec
