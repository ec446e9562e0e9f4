#pragma once

#include <functional>
#include <span>

#include "polyrec/padic.hpp"
#include "polyrec/poly.hpp"

namespace polyrec {

// Integer partition in weakly decreasing part order.
struct Partition {
    std::vector<int> parts;
    int k() const { return (int)parts.size(); }
    // multiplicities r_j as (part, count) pairs, descending parts
    std::vector<std::pair<int, int>> multiplicities() const;
};

// all partitions of m in reverse-lexicographic order, memoized; safe for
// concurrent callers (entries are created once and never move)
const std::vector<Partition>& partitions_of(int m);

// One term of the power-sum formula
//   tr A^m = (-1)^m m sum_{lambda |- m} (-1)^{k} / k * multinomial(k; r_1,...) * prod b_j^{r_j}.
// signed_coef = (-1)^{m+k} * m (k-1)! / prod r_j!  (an exact integer).
struct TraceTerm {
    std::vector<std::pair<int, int>> part_mult;
    Int signed_coef;
};
const std::vector<TraceTerm>& trace_terms(int m);

// exact power sum from the sign-alternating coefficients b_1..b_len (b_j = 0 beyond)
Int trace_from_coeffs(int m, std::span<const Int> b);

using TraceLookup = std::function<PadicResidue(long m, int min_prec)>;

// tr A^m (mod p^{v_p(m)+l}) for m = 1..mmax from residues b_j mod p^l
// (the canonical residues act as lifts; the result is lift-independent)
std::vector<PadicResidue> traces_mod(std::span<const Int> b_mod, const Int& p, int l, int mmax);

// inverse direction: recover b_1..b_k mod p^l from traces at precision v_p(m)+l
std::vector<Int> coeffs_from_traces(const TraceLookup& traces, const Int& p, int l, int k);

// 1^T A^m 1 (mod 4) from traces:  tr A^{2m}/2^{v_2(m)} + sum_{l=0}^{v_2(m)} tr A^{m/2^l} / 2^{v_2(m)-l}.
// Individual summands need not be integers; the sum is evaluated over the
// common denominator and the divisibility of the total is asserted.
Int gram_walk_mod4(long m, const TraceLookup& traces);

// phi^{Gbar} mod 4 from phi^G mod 4 (full pipeline: traces at 2-adic
// precision v_2(m)+2, walk series mod 4, then Eq. (4))
ModPoly complement_charpoly_mod4(const ModPoly& phi4);

// convenience: exact-trace lookup for tests and pipelines that know tr A^k exactly
TraceLookup exact_trace_lookup(std::vector<Int> traces);

}  // namespace polyrec
