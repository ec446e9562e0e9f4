#pragma once

#include "polyrec/partitions.hpp"
#include "polyrec/reconstruct.hpp"

namespace polyrec {

// raised when a would-be counterexample pair violates Corollary main_corollary2;
// by the paper this never fires, so it is reported loudly
struct corollary_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shared stage outputs of the mod-2/mod-4 deck pipelines. Theorems 4 and 5
// consume the same preamble; the series grow in place as stages extend them.
struct ModDeckData {
    int n = 0;
    Deck deck;
    TopPoly<ZRing> phi_top;          // top n coefficients of phi^G, exact
    std::vector<ZSeries> wii;        // w_{i,i}, length n, exact
    std::vector<ModSeries> wii4;     // the same reduced mod 4
    std::vector<Int> traces;         // tr A^k for k = 0..n-1, exact
    std::vector<ModSeries> wgi4;     // w^{G\i} mod 4, length n+3
    ModSeries wg4{z4(), {}};         // w^G mod 4; ceil(n/2) coefficients at first
    std::vector<ModSeries> rows2;    // w_i mod 2; ceil(n/2) coefficients at first
};

ModDeckData base_mod_data(const Deck& d);

// 1^T A^{2k} 1 (mod 4) = sum_i (e_i^T A^k 1)^2, squares taken from mod-2 rows
Int gram_rows_mod4(const std::vector<ModSeries>& rows2, int k);

struct ConstMod2Result {
    int bn_mod2;
    std::string route;  // which proposition decided it
};
ConstMod2Result constant_mod2(ModDeckData& data);

struct Theorem4Output {
    int bn_mod2;
    std::vector<std::vector<int>> walk_matrix_mod2;  // [i][k] = e_i^T A^k 1 mod 2
    std::vector<Int> phibar_top_mod4;                // top n coefficients
    int phibar_const_mod2;
};
Theorem4Output theorem4(ModDeckData& data);

struct Theorem5Output {
    bool applicable = false;
    std::string reason;               // when not applicable
    Int phi_const_mod4;               // x^0 coefficient of phi^G mod 4
    ModPoly phibar_mod4{z4(), -1, {}};  // full
};
Theorem5Output theorem5(ModDeckData& data, const Theorem4Output& t4);

enum class PairVerdict { DecksDiffer, Cospectral, CounterexamplePair };
struct Corollary2Result {
    PairVerdict verdict;
    Int k;  // phi^G = phi^H + 2k for counterexample pairs
};
Corollary2Result corollary2_check(const Graph& g, const Graph& h);

}  // namespace polyrec
