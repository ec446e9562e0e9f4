#pragma once

#include <string>

#include "polyrec/walks.hpp"

namespace polyrec {

enum class RecStatus { Success, RankTooLow, NotApplicable };

struct ReconstructionOutcome {
    RecStatus status = RecStatus::NotApplicable;
    Poly phi;     // Success only
    Poly phibar;  // Success only
    int threshold = 0;   // RankTooLow only
    std::string reason;  // NotApplicable only

    static ReconstructionOutcome success(Poly p, Poly pb) {
        return {RecStatus::Success, std::move(p), std::move(pb), 0, {}};
    }
    static ReconstructionOutcome rank_too_low(int thr) {
        return {RecStatus::RankTooLow, {}, {}, thr, {}};
    }
    static ReconstructionOutcome not_applicable(std::string why) {
        return {RecStatus::NotApplicable, {}, {}, 0, std::move(why)};
    }
};

// General partial-information reconstruction: cards truncated to t, co-cards
// to s. Decides whether rank W^G >= n+1-t and if so returns the exact pair.
// Needs s + t/2 >= n + 2 for the solve (full decks s = t = n always work);
// the rank test alone gets by with less.
ReconstructionOutcome reconstruct_general(const Deck& d);

// co-cards truncated to ceil((n+4)/2), full cards; always Success on honest decks
ReconstructionOutcome reconstruct_full(const Deck& d);

// both families truncated to ceil((2n+4)/3); Success iff rank W^G >= floor((n-1)/3)
ReconstructionOutcome reconstruct_controllable(const Deck& d);

// number of 4-cycles, computed from the plain deck via
// tr A^4 = 8q + sum_i d_i (2 d_i - 1); throws not_applicable_error for n < 5
Int count_c4_from_deck(const Deck& d);

// plain-deck reconstruction for C4-free graphs whose walk matrix has rank <= 2
ReconstructionOutcome reconstruct_c4free_lowrank(const Deck& d);

}  // namespace polyrec
