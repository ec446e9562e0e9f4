#pragma once

#include <functional>

#include "polyrec/deckmod.hpp"

namespace polyrec {

// canonical form: the lexicographically minimal chunk sequence over all
// vertex orders, chunk d = edge bits from position d back to positions
// 0..d-1 (equivalently, the minimal graph6 body)
std::vector<std::uint64_t> canonical_form(const Graph& g);
Graph graph_from_canonical(int n, const std::vector<std::uint64_t>& chunks);

// exhaustive unlabeled enumeration by vertex augmentation + canonical dedup;
// memoized, n <= 8
const std::vector<Graph>& enumerate_unlabeled(int n);

// same, restricted to C4-free graphs (hereditary, so augmentation stays
// inside the family); n <= 9
const std::vector<Graph>& enumerate_c4free_unlabeled(int n);

// all 2^C(n,2) labeled graphs, streamed
void enumerate_labeled(int n, const std::function<void(const Graph&)>& fn);

// deterministic G(n, p) sample
Graph random_graph(int n, double p, std::uint64_t seed);

// direct 4-cycle count (common-neighbor pairs over the diagonals)
Int count_c4_direct(const Graph& g);

struct CheckFailure {
    int n;
    std::string graph6;
    std::string check;
    std::string detail;
};

struct CheckRun {
    std::string name;
    long graphs = 0;
    double millis = 0;
    std::vector<CheckFailure> failures;
};

struct SweepReport {
    int n_max = 0;
    int jobs = 1;
    std::vector<CheckRun> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.failures.empty()) return false;
        return true;
    }
};

struct CheckDef {
    std::string name;
    std::string summary;
    int min_n = 3;
    int max_n = 8;  // largest order the check is meant to sweep
    std::function<std::vector<std::string>(const Graph&)> fn;
};

const std::vector<CheckDef>& check_registry();

// runs the named checks (empty or {"all"} = every check) over all unlabeled
// graphs with 3 <= n <= n_max; jobs > 1 runs the OpenMP path, jobs == 1 the
// serial reference; reports are identical either way
SweepReport verify_sweep(int n_max, const std::vector<std::string>& names, int jobs = 1);

struct CollisionReport {
    int n = 0;
    std::vector<std::vector<std::string>> groups;  // same-deck classes (graph6), size >= 2
    long cospectral_same_deck_pairs = 0;
    std::vector<std::string> violations;  // non-cospectral same-deck pairs; expected empty
};

// buckets all unlabeled n-vertex graphs by their sorted polynomial deck and
// runs the Corollary 2 checker on every same-deck pair
CollisionReport deck_collision_search(int n, int jobs = 1);

}  // namespace polyrec
