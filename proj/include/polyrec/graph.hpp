#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyrec/ints.hpp"

namespace polyrec {

// graph6 supports up to 62 vertices with a single size byte; that is all this
// library handles (desk-scale exhaustive verification).
constexpr int kMaxVertices = 62;

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Simple undirected graph on vertex set [n], adjacency kept as one bitrow per
// vertex. Immutable in practice: operations return new graphs.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph parse_graph6(std::string_view text);
    static Graph parse_edge_list(std::istream& in);

    std::string to_graph6() const;

    int order() const { return n_; }
    std::uint64_t row(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    int degree(int v) const;
    long edge_count() const;

    Graph complement() const;
    Graph delete_vertex(int v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

    // table[i][k] = e_i^T A^k 1 , 0 <= k <= kmax (exact)
    std::vector<std::vector<Int>> walk_counts(int kmax) const;

    struct ClosedWalks {
        std::vector<std::vector<Int>> diag;  // diag[i][k] = e_i^T A^k e_i
        std::vector<Int> trace;              // trace[k] = tr A^k
    };
    ClosedWalks closed_walk_counts(int kmax) const;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

}  // namespace polyrec
