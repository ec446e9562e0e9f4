#include "polyrec/graph.hpp"

#include <bit>
#include <sstream>

namespace polyrec {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxVertices) + "]");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= std::uint64_t(1) << v;
    adj_[v] |= std::uint64_t(1) << u;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

long Graph::edge_count() const {
    long s = 0;
    for (int i = 0; i < n_; ++i) s += degree(i);
    return s / 2;
}

Graph Graph::complement() const {
    Graph g(n_);
    const std::uint64_t all = (n_ == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
    for (int i = 0; i < n_; ++i)
        g.adj_[i] = (~adj_[i] & all) & ~(std::uint64_t(1) << i);
    return g;
}

Graph Graph::delete_vertex(int v) const {
    if (n_ < 2) throw std::invalid_argument("cannot delete the only vertex");
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    // order-preserving compaction of the remaining vertices
    Graph g(n_ - 1);
    const std::uint64_t low = (std::uint64_t(1) << v) - 1;
    for (int i = 0; i < n_; ++i) {
        if (i == v) continue;
        std::uint64_t r = adj_[i];
        std::uint64_t packed = (r & low) | ((r >> (v + 1)) << v);
        g.adj_[i < v ? i : i - 1] = packed;
    }
    return g;
}

Graph Graph::parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 string", 0);
    std::size_t pos = 0;
    unsigned char c0 = (unsigned char)text[0];
    if (c0 == '~') throw parse_error("multi-byte graph6 size encoding unsupported (n > 62)", 0);
    if (c0 < 63 || c0 > 126) throw parse_error("non-printable or invalid graph6 header byte", 0);
    int n = c0 - 63;
    if (n < 1) throw parse_error("graph of order 0 not supported", 0);
    ++pos;

    Graph g(n);
    const long bits = (long)n * (n - 1) / 2;
    const long need = (bits + 5) / 6;
    if ((long)text.size() - 1 < need)
        throw parse_error("truncated graph6 bit field", text.size());
    if ((long)text.size() - 1 > need)
        throw parse_error("trailing bytes after graph6 bit field", pos + need);

    long bit = 0;
    for (long byte = 0; byte < need; ++byte, ++pos) {
        unsigned char c = (unsigned char)text[pos];
        if (c < 63 || c > 126) throw parse_error("non-printable byte in graph6 bit field", pos);
        int v = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (v >> k) & 1;
            if (bit >= bits) {
                if (b) throw parse_error("nonzero padding bits in graph6 encoding", pos);
                continue;
            }
            if (b) {
                // column-major upper triangle: bit index -> (i, j), i < j
                long r = bit;
                int j = 1;
                while (r >= j) { r -= j; ++j; }
                g.add_edge((int)r, j);
            }
        }
    }
    return g;
}

std::string Graph::to_graph6() const {
    std::string out;
    out.push_back((char)(n_ + 63));
    const long bits = (long)n_ * (n_ - 1) / 2;
    int acc = 0, nb = 0;
    long emitted = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nb = 0;
            }
            ++emitted;
        }
    }
    (void)emitted;
    if (nb > 0) out.push_back((char)((acc << (6 - nb)) + 63));
    (void)bits;
    return out;
}

Graph Graph::parse_edge_list(std::istream& in) {
    int n;
    long m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected \"n m\" header");
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("edge list: order out of range");
    Graph g(n);
    for (long e = 0; e < m; ++e) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated at edge " + std::to_string(e));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: vertex out of range at edge " + std::to_string(e));
        if (u == v) throw std::invalid_argument("edge list: self-loop at edge " + std::to_string(e));
        if (g.has_edge(u, v)) throw std::invalid_argument("edge list: duplicate edge at edge " + std::to_string(e));
        g.add_edge(u, v);
    }
    return g;
}

std::vector<std::vector<Int>> Graph::walk_counts(int kmax) const {
    std::vector<std::vector<Int>> table(n_, std::vector<Int>(kmax + 1));
    std::vector<Int> col(n_, 1), next(n_);
    for (int i = 0; i < n_; ++i) table[i][0] = 1;
    for (int k = 1; k <= kmax; ++k) {
        for (int i = 0; i < n_; ++i) {
            Int s = 0;
            std::uint64_t r = adj_[i];
            while (r) {
                int j = std::countr_zero(r);
                r &= r - 1;
                s += col[j];
            }
            next[i] = s;
        }
        col.swap(next);
        for (int i = 0; i < n_; ++i) table[i][k] = col[i];
    }
    return table;
}

Graph::ClosedWalks Graph::closed_walk_counts(int kmax) const {
    ClosedWalks out;
    out.diag.assign(n_, std::vector<Int>(kmax + 1));
    out.trace.assign(kmax + 1, 0);
    // M holds A^k, advanced one power at a time
    std::vector<std::vector<Int>> M(n_, std::vector<Int>(n_, 0)), next(n_, std::vector<Int>(n_));
    for (int i = 0; i < n_; ++i) M[i][i] = 1;
    for (int k = 0; k <= kmax; ++k) {
        Int tr = 0;
        for (int i = 0; i < n_; ++i) {
            out.diag[i][k] = M[i][i];
            tr += M[i][i];
        }
        out.trace[k] = tr;
        if (k == kmax) break;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                Int s = 0;
                std::uint64_t r = adj_[i];
                while (r) {
                    int u = std::countr_zero(r);
                    r &= r - 1;
                    s += M[u][j];
                }
                next[i][j] = s;
            }
        }
        M.swap(next);
    }
    return out;
}

}  // namespace polyrec
