#include "polyrec/linalg.hpp"

#include <bit>

namespace polyrec {

Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = (int)m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev, "Bareiss step");
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

int rank_rational(const std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<Rat>> a = m;
    const int rows = (int)a.size(), cols = (int)a[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[rank][c];
            for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

int rank_int_matrix(const std::vector<std::vector<Int>>& m) {
    std::vector<std::vector<Rat>> q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i].assign(m[i].begin(), m[i].end());
    return rank_rational(q);
}

std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs) {
    const int n = (int)a.size();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

int rank_gf2(std::vector<std::uint64_t> cols, int rows) {
    (void)rows;
    int rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c] == 0) continue;
        ++rank;
        const int bit = std::countr_zero(cols[c]);
        for (std::size_t j = c + 1; j < cols.size(); ++j)
            if ((cols[j] >> bit) & 1u) cols[j] ^= cols[c];
    }
    return rank;
}

std::optional<std::vector<std::uint8_t>> gf2_column_relation(const std::vector<std::uint64_t>& cols, int rows) {
    (void)rows;
    const int m = (int)cols.size();
    // eliminate column by column, tracking the combination that produced it
    std::vector<std::uint64_t> work;
    std::vector<std::vector<std::uint8_t>> combo;
    for (int c = 0; c < m; ++c) {
        std::uint64_t v = cols[c];
        std::vector<std::uint8_t> who(m, 0);
        who[c] = 1;
        for (std::size_t j = 0; j < work.size(); ++j) {
            if (work[j] == 0) continue;
            const int bit = std::countr_zero(work[j]);
            if ((v >> bit) & 1u) {
                v ^= work[j];
                for (int t = 0; t < m; ++t) who[t] ^= combo[j][t];
            }
        }
        if (v == 0) return who;  // cols[c] is a combination of earlier ones
        work.push_back(v);
        combo.push_back(std::move(who));
    }
    return std::nullopt;
}

bool hankel_invertible(const std::vector<Int>& s, int l) {
    if (l < 1) throw std::invalid_argument("hankel_invertible: size must be >= 1");
    if ((int)s.size() < 2 * l - 1) throw std::invalid_argument("hankel_invertible: prefix too short");
    std::vector<std::vector<Int>> h(l, std::vector<Int>(l));
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) h[r][c] = s[l - 1 - c + r];
    return bareiss_det(std::move(h)) != 0;
}

std::optional<std::vector<Int>> hankel_tail_solve(const std::vector<Int>& s, int n,
                                                  const std::vector<Int>& known_b) {
    const int t = (int)known_b.size() + 1;  // unknowns b_t..b_n
    if (t > n) throw std::invalid_argument("hankel_tail_solve: nothing to solve");
    if ((int)s.size() < 2 * n - t + 1)
        throw std::invalid_argument("hankel_tail_solve: series prefix too short");
    const int l = n - t + 1;
    if (!hankel_invertible(s, l)) return std::nullopt;

    auto row_rhs = [&](int r) {
        Int rhs = -s[n + r];
        for (int j = 1; j < t; ++j) rhs -= known_b[j - 1] * s[n + r - j];
        return rhs;
    };
    std::vector<std::vector<Rat>> a(l, std::vector<Rat>(l));
    std::vector<Rat> rhs(l);
    for (int r = 0; r < l; ++r) {
        for (int u = 0; u < l; ++u) a[r][u] = Rat(s[n - t + r - u]);
        rhs[r] = Rat(row_rhs(r));
    }
    auto x = solve_rational(std::move(a), std::move(rhs));
    if (!x) return std::nullopt;  // cannot happen after the invertibility test
    std::vector<Int> tail(l);
    for (int u = 0; u < l; ++u) tail[u] = to_int((*x)[u], "Hankel tail coefficient");

    // every surplus row the prefix supports must also hold
    const int rmax = (int)s.size() - 1 - n;
    for (int r = 0; r <= rmax; ++r) {
        Int acc = s[n + r];
        for (int j = 1; j < t; ++j) acc += known_b[j - 1] * s[n + r - j];
        for (int j = t; j <= n; ++j) acc += tail[j - t] * s[n + r - j];
        if (acc != 0) throw inconsistent_error("Hankel null system: surplus row " + std::to_string(r) + " inconsistent");
    }
    return tail;
}

}  // namespace polyrec
