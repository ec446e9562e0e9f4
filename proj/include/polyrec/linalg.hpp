#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyrec/ints.hpp"

namespace polyrec {

// Exact linear algebra used by the Hankel machinery and rank tests.
// Pivoting is deterministic (first nonzero) so results are reproducible.

Int bareiss_det(std::vector<std::vector<Int>> m);

int rank_rational(const std::vector<std::vector<Rat>>& m);
int rank_int_matrix(const std::vector<std::vector<Int>>& m);

// solve A x = rhs over Q; nullopt when A is singular
std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs);

// GF(2): columns packed as bitmasks over `rows` bits
int rank_gf2(std::vector<std::uint64_t> cols, int rows);

// nontrivial relation sum_j c_j col_j = 0 over GF(2), or nullopt if the
// columns are independent; deterministic (first dependent column wins).
std::optional<std::vector<std::uint8_t>> gf2_column_relation(const std::vector<std::uint64_t>& cols, int rows);

// l x l Hankel block [ s_{l-1} ... s_0 ; ... ; s_{2l-2} ... s_{l-1} ]
bool hankel_invertible(const std::vector<Int>& s, int l);

// Solves the trailing unknowns of the Hankel null system
//   sum_{j=0}^{n} b_j s_{n+r-j} = 0  (r >= 0, b_0 = 1)
// for b_t..b_n given b_1..b_{t-1}; needs s_0..s_{2n-t}. Returns nullopt when
// the square block is singular; surplus rows (all r the prefix supports) are
// asserted and integrality of the solution is enforced.
std::optional<std::vector<Int>> hankel_tail_solve(const std::vector<Int>& s, int n,
                                                  const std::vector<Int>& known_b);

}  // namespace polyrec
