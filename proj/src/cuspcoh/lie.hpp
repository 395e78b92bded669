#pragma once

#include <utility>
#include <vector>

#include "cuspcoh/numeric.hpp"

namespace cuspcoh {

// Character of the rank-(n-1) compact torus in canonical form: the exponent
// vector (m_1, ..., m_{n-1}) after eliminating the last coordinate via
// z_n = (z_1 ... z_{n-1})^{-1} and zbar_j = z_j^{-1}.
using TorusChar = std::vector<Int>;

// Positive roots of type A_{n-1} as 0-based index pairs (i, j), i < j,
// lexicographic order.
std::vector<std::pair<int, int>> positive_roots(int n);

// 2*rho: ambient form (n-1, n-3, ..., 1-n) and compact form m_j = 2(n-j).
std::vector<Int> two_rho_ambient(int n);
TorusChar two_rho_compact(int n);

// The character prod_j z_j^{p_j} zbar_j^{q_j} restricted to the compact
// torus: with r = p - q, m_j = r_j - r_n.
TorusChar compact_torus_restrict(const std::vector<Int>& p, const std::vector<Int>& q);

// Compact form of the root e_i - e_j (0-based indices).
TorusChar root_compact(int n, int i, int j);

bool in_root_lattice(const TorusChar& gamma, int n);

// True iff -2*rho <= gamma <= 2*rho in the positive-root-cone partial order,
// decided via nonnegative partial sums of the sum-zero ambient lift.
// Throws validation_error when gamma is not in the root lattice.
bool dominance_interval_check(const TorusChar& gamma, int n);

}  // namespace cuspcoh
