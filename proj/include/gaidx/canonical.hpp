#ifndef GAIDX_CANONICAL_HPP
#define GAIDX_CANONICAL_HPP

#include <cstdint>

#include "gaidx/graph.hpp"

namespace gaidx {

/// Rank of pair (i, j), i < j, in lexicographic order over upper-triangle
/// pairs of an n-vertex graph: (0,1)=0, (0,2)=1, ..., (n-2,n-1)=C(n,2)-1.
constexpr int pair_rank(int n, int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

/// Adjacency encoded as sum of 2^pair_rank over edges. Requires n <= 11.
uint64_t upper_triangle_mask(const Graph& g);

Graph graph_from_mask(int n, uint64_t mask);

/// Minimum upper_triangle_mask over all vertex relabelings (n <= 11).
uint64_t canonical_mask(const Graph& g);

/// Canonical-form comparison for n <= 10, degree-refinement backtracking
/// beyond.
bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace gaidx

#endif
