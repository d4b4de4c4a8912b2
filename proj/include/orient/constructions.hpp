#pragma once

#include <cstdint>

#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

/// Regular tournament on m vertices (m odd): i -> i+j mod m for j = 1..(m-1)/2.
OrientedGraph circulant_regular_tournament(int m);

/// Vertex blocks of the extremal graph. A and C induce regular tournaments on
/// m vertices, |B| = m+2, |D| = m+1.
struct HaggkvistBlocks {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  VertexSet d;
};

struct HaggkvistGraph {
  OrientedGraph graph;
  HaggkvistBlocks blocks;
};

/// Extremal oriented graph on n = 4m+3 vertices (m odd, m >= 3) with minimum
/// semi-degree (3n-5)/8 and no 1-factor.
///
/// Blocks are laid out as A = [0,m), B = [m,2m+2), C = [2m+2,3m+2),
/// D = [3m+2,4m+3). All edges A->B, B->C, C->D and D->A are present. Between
/// B and D, b_i -> d_j iff (j - i) mod (m+1) < (m+1)/2, so every B-vertex
/// sends exactly (m+1)/2 edges to D; D-side imbalances larger than one are
/// then repaired by swapping pairs of orientations (which keeps each
/// B-vertex's count fixed).
HaggkvistGraph haggkvist_extremal(int m);

/// Two circulant regular tournaments on 2m+1 vertices each (blocks [0,2m+1)
/// and [2m+1,4m+2)) with every cross edge directed from the first block to
/// the second. Minimum semi-degree m, never strongly connected.
OrientedGraph two_block_tournament(int m);

/// Each unordered pair independently becomes an edge with probability p and
/// gets a uniformly random orientation. Pairs are visited in lexicographic
/// order, so the output is a pure function of (n, p, seed).
OrientedGraph random_oriented_graph(int n, const Rational& p, std::uint64_t seed);

/// Random regular tournament on n (odd) vertices: the circulant with vertices
/// randomly relabelled, followed by `reversals` random directed-triangle
/// reversals (each preserves all in- and out-degrees).
OrientedGraph random_regular_tournament(int n, std::uint64_t seed, int reversals);

}  // namespace orient
