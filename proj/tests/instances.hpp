#pragma once

#include <algorithm>
#include <numeric>

#include "orient/constructions.hpp"
#include "orient/graph.hpp"
#include "orient/random.hpp"
#include "orient/regularity.hpp"

namespace orient::testing {

inline ClusterPartition consecutive_clusters(int k, int m) {
  ClusterPartition p;
  for (int i = 0; i < k; ++i) {
    VertexSet c(static_cast<std::size_t>(m));
    std::iota(c.begin(), c.end(), i * m);
    p.clusters.push_back(c);
  }
  return p;
}

// Near-regular tournament on each cluster: a -> a + t for t in 1..m/2-1,
// and a -> a + m/2 for the first half.
inline void add_cluster_tournament(GraphBuilder& b, const VertexSet& c) {
  const int m = static_cast<int>(c.size());
  for (int a = 0; a < m; ++a) {
    for (int t = 1; t < (m + 1) / 2; ++t) b.add_edge(c[a], c[(a + t) % m]);
    if (m % 2 == 0 && a < m / 2) b.add_edge(c[a], c[a + m / 2]);
  }
}

struct ClusterInstance {
  OrientedGraph graph;
  ClusterPartition partition;
  Rational eps;
  Rational d;
};

// Paley Hadamard matrix of order 12 (q = 11).
inline std::vector<std::vector<int>> paley_hadamard_12() {
  auto chi = [](int x) {
    x = ((x % 11) + 11) % 11;
    if (x == 0) return 0;
    for (int r : {1, 3, 4, 5, 9})
      if (r == x) return 1;
    return -1;
  };
  std::vector<std::vector<int>> h(12, std::vector<int>(12));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      int s = 0;
      if (i == 0 && j > 0) s = 1;
      else if (j == 0 && i > 0) s = -1;
      else if (i > 0 && j > 0) s = chi(j - i);
      h[i][j] = s + (i == j ? 1 : 0);
    }
  return h;
}

// Four clusters of 12, V0 empty. Each inter-cluster pair is complete and
// follows a sign-twisted Hadamard pattern: u_a -> v_b iff r_a c_b H_ab > 0.
// Its low discrepancy keeps both directions 1/3-regular, so R' is the
// complete double digraph. The signs are drawn until the pair has the
// listed imbalance (forward minus backward edges) and passes the exact
// regularity test both ways. Pair (0, 1) is exactly balanced.
inline ClusterInstance four_cluster_instance() {
  constexpr int k = 4, m = 12;
  const int imbalance[k][k] = {{0, 0, 12, 36}, {0, 0, -12, 24}, {0, 0, 0, -20}, {0, 0, 0, 0}};
  const auto h = paley_hadamard_12();
  ClusterInstance inst;
  inst.partition = consecutive_clusters(k, m);
  inst.eps = Rational(1, 3);
  inst.d = Rational(1, 5);
  GraphBuilder b(k * m);
  for (const auto& c : inst.partition.clusters) add_cluster_tournament(b, c);
  Rng rng(2024);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto& ci = inst.partition.clusters[i];
      const auto& cj = inst.partition.clusters[j];
      for (;;) {
        std::vector<int> r(m), c(m);
        for (int a = 0; a < m; ++a) {
          r[a] = rng.coin() ? 1 : -1;
          c[a] = rng.coin() ? 1 : -1;
        }
        int sum = 0;
        for (int a = 0; a < m; ++a)
          for (int x = 0; x < m; ++x) sum += r[a] * c[x] * h[a][x];
        if (sum != imbalance[i][j]) continue;
        GraphBuilder pair(2 * m);
        for (int a = 0; a < m; ++a)
          for (int x = 0; x < m; ++x) {
            if (r[a] * c[x] * h[a][x] > 0) pair.add_edge(a, m + x);
            else pair.add_edge(m + x, a);
          }
        const auto pg = pair.build();
        VertexSet lo(m), hi(m);
        std::iota(lo.begin(), lo.end(), 0);
        std::iota(hi.begin(), hi.end(), m);
        if (!is_eps_regular_exhaustive(pg, lo, hi, inst.eps) || !is_eps_regular_exhaustive(pg, hi, lo, inst.eps))
          continue;
        for (const Edge& e : pg.edges()) {
          const Vertex u = e.from < m ? ci[e.from] : cj[e.from - m];
          const Vertex v = e.to < m ? ci[e.to] : cj[e.to - m];
          b.add_edge(u, v);
        }
        break;
      }
    }
  }
  inst.graph = b.build();
  return inst;
}

struct TriangleInstance {
  OrientedGraph graph;
  ClusterPartition partition;
  EqualizeOptions options;
};

// Three clusters of 12 whose reduced oriented graph is the triangle
// V0 -> V1 -> V2 -> V0 with complete pairs; all three pairs are S-pairs.
// eps = 1/24 and d_cap = 2 give trim 2, m' = 10, d' = d - 1/3 = 1/50 and a
// target of 2 edges per pair.
inline TriangleInstance s_triangle_instance(std::uint64_t seed = 7) {
  constexpr int k = 3, m = 12;
  TriangleInstance inst;
  inst.partition = consecutive_clusters(k, m);
  GraphBuilder b(k * m);
  for (const auto& c : inst.partition.clusters) add_cluster_tournament(b, c);
  for (int i = 0; i < k; ++i)
    for (Vertex u : inst.partition.clusters[i])
      for (Vertex v : inst.partition.clusters[(i + 1) % k]) b.add_edge(u, v);
  inst.graph = b.build();
  inst.options.r_edges = {{0, 1}, {1, 2}, {2, 0}};
  inst.options.s_edges = inst.options.r_edges;
  inst.options.eps = Rational(1, 24);
  inst.options.d = Rational(53, 150);
  inst.options.d_cap = 2;
  inst.options.seed = seed;
  return inst;
}

}  // namespace orient::testing
