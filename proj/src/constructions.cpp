#include "orient/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orient/random.hpp"

namespace orient {
namespace {

void add_circulant(GraphBuilder& b, Vertex offset, int m) {
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= (m - 1) / 2; ++j) b.add_edge(offset + i, offset + (i + j) % m);
  }
}

VertexSet range_set(Vertex begin, Vertex end) {
  VertexSet s(static_cast<std::size_t>(end - begin));
  std::iota(s.begin(), s.end(), begin);
  return s;
}

}  // namespace

OrientedGraph circulant_regular_tournament(int m) {
  if (m < 1 || m % 2 == 0) {
    throw std::domain_error("regular tournament needs an odd order, got " + std::to_string(m));
  }
  GraphBuilder b(m);
  add_circulant(b, 0, m);
  return b.build();
}

HaggkvistGraph haggkvist_extremal(int m) {
  if (m < 3 || m % 2 == 0) {
    throw std::domain_error("extremal construction needs odd m >= 3, got " + std::to_string(m));
  }
  HaggkvistBlocks blocks{range_set(0, m), range_set(m, 2 * m + 2), range_set(2 * m + 2, 3 * m + 2),
                         range_set(3 * m + 2, 4 * m + 3)};
  GraphBuilder g(4 * m + 3);
  add_circulant(g, blocks.a.front(), m);
  add_circulant(g, blocks.c.front(), m);
  auto join = [&g](const VertexSet& from, const VertexSet& to) {
    for (Vertex u : from) {
      for (Vertex v : to) g.add_edge(u, v);
    }
  };
  join(blocks.a, blocks.b);
  join(blocks.b, blocks.c);
  join(blocks.c, blocks.d);
  join(blocks.d, blocks.a);

  const int nb = m + 2;
  const int nd = m + 1;
  const int half = (m + 1) / 2;
  // to_d[i][j]: b_i -> d_j
  std::vector<std::vector<char>> to_d(static_cast<std::size_t>(nb),
                                      std::vector<char>(static_cast<std::size_t>(nd), 0));
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nd; ++j) to_d[i][j] = ((j - i) % nd + nd) % nd < half;
  }

  // Swap b->d, d'->b into d->b, b->d' while some D-vertex is unbalanced by
  // more than one; pairs are tried in lexicographic order.
  auto excess_in = [&](int j) {
    int in = 0;
    for (int i = 0; i < nb; ++i) in += to_d[i][j];
    return in - (nb - in);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < nd && !changed; ++j) {
      if (excess_in(j) <= 1) continue;
      for (int j2 = 0; j2 < nd && !changed; ++j2) {
        if (excess_in(j2) >= 0) continue;
        for (int i = 0; i < nb; ++i) {
          if (to_d[i][j] && !to_d[i][j2]) {
            to_d[i][j] = 0;
            to_d[i][j2] = 1;
            changed = true;
            break;
          }
        }
      }
    }
    for (int j = 0; j < nd && !changed; ++j) {
      if (excess_in(j) >= -1) continue;
      for (int j2 = 0; j2 < nd && !changed; ++j2) {
        if (excess_in(j2) <= 0) continue;
        for (int i = 0; i < nb; ++i) {
          if (!to_d[i][j] && to_d[i][j2]) {
            to_d[i][j] = 1;
            to_d[i][j2] = 0;
            changed = true;
            break;
          }
        }
      }
    }
  }

  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nd; ++j) {
      if (to_d[i][j]) {
        g.add_edge(blocks.b[i], blocks.d[j]);
      } else {
        g.add_edge(blocks.d[j], blocks.b[i]);
      }
    }
  }
  return {g.build(), std::move(blocks)};
}

OrientedGraph two_block_tournament(int m) {
  if (m < 1) throw std::domain_error("two-block tournament needs m >= 1");
  const int block = 2 * m + 1;
  GraphBuilder g(2 * block);
  add_circulant(g, 0, block);
  add_circulant(g, block, block);
  for (Vertex u = 0; u < block; ++u) {
    for (Vertex v = block; v < 2 * block; ++v) g.add_edge(u, v);
  }
  return g.build();
}

OrientedGraph random_oriented_graph(int n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::domain_error("edge probability must lie in [0,1]");
  if (n < 0) throw std::domain_error("negative vertex count");
  Rng rng(seed);
  GraphBuilder g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!rng.bernoulli(p)) continue;
      if (rng.coin()) {
        g.add_edge(u, v);
      } else {
        g.add_edge(v, u);
      }
    }
  }
  return g.build();
}

OrientedGraph random_regular_tournament(int n, std::uint64_t seed, int reversals) {
  const OrientedGraph base = circulant_regular_tournament(n);
  Rng rng(seed);
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  GraphBuilder g(n);
  for (const Edge& e : base.edges()) g.add_edge(label[e.from], label[e.to]);
  if (n < 3) return g.build();
  for (int r = 0; r < reversals; ++r) {
    // pick a random vertex and two of its out-neighbours closing a triangle
    const Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<std::pair<Vertex, Vertex>> triangles;
    for (Vertex b = 0; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (g.has_edge(b, c) && g.has_edge(c, a)) triangles.emplace_back(b, c);
      }
    }
    if (triangles.empty()) continue;
    auto [b, c] = triangles[rng.below(triangles.size())];
    g.reverse_edge(a, b);
    g.reverse_edge(b, c);
    g.reverse_edge(c, a);
  }
  return g.build();
}

}  // namespace orient
