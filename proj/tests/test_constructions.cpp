#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "orient/checkers.hpp"
#include "orient/constructions.hpp"
#include "orient/graph.hpp"
#include "orient/hamilton.hpp"

using namespace orient;
using namespace orient::testing;

TEST_CASE("circulant regular tournaments") {
  const auto t3 = circulant_regular_tournament(3);
  CHECK(t3 == directed_cycle(3));
  const auto t5 = circulant_regular_tournament(5);
  CHECK(t5.size() == 10);
  CHECK(degree_profile(t5).delta_zero == 2);
  CHECK(degree_profile(circulant_regular_tournament(7)).delta_star == 12);
  CHECK(circulant_regular_tournament(1).order() == 1);
  CHECK_THROWS_AS(circulant_regular_tournament(4), std::domain_error);
  for (int m = 1; m <= 15; m += 2) {
    const auto t = circulant_regular_tournament(m);
    for (int v = 0; v < m; ++v) {
      CHECK(t.out_degree(v) == (m - 1) / 2);
      CHECK(t.in_degree(v) == (m - 1) / 2);
    }
    CHECK(t.size() == static_cast<std::size_t>(m * (m - 1) / 2));
  }
}

TEST_CASE("haggkvist extremal graph: sizes and semi-degree") {
  const int expected[] = {5, 8, 11};
  int idx = 0;
  for (int m : {3, 5, 7}) {
    const auto h = haggkvist_extremal(m);
    const int n = h.graph.order();
    CHECK(n == 4 * m + 3);
    CHECK(degree_profile(h.graph).delta_zero == expected[idx++]);
    CHECK(8 * degree_profile(h.graph).delta_zero == 3 * n - 5);
  }
  CHECK_THROWS_AS(haggkvist_extremal(4), std::domain_error);
  CHECK_THROWS_AS(haggkvist_extremal(1), std::domain_error);
}

TEST_CASE("haggkvist extremal graph: B-D bipartite tournament") {
  const auto h = haggkvist_extremal(3);
  CHECK(edge_count_between(h.graph, h.blocks.b, h.blocks.d) == 10);
  std::vector<std::int64_t> d_to_b;
  for (Vertex v : h.blocks.d) d_to_b.push_back(edge_count_between(h.graph, VertexSet{v}, h.blocks.b));
  std::sort(d_to_b.begin(), d_to_b.end());
  CHECK(d_to_b == std::vector<std::int64_t>{2, 2, 3, 3});
}

TEST_CASE("haggkvist extremal graph: structure for all odd m <= 15") {
  for (int m = 3; m <= 15; m += 2) {
    CAPTURE(m);
    const auto h = haggkvist_extremal(m);
    const auto& g = h.graph;
    const auto& bl = h.blocks;
    REQUIRE(g.audit());
    CHECK(bl.a.size() == static_cast<std::size_t>(m));
    CHECK(bl.b.size() == static_cast<std::size_t>(m + 2));
    CHECK(bl.c.size() == static_cast<std::size_t>(m));
    CHECK(bl.d.size() == static_cast<std::size_t>(m + 1));
    CHECK(edge_count_between(g, bl.a, bl.b) == static_cast<std::int64_t>(bl.a.size() * bl.b.size()));
    CHECK(edge_count_between(g, bl.b, bl.c) == static_cast<std::int64_t>(bl.b.size() * bl.c.size()));
    CHECK(edge_count_between(g, bl.c, bl.d) == static_cast<std::int64_t>(bl.c.size() * bl.d.size()));
    CHECK(edge_count_between(g, bl.d, bl.a) == static_cast<std::int64_t>(bl.d.size() * bl.a.size()));
    // every B-D pair joined exactly once, B sends (m+1)/2 to D, near-regular both ways
    for (Vertex b : bl.b) {
      const auto out = edge_count_between(g, VertexSet{b}, bl.d);
      const auto in = edge_count_between(g, bl.d, VertexSet{b});
      CHECK(out == (m + 1) / 2);
      CHECK(out + in == m + 1);
      CHECK(std::abs(out - in) <= 1);
    }
    for (Vertex d : bl.d) {
      const auto out = edge_count_between(g, VertexSet{d}, bl.b);
      const auto in = edge_count_between(g, bl.b, VertexSet{d});
      CHECK(out + in == m + 2);
      CHECK(std::abs(out - in) <= 1);
    }
    // B and D are independent, A and C are regular tournaments
    CHECK(induced_subgraph(g, bl.b).graph.size() == 0);
    CHECK(induced_subgraph(g, bl.d).graph.size() == 0);
    for (const auto* blk : {&bl.a, &bl.c}) {
      const auto t = induced_subgraph(g, *blk).graph;
      CHECK(t.size() == static_cast<std::size_t>(m * (m - 1) / 2));
      for (int v = 0; v < m; ++v) CHECK(t.out_degree(v) == (m - 1) / 2);
    }
    // N+(B) ⊆ C ∪ D and N+(C) ⊆ C ∪ D
    VertexSet cd = bl.c;
    cd.insert(cd.end(), bl.d.begin(), bl.d.end());
    cd = make_vertex_set(cd);
    for (const auto* blk : {&bl.b, &bl.c}) {
      const auto out = out_neighborhood(g, *blk);
      CHECK(std::includes(cd.begin(), cd.end(), out.begin(), out.end()));
    }
    CHECK_FALSE(check_b_paths_through_d(g, bl).failed());
  }
}

TEST_CASE("haggkvist: oracle cycles meet D at least as often as B") {
  const auto h = haggkvist_extremal(3);
  // Hamilton cycles do not exist; look at the Hamilton cycles of every
  // induced subgraph that keeps D, which are cycles of the host.
  std::vector<char> in_b(15, 0), in_d(15, 0);
  for (Vertex v : h.blocks.b) in_b[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : h.blocks.d) in_d[static_cast<std::size_t>(v)] = 1;
  Rng rng(3);
  int cycles_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet keep;
    for (int v = 0; v < 15; ++v)
      if (rng.coin()) keep.push_back(v);
    if (keep.size() < 3) continue;
    const auto sub = induced_subgraph(h.graph, keep);
    const auto cert = is_hamiltonian_backtracking(sub.graph);
    if (cert.verdict != HamiltonVerdict::hamiltonian) continue;
    ++cycles_seen;
    int bs = 0, ds = 0;
    for (Vertex v : cert.cycle) {
      bs += in_b[static_cast<std::size_t>(sub.to_original[static_cast<std::size_t>(v)])];
      ds += in_d[static_cast<std::size_t>(sub.to_original[static_cast<std::size_t>(v)])];
    }
    CHECK(ds >= bs);
  }
  CHECK(cycles_seen > 10);
}

TEST_CASE("two-block tournament") {
  const auto t1 = two_block_tournament(1);
  CHECK(t1.order() == 6);
  CHECK(degree_profile(t1).delta_zero == 1);
  CHECK_FALSE(is_strongly_connected(t1));
  CHECK(is_hamiltonian_backtracking(t1).verdict == HamiltonVerdict::non_hamiltonian);
  const auto t2 = two_block_tournament(2);
  CHECK(t2.order() == 10);
  CHECK(degree_profile(t2).delta_zero == 2);
  for (int m = 1; m <= 6; ++m) {
    const auto t = two_block_tournament(m);
    CHECK(4 * degree_profile(t).delta_zero == t.order() - 2);
    CHECK(t.size() == static_cast<std::size_t>(t.order() * (t.order() - 1) / 2));
    CHECK_FALSE(is_strongly_connected(t));
  }
}

TEST_CASE("random oriented graphs") {
  CHECK(random_oriented_graph(10, Rational(0), 1).size() == 0);
  const auto t = random_oriented_graph(10, Rational(1), 1);
  CHECK(t.size() == 45);
  CHECK(random_oriented_graph(12, Rational(1, 2), 7) == random_oriented_graph(12, Rational(1, 2), 7));
  CHECK_FALSE(random_oriented_graph(12, Rational(1, 2), 7) == random_oriented_graph(12, Rational(1, 2), 8));
  std::size_t edges = 0;
  for (std::uint64_t s = 0; s < 50; ++s) edges += random_oriented_graph(20, Rational(3, 10), s).size();
  // mean 57 edges per graph
  CHECK(edges > 50 * 50);
  CHECK(edges < 50 * 64);
}

TEST_CASE("random regular tournaments stay regular") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto t = random_regular_tournament(9, s, 81);
    REQUIRE(t.audit());
    CHECK(t.size() == 36);
    for (int v = 0; v < 9; ++v) {
      CHECK(t.out_degree(v) == 4);
      CHECK(t.in_degree(v) == 4);
    }
  }
  CHECK(random_regular_tournament(9, 4, 81) == random_regular_tournament(9, 4, 81));
  CHECK_THROWS_AS(random_regular_tournament(8, 1, 1), std::domain_error);
}
