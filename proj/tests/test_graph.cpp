#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "corpus.hpp"
#include "orient/graph.hpp"
#include "orient/graph_io.hpp"
#include "orient/random.hpp"
#include "orient/rational.hpp"

using namespace orient;
using namespace orient::testing;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/14") == Rational(3, 14));
  CHECK(parse_rational("3/4+1/10") == Rational(17, 20));
  CHECK(parse_rational("1 - 1/3") == Rational(2, 3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.125", true) == Rational(1, 8));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(ceil(Rational(7, 2)) == 4);
}

TEST_CASE("tolerance compares square roots exactly") {
  const auto t = Tolerance::sqrt_of(Rational(1, 24));
  // sqrt(1/24) ~ 0.2041
  CHECK(t.abs_below(Rational(1, 5)));
  CHECK_FALSE(t.abs_below(Rational(21, 100)));
  CHECK(t.abs_below(Rational(-1, 5)));
  CHECK(t.covers(Rational(-7)));
  CHECK(t.count_above_fraction(3, 10));
  CHECK_FALSE(t.count_above_fraction(2, 10));
  const auto e = Tolerance::of(Rational(1, 4));
  CHECK_FALSE(e.abs_below(Rational(1, 4)));
  CHECK(e.covers(Rational(1, 4)));
  CHECK_FALSE(e.count_above_fraction(2, 8));
  CHECK(e.count_above_fraction(3, 8));
  CHECK_THROWS_AS(Tolerance::of(Rational(-1)), std::domain_error);
}

TEST_CASE("rng is deterministic and exact at the extremes") {
  Rng a(42), b(42), c(43);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 16; ++i) {
    xa.push_back(a.next());
    xb.push_back(b.next());
    xc.push_back(c.next());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK_FALSE(r.bernoulli(Rational(0)));
    CHECK(r.bernoulli(Rational(1)));
    CHECK(r.below(7) < 7);
  }
  int hits = 0;
  for (int i = 0; i < 20000; ++i) hits += r.bernoulli(Rational(1, 4)) ? 1 : 0;
  CHECK(hits > 4700);
  CHECK(hits < 5300);
  CHECK(mix_seed(5, 1) != mix_seed(5, 2));
}

TEST_CASE("builder rejects loops, digons and bad vertices") {
  GraphBuilder b(3);
  CHECK(b.add_edge(0, 1));
  CHECK_FALSE(b.add_edge(0, 1));
  CHECK_THROWS_AS(b.add_edge(1, 0), std::domain_error);
  CHECK_THROWS_AS(b.add_edge(2, 2), std::domain_error);
  CHECK_THROWS_AS(b.add_edge(0, 3), std::domain_error);
  b.reverse_edge(0, 1);
  CHECK(b.has_edge(1, 0));
  CHECK_THROWS(b.reverse_edge(0, 1));
  const auto g = b.build();
  CHECK(g.audit());
  CHECK(g.size() == 1);
}

TEST_CASE("degree_profile examples") {
  const auto t7 = circulant_regular_tournament(7);
  const auto p = degree_profile(t7);
  CHECK(p.delta_plus == 3);
  CHECK(p.delta_minus == 3);
  CHECK(p.delta_zero == 3);
  CHECK(p.delta == 6);
  CHECK(p.delta_star == 12);
  CHECK(p.max_degree == 6);
  CHECK(delta_star_excess(t7) == Rational(3, 14));

  CHECK(degree_profile(haggkvist_extremal(3).graph).delta_zero == 5);
  CHECK(degree_profile(from_edges(2, {{0, 1}})).delta_zero == 0);
  CHECK_THROWS_AS(degree_profile(OrientedGraph(0)), std::domain_error);
}

TEST_CASE("set neighbourhoods") {
  const auto c3 = directed_cycle(3);
  const VertexSet x{0, 1};
  CHECK(out_neighborhood(c3, x) == VertexSet{1, 2});
  CHECK(in_neighborhood(c3, x) == VertexSet{0, 2});
  CHECK(out_neighborhood(c3, VertexSet{}).empty());
  const VertexSet zero{0};
  CHECK(out_neighborhood(circulant_regular_tournament(5), zero) == VertexSet{1, 2});
  const VertexSet bad{5};
  CHECK_THROWS_AS(out_neighborhood(c3, bad), std::domain_error);
}

TEST_CASE("edge counts and densities") {
  GraphBuilder b(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) b.add_edge(u, v);
  const auto g = b.build();
  const VertexSet a{0, 1, 2}, c{3, 4, 5};
  CHECK(edge_count_between(g, a, c) == 9);
  CHECK(pair_density(g, a, c) == Rational(1));
  CHECK(edge_count_between(g, c, a) == 0);
  CHECK(pair_density(g, c, a) == Rational(0));
  const VertexSet overlap{2, 3};
  CHECK_THROWS_AS(edge_count_between(g, a, overlap), std::domain_error);

  const auto h = haggkvist_extremal(3);
  CHECK(edge_count_between(h.graph, h.blocks.b, h.blocks.d) == 10);
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(directed_cycle(5)));
  CHECK_FALSE(is_strongly_connected(two_block_tournament(1)));
  CHECK(is_strongly_connected(OrientedGraph(1)));
  CHECK_FALSE(is_strongly_connected(from_edges(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("induced subgraph and underlying graph") {
  const auto c3 = directed_cycle(3);
  const auto empty = induced_subgraph(c3, VertexSet{});
  CHECK(empty.graph.order() == 0);
  const auto whole = induced_subgraph(c3, VertexSet{0, 1, 2});
  CHECK(whole.graph == c3);
  CHECK(whole.to_original == std::vector<Vertex>{0, 1, 2});
  const auto t5 = circulant_regular_tournament(5);
  const auto und = underlying_edges(t5);
  CHECK(und.size() == 10);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      CHECK(std::find(und.begin(), und.end(), std::make_pair(u, v)) != und.end());
  const auto sub = induced_subgraph(t5, VertexSet{1, 3, 4});
  CHECK(sub.to_original == std::vector<Vertex>{1, 3, 4});
  CHECK(sub.graph.has_edge(0, 1) == t5.has_edge(1, 3));
  CHECK(sub.graph.has_edge(2, 0) == t5.has_edge(4, 1));
}

TEST_CASE("text format round trip and errors") {
  const auto g = circulant_regular_tournament(5);
  const auto text = format_graph(g);
  CHECK(text.rfind("5 10\n", 0) == 0);
  CHECK(parse_graph(text) == g);

  auto line_of = [](const std::string& t) {
    try {
      parse_graph(t);
    } catch (const GraphParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
  CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
  CHECK(line_of("3 2\n0 1\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("3 2\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("3 1\n0 1\n\n") == 0);
}

TEST_CASE("graph properties over the corpus") {
  for (const auto& inst : make_corpus(300, 11)) {
    CAPTURE(inst.label);
    const auto& g = inst.graph;
    REQUIRE(g.audit());
    CHECK(g.reversed().reversed() == g);
    const auto p = degree_profile(g);
    const auto r = degree_profile(g.reversed());
    CHECK(r.delta_plus == p.delta_minus);
    CHECK(r.delta_minus == p.delta_plus);
    CHECK(p.delta_zero == std::min(p.delta_plus, p.delta_minus));
    CHECK(p.delta_star == p.delta + p.delta_plus + p.delta_minus);
    CHECK(p.delta >= p.delta_plus + p.delta_minus);
    CHECK(2 * p.delta_zero <= g.order() - 1);
    std::size_t out_sum = 0, in_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      out_sum += static_cast<std::size_t>(g.out_degree(v));
      in_sum += static_cast<std::size_t>(g.in_degree(v));
    }
    CHECK(out_sum == g.size());
    CHECK(in_sum == g.size());
    CHECK(parse_graph(format_graph(g)) == g);
  }
}
