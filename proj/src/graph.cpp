#include "orient/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orient {
namespace {

void require_vertices(const OrientedGraph& g, std::span<const Vertex> xs) {
  for (Vertex v : xs) {
    if (!g.contains(v)) {
      throw std::domain_error("vertex " + std::to_string(v) + " out of range for graph of order " +
                              std::to_string(g.order()));
    }
  }
}

VertexSet collect(const std::vector<char>& mark) {
  VertexSet result;
  for (std::size_t v = 0; v < mark.size(); ++v) {
    if (mark[v]) result.push_back(static_cast<Vertex>(v));
  }
  return result;
}

}  // namespace

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

OrientedGraph::OrientedGraph(int n) {
  if (n < 0) throw std::domain_error("negative vertex count");
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

std::vector<Edge> OrientedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out(u)) result.push_back({u, v});
  }
  return result;
}

OrientedGraph OrientedGraph::reversed() const {
  OrientedGraph r(n_);
  r.out_ = in_;
  r.in_ = out_;
  r.edge_count_ = edge_count_;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : r.out_[static_cast<std::size_t>(u)]) {
      r.bits_[r.row_offset(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
    }
  }
  return r;
}

bool OrientedGraph::audit() const {
  if (out_.size() != static_cast<std::size_t>(n_) || in_.size() != static_cast<std::size_t>(n_)) {
    return false;
  }
  std::size_t out_total = 0;
  std::size_t in_total = 0;
  for (Vertex u = 0; u < n_; ++u) {
    const auto& row = out_[static_cast<std::size_t>(u)];
    if (!std::is_sorted(row.begin(), row.end()) ||
        std::adjacent_find(row.begin(), row.end()) != row.end()) {
      return false;
    }
    for (Vertex v : row) {
      if (v < 0 || v >= n_ || v == u) return false;
      if (!has_edge(u, v) || has_edge(v, u)) return false;
      const auto& back = in_[static_cast<std::size_t>(v)];
      if (!std::binary_search(back.begin(), back.end(), u)) return false;
    }
    out_total += row.size();
    const auto& col = in_[static_cast<std::size_t>(u)];
    if (!std::is_sorted(col.begin(), col.end()) ||
        std::adjacent_find(col.begin(), col.end()) != col.end()) {
      return false;
    }
    in_total += col.size();
    std::size_t bit_count = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      bit_count += static_cast<std::size_t>(__builtin_popcountll(bits_[row_offset(u) + w]));
    }
    if (bit_count != row.size()) return false;
  }
  return out_total == edge_count_ && in_total == edge_count_;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0) throw std::domain_error("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
}

GraphBuilder GraphBuilder::from(const OrientedGraph& g) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.adj_[e.from][e.to] = 1;
  return b;
}

void GraphBuilder::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::domain_error("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
  }
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::domain_error("loop at vertex " + std::to_string(u));
  if (adj_[v][u]) {
    throw std::domain_error("edge " + std::to_string(u) + "->" + std::to_string(v) +
                            " would create a digon");
  }
  if (adj_[u][v]) return false;
  adj_[u][v] = 1;
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adj_[u][v]) return false;
  adj_[u][v] = 0;
  return true;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u][v] != 0;
}

void GraphBuilder::reverse_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) {
    throw std::domain_error("cannot reverse missing edge " + std::to_string(u) + "->" +
                            std::to_string(v));
  }
  adj_[u][v] = 0;
  adj_[v][u] = 1;
}

OrientedGraph GraphBuilder::build() const {
  OrientedGraph g(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (!adj_[u][v]) continue;
      g.out_[u].push_back(v);
      g.in_[v].push_back(u);
      g.bits_[g.row_offset(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
      ++g.edge_count_;
    }
  }
  return g;
}

DegreeProfile degree_profile(const OrientedGraph& g) {
  if (g.empty()) throw std::domain_error("degree profile of the empty graph");
  DegreeProfile p;
  p.delta_plus = g.out_degree(0);
  p.delta_minus = g.in_degree(0);
  p.delta = g.degree(0);
  p.max_degree = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    p.delta_plus = std::min(p.delta_plus, g.out_degree(v));
    p.delta_minus = std::min(p.delta_minus, g.in_degree(v));
    p.delta = std::min(p.delta, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  p.delta_zero = std::min(p.delta_plus, p.delta_minus);
  p.delta_star = p.delta + p.delta_plus + p.delta_minus;
  return p;
}

Rational delta_star_excess(const OrientedGraph& g) {
  const DegreeProfile p = degree_profile(g);
  return Rational(p.delta_star, g.order()) - Rational(3, 2);
}

VertexSet out_neighborhood(const OrientedGraph& g, std::span<const Vertex> xs) {
  require_vertices(g, xs);
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : xs) {
    for (Vertex w : g.out(x)) mark[w] = 1;
  }
  return collect(mark);
}

VertexSet in_neighborhood(const OrientedGraph& g, std::span<const Vertex> xs) {
  require_vertices(g, xs);
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : xs) {
    for (Vertex w : g.in(x)) mark[w] = 1;
  }
  return collect(mark);
}

std::int64_t edge_count_between(const OrientedGraph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b) {
  require_vertices(g, a);
  require_vertices(g, b);
  std::vector<char> in_b(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : b) in_b[v] = 1;
  for (Vertex v : a) {
    if (in_b[v]) throw std::domain_error("edge count between overlapping sets");
  }
  std::int64_t count = 0;
  for (Vertex u : a) {
    for (Vertex w : g.out(u)) count += in_b[w];
  }
  return count;
}

Rational pair_density(const OrientedGraph& g, std::span<const Vertex> a,
                      std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw std::domain_error("density of a pair with an empty side");
  const std::int64_t e = edge_count_between(g, a, b);
  return Rational(e, static_cast<std::int64_t>(a.size() * b.size()));
}

std::vector<char> reachable_from(const OrientedGraph& g, Vertex source) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.out(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool is_strongly_connected(const OrientedGraph& g) {
  if (g.order() <= 1) return true;
  auto all = [](const std::vector<char>& seen) {
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return all(reachable_from(g, 0)) && all(reachable_from(g.reversed(), 0));
}

InducedSubgraph induced_subgraph(const OrientedGraph& g, std::span<const Vertex> s) {
  require_vertices(g, s);
  InducedSubgraph result;
  result.to_original = make_vertex_set({s.begin(), s.end()});
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < result.to_original.size(); ++i) {
    index[result.to_original[i]] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(result.to_original.size()));
  for (std::size_t i = 0; i < result.to_original.size(); ++i) {
    for (Vertex w : g.out(result.to_original[i])) {
      if (index[w] >= 0) b.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  result.graph = b.build();
  return result;
}

std::vector<std::pair<Vertex, Vertex>> underlying_edges(const OrientedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(g.size());
  for (const Edge& e : g.edges()) {
    result.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace orient
