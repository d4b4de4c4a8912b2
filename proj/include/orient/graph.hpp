#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orient/rational.hpp"

namespace orient {

using Vertex = int;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// A simple digraph with no loops and no pair of opposite edges.
///
/// Vertices are 0..n-1. Out- and in-adjacency lists are kept sorted, and a
/// bit matrix backs constant-time edge queries. Instances are immutable;
/// use GraphBuilder to create or modify one.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return n_ == 0; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
  }
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  std::span<const Vertex> out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }

  int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in(v).size()); }
  int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  std::vector<Edge> edges() const;

  /// Every edge reversed.
  OrientedGraph reversed() const;

  /// Re-checks every structural invariant from scratch: no loops, no digons,
  /// sorted duplicate-free lists, in-lists the exact transpose of out-lists,
  /// bit matrix in sync. Returns false on any violation.
  bool audit() const;

  bool operator==(const OrientedGraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
  }

 private:
  friend class GraphBuilder;

  std::size_t row_offset(Vertex u) const { return static_cast<std::size_t>(u) * words_; }

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for an OrientedGraph. Rejects loops, digons and
/// out-of-range vertices as edges are added.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  static GraphBuilder from(const OrientedGraph& g);

  int order() const { return n_; }

  /// Adds u->v. Returns false if the edge was already present.
  /// Throws std::domain_error for a loop, a digon or a bad vertex.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  /// Replaces u->v by v->u; throws if u->v is absent.
  void reverse_edge(Vertex u, Vertex v);

  OrientedGraph build() const;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<std::vector<char>> adj_;
};

struct DegreeProfile {
  int delta_plus = 0;
  int delta_minus = 0;
  int delta_zero = 0;
  int delta = 0;
  int delta_star = 0;
  int max_degree = 0;
};

/// Exact minimum/maximum degree statistics. Throws std::domain_error on the
/// empty graph.
DegreeProfile degree_profile(const OrientedGraph& g);

/// delta_star / n - 3/2; the largest alpha with delta* >= (3/2 + alpha) n.
Rational delta_star_excess(const OrientedGraph& g);

/// Union of out-neighbourhoods. Throws std::domain_error on a bad vertex.
VertexSet out_neighborhood(const OrientedGraph& g, std::span<const Vertex> xs);
VertexSet in_neighborhood(const OrientedGraph& g, std::span<const Vertex> xs);

/// Number of edges directed from a vertex of A to a vertex of B. A and B
/// must be disjoint (std::domain_error otherwise).
std::int64_t edge_count_between(const OrientedGraph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b);

/// e(A,B) / (|A||B|). A and B disjoint and nonempty.
Rational pair_density(const OrientedGraph& g, std::span<const Vertex> a,
                      std::span<const Vertex> b);

bool is_strongly_connected(const OrientedGraph& g);

/// Vertices reachable from source (including source itself).
std::vector<char> reachable_from(const OrientedGraph& g, Vertex source);

struct InducedSubgraph {
  OrientedGraph graph;
  /// to_original[i] is the host vertex that became vertex i.
  std::vector<Vertex> to_original;
};

/// Subgraph induced by S, relabelled to 0..|S|-1 in ascending host order.
InducedSubgraph induced_subgraph(const OrientedGraph& g, std::span<const Vertex> s);

/// One undirected edge {min, max} per directed edge, sorted.
std::vector<std::pair<Vertex, Vertex>> underlying_edges(const OrientedGraph& g);

}  // namespace orient
