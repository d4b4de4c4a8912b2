#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orient/factor.hpp"
#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

/// Vertex sequence; closed when the first and last vertices coincide.
struct Walk {
  std::vector<Vertex> vertices;

  bool closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
  /// Number of edge occurrences.
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool operator==(const Walk&) const = default;
};

/// True iff every consecutive pair of the walk is an edge of g.
bool is_walk_in(const OrientedGraph& g, const Walk& w);

/// Successor/predecessor lookup for a collection of disjoint cycles inside a
/// host of order n. Vertices outside every cycle are "uncovered".
class FactorIndex {
 public:
  /// Throws std::domain_error if cycles overlap, are shorter than 3, or
  /// mention vertices outside [0, n).
  FactorIndex(const CycleFactor& factor, int n);

  bool covers(Vertex v) const { return cycle_of_[v] >= 0; }
  bool covers_all() const;
  int cycle_of(Vertex v) const { return cycle_of_[v]; }
  Vertex successor(Vertex v) const { return next_[v]; }
  Vertex predecessor(Vertex v) const { return prev_[v]; }

  std::size_t cycle_count() const { return factor_.cycles.size(); }
  const std::vector<Vertex>& cycle(std::size_t i) const { return factor_.cycles[i]; }
  const CycleFactor& factor() const { return factor_; }
  int host_order() const { return static_cast<int>(cycle_of_.size()); }

 private:
  CycleFactor factor_;
  std::vector<int> cycle_of_;
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
};

/// One traversal a_i C_i b_i: enter cycle C_i at `entry`, go all the way
/// round and leave from `exit`, the predecessor of `entry`.
struct ShiftedSegment {
  Vertex entry = 0;
  std::size_t cycle = 0;
  Vertex exit = 0;
  bool operator==(const ShiftedSegment&) const = default;
};

/// Shifted source-target walk a a_1 C_1 b_1 ... a_t C_t b_t b.
struct ShiftedWalk {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<ShiftedSegment> segments;

  std::size_t cycles_traversed() const { return segments.size(); }
  bool operator==(const ShiftedWalk&) const = default;
};

/// Raised when a walk construction step cannot be carried out.
class WalkError : public std::runtime_error {
 public:
  explicit WalkError(const std::string& message) : std::runtime_error(message) {}
  WalkError(const std::string& message, std::pair<Vertex, Vertex> failing_pair)
      : std::runtime_error(message), failing_pair_(failing_pair) {}
  WalkError(const std::string& message, std::size_t segment)
      : std::runtime_error(message), segment_(segment) {}

  const std::optional<std::pair<Vertex, Vertex>>& failing_pair() const { return failing_pair_; }
  const std::optional<std::size_t>& segment() const { return segment_; }

 private:
  std::optional<std::pair<Vertex, Vertex>> failing_pair_;
  std::optional<std::size_t> segment_;
};

/// Explicit vertex sequence of a shifted walk. Every segment must satisfy
/// entry = successor(exit) on its cycle and every consecutive pair must be an
/// edge of g; violations raise WalkError naming the segment (segment index
/// t refers to the final link into the target).
Walk expand_shifted_walk(const OrientedGraph& g, const CycleFactor& factor, const ShiftedWalk& sw);

/// floor(2/alpha) for alpha = delta*(g)/n - 3/2 when positive, otherwise n
/// (the layered search saturates within n layers).
std::size_t default_max_cycles(const OrientedGraph& g);

/// floor(2/alpha) for positive alpha.
std::size_t max_cycles_for(const Rational& alpha);

struct ShiftedWalkSearch {
  std::optional<ShiftedWalk> walk;
  /// |X_0|, |X_1|, ... for the layers that were built.
  std::vector<std::size_t> layer_sizes;
};

/// Layered search X_0 = N+(x), X_{i+1} = N+(X_i^-) u X_i, where X_i^- holds
/// the factor predecessors of X_i. Links (b, a') are explored with b then a'
/// ascending and the first parent wins, so the result is reproducible and
/// traverses the minimum possible number of cycles. Gives up after
/// max_cycles traversals or when the layers stop growing.
///
/// Throws std::domain_error if x == y, a vertex is out of range, or the
/// factor does not cover every vertex of g.
ShiftedWalkSearch search_shifted_walk(const OrientedGraph& g, const CycleFactor& factor, Vertex x,
                                      Vertex y, std::size_t max_cycles);

std::optional<ShiftedWalk> find_shifted_walk(const OrientedGraph& g, const CycleFactor& factor,
                                             Vertex x, Vertex y, std::size_t max_cycles);
std::optional<ShiftedWalk> find_shifted_walk(const OrientedGraph& g, const CycleFactor& factor,
                                             Vertex x, Vertex y);

/// All layers X_0 ⊆ X_1 ⊆ ... from x until saturation or max_layers.
std::vector<VertexSet> shifted_reach_layers(const OrientedGraph& g, const CycleFactor& factor,
                                            Vertex x, std::size_t max_layers);

/// Bookkeeping for a closed walk relative to a factor.
struct BalanceLedger {
  /// Visits per host vertex; the closing repetition of a closed walk is not
  /// counted.
  std::vector<std::size_t> visits;
  /// Common visit count per factor cycle, or 0 where the counts differ.
  std::vector<std::size_t> cycle_multiplicity;
  /// Factor edges that occur on the walk.
  std::set<Edge> traversed_factor_edges;
  /// banned[i] refers to the occurrence of edge walk[i] -> walk[i+1].
  std::vector<char> banned;
  /// Vertices outside the factor that the walk is expected to visit once.
  VertexSet exceptional;
  bool balanced = false;

  std::size_t max_visits() const;
  std::size_t banned_count() const;
  bool traverses_all_factor_edges(const CycleFactor& factor) const;
};

/// Recomputes a ledger from scratch (banned flags are copied as given, or
/// cleared when empty).
BalanceLedger tally_walk(const Walk& walk, const FactorIndex& index, const VertexSet& exceptional,
                         std::vector<char> banned = {});

/// Closed walk balanced w.r.t. the factor: the vertices of each factor cycle
/// are visited equally often (at least once), every exceptional vertex
/// exactly once, and nothing else is visited.
bool is_balanced(const Walk& walk, const CycleFactor& factor, const VertexSet& exceptional);

struct BalancedWalk {
  Walk walk;
  BalanceLedger ledger;
};

/// Joins the factor cycles into one closed walk: cycles ordered by minimum
/// vertex c_i, W' = c_1^+ C_1 c_1 W_1 c_2^+ C_2 c_2 ... W_s c_1^+ with shifted
/// c_i -> c_{i+1}^+ walks W_i, then each cycle is wound once more at the first
/// occurrence of c_i. alpha bounds each shifted walk by floor(2/alpha)
/// cycles; without it (or when not positive) the search runs to saturation.
/// Raises WalkError carrying the pair whose shifted walk was not found.
BalancedWalk build_balanced_walk(const OrientedGraph& g, const CycleFactor& factor,
                                 std::optional<Rational> alpha = std::nullopt);

struct Incorporation {
  BalancedWalk result;
  ShiftedWalk connector;
  /// Edge-occurrence index of the replaced u1^- -> u1 occurrence.
  std::size_t spliced_at = 0;
  /// Position of the exceptional vertex on the new walk.
  std::size_t position = 0;
  /// Occurrences newly banned by this step (at most 6).
  std::size_t new_bans = 0;
};

/// Splices exceptional vertex v (v -> u1 and u2 -> v in g_star) into a
/// balanced walk: one unbanned occurrence of u1^- u1 becomes
/// u1^- W_v u2^+ C_2 u2 v u1 C_1 u1, where W_v is a shifted u1^- -> u2^+ walk.
/// Afterwards the six edge occurrences with both ends within distance 3 of v
/// are banned.
///
/// Preconditions (std::invalid_argument): v uncovered and not yet on the
/// walk, u1 != u2, u1^- != u2^+, both attachment edges present, input walk
/// balanced. WalkError when no unbanned occurrence or no shifted walk exists,
/// or when the result would put two exceptional vertices closer than 4.
Incorporation incorporate_exceptional(const BalancedWalk& current, const OrientedGraph& g_star,
                                      Vertex v, Vertex u1, Vertex u2, const CycleFactor& factor,
                                      std::optional<Rational> alpha = std::nullopt);

/// First (u1, u2) in ascending order that satisfies the incorporation
/// preconditions and has an unbanned u1^- u1 occurrence on the walk.
std::optional<std::pair<Vertex, Vertex>> choose_attachment(const BalancedWalk& current,
                                                           const OrientedGraph& g_star, Vertex v,
                                                           const CycleFactor& factor);

/// Cyclic distance between two positions of a closed walk.
std::size_t walk_distance(const Walk& walk, std::size_t i, std::size_t j);

/// Smallest cyclic distance between occurrences of two distinct listed
/// vertices; nullopt if fewer than two of them occur.
std::optional<std::size_t> min_pairwise_distance(const Walk& walk, const VertexSet& vertices);

}  // namespace orient
