#include "orient/walks.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace orient {
namespace {

constexpr int kUnreached = -1;

std::string pair_text(Vertex a, Vertex b) {
  return std::to_string(a) + "->" + std::to_string(b);
}

void require_in_range(const OrientedGraph& g, Vertex v) {
  if (!g.contains(v)) throw std::domain_error("vertex " + std::to_string(v) + " out of range");
}

/// Core layered search; uncovered vertices may be reached but never entered
/// as a cycle, so they can only appear as the target.
ShiftedWalkSearch layered_search(const OrientedGraph& g, const FactorIndex& index, Vertex x,
                                 Vertex y, std::size_t max_cycles) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> layer(n, kUnreached);
  std::vector<Vertex> parent(n, -1);  // exit vertex b of the link b -> v
  ShiftedWalkSearch result;

  std::vector<Vertex> frontier;  // vertices first reached in the latest layer
  for (Vertex w : g.out(x)) {
    layer[w] = 0;
    frontier.push_back(w);
  }
  std::size_t reached = frontier.size();
  result.layer_sizes.push_back(reached);

  std::size_t depth = 0;
  while (layer[y] == kUnreached) {
    if (depth >= max_cycles || frontier.empty()) return result;
    // Every vertex of X_depth was already expanded except the frontier;
    // predecessors of older layers produced nothing new last time.
    std::vector<Vertex> exits;
    for (Vertex a : frontier) {
      if (index.covers(a)) exits.push_back(index.predecessor(a));
    }
    std::sort(exits.begin(), exits.end());
    std::vector<Vertex> next;
    for (Vertex b : exits) {
      for (Vertex w : g.out(b)) {
        if (layer[w] != kUnreached) continue;
        layer[w] = static_cast<int>(depth) + 1;
        parent[w] = b;
        next.push_back(w);
      }
    }
    ++depth;
    reached += next.size();
    result.layer_sizes.push_back(reached);
    frontier = std::move(next);
  }

  ShiftedWalk walk{x, y, {}};
  for (Vertex v = y; layer[v] > 0;) {
    const Vertex b = parent[v];
    const Vertex a = index.successor(b);
    walk.segments.push_back({a, static_cast<std::size_t>(index.cycle_of(b)), b});
    v = a;
  }
  std::reverse(walk.segments.begin(), walk.segments.end());
  result.walk = std::move(walk);
  return result;
}

void append_arc(std::vector<Vertex>& out, const FactorIndex& index, Vertex from, Vertex to) {
  // from, succ(from), ..., to along the cycle
  Vertex v = from;
  out.push_back(v);
  while (v != to) {
    v = index.successor(v);
    out.push_back(v);
  }
}

/// Inserts one more lap v C v at the first occurrence of v.
void wind_once_more(std::vector<Vertex>& walk, std::vector<char>& banned, const FactorIndex& index,
                    Vertex v) {
  auto it = std::find(walk.begin(), walk.end(), v);
  const auto pos = static_cast<std::size_t>(it - walk.begin());
  std::vector<Vertex> lap;
  append_arc(lap, index, index.successor(v), v);
  walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(pos) + 1, lap.begin(), lap.end());
  banned.insert(banned.begin() + static_cast<std::ptrdiff_t>(pos), lap.size(), 0);
}

}  // namespace

bool is_walk_in(const OrientedGraph& g, const Walk& w) {
  if (w.vertices.empty()) return false;
  for (Vertex v : w.vertices) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    if (!g.has_edge(w.vertices[i], w.vertices[i + 1])) return false;
  }
  return true;
}

FactorIndex::FactorIndex(const CycleFactor& factor, int n)
    : factor_(factor),
      cycle_of_(static_cast<std::size_t>(n), -1),
      next_(static_cast<std::size_t>(n), -1),
      prev_(static_cast<std::size_t>(n), -1) {
  for (std::size_t c = 0; c < factor_.cycles.size(); ++c) {
    const auto& cycle = factor_.cycles[c];
    if (cycle.size() < 3) throw std::domain_error("factor cycle shorter than 3");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex v = cycle[i];
      if (v < 0 || v >= n) throw std::domain_error("factor vertex out of range");
      if (cycle_of_[v] >= 0) throw std::domain_error("factor cycles are not disjoint");
      cycle_of_[v] = static_cast<int>(c);
      next_[v] = cycle[(i + 1) % cycle.size()];
      prev_[v] = cycle[(i + cycle.size() - 1) % cycle.size()];
    }
  }
}

bool FactorIndex::covers_all() const {
  return std::all_of(cycle_of_.begin(), cycle_of_.end(), [](int c) { return c >= 0; });
}

Walk expand_shifted_walk(const OrientedGraph& g, const CycleFactor& factor, const ShiftedWalk& sw) {
  const FactorIndex index(factor, g.order());
  require_in_range(g, sw.source);
  require_in_range(g, sw.target);
  Walk walk;
  walk.vertices.push_back(sw.source);
  for (std::size_t i = 0; i < sw.segments.size(); ++i) {
    const ShiftedSegment& seg = sw.segments[i];
    const std::string where = "segment " + std::to_string(i) + ": ";
    if (!g.contains(seg.entry) || !g.contains(seg.exit)) {
      throw WalkError(where + "vertex out of range", i);
    }
    if (seg.cycle >= index.cycle_count() || index.cycle_of(seg.entry) != static_cast<int>(seg.cycle) ||
        index.cycle_of(seg.exit) != static_cast<int>(seg.cycle)) {
      throw WalkError(where + "entry/exit not on the named cycle", i);
    }
    if (index.successor(seg.exit) != seg.entry) {
      throw WalkError(where + "entry " + std::to_string(seg.entry) +
                          " is not the successor of exit " + std::to_string(seg.exit),
                      i);
    }
    if (!g.has_edge(walk.vertices.back(), seg.entry)) {
      throw WalkError(where + "missing link " + pair_text(walk.vertices.back(), seg.entry), i);
    }
    append_arc(walk.vertices, index, seg.entry, seg.exit);
  }
  if (!g.has_edge(walk.vertices.back(), sw.target)) {
    throw WalkError("segment " + std::to_string(sw.segments.size()) + ": missing link " +
                        pair_text(walk.vertices.back(), sw.target),
                    sw.segments.size());
  }
  walk.vertices.push_back(sw.target);
  return walk;
}

std::size_t max_cycles_for(const Rational& alpha) {
  if (alpha <= 0) throw std::domain_error("alpha must be positive");
  return static_cast<std::size_t>(floor(Rational(2) / alpha));
}

std::size_t default_max_cycles(const OrientedGraph& g) {
  const Rational alpha = delta_star_excess(g);
  if (alpha > 0) return max_cycles_for(alpha);
  return static_cast<std::size_t>(g.order());
}

ShiftedWalkSearch search_shifted_walk(const OrientedGraph& g, const CycleFactor& factor, Vertex x,
                                      Vertex y, std::size_t max_cycles) {
  require_in_range(g, x);
  require_in_range(g, y);
  if (x == y) throw std::domain_error("shifted walk endpoints must differ");
  const FactorIndex index(factor, g.order());
  if (!index.covers_all()) throw std::domain_error("factor does not cover the host graph");
  return layered_search(g, index, x, y, max_cycles);
}

std::optional<ShiftedWalk> find_shifted_walk(const OrientedGraph& g, const CycleFactor& factor,
                                             Vertex x, Vertex y, std::size_t max_cycles) {
  return search_shifted_walk(g, factor, x, y, max_cycles).walk;
}

std::optional<ShiftedWalk> find_shifted_walk(const OrientedGraph& g, const CycleFactor& factor,
                                             Vertex x, Vertex y) {
  return find_shifted_walk(g, factor, x, y, default_max_cycles(g));
}

std::vector<VertexSet> shifted_reach_layers(const OrientedGraph& g, const CycleFactor& factor,
                                            Vertex x, std::size_t max_layers) {
  require_in_range(g, x);
  const FactorIndex index(factor, g.order());
  if (!index.covers_all()) throw std::domain_error("factor does not cover the host graph");
  std::vector<char> in_layer(static_cast<std::size_t>(g.order()), 0);
  for (Vertex w : g.out(x)) in_layer[w] = 1;
  std::vector<VertexSet> layers;
  auto snapshot = [&] {
    VertexSet s;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (in_layer[v]) s.push_back(v);
    }
    return s;
  };
  layers.push_back(snapshot());
  while (layers.size() < max_layers) {
    std::vector<char> next = in_layer;
    for (Vertex a : layers.back()) {
      for (Vertex w : g.out(index.predecessor(a))) next[w] = 1;
    }
    if (next == in_layer) break;
    in_layer = std::move(next);
    layers.push_back(snapshot());
  }
  return layers;
}

std::size_t BalanceLedger::max_visits() const {
  return visits.empty() ? 0 : *std::max_element(visits.begin(), visits.end());
}

std::size_t BalanceLedger::banned_count() const {
  return static_cast<std::size_t>(std::count(banned.begin(), banned.end(), 1));
}

bool BalanceLedger::traverses_all_factor_edges(const CycleFactor& factor) const {
  for (const auto& cycle : factor.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!traversed_factor_edges.contains({cycle[i], cycle[(i + 1) % cycle.size()]})) return false;
    }
  }
  return true;
}

BalanceLedger tally_walk(const Walk& walk, const FactorIndex& index, const VertexSet& exceptional,
                         std::vector<char> banned) {
  BalanceLedger ledger;
  const auto n = static_cast<std::size_t>(index.host_order());
  ledger.visits.assign(n, 0);
  ledger.exceptional = exceptional;
  ledger.banned = banned.empty() ? std::vector<char>(walk.length(), 0) : std::move(banned);
  if (ledger.banned.size() != walk.length()) {
    throw std::invalid_argument("banned flags do not match the walk length");
  }
  const std::size_t counted = walk.closed() ? walk.vertices.size() - 1 : walk.vertices.size();
  bool in_range = true;
  for (std::size_t i = 0; i < counted; ++i) {
    const Vertex v = walk.vertices[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      in_range = false;
      continue;
    }
    ++ledger.visits[v];
  }
  for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
    const Vertex u = walk.vertices[i];
    const Vertex v = walk.vertices[i + 1];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      continue;
    }
    if (index.covers(u) && index.successor(u) == v) ledger.traversed_factor_edges.insert({u, v});
  }

  bool balanced = in_range && walk.closed();
  ledger.cycle_multiplicity.assign(index.cycle_count(), 0);
  for (std::size_t c = 0; c < index.cycle_count(); ++c) {
    const auto& cycle = index.cycle(c);
    const std::size_t first = ledger.visits[cycle.front()];
    const bool equal = std::all_of(cycle.begin(), cycle.end(),
                                   [&](Vertex v) { return ledger.visits[v] == first; });
    if (equal && first > 0) {
      ledger.cycle_multiplicity[c] = first;
    } else {
      balanced = false;
    }
  }
  std::vector<char> is_exceptional(n, 0);
  for (Vertex v : exceptional) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || index.covers(v)) {
      balanced = false;
      continue;
    }
    is_exceptional[v] = 1;
    if (ledger.visits[v] != 1) balanced = false;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!index.covers(static_cast<Vertex>(v)) && !is_exceptional[v] && ledger.visits[v] != 0) {
      balanced = false;
    }
  }
  ledger.balanced = balanced;
  return ledger;
}

bool is_balanced(const Walk& walk, const CycleFactor& factor, const VertexSet& exceptional) {
  if (walk.vertices.empty()) return false;
  int n = 0;
  for (Vertex v : walk.vertices) n = std::max(n, v + 1);
  for (const auto& cycle : factor.cycles) {
    for (Vertex v : cycle) n = std::max(n, v + 1);
  }
  for (Vertex v : exceptional) n = std::max(n, v + 1);
  for (Vertex v : walk.vertices) {
    if (v < 0) return false;
  }
  try {
    const FactorIndex index(factor, n);
    return tally_walk(walk, index, make_vertex_set(exceptional)).balanced;
  } catch (const std::domain_error&) {
    return false;
  }
}

BalancedWalk build_balanced_walk(const OrientedGraph& g, const CycleFactor& factor,
                                 std::optional<Rational> alpha) {
  const FactorIndex index(factor, g.order());
  if (!index.covers_all()) throw std::domain_error("factor does not cover the host graph");
  if (factor.cycles.empty()) throw std::domain_error("balanced walk of an empty factor");

  const std::size_t max_cycles = alpha && *alpha > 0 ? max_cycles_for(*alpha)
                                                     : static_cast<std::size_t>(g.order());
  // cycles ordered by their minimum vertex, which is also the representative
  std::vector<Vertex> reps;
  for (const auto& cycle : factor.cycles) reps.push_back(*std::min_element(cycle.begin(), cycle.end()));
  std::sort(reps.begin(), reps.end());

  std::vector<Vertex> walk;
  const std::size_t s = reps.size();
  for (std::size_t i = 0; i < s; ++i) {
    const Vertex c = reps[i];
    append_arc(walk, index, index.successor(c), c);
    const Vertex target = index.successor(reps[(i + 1) % s]);
    auto found = layered_search(g, index, c, target, max_cycles).walk;
    if (!found) {
      throw WalkError("no shifted walk " + pair_text(c, target) + " within " +
                          std::to_string(max_cycles) + " cycles",
                      {c, target});
    }
    const Walk joined = expand_shifted_walk(g, factor, *found);
    const bool last = i + 1 == s;
    // keep the target only when closing the walk; otherwise the next arc
    // starts with it
    walk.insert(walk.end(), joined.vertices.begin() + 1,
                last ? joined.vertices.end() : joined.vertices.end() - 1);
  }

  std::vector<char> banned(walk.size() - 1, 0);
  for (Vertex c : reps) wind_once_more(walk, banned, index, c);

  BalancedWalk result;
  result.walk.vertices = std::move(walk);
  result.ledger = tally_walk(result.walk, index, {}, std::move(banned));
  return result;
}

std::size_t walk_distance(const Walk& walk, std::size_t i, std::size_t j) {
  const std::size_t d = i > j ? i - j : j - i;
  if (!walk.closed()) return d;
  const std::size_t lap = walk.length();
  const std::size_t r = d % lap;
  return std::min(r, lap - r);
}

std::optional<std::size_t> min_pairwise_distance(const Walk& walk, const VertexSet& vertices) {
  std::vector<std::pair<std::size_t, Vertex>> hits;
  const std::size_t counted = walk.closed() ? walk.vertices.size() - 1 : walk.vertices.size();
  for (std::size_t i = 0; i < counted; ++i) {
    if (std::binary_search(vertices.begin(), vertices.end(), walk.vertices[i])) {
      hits.emplace_back(i, walk.vertices[i]);
    }
  }
  std::optional<std::size_t> best;
  for (std::size_t a = 0; a < hits.size(); ++a) {
    for (std::size_t b = a + 1; b < hits.size(); ++b) {
      if (hits[a].second == hits[b].second) continue;
      const std::size_t d = walk_distance(walk, hits[a].first, hits[b].first);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

namespace {

std::optional<std::size_t> unbanned_occurrence(const BalancedWalk& current, Vertex from, Vertex to) {
  const auto& w = current.walk.vertices;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == from && w[i + 1] == to && !current.ledger.banned[i]) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> choose_attachment(const BalancedWalk& current,
                                                           const OrientedGraph& g_star, Vertex v,
                                                           const CycleFactor& factor) {
  const FactorIndex index(factor, g_star.order());
  require_in_range(g_star, v);
  for (Vertex u1 : g_star.out(v)) {
    if (!index.covers(u1)) continue;
    if (!unbanned_occurrence(current, index.predecessor(u1), u1)) continue;
    for (Vertex u2 : g_star.in(v)) {
      if (!index.covers(u2) || u2 == u1) continue;
      if (index.predecessor(u1) == index.successor(u2)) continue;
      return std::make_pair(u1, u2);
    }
  }
  return std::nullopt;
}

Incorporation incorporate_exceptional(const BalancedWalk& current, const OrientedGraph& g_star,
                                      Vertex v, Vertex u1, Vertex u2, const CycleFactor& factor,
                                      std::optional<Rational> alpha) {
  for (Vertex x : {v, u1, u2}) {
    if (!g_star.contains(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " out of range");
  }
  const FactorIndex index(factor, g_star.order());
  if (index.covers(v)) throw std::invalid_argument("exceptional vertex lies on a factor cycle");
  if (!index.covers(u1) || !index.covers(u2)) {
    throw std::invalid_argument("attachment vertices must lie on factor cycles");
  }
  if (u1 == u2) throw std::invalid_argument("attachment vertices must differ (U1 = U2)");
  if (!g_star.has_edge(v, u1)) throw std::invalid_argument("missing edge " + pair_text(v, u1));
  if (!g_star.has_edge(u2, v)) throw std::invalid_argument("missing edge " + pair_text(u2, v));
  const Vertex u1_pred = index.predecessor(u1);
  const Vertex u2_succ = index.successor(u2);
  if (u1_pred == u2_succ) throw std::invalid_argument("U1^- coincides with U2^+");
  if (std::binary_search(current.ledger.exceptional.begin(), current.ledger.exceptional.end(), v)) {
    throw std::invalid_argument("vertex already incorporated");
  }
  if (current.ledger.banned.size() != current.walk.length()) {
    throw std::invalid_argument("ledger does not belong to the walk");
  }
  if (!is_walk_in(g_star, current.walk)) throw std::invalid_argument("walk leaves the host graph");
  const BalanceLedger before = tally_walk(current.walk, index, current.ledger.exceptional,
                                          current.ledger.banned);
  if (!before.balanced) throw std::invalid_argument("input walk is not balanced");

  const auto occurrence = unbanned_occurrence(current, u1_pred, u1);
  if (!occurrence) {
    throw WalkError("no unbanned occurrence of " + pair_text(u1_pred, u1), {u1_pred, u1});
  }
  const std::size_t max_cycles = alpha && *alpha > 0 ? max_cycles_for(*alpha)
                                                     : static_cast<std::size_t>(g_star.order());
  auto connector = layered_search(g_star, index, u1_pred, u2_succ, max_cycles).walk;
  if (!connector) {
    throw WalkError("no shifted walk " + pair_text(u1_pred, u2_succ), {u1_pred, u2_succ});
  }
  const Walk w_v = expand_shifted_walk(g_star, factor, *connector);

  // u1^- [W_v ... u2^+] C_2 ... u2, v, u1 C_1 ... u1^-, then the old u1
  std::vector<Vertex> inserted(w_v.vertices.begin() + 1, w_v.vertices.end());
  append_arc(inserted, index, index.successor(u2_succ), u2);
  inserted.push_back(v);
  append_arc(inserted, index, u1, u1_pred);

  const std::size_t p = *occurrence;
  Incorporation out;
  out.connector = *connector;
  out.spliced_at = p;
  out.position = p + w_v.vertices.size() - 1 + (index.cycle(index.cycle_of(u2)).size() - 1) + 1;

  std::vector<Vertex> walk = current.walk.vertices;
  walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(p) + 1, inserted.begin(), inserted.end());
  std::vector<char> banned = current.ledger.banned;
  banned.insert(banned.begin() + static_cast<std::ptrdiff_t>(p) + 1, inserted.size(), 0);

  const std::size_t lap = walk.size() - 1;
  const std::size_t q = out.position;
  if (walk[q] != v) throw std::logic_error("exceptional vertex misplaced after splice");
  for (std::size_t k = 0; k < 6; ++k) {
    const std::size_t edge = (q + lap - 3 + k) % lap;
    if (!banned[edge]) {
      banned[edge] = 1;
      ++out.new_bans;
    }
  }

  VertexSet exceptional = current.ledger.exceptional;
  exceptional.push_back(v);
  exceptional = make_vertex_set(std::move(exceptional));

  out.result.walk.vertices = std::move(walk);
  out.result.ledger = tally_walk(out.result.walk, index, exceptional, std::move(banned));
  if (!out.result.ledger.balanced) throw std::logic_error("splice broke the balance");
  if (auto d = min_pairwise_distance(out.result.walk, exceptional); d && *d < 4) {
    throw WalkError("exceptional vertices at walk distance " + std::to_string(*d));
  }
  return out;
}

}  // namespace orient
