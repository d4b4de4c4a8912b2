#include "orient/factor.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace orient {
namespace {

constexpr int kUnmatched = -1;

/// Hopcroft-Karp over the double cover of g.
class CoverMatching {
 public:
  explicit CoverMatching(const OrientedGraph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.order())),
        match_left_(n_, kUnmatched),
        match_right_(n_, kUnmatched),
        layer_(n_, 0) {}

  std::size_t run() {
    std::size_t matched = 0;
    while (build_layers()) {
      for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
        if (match_left_[u] == kUnmatched && augment(u)) ++matched;
      }
    }
    return matched;
  }

  const std::vector<int>& successor() const { return match_left_; }

 private:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  bool build_layers() {
    std::queue<Vertex> frontier;
    for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
      if (match_left_[u] == kUnmatched) {
        layer_[u] = 0;
        frontier.push(u);
      } else {
        layer_[u] = kInfinity;
      }
    }
    bool found_free = false;
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g_.out(u)) {
        int next = match_right_[w];
        if (next == kUnmatched) {
          found_free = true;
        } else if (layer_[next] == kInfinity) {
          layer_[next] = layer_[u] + 1;
          frontier.push(next);
        }
      }
    }
    return found_free;
  }

  bool augment(Vertex u) {
    for (Vertex w : g_.out(u)) {
      int next = match_right_[w];
      if (next == kUnmatched || (layer_[next] == layer_[u] + 1 && augment(next))) {
        match_left_[u] = w;
        match_right_[w] = u;
        return true;
      }
    }
    layer_[u] = kInfinity;
    return false;
  }

  const OrientedGraph& g_;
  std::size_t n_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> layer_;
};

bool assign(const OrientedGraph& g, Vertex v, std::vector<char>& used) {
  if (v == g.order()) return true;
  for (Vertex w : g.out(v)) {
    if (used[w]) continue;
    used[w] = 1;
    if (assign(g, v + 1, used)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::size_t CycleFactor::vertex_count() const {
  std::size_t total = 0;
  for (const auto& c : cycles) total += c.size();
  return total;
}

CycleFactor factor_from_successors(const std::vector<Vertex>& perm) {
  CycleFactor f;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = static_cast<Vertex>(start); !seen[v]; v = perm[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

std::optional<CycleFactor> find_one_factor(const OrientedGraph& g) {
  CoverMatching matching(g);
  if (matching.run() != static_cast<std::size_t>(g.order())) return std::nullopt;
  return factor_from_successors(matching.successor());
}

std::size_t max_cover_matching(const OrientedGraph& g) {
  CoverMatching matching(g);
  return matching.run();
}

bool verify_factor(const OrientedGraph& g, const CycleFactor& f) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const auto& cycle : f.cycles) {
    if (cycle.size() < 3) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex u = cycle[i];
      Vertex v = cycle[(i + 1) % cycle.size()];
      if (!g.contains(u) || covered[u]) return false;
      covered[u] = 1;
      if (!g.contains(v) || !g.has_edge(u, v)) return false;
    }
  }
  for (char c : covered) {
    if (!c) return false;
  }
  return true;
}

bool brute_force_one_factor_exists(const OrientedGraph& g) {
  if (g.order() > 10) {
    throw std::domain_error("brute-force 1-factor search is limited to 10 vertices");
  }
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  return assign(g, 0, used);
}

}  // namespace orient
