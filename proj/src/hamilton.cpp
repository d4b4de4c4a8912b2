#include "orient/hamilton.hpp"

#include "orient/factor.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace orient {
namespace {

using Mask = std::uint64_t;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

class Backtracker {
 public:
  Backtracker(const OrientedGraph& g, std::uint64_t budget) : g_(g), n_(g.order()), budget_(budget) {
    out_.resize(static_cast<std::size_t>(n_));
    in_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.out(v)) out_[v] |= Mask{1} << w;
      for (Vertex w : g.in(v)) in_[v] |= Mask{1} << w;
    }
  }

  HamiltonVerdict run(std::vector<Vertex>& cycle) {
    if (n_ < 3) return HamiltonVerdict::non_hamiltonian;
    path_.assign(1, 0);
    const Mask unvisited = full_mask() & ~Mask{1};
    if (extend(0, unvisited)) {
      cycle = path_;
      return HamiltonVerdict::hamiltonian;
    }
    return exhausted_ ? HamiltonVerdict::unknown : HamiltonVerdict::non_hamiltonian;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Mask full_mask() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  // Every unvisited vertex must keep an entry (from end or unvisited) and an
  // exit (to unvisited or back to 0); all of them must be reachable from end
  // and able to reach 0 inside unvisited.
  bool feasible(Vertex end, Mask unvisited) const {
    const Mask entry_side = unvisited | (Mask{1} << end);
    const Mask exit_side = unvisited | Mask{1};
    for (Mask rest = unvisited; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((in_[v] & entry_side) == 0 || (out_[v] & exit_side) == 0) return false;
    }
    Mask seen = out_[end] & unvisited;
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= out_[std::countr_zero(f)];
      next &= unvisited & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != unvisited) return false;
    seen = in_[0] & unvisited;
    frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= in_[std::countr_zero(f)];
      next &= unvisited & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == unvisited;
  }

  bool extend(Vertex end, Mask unvisited) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (unvisited == 0) return (out_[end] & Mask{1}) != 0;
    if (!feasible(end, unvisited)) return false;

    Mask options = out_[end] & unvisited;
    Vertex candidates[64];
    int counts[64];
    int k = 0;
    for (; options != 0; options &= options - 1) {
      const Vertex w = std::countr_zero(options);
      candidates[k] = w;
      counts[k] = std::popcount(out_[w] & (unvisited | Mask{1}));
      ++k;
    }
    // fewest available out-neighbours first, ties by identifier
    for (int i = 1; i < k; ++i) {
      for (int j = i; j > 0 && (counts[j] < counts[j - 1] ||
                                (counts[j] == counts[j - 1] && candidates[j] < candidates[j - 1]));
           --j) {
        std::swap(counts[j], counts[j - 1]);
        std::swap(candidates[j], candidates[j - 1]);
      }
    }
    for (int i = 0; i < k; ++i) {
      const Vertex w = candidates[i];
      path_.push_back(w);
      if (extend(w, unvisited & ~(Mask{1} << w))) return true;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const OrientedGraph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  std::vector<Vertex> path_;
};

/// Enumerates Hamilton cycles through vertex 0 in a residual edge set and
/// recurses until the required number of disjoint cycles is found.
class Decomposer {
 public:
  explicit Decomposer(const OrientedGraph& t) : n_(t.order()) {
    out_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : t.edges()) out_[e.from] |= 1U << e.to;
  }

  bool run(int needed) { return solve(needed); }
  const std::vector<std::vector<Vertex>>& cycles() const { return cycles_; }

 private:
  bool solve(int needed) {
    if (needed == 0) {
      return std::all_of(out_.begin(), out_.end(), [](unsigned m) { return m == 0; });
    }
    // Each cycle leaves 0 exactly once: fix the first step to the smallest
    // remaining out-neighbour of 0 so cycle order is canonical.
    if (out_[0] == 0) return false;
    const Vertex first = std::countr_zero(out_[0]);
    std::vector<Vertex> path{0, first};
    return enumerate(path, (1U << 0) | (1U << first), needed);
  }

  bool enumerate(std::vector<Vertex>& path, unsigned used, int needed) {
    const Vertex end = path.back();
    if (static_cast<int>(path.size()) == n_) {
      if (!(out_[end] & 1U)) return false;
      remove_cycle(path);
      cycles_.push_back(path);
      if (solve(needed - 1)) return true;
      cycles_.pop_back();
      restore_cycle(path);
      return false;
    }
    for (unsigned options = out_[end] & ~used; options != 0; options &= options - 1) {
      const Vertex w = std::countr_zero(options);
      path.push_back(w);
      if (enumerate(path, used | (1U << w), needed)) return true;
      path.pop_back();
    }
    return false;
  }

  void remove_cycle(const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out_[cycle[i]] &= ~(1U << cycle[(i + 1) % cycle.size()]);
    }
  }
  void restore_cycle(const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out_[cycle[i]] |= 1U << cycle[(i + 1) % cycle.size()];
    }
  }

  int n_;
  std::vector<unsigned> out_;
  std::vector<std::vector<Vertex>> cycles_;
};

}  // namespace

const char* to_string(HamiltonVerdict v) {
  switch (v) {
    case HamiltonVerdict::hamiltonian:
      return "hamiltonian";
    case HamiltonVerdict::non_hamiltonian:
      return "non_hamiltonian";
    case HamiltonVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

bool is_hamilton_cycle(const OrientedGraph& g, const std::vector<Vertex>& cycle) {
  if (g.order() < 3 || cycle.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<char> seen(cycle.size(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex v = cycle[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

HamiltonCertificate is_hamiltonian_backtracking(const OrientedGraph& g, std::uint64_t node_budget) {
  if (g.order() > 64) throw std::domain_error("backtracking oracle is limited to 64 vertices");
  Timer timer;
  HamiltonCertificate cert;
  if (g.order() >= 3 && !find_one_factor(g)) {
    cert.verdict = HamiltonVerdict::non_hamiltonian;
    cert.stats.elapsed_ms = timer.ms();
    return cert;
  }
  Backtracker search(g, node_budget);
  cert.verdict = search.run(cert.cycle);
  cert.stats.nodes = search.nodes();
  cert.stats.elapsed_ms = timer.ms();
  return cert;
}

HamiltonCertificate is_hamiltonian_dp(const OrientedGraph& g) {
  const int n = g.order();
  if (n > 20) throw std::domain_error("subset DP oracle is limited to 20 vertices");
  Timer timer;
  HamiltonCertificate cert;
  cert.verdict = HamiltonVerdict::non_hamiltonian;
  if (n < 3) {
    cert.stats.elapsed_ms = timer.ms();
    return cert;
  }
  // reach[S] (S over vertices 1..n-1): endpoints v in S of a path from 0
  // through exactly {0} u S.
  const std::size_t states = std::size_t{1} << (n - 1);
  std::vector<std::uint32_t> reach(states, 0);
  std::vector<std::uint32_t> out_bits(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) out_bits[e.from] |= 1U << e.to;
  auto bit = [](Vertex v) { return std::uint32_t{1} << (v - 1); };
  for (Vertex v : g.out(0)) reach[bit(v)] |= 1U << v;
  for (std::size_t s = 1; s < states; ++s) {
    std::uint32_t ends = reach[s];
    if (ends == 0) continue;
    for (; ends != 0; ends &= ends - 1) {
      const Vertex v = std::countr_zero(ends);
      ++cert.stats.nodes;
      // out-neighbours of v outside {0} u S, shifted to subset bits
      std::uint32_t next = (out_bits[v] >> 1) & ~static_cast<std::uint32_t>(s);
      for (; next != 0; next &= next - 1) {
        const int b = std::countr_zero(next);
        reach[s | (std::size_t{1} << b)] |= 1U << (b + 1);
      }
    }
  }
  const std::size_t full = states - 1;
  Vertex last = -1;
  for (std::uint32_t ends = reach[full]; ends != 0; ends &= ends - 1) {
    const Vertex v = std::countr_zero(ends);
    if (g.has_edge(v, 0)) {
      last = v;
      break;
    }
  }
  if (last >= 0) {
    cert.verdict = HamiltonVerdict::hamiltonian;
    std::vector<Vertex> rev{last};
    std::size_t s = full;
    Vertex v = last;
    while (s != bit(v)) {
      const std::size_t prev = s & ~static_cast<std::size_t>(bit(v));
      Vertex u = -1;
      for (std::uint32_t ends = reach[prev]; ends != 0; ends &= ends - 1) {
        const Vertex cand = std::countr_zero(ends);
        if (g.has_edge(cand, v)) {
          u = cand;
          break;
        }
      }
      rev.push_back(u);
      s = prev;
      v = u;
    }
    rev.push_back(0);
    cert.cycle.assign(rev.rbegin(), rev.rend());
  }
  cert.stats.elapsed_ms = timer.ms();
  return cert;
}

std::optional<std::vector<std::vector<Vertex>>> edge_disjoint_hamilton_decomposition(
    const OrientedGraph& t) {
  const int n = t.order();
  if (n < 1 || n > 9) throw std::domain_error("decomposition search is limited to 1..9 vertices");
  if (t.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
    throw std::domain_error("decomposition input is not a tournament");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (t.out_degree(v) != t.in_degree(v)) {
      throw std::domain_error("decomposition input is not a regular tournament");
    }
  }
  if (n == 1) return std::vector<std::vector<Vertex>>{};
  Decomposer search(t);
  if (!search.run((n - 1) / 2)) return std::nullopt;
  return search.cycles();
}

}  // namespace orient
