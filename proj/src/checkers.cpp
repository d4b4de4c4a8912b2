#include "orient/checkers.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

#include "orient/random.hpp"

namespace orient {

namespace {

struct SizeRange {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
};

SizeRange x_size_range(int n, const Rational& alpha, const Rational& min_size) {
  SizeRange r;
  r.lo = std::max<std::int64_t>(1, ceil(min_size));
  r.hi = floor((Rational(1) - alpha) * Rational(n));
  r.hi = std::min<std::int64_t>(r.hi, n);
  return r;
}

std::string set_note(std::size_t out_size, std::size_t x_size) {
  return "|N+(X)| = " + std::to_string(out_size) + ", |X| = " + std::to_string(x_size);
}

CheckReport expansion_report(const char* name, const OrientedGraph& g, const Rational& alpha,
                             const Rational& min_size, SweepMode mode, std::uint64_t seed) {
  CheckReport r;
  r.check = name;
  r.conclusion_evaluated = true;
  r.notes["mode"] = to_string(mode);
  r.notes["alpha"] = to_string(alpha);
  r.stats["n"] = g.order();
  if (auto x = find_expansion_failure(g, alpha, min_size, mode, seed)) {
    r.conclusion_holds = false;
    const auto nx = out_neighborhood(g, *x).size();
    r.witness = Witness{Witness::Kind::vertex_set, *x, set_note(nx, x->size())};
  }
  return r;
}

}  // namespace

const char* to_string(SweepMode mode) {
  return mode == SweepMode::exhaustive ? "exhaustive" : "sampled";
}

SweepMode parse_sweep_mode(const std::string& text) {
  if (text == "exhaustive") return SweepMode::exhaustive;
  if (text == "sampled") return SweepMode::sampled;
  throw std::invalid_argument("unknown mode: " + text);
}

std::optional<VertexSet> find_expansion_failure(const OrientedGraph& g, const Rational& alpha,
                                                const Rational& min_size, SweepMode mode,
                                                std::uint64_t seed) {
  const int n = g.order();
  const SizeRange range = x_size_range(n, alpha, min_size);
  if (mode == SweepMode::exhaustive && n > kExhaustiveSweepCap)
    throw std::domain_error("exhaustive sweep limited to 22 vertices");
  if (n == 0 || range.lo > range.hi) return std::nullopt;
  // 2|N+(X)| - 2|X| < alpha n  <=>  2|N+(X)| - 2|X| < ceil(alpha n) for integers.
  const std::int64_t threshold = ceil(alpha * Rational(n));

  if (mode == SweepMode::sampled) {
    Rng rng(seed);
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
    for (std::size_t t = 0; t < kSweepSamples; ++t) {
      const auto size = range.lo + static_cast<std::int64_t>(
                                       rng.below(static_cast<std::uint64_t>(range.hi - range.lo + 1)));
      rng.shuffle(pool);
      VertexSet x(pool.begin(), pool.begin() + size);
      x = make_vertex_set(std::move(x));
      const auto nx = static_cast<std::int64_t>(out_neighborhood(g, x).size());
      if (2 * nx - 2 * size < threshold) return x;
    }
    return std::nullopt;
  }

  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  std::int64_t out_size = 0;
  std::int64_t x_size = 0;
  std::uint32_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const std::uint32_t bit = 1U << v;
    mask ^= bit;
    if (mask & bit) {
      ++x_size;
      for (Vertex w : g.out(v))
        if (hits[static_cast<std::size_t>(w)]++ == 0) ++out_size;
    } else {
      --x_size;
      for (Vertex w : g.out(v))
        if (--hits[static_cast<std::size_t>(w)] == 0) --out_size;
    }
    if (x_size < range.lo || x_size > range.hi) continue;
    if (2 * out_size - 2 * x_size < threshold) {
      VertexSet x;
      for (int u = 0; u < n; ++u)
        if ((mask >> u) & 1U) x.push_back(u);
      return x;
    }
  }
  return std::nullopt;
}

CheckReport check_expansion(const OrientedGraph& g, const Rational& alpha, SweepMode mode,
                            std::uint64_t seed) {
  const int n = g.order();
  bool hypothesis = alpha > 0 && n > 0;
  if (hypothesis) {
    const auto p = degree_profile(g);
    hypothesis = Rational(p.delta_star) >= (Rational(3, 2) + alpha) * Rational(n);
  }
  if (!hypothesis) {
    CheckReport r;
    r.check = "expansion";
    r.notes["mode"] = to_string(mode);
    r.notes["alpha"] = to_string(alpha);
    r.stats["n"] = n;
    return r;
  }
  CheckReport r = expansion_report("expansion", g, alpha, Rational(0), mode, seed);
  r.hypothesis_holds = true;
  return r;
}

CheckReport check_fact_semidegree(const OrientedGraph& g, const Rational& alpha) {
  CheckReport r;
  r.check = "fact_semidegree";
  r.notes["alpha"] = to_string(alpha);
  const int n = g.order();
  r.stats["n"] = n;
  if (n == 0 || alpha <= 0) return r;
  const auto p = degree_profile(g);
  r.stats["delta_star"] = p.delta_star;
  r.stats["delta_zero"] = p.delta_zero;
  r.hypothesis_holds = Rational(p.delta_star) >= (Rational(3, 2) + alpha) * Rational(n);
  if (!r.hypothesis_holds) return r;
  r.conclusion_evaluated = true;
  r.conclusion_holds = Rational(p.delta_zero) > alpha * Rational(n);
  if (!r.conclusion_holds) {
    for (Vertex v = 0; v < n; ++v) {
      if (std::min(g.out_degree(v), g.in_degree(v)) == p.delta_zero) {
        r.witness = Witness{Witness::Kind::vertex, {v}, "semi-degree " + std::to_string(p.delta_zero)};
        break;
      }
    }
  }
  return r;
}

CheckReport check_ore(const OrientedGraph& g, const Rational& c) {
  CheckReport r;
  r.check = "ore";
  r.notes["c"] = to_string(c);
  r.hypothesis_holds = true;
  r.conclusion_evaluated = true;
  const int n = g.order();
  r.stats["n"] = n;
  const Rational bound = c * Rational(n);
  std::int64_t pairs = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y || g.has_edge(x, y)) continue;
      ++pairs;
      if (Rational(g.out_degree(x) + g.in_degree(y)) < bound) {
        r.conclusion_holds = false;
        r.witness = Witness{Witness::Kind::vertex_pair, {x, y},
                            "d+(x) + d-(y) = " + std::to_string(g.out_degree(x) + g.in_degree(y))};
        r.stats["non_edges"] = pairs;
        return r;
      }
    }
  }
  r.stats["non_edges"] = pairs;
  return r;
}

CheckReport check_ore_semidegree(const OrientedGraph& g, const Rational& alpha) {
  CheckReport r;
  r.check = "ore_semidegree";
  r.notes["alpha"] = to_string(alpha);
  const int n = g.order();
  r.stats["n"] = n;
  if (n == 0) return r;
  const CheckReport ore = check_ore(g, Rational(3, 4) + alpha);
  r.hypothesis_holds = !ore.failed();
  if (!r.hypothesis_holds) return r;
  const auto p = degree_profile(g);
  r.stats["delta_zero"] = p.delta_zero;
  r.conclusion_evaluated = true;
  r.conclusion_holds = Rational(p.delta_zero) >= Rational(n, 8) + alpha * Rational(n, 2);
  if (!r.conclusion_holds) {
    for (Vertex v = 0; v < n; ++v) {
      if (std::min(g.out_degree(v), g.in_degree(v)) == p.delta_zero) {
        r.witness = Witness{Witness::Kind::vertex, {v}, "semi-degree " + std::to_string(p.delta_zero)};
        break;
      }
    }
  }
  return r;
}

CheckReport check_ore_expansion(const OrientedGraph& g, const Rational& alpha,
                                const std::vector<std::pair<Vertex, Vertex>>& u,
                                const Rational& eps, SweepMode mode, std::uint64_t seed) {
  const int n = g.order();
  if (Rational(static_cast<std::int64_t>(u.size())) > eps * Rational(n) * Rational(n))
    throw std::domain_error("|U| exceeds eps n^2");
  std::vector<char> in_u(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& [x, y] : u) {
    if (!g.contains(x) || !g.contains(y) || x == y) throw std::domain_error("bad pair in U");
    in_u[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = 1;
  }
  if (mode == SweepMode::exhaustive && n > kExhaustiveSweepCap)
    throw std::domain_error("exhaustive sweep limited to 22 vertices");

  bool hypothesis = n > 0;
  const Rational bound = (Rational(3, 4) + alpha) * Rational(n);
  for (Vertex x = 0; x < n && hypothesis; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y || g.has_edge(x, y)) continue;
      if (in_u[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)]) continue;
      if (Rational(g.out_degree(x) + g.in_degree(y)) < bound) {
        hypothesis = false;
        break;
      }
    }
  }
  if (!hypothesis) {
    CheckReport r;
    r.check = "ore_expansion";
    r.notes["mode"] = to_string(mode);
    r.notes["alpha"] = to_string(alpha);
    r.stats["n"] = n;
    r.stats["U"] = static_cast<std::int64_t>(u.size());
    return r;
  }
  CheckReport r = expansion_report("ore_expansion", g, alpha, alpha * Rational(n), mode, seed);
  r.hypothesis_holds = true;
  r.stats["U"] = static_cast<std::int64_t>(u.size());
  return r;
}

CheckReport check_b_paths_through_d(const OrientedGraph& g, const HaggkvistBlocks& blocks) {
  CheckReport r;
  r.check = "b_paths_through_d";
  const int n = g.order();
  r.stats["n"] = n;
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  std::vector<char> in_d(static_cast<std::size_t>(n), 0);
  r.hypothesis_holds = true;
  for (Vertex v : blocks.b) {
    if (!g.contains(v)) r.hypothesis_holds = false;
    else in_b[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : blocks.d) {
    if (!g.contains(v) || (g.contains(v) && in_b[static_cast<std::size_t>(v)])) r.hypothesis_holds = false;
    else in_d[static_cast<std::size_t>(v)] = 1;
  }
  if (!r.hypothesis_holds) return r;
  r.conclusion_evaluated = true;

  std::vector<int> parent(static_cast<std::size_t>(n));
  for (Vertex s : blocks.b) {
    std::fill(parent.begin(), parent.end(), -2);
    parent[static_cast<std::size_t>(s)] = -1;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.out(v)) {
        const auto sw = static_cast<std::size_t>(w);
        if (in_d[sw] || parent[sw] != -2) continue;
        parent[sw] = v;
        if (in_b[sw]) {
          std::vector<Vertex> path;
          for (Vertex c = w; c != -1; c = parent[static_cast<std::size_t>(c)]) path.push_back(c);
          std::reverse(path.begin(), path.end());
          r.conclusion_holds = false;
          r.witness = Witness{Witness::Kind::path, path, "B-B path avoiding D"};
          return r;
        }
        queue.push(w);
      }
    }
  }
  return r;
}

}  // namespace orient
