#include "orient/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <numeric>
#include <sstream>

#include "orient/random.hpp"

namespace orient {

namespace {

void check_pair_sides(const OrientedGraph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw std::domain_error("regularity: empty side");
  for (Vertex v : a)
    if (!g.contains(v)) throw std::domain_error("regularity: vertex out of range");
  for (Vertex v : b)
    if (!g.contains(v)) throw std::domain_error("regularity: vertex out of range");
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw std::domain_error("regularity: sides overlap");
}

// For a fixed X, the Y of each admissible size with the largest and the
// smallest number of X->Y edges bound every other Y of that size.
std::optional<VertexSet> worst_y_for(const OrientedGraph& g, const VertexSet& xs,
                                     const VertexSet& b, const Rational& d_ab,
                                     const Tolerance& eps) {
  std::vector<std::pair<int, Vertex>> deg;
  deg.reserve(b.size());
  for (Vertex y : b) {
    int c = 0;
    for (Vertex x : xs) c += g.has_edge(x, y) ? 1 : 0;
    deg.emplace_back(c, y);
  }
  std::sort(deg.begin(), deg.end(),
            [](const auto& l, const auto& r) { return l.first != r.first ? l.first > r.first : l.second < r.second; });
  const auto nb = static_cast<std::int64_t>(b.size());
  const auto nx = static_cast<std::int64_t>(xs.size());
  std::int64_t top = 0;
  std::int64_t total = 0;
  for (const auto& p : deg) total += p.first;
  std::int64_t bottom_excluded = total;  // sum of all but the s smallest
  for (std::int64_t s = 1; s <= nb; ++s) {
    top += deg[static_cast<std::size_t>(s - 1)].first;
    bottom_excluded -= deg[static_cast<std::size_t>(nb - s)].first;
    if (!eps.count_above_fraction(s, nb)) continue;
    const std::int64_t bottom = total - bottom_excluded;
    const Rational hi = Rational(top, nx * s) - d_ab;
    const Rational lo = Rational(bottom, nx * s) - d_ab;
    if (!eps.abs_below(hi)) {
      VertexSet y;
      for (std::int64_t i = 0; i < s; ++i) y.push_back(deg[static_cast<std::size_t>(i)].second);
      return make_vertex_set(std::move(y));
    }
    if (!eps.abs_below(lo)) {
      VertexSet y;
      for (std::int64_t i = nb - s; i < nb; ++i) y.push_back(deg[static_cast<std::size_t>(i)].second);
      return make_vertex_set(std::move(y));
    }
  }
  return std::nullopt;
}

std::vector<int> cluster_of(const ClusterPartition& p, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < p.clusters.size(); ++i)
    for (Vertex v : p.clusters[i]) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return owner;
}

std::vector<std::vector<std::int64_t>> cluster_edge_counts(const OrientedGraph& g,
                                                           const ClusterPartition& p) {
  const auto k = p.k();
  std::vector<std::vector<std::int64_t>> counts(k, std::vector<std::int64_t>(k, 0));
  const auto owner = cluster_of(p, g.order());
  for (const Edge& e : g.edges()) {
    const int i = owner[static_cast<std::size_t>(e.from)];
    const int j = owner[static_cast<std::size_t>(e.to)];
    if (i >= 0 && j >= 0 && i != j) ++counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return counts;
}

std::string pair_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

void validate_partition(const ClusterPartition& p, int n) {
  std::vector<char> seen(static_cast<std::size_t>(std::max(n, 0)), 0);
  auto mark = [&](const VertexSet& part) {
    for (Vertex v : part) {
      if (v < 0 || v >= n) throw std::domain_error("partition: vertex out of range");
      if (seen[static_cast<std::size_t>(v)]) throw std::domain_error("partition: vertex in two parts");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  };
  mark(p.exceptional);
  for (const auto& c : p.clusters) {
    if (c.size() != p.cluster_size()) throw std::domain_error("partition: clusters of unequal size");
    if (c.empty()) throw std::domain_error("partition: empty cluster");
    mark(c);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::domain_error("partition: parts do not cover the vertex set");
}

nlohmann::json to_json(const ClusterPartition& p) {
  return nlohmann::json{{"V0", p.exceptional}, {"clusters", p.clusters}};
}

ClusterPartition partition_from_json(const nlohmann::json& j) {
  ClusterPartition p;
  p.exceptional = make_vertex_set(j.value("V0", std::vector<Vertex>{}));
  for (const auto& c : j.at("clusters")) p.clusters.push_back(make_vertex_set(c.get<std::vector<Vertex>>()));
  return p;
}

std::optional<IrregularWitness> find_irregular_witness(const OrientedGraph& g,
                                                       const VertexSet& a, const VertexSet& b,
                                                       const Tolerance& eps) {
  check_pair_sides(g, a, b);
  if (a.size() > kExhaustiveRegularityCap || b.size() > kExhaustiveRegularityCap)
    throw std::domain_error("regularity: side larger than the exhaustive cap");
  const Rational d_ab = pair_density(g, a, b);
  const auto na = static_cast<std::int64_t>(a.size());
  const std::uint32_t limit = 1U << a.size();
  VertexSet xs;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (!eps.count_above_fraction(size, na)) continue;
    xs.clear();
    for (std::size_t i = 0; i < a.size(); ++i)
      if ((mask >> i) & 1U) xs.push_back(a[i]);
    if (auto y = worst_y_for(g, xs, b, d_ab, eps)) return IrregularWitness{xs, *y};
  }
  return std::nullopt;
}

bool is_eps_regular_exhaustive(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                               const Tolerance& eps) {
  return !find_irregular_witness(g, a, b, eps).has_value();
}

bool is_eps_regular_exhaustive(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                               const Rational& eps) {
  return is_eps_regular_exhaustive(g, a, b, Tolerance::of(eps));
}

RegularityVerdict regularity_verdict(const OrientedGraph& g, const VertexSet& a,
                                     const VertexSet& b, const Tolerance& eps, std::uint64_t seed,
                                     std::size_t samples) {
  RegularityVerdict v;
  if (a.size() <= kExhaustiveRegularityCap && b.size() <= kExhaustiveRegularityCap) {
    v.witness = find_irregular_witness(g, a, b, eps);
    v.regular = !v.witness;
    return v;
  }
  check_pair_sides(g, a, b);
  v.sampled = true;
  const Rational d_ab = pair_density(g, a, b);
  const auto na = static_cast<std::int64_t>(a.size());
  std::int64_t min_size = 1;
  while (min_size <= na && !eps.count_above_fraction(min_size, na)) ++min_size;
  if (min_size > na) {
    v.regular = true;
    return v;
  }
  Rng rng(seed);
  VertexSet pool = a;
  for (std::size_t t = 0; t < samples; ++t) {
    const auto size = min_size + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(na - min_size + 1)));
    rng.shuffle(pool);
    VertexSet xs = make_vertex_set(VertexSet(pool.begin(), pool.begin() + size));
    if (auto y = worst_y_for(g, xs, b, d_ab, eps)) {
      v.witness = IrregularWitness{xs, *y};
      v.regular = false;
      return v;
    }
  }
  v.regular = true;
  return v;
}

bool is_super_regular(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                      const Tolerance& eps, const Rational& d) {
  if (!is_eps_regular_exhaustive(g, a, b, eps)) return false;
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nb = static_cast<std::int64_t>(b.size());
  for (Vertex x : a) {
    std::int64_t deg = 0;
    for (Vertex y : b) deg += g.has_edge(x, y) ? 1 : 0;
    if (!eps.covers(d - Rational(deg, nb))) return false;
  }
  for (Vertex y : b) {
    std::int64_t deg = 0;
    for (Vertex x : a) deg += g.has_edge(x, y) ? 1 : 0;
    if (!eps.covers(d - Rational(deg, na))) return false;
  }
  return true;
}

bool is_super_regular(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                      const Rational& eps, const Rational& d) {
  return is_super_regular(g, a, b, Tolerance::of(eps), d);
}

int ReducedDigraph::out_degree(int i) const {
  return static_cast<int>(std::count(edge[static_cast<std::size_t>(i)].begin(),
                                     edge[static_cast<std::size_t>(i)].end(), 1));
}

int ReducedDigraph::in_degree(int i) const {
  int c = 0;
  for (int j = 0; j < k; ++j) c += has_edge(j, i) ? 1 : 0;
  return c;
}

std::size_t ReducedDigraph::size() const {
  std::size_t c = 0;
  for (int i = 0; i < k; ++i) c += static_cast<std::size_t>(out_degree(i));
  return c;
}

bool ReducedDigraph::is_oriented() const {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(i, j) && has_edge(j, i)) return false;
  return true;
}

OrientedGraph ReducedDigraph::to_oriented() const {
  if (!is_oriented()) throw std::domain_error("reduced digraph still has a double edge");
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (has_edge(i, j)) b.add_edge(i, j);
  return b.build();
}

nlohmann::json to_json(const ReducedDigraph& rd) {
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json density = nlohmann::json::array();
  for (int i = 0; i < rd.k; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < rd.k; ++j) {
      if (rd.has_edge(i, j)) edges.push_back({i, j});
      row.push_back(to_string(rd.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
    density.push_back(row);
  }
  nlohmann::json u = nlohmann::json::array();
  for (const auto& [i, j] : rd.exceptional_pairs) u.push_back({i, j});
  return nlohmann::json{{"k", rd.k}, {"edges", edges}, {"density", density}, {"U", u}};
}

ReducedDigraph reduced_digraph(const OrientedGraph& g, const ClusterPartition& p,
                               const Rational& d,
                               const std::vector<std::vector<char>>& certified_regular) {
  validate_partition(p, g.order());
  const auto k = p.k();
  if (certified_regular.size() != k) throw std::domain_error("reduced_digraph: verdict matrix size");
  ReducedDigraph rd;
  rd.k = static_cast<int>(k);
  rd.edge.assign(k, std::vector<char>(k, 0));
  rd.edge_count = cluster_edge_counts(g, p);
  rd.density.assign(k, std::vector<Rational>(k, Rational(0)));
  const auto m = static_cast<std::int64_t>(p.cluster_size());
  for (std::size_t i = 0; i < k; ++i) {
    if (certified_regular[i].size() != k) throw std::domain_error("reduced_digraph: verdict matrix size");
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      rd.density[i][j] = Rational(rd.edge_count[i][j], m * m);
      if (!certified_regular[i][j]) {
        rd.exceptional_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        continue;
      }
      rd.edge[i][j] = rd.density[i][j] >= d ? 1 : 0;
    }
  }
  return rd;
}

ReducedDigraph reduced_digraph(const OrientedGraph& g, const ClusterPartition& p,
                               const Rational& eps, const Rational& d) {
  validate_partition(p, g.order());
  const auto k = p.k();
  const Tolerance tol = Tolerance::of(eps);
  std::vector<std::vector<char>> regular(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) regular[i][j] = is_eps_regular_exhaustive(g, p.clusters[i], p.clusters[j], tol) ? 1 : 0;
  return reduced_digraph(g, p, d, regular);
}

OrientedGraph pure_digraph(const OrientedGraph& g, const ClusterPartition& p,
                           const ReducedDigraph& rd) {
  const auto owner = cluster_of(p, g.order());
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    const int i = owner[static_cast<std::size_t>(e.from)];
    const int j = owner[static_cast<std::size_t>(e.to)];
    if (i < 0 || j < 0 || (i != j && rd.has_edge(i, j))) b.add_edge(e.from, e.to);
  }
  return b.build();
}

Rational deletion_probability(const ReducedDigraph& rd, int i, int j) {
  const auto si = static_cast<std::size_t>(i);
  const auto sj = static_cast<std::size_t>(j);
  const std::int64_t forward = rd.has_edge(i, j) ? rd.edge_count[si][sj] : 0;
  const std::int64_t backward = rd.has_edge(j, i) ? rd.edge_count[sj][si] : 0;
  if (forward + backward == 0) return Rational(0);
  return Rational(backward, forward + backward);
}

ReducedDigraph orient_reduced(const ReducedDigraph& rd, const OrientedGraph& g,
                              const ClusterPartition& p, std::uint64_t seed) {
  validate_partition(p, g.order());
  if (static_cast<std::size_t>(rd.k) != p.k() || cluster_edge_counts(g, p) != rd.edge_count)
    throw std::domain_error("orient_reduced: reduced digraph was not built from this graph");
  ReducedDigraph out = rd;
  Rng rng(seed);
  for (int i = 0; i < rd.k; ++i) {
    for (int j = i + 1; j < rd.k; ++j) {
      if (!(rd.has_edge(i, j) && rd.has_edge(j, i))) continue;
      if (rng.bernoulli(deletion_probability(rd, i, j)))
        out.edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
      else
        out.edge[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

OrientationStats orientation_statistics(const ReducedDigraph& rd, const OrientedGraph& g,
                                        const ClusterPartition& p, std::uint64_t seed,
                                        std::size_t trials) {
  const auto k = static_cast<std::size_t>(rd.k);
  OrientationStats s;
  s.trials = trials;
  s.survived.assign(k, std::vector<std::size_t>(k, 0));
  std::vector<double> sum_out(k, 0), sq_out(k, 0), sum_in(k, 0), sq_in(k, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const ReducedDigraph r = orient_reduced(rd, g, p, seed + t);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) s.survived[i][j] += r.edge[i][j] ? 1 : 0;
      const double o = r.out_degree(static_cast<int>(i));
      const double in = r.in_degree(static_cast<int>(i));
      sum_out[i] += o;
      sq_out[i] += o * o;
      sum_in[i] += in;
      sq_in[i] += in * in;
    }
  }
  auto finish = [&](const std::vector<double>& sum, const std::vector<double>& sq,
                    std::vector<double>& mean, std::vector<double>& se) {
    mean.assign(k, 0);
    se.assign(k, 0);
    if (trials == 0) return;
    const double nt = static_cast<double>(trials);
    for (std::size_t i = 0; i < k; ++i) {
      mean[i] = sum[i] / nt;
      if (trials > 1) {
        const double var = std::max(0.0, (sq[i] - nt * mean[i] * mean[i]) / (nt - 1));
        se[i] = std::sqrt(var / nt);
      }
    }
  };
  finish(sum_out, sq_out, s.mean_out, s.stderr_out);
  finish(sum_in, sq_in, s.mean_in, s.stderr_in);
  return s;
}

EqualizeResult equalize_densities(const OrientedGraph& g, const ClusterPartition& p,
                                  const EqualizeOptions& opt) {
  validate_partition(p, g.order());
  const auto k = static_cast<int>(p.k());
  const auto m = static_cast<std::int64_t>(p.cluster_size());
  if (opt.d_cap < 1) throw std::domain_error("equalize: d_cap must be positive");
  if (opt.eps <= 0 || opt.d <= 0) throw std::domain_error("equalize: eps and d must be positive");

  auto check_pair = [&](const std::pair<int, int>& e) {
    if (e.first < 0 || e.first >= k || e.second < 0 || e.second >= k || e.first == e.second)
      throw std::domain_error("equalize: bad cluster pair " + pair_name(e.first, e.second));
  };
  for (const auto& e : opt.r_edges) check_pair(e);
  std::vector<int> s_degree(static_cast<std::size_t>(k), 0);
  for (const auto& e : opt.s_edges) {
    check_pair(e);
    if (std::find(opt.r_edges.begin(), opt.r_edges.end(), e) == opt.r_edges.end())
      throw std::domain_error("equalize: S-edge " + pair_name(e.first, e.second) + " is not in R");
    ++s_degree[static_cast<std::size_t>(e.first)];
    ++s_degree[static_cast<std::size_t>(e.second)];
  }
  if (*std::max_element(s_degree.begin(), s_degree.end()) > opt.d_cap)
    throw std::domain_error("equalize: maximum degree of S exceeds d_cap");

  const Tolerance eps = Tolerance::of(opt.eps);
  const auto counts = cluster_edge_counts(g, p);
  for (const auto& [i, j] : opt.s_edges) {
    const auto& vi = p.clusters[static_cast<std::size_t>(i)];
    const auto& vj = p.clusters[static_cast<std::size_t>(j)];
    if (Rational(counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], m * m) < opt.d)
      throw std::domain_error("equalize: S-pair " + pair_name(i, j) + " has density below d");
    if (!is_eps_regular_exhaustive(g, vi, vj, eps))
      throw std::domain_error("equalize: S-pair " + pair_name(i, j) + " is not eps-regular");
  }

  const Rational trim_exact = Rational(2 * opt.d_cap) * opt.eps * Rational(m);
  if (trim_exact.denominator() != 1)
    throw std::domain_error("equalize: 2 * d_cap * eps * m is not an integer");
  const std::int64_t trim = trim_exact.numerator();
  const std::int64_t m2 = m - trim;
  if (m2 <= 0) throw std::domain_error("equalize: trimming removes whole clusters");
  const Rational d2 = opt.d - Rational(4 * opt.d_cap) * opt.eps;
  if (d2 <= 0) throw std::domain_error("equalize: d - 4 * d_cap * eps is not positive");
  const Rational target_exact = d2 * Rational(m2 * m2);
  if (target_exact.denominator() != 1)
    throw std::domain_error("equalize: target density is not realizable on the trimmed pair");
  const std::int64_t target = target_exact.numerator();

  // Trim deviators, then pad with the smallest identifiers.
  EqualizeResult result;
  result.target_density = d2;
  result.trimmed.exceptional = p.exceptional;
  const Rational eps_m = opt.eps * Rational(m);
  for (int c = 0; c < k; ++c) {
    const auto& vc = p.clusters[static_cast<std::size_t>(c)];
    std::vector<char> removed(vc.size(), 0);
    std::int64_t count = 0;
    for (std::size_t idx = 0; idx < vc.size(); ++idx) {
      const Vertex v = vc[idx];
      bool deviates = false;
      for (const auto& [i, j] : opt.s_edges) {
        if (i != c && j != c) continue;
        const int other = i == c ? j : i;
        const Rational expected(counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], m);
        std::int64_t deg = 0;
        for (Vertex u : p.clusters[static_cast<std::size_t>(other)])
          deg += (i == c ? g.has_edge(v, u) : g.has_edge(u, v)) ? 1 : 0;
        const Rational dev = Rational(deg) - expected;
        if (dev > eps_m || -dev > eps_m) deviates = true;
      }
      if (deviates) {
        removed[idx] = 1;
        ++count;
      }
    }
    if (count > trim)
      throw std::domain_error("equalize: cluster " + std::to_string(c) + " has " +
                              std::to_string(count) + " deviating vertices, more than " +
                              std::to_string(trim));
    for (std::size_t idx = 0; idx < vc.size() && count < trim; ++idx) {
      if (!removed[idx]) {
        removed[idx] = 1;
        ++count;
      }
    }
    VertexSet kept;
    for (std::size_t idx = 0; idx < vc.size(); ++idx) {
      if (removed[idx])
        result.trimmed.exceptional.push_back(vc[idx]);
      else
        kept.push_back(vc[idx]);
    }
    result.trimmed.clusters.push_back(std::move(kept));
  }
  result.trimmed.exceptional = make_vertex_set(std::move(result.trimmed.exceptional));

  const std::size_t budget =
      opt.retry_budget == 0 ? static_cast<std::size_t>(10 * m) : opt.retry_budget;
  const Tolerance sqrt_eps = Tolerance::sqrt_of(opt.eps);
  GraphBuilder builder = GraphBuilder::from(g);
  std::vector<std::string> diagnostics;
  bool exhausted = false;

  for (std::size_t pi = 0; pi < opt.r_edges.size(); ++pi) {
    const auto [i, j] = opt.r_edges[pi];
    const auto& vi = result.trimmed.clusters[static_cast<std::size_t>(i)];
    const auto& vj = result.trimmed.clusters[static_cast<std::size_t>(j)];
    const bool in_s =
        std::find(opt.s_edges.begin(), opt.s_edges.end(), opt.r_edges[pi]) != opt.s_edges.end();
    std::vector<Edge> pair_edges;
    for (Vertex u : vi)
      for (Vertex w : vj)
        if (g.has_edge(u, w)) pair_edges.push_back({u, w});
    const auto present = static_cast<std::int64_t>(pair_edges.size());
    if (present < target) {
      diagnostics.push_back(pair_name(i, j) + ": only " + std::to_string(present) +
                            " edges after trimming, target " + std::to_string(target));
      exhausted = true;
      continue;
    }
    const Rational keep = Rational(target, present);

    PairThinning record;
    record.pair = opt.r_edges[pi];
    std::string last_failure = "no attempt";
    bool done = false;
    for (std::size_t attempt = 0; attempt < budget && !done; ++attempt) {
      record.attempts = attempt + 1;
      Rng rng(mix_seed(opt.seed, (static_cast<std::uint64_t>(pi) << 32) + attempt));
      std::vector<char> kept(pair_edges.size(), 0);
      std::int64_t kept_count = 0;
      for (std::size_t e = 0; e < pair_edges.size(); ++e) {
        kept[e] = rng.bernoulli(keep) ? 1 : 0;
        kept_count += kept[e];
      }
      if (kept_count != target) {
        last_failure = "kept " + std::to_string(kept_count) + " edges";
        continue;
      }
      GraphBuilder trial = GraphBuilder::from(g);
      for (std::size_t e = 0; e < pair_edges.size(); ++e)
        if (!kept[e]) trial.remove_edge(pair_edges[e].from, pair_edges[e].to);
      const OrientedGraph tg = trial.build();
      const bool ok = in_s ? is_super_regular(tg, vi, vj, sqrt_eps, d2)
                           : is_eps_regular_exhaustive(tg, vi, vj, sqrt_eps);
      if (!ok) {
        last_failure = in_s ? "not super-regular" : "not sqrt(eps)-regular";
        continue;
      }
      for (std::size_t e = 0; e < pair_edges.size(); ++e)
        if (!kept[e]) builder.remove_edge(pair_edges[e].from, pair_edges[e].to);
      record.kept_edges = kept_count;
      done = true;
    }
    if (!done) {
      diagnostics.push_back(pair_name(i, j) + ": " + std::to_string(record.attempts) +
                            " attempts, last: " + last_failure);
      exhausted = true;
    }
    result.pairs.push_back(record);
  }
  if (exhausted) throw EqualizeError("equalize: retry budget exhausted", std::move(diagnostics));
  result.thinned = builder.build();
  return result;
}

CheckReport verify_degree_form(const OrientedGraph& g, const OrientedGraph& g_prime,
                               const ClusterPartition& p, const Rational& d, const Rational& eps,
                               const std::optional<std::vector<std::pair<int, int>>>& u) {
  CheckReport r;
  r.check = "degree_form";
  r.hypothesis_holds = true;
  r.conclusion_evaluated = true;
  const int n = g.order();
  r.stats["n"] = n;
  r.stats["k"] = static_cast<std::int64_t>(p.k());
  auto fail = [&](Witness w) {
    r.conclusion_holds = false;
    r.witness = std::move(w);
    return r;
  };

  if (g_prime.order() != n)
    return fail({Witness::Kind::description, {}, "g_prime has a different vertex count"});
  for (const Edge& e : g_prime.edges())
    if (!g.has_edge(e.from, e.to))
      return fail({Witness::Kind::vertex_pair, {e.from, e.to}, "edge of g_prime missing from g"});

  for (std::size_t i = 0; i < p.clusters.size(); ++i)
    if (p.clusters[i].size() != p.cluster_size())
      return fail({Witness::Kind::vertex_set, p.clusters[i],
                   "cluster " + std::to_string(i) + " has size " +
                       std::to_string(p.clusters[i].size()) + ", expected " +
                       std::to_string(p.cluster_size())});
  try {
    validate_partition(p, n);
  } catch (const std::domain_error& e) {
    return fail({Witness::Kind::description, {}, e.what()});
  }

  if (Rational(static_cast<std::int64_t>(p.exceptional.size())) > eps * Rational(n))
    return fail({Witness::Kind::vertex_set, p.exceptional, "|V0| exceeds eps n"});

  const Rational slack = (d + eps) * Rational(n);
  for (Vertex x = 0; x < n; ++x) {
    if (!(Rational(g_prime.out_degree(x)) > Rational(g.out_degree(x)) - slack))
      return fail({Witness::Kind::vertex, {x}, "out-degree floor violated"});
    if (!(Rational(g_prime.in_degree(x)) > Rational(g.in_degree(x)) - slack))
      return fail({Witness::Kind::vertex, {x}, "in-degree floor violated"});
  }

  const auto owner = cluster_of(p, n);
  for (const Edge& e : g_prime.edges()) {
    const int i = owner[static_cast<std::size_t>(e.from)];
    if (i >= 0 && i == owner[static_cast<std::size_t>(e.to)])
      return fail({Witness::Kind::vertex_pair, {e.from, e.to}, "edge inside cluster " + std::to_string(i)});
  }

  if (u) {
    const auto k = static_cast<std::int64_t>(p.k());
    r.stats["U"] = static_cast<std::int64_t>(u->size());
    if (Rational(static_cast<std::int64_t>(u->size())) > eps * Rational(k * k))
      return fail({Witness::Kind::description, {}, "|U| exceeds eps k^2"});
  }
  return r;
}

}  // namespace orient
