#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orient/check_report.hpp"
#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

/// Exceptional set V0 plus equal-size clusters V1..Vk.
struct ClusterPartition {
  VertexSet exceptional;
  std::vector<VertexSet> clusters;

  std::size_t k() const { return clusters.size(); }
  /// Common cluster size m (0 without clusters).
  std::size_t cluster_size() const { return clusters.empty() ? 0 : clusters.front().size(); }
};

/// Throws std::domain_error unless the parts are disjoint, cover 0..n-1 and
/// all clusters have the same size.
void validate_partition(const ClusterPartition& p, int n);

/// {"V0": [...], "clusters": [[...], ...]}
nlohmann::json to_json(const ClusterPartition& p);
ClusterPartition partition_from_json(const nlohmann::json& j);

inline constexpr std::size_t kExhaustiveRegularityCap = 16;

/// Ordered pair of subsets (X ⊆ A, Y ⊆ B) whose density deviates too much.
using IrregularWitness = std::pair<VertexSet, VertexSet>;

/// Exact search over all X ⊆ A, Y ⊆ B with |X| > eps|A|, |Y| > eps|B| for
/// |d(X,Y) - d(A,B)| >= eps, counting only A->B edges. Every X is
/// enumerated; for each size of Y the extreme densities come from the
/// |Y| largest/smallest degrees into X, which covers all Y of that size.
/// Throws std::domain_error if |A| or |B| exceeds the cap, or A and B
/// overlap or are empty.
std::optional<IrregularWitness> find_irregular_witness(const OrientedGraph& g,
                                                       const VertexSet& a, const VertexSet& b,
                                                       const Tolerance& eps);

bool is_eps_regular_exhaustive(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                               const Tolerance& eps);
bool is_eps_regular_exhaustive(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                               const Rational& eps);

struct RegularityVerdict {
  bool regular = false;
  /// True when the verdict came from random sampling (a "regular" answer is
  /// then not a proof; an "irregular" answer always carries a witness).
  bool sampled = false;
  std::optional<IrregularWitness> witness;
};

/// Exhaustive within the cap, sampled above it.
RegularityVerdict regularity_verdict(const OrientedGraph& g, const VertexSet& a,
                                     const VertexSet& b, const Tolerance& eps, std::uint64_t seed,
                                     std::size_t samples = 10000);

/// eps-regular and every a in A has at least (d - eps)|B| out-neighbours in
/// B, every b in B at least (d - eps)|A| in-neighbours in A.
bool is_super_regular(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                      const Tolerance& eps, const Rational& d);
bool is_super_regular(const OrientedGraph& g, const VertexSet& a, const VertexSet& b,
                      const Rational& eps, const Rational& d);

/// Cluster-level digraph; both V_iV_j and V_jV_i may be present.
struct ReducedDigraph {
  int k = 0;
  std::vector<std::vector<char>> edge;
  /// e_G(V_i, V_j) and d_G(V_i, V_j) for every ordered pair (0 on the diagonal).
  std::vector<std::vector<std::int64_t>> edge_count;
  std::vector<std::vector<Rational>> density;
  /// Ordered pairs that failed the regularity test (the set U).
  std::vector<std::pair<int, int>> exceptional_pairs;

  bool has_edge(int i, int j) const { return edge[i][j] != 0; }
  int out_degree(int i) const;
  int in_degree(int i) const;
  std::size_t size() const;
  /// No pair joined in both directions.
  bool is_oriented() const;
  /// Throws std::domain_error if a double edge remains.
  OrientedGraph to_oriented() const;
};

nlohmann::json to_json(const ReducedDigraph& rd);

/// Edge V_iV_j iff (V_i, V_j) is eps-regular (exhaustively) with density at
/// least d. Clusters must fit the exhaustive cap.
ReducedDigraph reduced_digraph(const OrientedGraph& g, const ClusterPartition& p,
                               const Rational& eps, const Rational& d);

/// Same, with regularity verdicts supplied by the caller
/// (certified_regular[i][j] for the ordered pair (V_i, V_j)).
ReducedDigraph reduced_digraph(const OrientedGraph& g, const ClusterPartition& p,
                               const Rational& d,
                               const std::vector<std::vector<char>>& certified_regular);

/// Spanning subgraph keeping edges at V0 and the V_i->V_j edges of pairs in
/// the reduced digraph; everything else is dropped.
OrientedGraph pure_digraph(const OrientedGraph& g, const ClusterPartition& p,
                           const ReducedDigraph& rd);

/// Probability that V_iV_j is deleted when orienting a double edge:
/// e'(V_j,V_i) / (e'(V_i,V_j) + e'(V_j,V_i)) over pure-digraph counts, taken
/// as 0 when both are 0.
Rational deletion_probability(const ReducedDigraph& rd, int i, int j);

/// Keeps exactly one direction of each double edge, visiting unordered pairs
/// (i < j) in lexicographic order with one draw each. Single edges stay.
/// The counts are recomputed from g and must agree with rd.
ReducedDigraph orient_reduced(const ReducedDigraph& rd, const OrientedGraph& g,
                              const ClusterPartition& p, std::uint64_t seed);

struct OrientationStats {
  std::size_t trials = 0;
  /// survived[i][j]: number of trials in which V_iV_j survived.
  std::vector<std::vector<std::size_t>> survived;
  std::vector<double> mean_out;
  std::vector<double> stderr_out;
  std::vector<double> mean_in;
  std::vector<double> stderr_in;
};

/// Runs orient_reduced with seeds seed, seed+1, ..., seed+trials-1.
OrientationStats orientation_statistics(const ReducedDigraph& rd, const OrientedGraph& g,
                                        const ClusterPartition& p, std::uint64_t seed,
                                        std::size_t trials);

struct EqualizeOptions {
  /// Cluster pairs (i, j) meaning V_i -> V_j edges of the reduced oriented graph.
  std::vector<std::pair<int, int>> r_edges;
  /// Subset of r_edges that must become super-regular.
  std::vector<std::pair<int, int>> s_edges;
  Rational eps;
  Rational d;
  int d_cap = 1;
  std::uint64_t seed = 0;
  /// Attempts per pair; 0 means 10 * m.
  std::size_t retry_budget = 0;
};

struct PairThinning {
  std::pair<int, int> pair;
  std::size_t attempts = 0;
  std::int64_t kept_edges = 0;
};

struct EqualizeResult {
  ClusterPartition trimmed;
  OrientedGraph thinned;
  /// Common target density d - 4 * d_cap * eps.
  Rational target_density;
  std::vector<PairThinning> pairs;
};

class EqualizeError : public std::runtime_error {
 public:
  EqualizeError(const std::string& message, std::vector<std::string> diagnostics)
      : std::runtime_error(message), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// Trims 2 * d_cap * eps * m vertices from every cluster (first every vertex
/// whose degree into an S-neighbour deviates from d_ij * m by more than
/// eps * m, then the smallest remaining identifiers) and thins each R-pair,
/// keeping every edge with probability d'/d'_ij, d' = d - 4 * d_cap * eps.
/// Each pair is re-drawn with a fresh derived seed until it has exactly
/// d' m'^2 edges, is sqrt(eps)-regular, and (for S-pairs) meets the
/// (sqrt(eps), d') super-regular degree floors. Trimmed vertices move to V0.
///
/// std::domain_error on violated preconditions (Δ(S) > d_cap, S-pairs not
/// eps-regular of density >= d, non-integral trim size or edge target);
/// EqualizeError when a pair exhausts its retry budget.
EqualizeResult equalize_densities(const OrientedGraph& g, const ClusterPartition& p,
                                  const EqualizeOptions& options);

/// Audits the decidable conclusions of the degree form of the regularity
/// lemma for a given partition and pure digraph g_prime: g_prime spanning
/// subgraph of g, equal cluster sizes, |V0| <= eps n, out/in-degree floors
/// d_{G'}(x) > d_G(x) - (d + eps) n, no edges inside a cluster, and, when U is
/// given, |U| <= eps k^2. The first violation becomes the witness.
CheckReport verify_degree_form(const OrientedGraph& g, const OrientedGraph& g_prime,
                               const ClusterPartition& p, const Rational& d, const Rational& eps,
                               const std::optional<std::vector<std::pair<int, int>>>& u = {});

}  // namespace orient
