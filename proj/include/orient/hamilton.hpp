#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

enum class HamiltonVerdict { hamiltonian, non_hamiltonian, unknown };

const char* to_string(HamiltonVerdict v);

struct HamiltonStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// Outcome of an exact search. `cycle` lists each vertex once, starting at 0;
/// the closing edge is implicit. It is non-empty iff the verdict is
/// hamiltonian.
struct HamiltonCertificate {
  HamiltonVerdict verdict = HamiltonVerdict::unknown;
  std::vector<Vertex> cycle;
  HamiltonStats stats;
};

/// True iff cycle is a Hamilton cycle of g (closing edge included).
bool is_hamilton_cycle(const OrientedGraph& g, const std::vector<Vertex>& cycle);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Depth-first extension of a path from vertex 0, after a root check that a
/// 1-factor exists (zero nodes when it does not). Branches on the candidate
/// with the fewest available out-neighbours first. A branch is cut when some
/// unvisited vertex has no usable in- or out-neighbour left, or when the
/// unvisited vertices are not all reachable from the path end and all able to
/// reach vertex 0 through unvisited vertices. Exhausting `node_budget`
/// yields HamiltonVerdict::unknown, never non_hamiltonian. Limited to 64
/// vertices (std::domain_error).
HamiltonCertificate is_hamiltonian_backtracking(const OrientedGraph& g,
                                                std::uint64_t node_budget = kDefaultNodeBudget);

/// Held-Karp reachability over (subset containing 0, endpoint) states.
/// Throws std::domain_error for n > 20.
HamiltonCertificate is_hamiltonian_dp(const OrientedGraph& g);

/// Searches for (n-1)/2 edge-disjoint Hamilton cycles of a regular
/// tournament, with full backtracking over the Hamilton cycles of the
/// residual graph. Requires a regular tournament with n <= 9
/// (std::domain_error). Returns nullopt if no decomposition exists.
std::optional<std::vector<std::vector<Vertex>>> edge_disjoint_hamilton_decomposition(
    const OrientedGraph& t);

}  // namespace orient
