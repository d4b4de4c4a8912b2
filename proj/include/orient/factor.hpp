#pragma once

#include <optional>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Vertex-disjoint directed cycles. Each cycle is listed from its smallest
/// vertex; the closing edge back to the first vertex is implicit.
struct CycleFactor {
  std::vector<std::vector<Vertex>> cycles;

  std::size_t vertex_count() const;
  bool operator==(const CycleFactor&) const = default;
};

/// Perfect matching on the bipartite double cover (left copy u, right copy w,
/// edge iff u->w) by Hopcroft-Karp with ascending vertex order. The matching
/// is read as a permutation whose cycles form the factor. Returns nullopt iff
/// no perfect matching exists.
std::optional<CycleFactor> find_one_factor(const OrientedGraph& g);

/// Size of a maximum matching in the double cover; equals n iff a 1-factor
/// exists.
std::size_t max_cover_matching(const OrientedGraph& g);

/// Checks that f is a 1-factor of g: disjoint cycles of length >= 3 over host
/// edges covering every vertex exactly once.
bool verify_factor(const OrientedGraph& g, const CycleFactor& f);

/// Exhaustive search over successor assignments; independent of the
/// matching code. Throws std::domain_error for n > 10.
bool brute_force_one_factor_exists(const OrientedGraph& g);

/// Factor whose successor map is perm (perm[v] = successor of v).
CycleFactor factor_from_successors(const std::vector<Vertex>& perm);

}  // namespace orient
