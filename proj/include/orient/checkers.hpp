#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orient/check_report.hpp"
#include "orient/constructions.hpp"
#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

enum class SweepMode { exhaustive, sampled };

const char* to_string(SweepMode mode);
/// "exhaustive" or "sampled"; std::invalid_argument otherwise.
SweepMode parse_sweep_mode(const std::string& text);

inline constexpr int kExhaustiveSweepCap = 22;
inline constexpr std::size_t kSweepSamples = 100'000;

/// First X (in Gray-code order, or in draw order when sampled) with
/// min_size <= |X| <= (1 - alpha) n, |X| >= 1 and 2|N+(X)| < 2|X| + alpha n.
/// min_size is a rational lower bound on |X| (0 for no bound).
/// Exhaustive mode throws std::domain_error for n > 22.
std::optional<VertexSet> find_expansion_failure(const OrientedGraph& g, const Rational& alpha,
                                                const Rational& min_size, SweepMode mode,
                                                std::uint64_t seed = 0);

/// Hypothesis: delta* >= (3/2 + alpha) n with alpha > 0. Conclusion: every
/// nonempty X with |X| <= (1 - alpha) n has |N+(X)| >= |X| + alpha n / 2.
CheckReport check_expansion(const OrientedGraph& g, const Rational& alpha,
                            SweepMode mode = SweepMode::exhaustive, std::uint64_t seed = 0);

/// Hypothesis: delta* >= (3/2 + alpha) n. Conclusion: delta0 > alpha n.
CheckReport check_fact_semidegree(const OrientedGraph& g, const Rational& alpha);

/// d+(x) + d-(y) >= c n for every ordered pair x != y with xy not an edge.
/// Witness: first failing pair in lexicographic order.
CheckReport check_ore(const OrientedGraph& g, const Rational& c);

/// Hypothesis: check_ore(g, 3/4 + alpha) passes. Conclusion:
/// delta0 >= n/8 + alpha n / 2.
CheckReport check_ore_semidegree(const OrientedGraph& g, const Rational& alpha);

/// Hypothesis: d+(x) + d-(y) >= (3/4 + alpha) n for every ordered non-edge xy
/// outside U. Conclusion: every X with alpha n <= |X| <= (1 - alpha) n has
/// |N+(X)| >= |X| + alpha n / 2. Throws std::domain_error when |U| > eps n^2,
/// U contains a bad pair, or n > 22 in exhaustive mode.
CheckReport check_ore_expansion(const OrientedGraph& g, const Rational& alpha,
                                const std::vector<std::pair<Vertex, Vertex>>& u,
                                const Rational& eps, SweepMode mode = SweepMode::exhaustive,
                                std::uint64_t seed = 0);

/// Deletes D and checks that no directed path joins two distinct B-vertices.
/// Witness: a shortest such path.
CheckReport check_b_paths_through_d(const OrientedGraph& g, const HaggkvistBlocks& blocks);

}  // namespace orient
