#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One experiment: a generator with a parameter grid, the checks to run on
/// every instance, and the seed everything derives from.
///
/// JSON form:
///   {"generator": "random", "params": {"n": [6, 8], "p": "1/2"},
///    "checks": ["factor", "ham"], "seed": 7, "instances": 10,
///    "alpha": "auto", "c": "3/4", "budget": 100000000,
///    "output": "runs/a.csv", "record_wall_time": false}
/// A parameter given as a list contributes one grid axis; grid points are
/// visited in lexicographic order of parameter name and then list order.
struct ExperimentSpec {
  std::string generator;
  std::map<std::string, std::vector<std::string>> params;
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  std::size_t instances = 1;
  /// "auto" uses delta*/n - 3/2 per instance.
  std::string alpha = "auto";
  std::string c = "3/4";
  std::uint64_t budget = 100'000'000;
  std::optional<std::string> output;
  /// Adds per-check wall-clock columns; such logs are no longer reproducible.
  bool record_wall_time = false;
};

/// Throws SpecError on malformed input.
ExperimentSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentSpec& spec);

const std::vector<std::string>& known_generators();
const std::vector<std::string>& known_checks();

/// Throws SpecError for an unknown generator or check, a missing or
/// malformed parameter, or an unparsable alpha/c.
void validate_spec(const ExperimentSpec& spec);

struct ExperimentRow {
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  /// Grid point, e.g. "m=3;p=1/2".
  std::string params;
  std::map<std::string, std::string> param_values;
  int n = 0;
  int delta_zero = 0;
  int delta_star = 0;
  std::map<std::string, std::string> verdicts;
  std::map<std::string, std::uint64_t> nodes;
  std::map<std::string, double> wall_ms;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::string csv;
  nlohmann::json summary;
};

/// Instance k uses seed mix_seed(spec.seed, k), so any row can be
/// regenerated on its own. The CSV starts with "# schema=1".
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Regenerates the graph of one row (same generator, parameters and seed).
OrientedGraph regenerate_instance(const ExperimentSpec& spec, const ExperimentRow& row);

/// Writes the CSV to `path` and the summary to `path` + ".summary.json".
void write_experiment(const ExperimentResult& result, const std::string& path);

struct SweepBucket {
  int delta_zero = 0;
  std::size_t instances = 0;
  std::size_t hamiltonian = 0;
  std::size_t unknown = 0;
};

/// Hamiltonicity frequency of random oriented graphs bucketed by their
/// minimum semi-degree. Illustrative only: nothing about large n follows.
struct SweepTable {
  int n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SweepBucket> buckets;

  std::string to_csv() const;
};

/// Trial t draws G(n, p_t) with seed mix_seed(seed, t); p_t is the given p or
/// cycles through 1/10, 2/10, ..., 1. Throws std::domain_error for n > 16.
SweepTable threshold_sweep(int n, std::size_t trials, std::uint64_t seed,
                           const std::optional<Rational>& p = std::nullopt,
                           std::uint64_t budget = 100'000'000);

}  // namespace orient
