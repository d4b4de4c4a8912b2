#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orient/graph.hpp"

namespace orient {

/// The failing object behind a negative conclusion.
struct Witness {
  enum class Kind { vertex_set, vertex_pair, path, vertex, description };
  Kind kind = Kind::description;
  /// Vertex set, the pair (x, y), a path, or a single vertex.
  std::vector<Vertex> vertices;
  std::string note;
};

const char* to_string(Witness::Kind kind);

/// Outcome of verifying one lemma/fact on one instance.
struct CheckReport {
  std::string check;
  bool hypothesis_holds = false;
  /// False when the hypothesis failed and the conclusion was skipped.
  bool conclusion_evaluated = false;
  bool conclusion_holds = true;
  std::optional<Witness> witness;
  std::map<std::string, std::int64_t> stats;
  std::map<std::string, std::string> notes;

  /// A check fails only when its conclusion was evaluated and is false.
  bool failed() const { return conclusion_evaluated && !conclusion_holds; }
};

nlohmann::json to_json(const CheckReport& report);

}  // namespace orient
