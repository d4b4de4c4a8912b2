#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orient/graph.hpp"

namespace orient {

/// Raised by the text-format reader; carries the 1-based offending line.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text format: a header line "n e" followed by e lines "u v", each meaning
/// the directed edge u->v with 0-indexed vertices. Loops, digons, repeated
/// edges, out-of-range vertices and a wrong edge count are rejected.
OrientedGraph read_graph(std::istream& in);
OrientedGraph parse_graph(std::string_view text);

/// Writes the text format with edges in lexicographic order.
void write_graph(std::ostream& out, const OrientedGraph& g);
std::string format_graph(const OrientedGraph& g);

}  // namespace orient
