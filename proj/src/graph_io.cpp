#include "orient/graph_io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace orient {
namespace {

std::vector<long long> parse_fields(const std::string& line, std::size_t line_no) {
  std::istringstream fields(line);
  std::vector<long long> values;
  std::string token;
  while (fields >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw GraphParseError(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) {
      throw GraphParseError(line_no, "expected an integer, got '" + token + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

OrientedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw GraphParseError(1, "missing header line \"n e\"");
  ++line_no;
  auto header = parse_fields(line, line_no);
  if (header.size() != 2) throw GraphParseError(line_no, "header must be \"n e\"");
  const long long n = header[0];
  const long long e = header[1];
  if (n < 0 || n > std::numeric_limits<int>::max()) {
    throw GraphParseError(line_no, "invalid vertex count");
  }
  if (e < 0 || e > n * (n - 1) / 2) throw GraphParseError(line_no, "invalid edge count");

  GraphBuilder builder(static_cast<int>(n));
  for (long long i = 0; i < e; ++i) {
    if (!std::getline(in, line)) {
      throw GraphParseError(line_no + 1, "expected " + std::to_string(e) + " edges, found " +
                                             std::to_string(i));
    }
    ++line_no;
    auto fields = parse_fields(line, line_no);
    if (fields.size() != 2) throw GraphParseError(line_no, "edge line must be \"u v\"");
    const long long u = fields[0];
    const long long v = fields[1];
    if (u < 0 || u >= n || v < 0 || v >= n) throw GraphParseError(line_no, "vertex out of range");
    if (u == v) throw GraphParseError(line_no, "loop at vertex " + std::to_string(u));
    if (builder.has_edge(static_cast<Vertex>(v), static_cast<Vertex>(u))) {
      throw GraphParseError(line_no, "digon between " + std::to_string(u) + " and " +
                                         std::to_string(v));
    }
    if (!builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw GraphParseError(line_no, "repeated edge " + std::to_string(u) + " " +
                                         std::to_string(v));
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw GraphParseError(line_no, "unexpected content after the last edge");
    }
  }
  return builder.build();
}

OrientedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

void write_graph(std::ostream& out, const OrientedGraph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

std::string format_graph(const OrientedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace orient
