// Command-line front end: gen, factor, walk, ham, reg, check, experiment.
//
// Exit codes: 0 success, 1 check failure (witness found) or failed
// construction, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orient/checkers.hpp"
#include "orient/constructions.hpp"
#include "orient/experiment.hpp"
#include "orient/factor.hpp"
#include "orient/graph_io.hpp"
#include "orient/hamilton.hpp"
#include "orient/regularity.hpp"
#include "orient/walks.hpp"

using namespace orient;
using nlohmann::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ORIENT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("ORIENT_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

OrientedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_text(path));
  } catch (const GraphParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Rational exact_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text, false);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what() + " (use an exact fraction such as 3/14)");
  }
}

CycleFactor load_factor(const std::string& path) {
  const json j = load_json(path);
  CycleFactor f;
  try {
    f.cycles = j.at("cycles").get<std::vector<std::vector<Vertex>>>();
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return f;
}

CycleFactor factor_or_compute(const OrientedGraph& g, const std::string& path) {
  if (!path.empty()) {
    CycleFactor f = load_factor(path);
    if (!verify_factor(g, f)) throw UsageError(path + ": not a 1-factor of the graph");
    return f;
  }
  auto f = find_one_factor(g);
  if (!f) throw std::runtime_error("graph has no 1-factor");
  return *f;
}

json ledger_json(const BalanceLedger& l) {
  return json{{"balanced", l.balanced},
              {"visits", l.visits},
              {"cycle_multiplicity", l.cycle_multiplicity},
              {"max_visits", l.max_visits()},
              {"traversed_factor_edges", l.traversed_factor_edges.size()},
              {"banned", l.banned_count()},
              {"exceptional", l.exceptional}};
}

json certificate_json(const HamiltonCertificate& c) {
  return json{{"verdict", to_string(c.verdict)},
              {"cycle", c.cycle},
              {"nodes", c.stats.nodes},
              {"elapsed_ms", c.stats.elapsed_ms}};
}

json blocks_json(const HaggkvistBlocks& b) {
  return json{{"A", b.a}, {"B", b.b}, {"C", b.c}, {"D", b.d}};
}

HaggkvistBlocks blocks_from_json(const json& j) {
  HaggkvistBlocks b;
  b.a = make_vertex_set(j.at("A").get<std::vector<Vertex>>());
  b.b = make_vertex_set(j.at("B").get<std::vector<Vertex>>());
  b.c = make_vertex_set(j.at("C").get<std::vector<Vertex>>());
  b.d = make_vertex_set(j.at("D").get<std::vector<Vertex>>());
  return b;
}

// "0:1,2:3" or a JSON file holding [[0,1],[2,3]].
std::vector<std::pair<Vertex, Vertex>> parse_pairs(const std::string& text) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (text.empty()) return out;
  if (text.find(':') == std::string::npos) {
    for (const auto& p : load_json(text)) out.emplace_back(p.at(0).get<Vertex>(), p.at(1).get<Vertex>());
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bad pair: " + item);
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("bad pair: " + item);
    }
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  void write(const std::string& text) const {
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path_);
    out << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented-graph toolkit: constructions, 1-factors, walks, Hamilton oracles, "
               "regularity and lemma checkers"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the result here instead of stdout");

  std::uint64_t seed = 0;
  bool seed_given = false;
  auto seed_option = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (default: $ORIENT_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph in the text format");
  gen->require_subcommand(1);
  int gen_m = 0;
  int gen_n = 0;
  std::string gen_p = "1/2";
  int gen_reversals = -1;
  bool gen_blocks = false;
  auto* gen_hag = gen->add_subcommand("haggkvist", "Extremal graph on 4m+3 vertices (m odd, m >= 3)");
  gen_hag->add_option("--m", gen_m)->required();
  gen_hag->add_flag("--blocks", gen_blocks,
                    "Also write the A/B/C/D blocks as JSON (to <output>.blocks.json, or stderr)");
  auto* gen_tour = gen->add_subcommand("tournament", "Circulant regular tournament (n odd)");
  gen_tour->add_option("--n", gen_n)->required();
  auto* gen_two = gen->add_subcommand("twoblock", "Non-strong two-block tournament on 4m+2 vertices");
  gen_two->add_option("--m", gen_m)->required();
  auto* gen_rand = gen->add_subcommand("random", "Random oriented graph G(n, p)");
  gen_rand->add_option("--n", gen_n)->required();
  gen_rand->add_option("--p", gen_p, "Edge probability; fraction or decimal");
  seed_option(gen_rand);
  auto* gen_reg = gen->add_subcommand("regular", "Random regular tournament (n odd)");
  gen_reg->add_option("--n", gen_n)->required();
  gen_reg->add_option("--reversals", gen_reversals, "Triangle reversals (default n^2)");
  seed_option(gen_reg);

  // factor
  auto* factor = app.add_subcommand("factor", "Find a 1-factor by bipartite matching");
  std::string graph_path = "-";
  factor->add_option("graph", graph_path, "Graph file ('-' for stdin)");

  // walk
  auto* walk = app.add_subcommand("walk", "Shifted and balanced walks");
  walk->require_subcommand(1);
  std::string factor_path;
  int walk_from = -1;
  int walk_to = -1;
  int walk_max_cycles = -1;
  std::string walk_alpha;
  auto* walk_shifted = walk->add_subcommand("shifted", "Shifted walk between two vertices");
  walk_shifted->add_option("graph", graph_path, "Graph file ('-' for stdin)");
  walk_shifted->add_option("--factor", factor_path, "Factor JSON {\"cycles\": [...]}; computed if absent");
  walk_shifted->add_option("--from", walk_from)->required();
  walk_shifted->add_option("--to", walk_to)->required();
  walk_shifted->add_option("--max-cycles", walk_max_cycles, "Default floor(2/alpha) from delta*");
  auto* walk_balanced = walk->add_subcommand("balanced", "Balanced closed walk through all factor cycles");
  walk_balanced->add_option("graph", graph_path, "Graph file ('-' for stdin)");
  walk_balanced->add_option("--factor", factor_path, "Factor JSON; computed if absent");
  walk_balanced->add_option("--alpha", walk_alpha, "Exact rational; bounds each shifted walk");

  // ham
  auto* ham = app.add_subcommand("ham", "Exact Hamiltonicity oracles");
  ham->require_subcommand(1);
  std::uint64_t budget = kDefaultNodeBudget;
  std::string ham_method = "backtrack";
  auto* ham_check = ham->add_subcommand("check", "Decide Hamiltonicity");
  ham_check->add_option("graph", graph_path, "Graph file ('-' for stdin)");
  ham_check->add_option("--budget", budget, "Node budget for backtracking");
  ham_check->add_option("--method", ham_method)->check(CLI::IsMember({"backtrack", "dp"}));
  auto* ham_dec = ham->add_subcommand("decompose", "Edge-disjoint Hamilton decomposition (n <= 9)");
  ham_dec->add_option("graph", graph_path, "Regular tournament file ('-' for stdin)");

  // reg
  auto* reg = app.add_subcommand("reg", "Reduced digraph, random orientation and degree-form audit");
  std::string partition_path;
  std::string reg_eps;
  std::string reg_d;
  std::size_t trials = 0;
  reg->add_option("graph", graph_path, "Graph file ('-' for stdin)");
  reg->add_option("--partition", partition_path, "Partition JSON {\"V0\": [...], \"clusters\": [...]}")->required();
  reg->add_option("--eps", reg_eps)->required();
  reg->add_option("--d", reg_d)->required();
  reg->add_option("--trials", trials, "Monte-Carlo orientation trials");
  seed_option(reg);

  // check
  auto* check = app.add_subcommand("check", "Structural verifiers (JSON report)");
  check->require_subcommand(1);
  std::string check_alpha;
  std::string check_c;
  std::string check_mode = "exhaustive";
  std::string check_u;
  std::string check_eps = "1/100";
  std::string blocks_path;
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph file ('-' for stdin)"); };
  auto* check_exp = check->add_subcommand("expansion", "|N+(X)| >= |X| + alpha n/2 under delta* >= (3/2+alpha)n");
  add_graph(check_exp);
  check_exp->add_option("--alpha", check_alpha)->required();
  check_exp->add_option("--mode", check_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  seed_option(check_exp);
  auto* check_fact = check->add_subcommand("semidegree", "delta0 > alpha n under delta* >= (3/2+alpha)n");
  add_graph(check_fact);
  check_fact->add_option("--alpha", check_alpha)->required();
  auto* check_ore_cmd = check->add_subcommand("ore", "d+(x) + d-(y) >= c n for every non-edge xy");
  add_graph(check_ore_cmd);
  check_ore_cmd->add_option("--c", check_c)->required();
  auto* check_ore_semi = check->add_subcommand("ore-semidegree", "delta0 >= n/8 + alpha n/2 under the Ore condition");
  add_graph(check_ore_semi);
  check_ore_semi->add_option("--alpha", check_alpha)->required();
  auto* check_ore_exp = check->add_subcommand("ore-expansion", "Expansion under the Ore condition outside U");
  add_graph(check_ore_exp);
  check_ore_exp->add_option("--alpha", check_alpha)->required();
  check_ore_exp->add_option("--u", check_u, "Pairs 'x:y,x:y' or a JSON file [[x,y],...]");
  check_ore_exp->add_option("--eps", check_eps, "Guard |U| <= eps n^2");
  check_ore_exp->add_option("--mode", check_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  seed_option(check_ore_exp);
  auto* check_bpaths = check->add_subcommand("b-paths", "Every B-B path of the extremal graph meets D");
  add_graph(check_bpaths);
  check_bpaths->add_option("--blocks", blocks_path, "Blocks JSON from 'gen haggkvist --blocks'")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Seeded experiment runs");
  std::string spec_path;
  experiment->add_option("spec", spec_path, "ExperimentSpec JSON file");
  auto* sweep = experiment->add_subcommand("sweep", "Hamiltonicity frequency by minimum semi-degree");
  int sweep_n = 8;
  std::size_t sweep_trials = 1000;
  std::string sweep_p;
  sweep->add_option("--n", sweep_n);
  sweep->add_option("--trials", sweep_trials);
  sweep->add_option("--p", sweep_p, "Fixed edge probability (default cycles 1/10..1)");
  seed_option(sweep);

  // Allow --output after the subcommand names.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!seed_given) seed = default_seed();
    const Output out(output_path);

    if (gen->parsed()) {
      if (gen_hag->parsed()) {
        const auto h = haggkvist_extremal(gen_m);
        out.write(format_graph(h.graph));
        if (gen_blocks) {
          const std::string text = blocks_json(h.blocks).dump() + "\n";
          if (output_path.empty()) {
            std::cerr << text;
          } else {
            Output(output_path + ".blocks.json").write(text);
          }
        }
      } else if (gen_tour->parsed()) {
        out.write(format_graph(circulant_regular_tournament(gen_n)));
      } else if (gen_two->parsed()) {
        out.write(format_graph(two_block_tournament(gen_m)));
      } else if (gen_rand->parsed()) {
        Rational p;
        try {
          p = parse_rational(gen_p, true);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--p: ") + e.what());
        }
        if (p < 0 || p > 1) throw UsageError("--p must lie in [0,1]");
        out.write(format_graph(random_oriented_graph(gen_n, p, seed)));
      } else if (gen_reg->parsed()) {
        const int reversals = gen_reversals < 0 ? gen_n * gen_n : gen_reversals;
        out.write(format_graph(random_regular_tournament(gen_n, seed, reversals)));
      }
      return 0;
    }

    if (factor->parsed()) {
      const auto g = load_graph(graph_path);
      const auto f = find_one_factor(g);
      json j{{"exists", f.has_value()}, {"cycles", f ? f->cycles : std::vector<std::vector<Vertex>>{}}};
      out.write(j);
      return 0;
    }

    if (walk->parsed()) {
      const auto g = load_graph(graph_path);
      const CycleFactor f = factor_or_compute(g, factor_path);
      if (walk_shifted->parsed()) {
        const std::size_t limit =
            walk_max_cycles >= 0 ? static_cast<std::size_t>(walk_max_cycles) : default_max_cycles(g);
        const auto search = search_shifted_walk(g, f, walk_from, walk_to, limit);
        json j{{"found", search.walk.has_value()}, {"max_cycles", limit}, {"layer_sizes", search.layer_sizes}};
        if (search.walk) {
          j["walk"] = expand_shifted_walk(g, f, *search.walk).vertices;
          j["cycles_traversed"] = search.walk->cycles_traversed();
          json segs = json::array();
          for (const auto& s : search.walk->segments)
            segs.push_back({{"entry", s.entry}, {"cycle", s.cycle}, {"exit", s.exit}});
          j["segments"] = segs;
        }
        out.write(j);
        return search.walk ? 0 : kExitCheckFailed;
      }
      std::optional<Rational> alpha;
      if (!walk_alpha.empty()) alpha = exact_rational("alpha", walk_alpha);
      const auto bw = build_balanced_walk(g, f, alpha);
      out.write(json{{"walk", bw.walk.vertices}, {"ledger", ledger_json(bw.ledger)}});
      return 0;
    }

    if (ham->parsed()) {
      const auto g = load_graph(graph_path);
      if (ham_check->parsed()) {
        const auto cert = ham_method == "dp" ? is_hamiltonian_dp(g) : is_hamiltonian_backtracking(g, budget);
        out.write(certificate_json(cert));
        return 0;
      }
      const auto cycles = edge_disjoint_hamilton_decomposition(g);
      out.write(json{{"exists", cycles.has_value()},
                     {"cycles", cycles ? *cycles : std::vector<std::vector<Vertex>>{}}});
      return 0;
    }

    if (reg->parsed()) {
      const auto g = load_graph(graph_path);
      const Rational eps = exact_rational("eps", reg_eps);
      const Rational d = exact_rational("d", reg_d);
      ClusterPartition p;
      try {
        p = partition_from_json(load_json(partition_path));
      } catch (const json::exception& e) {
        throw UsageError(partition_path + ": " + e.what());
      }
      const auto rd = reduced_digraph(g, p, eps, d);
      const auto pure = pure_digraph(g, p, rd);
      const auto report = verify_degree_form(g, pure, p, d, eps, rd.exceptional_pairs);
      json j{{"reduced", to_json(rd)},
             {"oriented", to_json(orient_reduced(rd, g, p, seed))},
             {"degree_form", to_json(report)}};
      if (trials > 0) {
        const auto stats = orientation_statistics(rd, g, p, seed, trials);
        j["trials"] = {{"count", stats.trials},
                       {"survived", stats.survived},
                       {"mean_out", stats.mean_out},
                       {"stderr_out", stats.stderr_out},
                       {"mean_in", stats.mean_in},
                       {"stderr_in", stats.stderr_in}};
      }
      out.write(j);
      return report.failed() ? kExitCheckFailed : 0;
    }

    if (check->parsed()) {
      const auto g = load_graph(graph_path);
      CheckReport report;
      if (check_exp->parsed()) {
        report = check_expansion(g, exact_rational("alpha", check_alpha), parse_sweep_mode(check_mode), seed);
      } else if (check_fact->parsed()) {
        report = check_fact_semidegree(g, exact_rational("alpha", check_alpha));
      } else if (check_ore_cmd->parsed()) {
        report = check_ore(g, exact_rational("c", check_c));
      } else if (check_ore_semi->parsed()) {
        report = check_ore_semidegree(g, exact_rational("alpha", check_alpha));
      } else if (check_ore_exp->parsed()) {
        report = check_ore_expansion(g, exact_rational("alpha", check_alpha), parse_pairs(check_u),
                                     exact_rational("eps", check_eps), parse_sweep_mode(check_mode), seed);
      } else if (check_bpaths->parsed()) {
        HaggkvistBlocks blocks;
        try {
          blocks = blocks_from_json(load_json(blocks_path));
        } catch (const json::exception& e) {
          throw UsageError(blocks_path + ": " + e.what());
        }
        report = check_b_paths_through_d(g, blocks);
      }
      out.write(to_json(report));
      return report.failed() ? kExitCheckFailed : 0;
    }

    if (experiment->parsed()) {
      if (sweep->parsed()) {
        std::optional<Rational> p;
        if (!sweep_p.empty()) p = parse_rational(sweep_p, true);
        out.write(threshold_sweep(sweep_n, sweep_trials, seed, p).to_csv());
        return 0;
      }
      if (spec_path.empty()) throw UsageError("experiment needs a spec file");
      const ExperimentSpec spec = spec_from_json(load_json(spec_path));
      validate_spec(spec);
      const auto result = run_experiment(spec);
      const std::string path = !output_path.empty() ? output_path : spec.output.value_or("");
      if (path.empty()) {
        std::cout << result.csv;
        std::cerr << result.summary.dump(2) << '\n';
      } else {
        write_experiment(result, path);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WalkError& e) {
    std::cerr << "walk failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return 0;
}
