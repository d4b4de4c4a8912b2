#include "orient/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "orient/checkers.hpp"
#include "orient/constructions.hpp"
#include "orient/factor.hpp"
#include "orient/hamilton.hpp"
#include "orient/random.hpp"

namespace orient {

namespace {

using ParamMap = std::map<std::string, std::string>;

struct GeneratorInfo {
  std::string name;
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::vector<GeneratorInfo>& generator_table() {
  static const std::vector<GeneratorInfo> table = {
      {"haggkvist", {"m"}, {}},
      {"tournament", {"n"}, {}},
      {"twoblock", {"m"}, {}},
      {"random", {"n", "p"}, {}},
      {"regular_tournament", {"n"}, {"reversals"}},
  };
  return table;
}

int int_param(const ParamMap& values, const std::string& key) {
  const std::string& text = values.at(key);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw SpecError("parameter " + key + " is not an integer: " + text);
  }
  if (used != text.size()) throw SpecError("parameter " + key + " is not an integer: " + text);
  return v;
}

OrientedGraph generate(const std::string& generator, const ParamMap& values, std::uint64_t seed) {
  if (generator == "haggkvist") return haggkvist_extremal(int_param(values, "m")).graph;
  if (generator == "tournament") return circulant_regular_tournament(int_param(values, "n"));
  if (generator == "twoblock") return two_block_tournament(int_param(values, "m"));
  if (generator == "random") {
    const int n = int_param(values, "n");
    if (n < 1) throw SpecError("random: n must be positive");
    return random_oriented_graph(n, parse_rational(values.at("p"), true), seed);
  }
  if (generator == "regular_tournament") {
    const int n = int_param(values, "n");
    const int reversals = values.count("reversals") ? int_param(values, "reversals") : n * n;
    return random_regular_tournament(n, seed, reversals);
  }
  throw SpecError("unknown generator: " + generator);
}

std::string param_string(const ParamMap& values) {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

std::vector<ParamMap> grid_points(const ExperimentSpec& spec) {
  std::vector<ParamMap> points(1);
  for (const auto& [key, values] : spec.params) {
    std::vector<ParamMap> next;
    for (const auto& point : points) {
      for (const auto& v : values) {
        ParamMap p = point;
        p[key] = v;
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

std::string value_to_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return v.dump();
  throw SpecError("parameter values must be numbers or strings");
}

const char* report_verdict(const CheckReport& r) {
  if (!r.hypothesis_holds || !r.conclusion_evaluated) return "vacuous";
  return r.conclusion_holds ? "pass" : "fail";
}

bool is_ham_check(const std::string& c) { return c == "ham" || c == "ham_dp"; }

std::string format_ms(double ms) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << ms;
  return out.str();
}

}  // namespace

const std::vector<std::string>& known_generators() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& g : generator_table()) v.push_back(g.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "factor", "ham", "ham_dp", "strong", "factor_strong", "expansion",
      "fact_semidegree", "ore", "ore_semidegree", "b_paths"};
  return names;
}

ExperimentSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("spec must be a JSON object");
  ExperimentSpec s;
  try {
    s.generator = j.at("generator").get<std::string>();
    if (j.contains("params")) {
      for (const auto& [key, value] : j.at("params").items()) {
        std::vector<std::string> values;
        if (value.is_array()) {
          for (const auto& v : value) values.push_back(value_to_string(v));
        } else {
          values.push_back(value_to_string(value));
        }
        s.params[key] = std::move(values);
      }
    }
    if (j.contains("checks")) s.checks = j.at("checks").get<std::vector<std::string>>();
    s.seed = j.value("seed", std::uint64_t{0});
    s.instances = j.value("instances", std::size_t{1});
    if (j.contains("alpha")) s.alpha = value_to_string(j.at("alpha"));
    if (j.contains("c")) s.c = value_to_string(j.at("c"));
    s.budget = j.value("budget", s.budget);
    if (j.contains("output") && !j.at("output").is_null()) s.output = j.at("output").get<std::string>();
    s.record_wall_time = j.value("record_wall_time", false);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  }
  return s;
}

nlohmann::json to_json(const ExperimentSpec& spec) {
  nlohmann::json j{{"generator", spec.generator},
                   {"params", spec.params},
                   {"checks", spec.checks},
                   {"seed", spec.seed},
                   {"instances", spec.instances},
                   {"alpha", spec.alpha},
                   {"c", spec.c},
                   {"budget", spec.budget},
                   {"record_wall_time", spec.record_wall_time}};
  if (spec.output) j["output"] = *spec.output;
  return j;
}

void validate_spec(const ExperimentSpec& spec) {
  const auto& table = generator_table();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const GeneratorInfo& g) { return g.name == spec.generator; });
  if (it == table.end()) throw SpecError("unknown generator: " + spec.generator);
  for (const auto& key : it->required)
    if (!spec.params.count(key) || spec.params.at(key).empty())
      throw SpecError("generator " + spec.generator + " needs parameter " + key);
  for (const auto& [key, values] : spec.params) {
    const bool known = std::count(it->required.begin(), it->required.end(), key) +
                       std::count(it->optional.begin(), it->optional.end(), key);
    if (!known) throw SpecError("generator " + spec.generator + " has no parameter " + key);
    for (const auto& v : values) {
      if (key == "p") {
        try {
          const Rational p = parse_rational(v, true);
          if (p < 0 || p > 1) throw SpecError("p must lie in [0,1]");
        } catch (const std::invalid_argument& e) {
          throw SpecError(std::string("bad p: ") + e.what());
        }
      } else {
        ParamMap single{{key, v}};
        (void)int_param(single, key);
      }
    }
  }
  for (const auto& c : spec.checks) {
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw SpecError("unknown check: " + c);
    if (c == "b_paths" && spec.generator != "haggkvist")
      throw SpecError("check b_paths needs the haggkvist generator");
  }
  if (spec.alpha != "auto") {
    try {
      (void)parse_rational(spec.alpha);
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("bad alpha: ") + e.what());
    }
  }
  try {
    (void)parse_rational(spec.c);
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("bad c: ") + e.what());
  }
}

OrientedGraph regenerate_instance(const ExperimentSpec& spec, const ExperimentRow& row) {
  return generate(spec.generator, row.param_values, row.seed);
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  validate_spec(spec);
  ExperimentResult result;
  const auto points = grid_points(spec);
  const Rational c = parse_rational(spec.c);

  std::size_t instance = 0;
  for (const auto& point : points) {
    for (std::size_t rep = 0; rep < spec.instances; ++rep, ++instance) {
      ExperimentRow row;
      row.instance = instance;
      row.seed = mix_seed(spec.seed, instance);
      row.param_values = point;
      row.params = param_string(point);
      const OrientedGraph g = generate(spec.generator, point, row.seed);
      row.n = g.order();
      const auto profile = degree_profile(g);
      row.delta_zero = profile.delta_zero;
      row.delta_star = profile.delta_star;
      const Rational alpha = spec.alpha == "auto" ? delta_star_excess(g) : parse_rational(spec.alpha);

      for (const auto& check : spec.checks) {
        const auto start = std::chrono::steady_clock::now();
        std::string verdict;
        if (check == "factor") {
          verdict = find_one_factor(g) ? "factor" : "no_factor";
        } else if (check == "ham") {
          const auto cert = is_hamiltonian_backtracking(g, spec.budget);
          verdict = to_string(cert.verdict);
          row.nodes[check] = cert.stats.nodes;
        } else if (check == "ham_dp") {
          const auto cert = is_hamiltonian_dp(g);
          verdict = to_string(cert.verdict);
          row.nodes[check] = cert.stats.nodes;
        } else if (check == "strong") {
          verdict = is_strongly_connected(g) ? "strong" : "not_strong";
        } else if (check == "factor_strong") {
          if (2 * profile.delta_star <= 3 * row.n - 3)
            verdict = "vacuous";
          else
            verdict = find_one_factor(g) && is_strongly_connected(g) ? "pass" : "fail";
        } else if (check == "expansion") {
          verdict = g.order() <= kExhaustiveSweepCap ? report_verdict(check_expansion(g, alpha))
                                                     : report_verdict(check_expansion(g, alpha, SweepMode::sampled, row.seed));
        } else if (check == "fact_semidegree") {
          verdict = report_verdict(check_fact_semidegree(g, alpha));
        } else if (check == "ore") {
          verdict = check_ore(g, c).failed() ? "fail" : "pass";
        } else if (check == "ore_semidegree") {
          verdict = report_verdict(check_ore_semidegree(g, alpha));
        } else if (check == "b_paths") {
          const auto h = haggkvist_extremal(int_param(point, "m"));
          verdict = report_verdict(check_b_paths_through_d(h.graph, h.blocks));
        }
        row.verdicts[check] = verdict;
        if (spec.record_wall_time) {
          const auto end = std::chrono::steady_clock::now();
          row.wall_ms[check] = std::chrono::duration<double, std::milli>(end - start).count();
        }
      }
      result.rows.push_back(std::move(row));
    }
  }

  std::ostringstream csv;
  csv << "# schema=1\n";
  csv << "instance,seed,params,n,delta0,delta_star";
  for (const auto& check : spec.checks) {
    csv << ',' << check;
    if (is_ham_check(check)) csv << ',' << check << "_nodes";
  }
  if (spec.record_wall_time)
    for (const auto& check : spec.checks) csv << ',' << check << "_ms";
  csv << '\n';
  for (const auto& row : result.rows) {
    csv << row.instance << ',' << row.seed << ',' << row.params << ',' << row.n << ','
        << row.delta_zero << ',' << row.delta_star;
    for (const auto& check : spec.checks) {
      csv << ',' << row.verdicts.at(check);
      if (is_ham_check(check)) csv << ',' << row.nodes.at(check);
    }
    if (spec.record_wall_time)
      for (const auto& check : spec.checks) csv << ',' << format_ms(row.wall_ms.at(check));
    csv << '\n';
  }
  result.csv = csv.str();

  nlohmann::json checks = nlohmann::json::object();
  for (const auto& check : spec.checks) {
    std::map<std::string, std::size_t> counts;
    for (const auto& row : result.rows) ++counts[row.verdicts.at(check)];
    nlohmann::json rates = nlohmann::json::object();
    for (const auto& [verdict, count] : counts)
      rates[verdict] = static_cast<double>(count) / static_cast<double>(result.rows.size());
    checks[check] = {{"counts", counts}, {"rates", rates}};
  }
  result.summary = {{"schema", 1},
                    {"generator", spec.generator},
                    {"seed", spec.seed},
                    {"instances", result.rows.size()},
                    {"checks", checks}};
  return result;
}

void write_experiment(const ExperimentResult& result, const std::string& path) {
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + path);
  csv << result.csv;
  std::ofstream summary(path + ".summary.json", std::ios::binary);
  if (!summary) throw std::runtime_error("cannot write " + path + ".summary.json");
  summary << result.summary.dump(2) << '\n';
}

std::string SweepTable::to_csv() const {
  std::ostringstream out;
  out << "# schema=1\n";
  out << "# illustrative only: small random graphs say nothing about the asymptotic threshold\n";
  out << "# n=" << n << " trials=" << trials << " seed=" << seed << '\n';
  out << "delta0,delta0_over_n,instances,hamiltonian,unknown,frequency\n";
  for (const auto& b : buckets) {
    const double ratio = n == 0 ? 0.0 : static_cast<double>(b.delta_zero) / n;
    const std::size_t decided = b.instances - b.unknown;
    const double freq = decided == 0 ? 0.0 : static_cast<double>(b.hamiltonian) / static_cast<double>(decided);
    std::ostringstream r;
    r.setf(std::ios::fixed);
    r.precision(4);
    r << ratio << ',' << b.instances << ',' << b.hamiltonian << ',' << b.unknown << ',' << freq;
    out << b.delta_zero << ',' << r.str() << '\n';
  }
  return out.str();
}

SweepTable threshold_sweep(int n, std::size_t trials, std::uint64_t seed,
                           const std::optional<Rational>& p, std::uint64_t budget) {
  if (n < 1 || n > 16) throw std::domain_error("threshold_sweep: n must lie in [1,16]");
  SweepTable table;
  table.n = n;
  table.trials = trials;
  table.seed = seed;
  std::map<int, SweepBucket> buckets;
  for (std::size_t t = 0; t < trials; ++t) {
    const Rational pt = p ? *p : Rational(static_cast<std::int64_t>(t % 10) + 1, 10);
    const OrientedGraph g = random_oriented_graph(n, pt, mix_seed(seed, t));
    const int d0 = degree_profile(g).delta_zero;
    auto& b = buckets[d0];
    b.delta_zero = d0;
    ++b.instances;
    const auto cert = is_hamiltonian_backtracking(g, budget);
    if (cert.verdict == HamiltonVerdict::hamiltonian) ++b.hamiltonian;
    if (cert.verdict == HamiltonVerdict::unknown) ++b.unknown;
  }
  for (const auto& [d0, b] : buckets) table.buckets.push_back(b);
  return table;
}

}  // namespace orient
