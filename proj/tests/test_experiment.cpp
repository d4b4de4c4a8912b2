#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orient/constructions.hpp"
#include "orient/experiment.hpp"
#include "orient/factor.hpp"
#include "orient/hamilton.hpp"
#include "orient/random.hpp"

using namespace orient;

namespace {

ExperimentSpec parse(const char* text) { return spec_from_json(nlohmann::json::parse(text)); }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("haggkvist experiment") {
  const auto spec = parse(R"({"generator": "haggkvist", "params": {"m": [3, 5, 7]},
                              "checks": ["factor", "ham", "b_paths"], "seed": 1})");
  const auto res = run_experiment(spec);
  REQUIRE(res.rows.size() == 3);
  const int expected_n[] = {15, 23, 31};
  const int expected_d0[] = {5, 8, 11};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = res.rows[i];
    CHECK(row.n == expected_n[i]);
    CHECK(row.delta_zero == expected_d0[i]);
    CHECK(row.verdicts.at("factor") == "no_factor");
    CHECK(row.verdicts.at("ham") == "non_hamiltonian");
    CHECK(row.verdicts.at("b_paths") == "pass");
    CHECK(row.seed == mix_seed(1, i));
  }
  const auto lines = lines_of(res.csv);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "# schema=1");
  CHECK(lines[1] == "instance,seed,params,n,delta0,delta_star,factor,ham,ham_nodes,b_paths");
  CHECK(lines[2].rfind("0,", 0) == 0);
  CHECK(res.summary.at("checks").at("factor").at("counts").at("no_factor") == 3);
  CHECK(res.summary.at("instances") == 3);
}

TEST_CASE("zero instances give an empty table") {
  auto spec = parse(R"({"generator": "tournament", "params": {"n": 7}, "checks": ["strong"], "instances": 0})");
  const auto res = run_experiment(spec);
  CHECK(res.rows.empty());
  CHECK(lines_of(res.csv).size() == 2);
  CHECK(res.summary.at("instances") == 0);
}

TEST_CASE("identical specs give byte-identical logs") {
  const auto spec = parse(R"({"generator": "random", "params": {"n": [6, 9], "p": ["1/2", "4/5"]},
                              "checks": ["factor", "ham", "ham_dp", "strong", "factor_strong", "expansion",
                                         "fact_semidegree", "ore", "ore_semidegree"],
                              "seed": 99, "instances": 4})");
  const auto a = run_experiment(spec);
  const auto b = run_experiment(spec);
  CHECK(a.csv == b.csv);
  CHECK(a.summary.dump() == b.summary.dump());
  CHECK(a.rows.size() == 16);

  auto other = spec;
  other.seed = 100;
  CHECK(run_experiment(other).csv != a.csv);

  const auto dir = std::filesystem::temp_directory_path() / "orient_experiment_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "run.csv").string();
  write_experiment(a, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.csv);
  CHECK(std::filesystem::exists(path + ".summary.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("rows regenerate and re-validate") {
  const auto spec = parse(R"({"generator": "random", "params": {"n": 8, "p": "3/5"},
                              "checks": ["factor", "ham"], "seed": 5, "instances": 20})");
  const auto res = run_experiment(spec);
  for (const auto& row : res.rows) {
    const auto g = regenerate_instance(spec, row);
    CHECK(g.order() == row.n);
    CHECK(degree_profile(g).delta_zero == row.delta_zero);
    CHECK(row.verdicts.at("factor") == (find_one_factor(g) ? "factor" : "no_factor"));
    CHECK(row.verdicts.at("ham") == to_string(is_hamiltonian_dp(g).verdict));
  }
}

TEST_CASE("summary counts and rates recompute from rows") {
  const auto spec = parse(R"({"generator": "regular_tournament", "params": {"n": [7, 9], "reversals": 20},
                              "checks": ["factor_strong", "expansion", "strong"], "seed": 3, "instances": 5})");
  const auto res = run_experiment(spec);
  for (const auto& check : spec.checks) {
    std::map<std::string, std::size_t> counts;
    for (const auto& row : res.rows) ++counts[row.verdicts.at(check)];
    const auto& js = res.summary.at("checks").at(check);
    for (const auto& [verdict, count] : counts) {
      CHECK(js.at("counts").at(verdict) == count);
      CHECK(js.at("rates").at(verdict).get<double>() ==
            doctest::Approx(static_cast<double>(count) / static_cast<double>(res.rows.size())));
    }
  }
  for (const auto& row : res.rows) {
    CHECK(row.verdicts.at("factor_strong") == "pass");
    CHECK(row.verdicts.at("expansion") == "pass");
  }
}

TEST_CASE("wall-clock columns are opt-in") {
  auto spec = parse(R"({"generator": "tournament", "params": {"n": 5}, "checks": ["ham"], "record_wall_time": true})");
  const auto res = run_experiment(spec);
  CHECK(lines_of(res.csv)[1] == "instance,seed,params,n,delta0,delta_star,ham,ham_nodes,ham_ms");
  CHECK(res.rows[0].wall_ms.count("ham") == 1);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(run_experiment(parse(R"({"generator": "petersen", "checks": ["factor"]})")), SpecError);
  CHECK_THROWS_AS(run_experiment(parse(R"({"generator": "tournament", "params": {"n": 5}, "checks": ["magic"]})")),
                  SpecError);
  CHECK_THROWS_AS(run_experiment(parse(R"({"generator": "tournament", "params": {}, "checks": ["factor"]})")),
                  SpecError);
  CHECK_THROWS_AS(run_experiment(parse(R"({"generator": "random", "params": {"n": 5, "p": "x"}, "checks": []})")),
                  SpecError);
  CHECK_THROWS_AS(run_experiment(parse(R"({"generator": "tournament", "params": {"n": 5}, "checks": ["b_paths"]})")),
                  SpecError);
  CHECK_THROWS_AS(parse(R"({"generator": 3})"), SpecError);
  const auto round = spec_from_json(to_json(parse(R"({"generator": "twoblock", "params": {"m": [1, 2]},
                                                       "checks": ["strong"], "seed": 4})")));
  CHECK(round.generator == "twoblock");
  CHECK(round.params.at("m") == std::vector<std::string>{"1", "2"});
  CHECK(round.seed == 4);
}

TEST_CASE("threshold sweep") {
  const auto t = threshold_sweep(8, 200, 11);
  std::size_t total = 0;
  for (const auto& b : t.buckets) {
    total += b.instances;
    CHECK(b.hamiltonian <= b.instances);
    // a vertex without in- or out-neighbours rules out a Hamilton cycle
    if (b.delta_zero == 0) CHECK(b.hamiltonian == 0);
  }
  CHECK(total == 200);
  CHECK(t.to_csv() == threshold_sweep(8, 200, 11).to_csv());
  CHECK(t.to_csv().find("illustrative") != std::string::npos);
  const auto fixed = threshold_sweep(6, 50, 2, Rational(0));
  REQUIRE(fixed.buckets.size() == 1);
  CHECK(fixed.buckets[0].delta_zero == 0);
  CHECK(fixed.to_csv().find("\n0,0.0000,50,0,0,0.0000\n") != std::string::npos);
  CHECK_THROWS_AS(threshold_sweep(17, 1, 1), std::domain_error);
}
