#include <doctest.h>

#include <cmath>
#include <sstream>

#include "chromstream/errors.hpp"
#include "chromstream/experiments.hpp"
#include "chromstream/graph_families.hpp"
#include "chromstream/solver.hpp"
#include "oracles.hpp"

using namespace chromstream;

namespace {

// Minimal RFC 4180 reader for the consistency check.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows(1);
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rows.back().push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      rows.back().push_back(cell);
      cell.clear();
      rows.emplace_back();
    } else {
      cell += c;
    }
  }
  rows.pop_back();
  return rows;
}

void check_csv_matches_json(const ExperimentResult& result) {
  const auto rows = read_csv(result_to_csv(result));
  REQUIRE(rows.size() == result.records.size() + 1);
  const auto& header = rows[0];
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& rec = result.records[i];
    REQUIRE(rows[i + 1].size() == header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      const auto it = rec.find(header[c]);
      if (it == rec.end()) {
        CHECK(rows[i + 1][c].empty());
      } else if (it->is_string()) {
        CHECK(rows[i + 1][c] == it->get<std::string>());
      } else {
        CHECK(nlohmann::json::parse(rows[i + 1][c]) == *it);
      }
    }
  }
}

}  // namespace

TEST_CASE("Wilson interval") {
  const auto zero = wilson_interval(0, 100);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == doctest::Approx(0.036994).epsilon(1e-4));
  const auto half = wilson_interval(50, 100);
  CHECK(half.lower == doctest::Approx(0.403832).epsilon(1e-4));
  CHECK(half.upper == doctest::Approx(0.596168).epsilon(1e-4));
  CHECK(half.half_width == doctest::Approx(0.096168).epsilon(1e-4));
  const auto none = wilson_interval(0, 0);
  CHECK(none.upper == 0.0);
}

TEST_CASE("graph families") {
  const Graph g = gnm_graph(30, 100, 4);
  CHECK(g.num_edges() == 100);
  CHECK(gnm_graph(30, 100, 4) == g);
  CHECK(gnm_graph(10, 45, 1) == oracle::complete(10));
  CHECK_THROWS_AS(gnm_graph(10, 46, 1), ArgumentError);

  const Graph b = random_bipartite(50, 0.5, 2);
  CHECK(find_k_coloring(b, 2).has_value());
  CHECK(random_bipartite(50, 0.5, 2) == b);
  CHECK(random_bipartite(50, 0.0, 2).num_edges() == 0);
  CHECK_THROWS_AS(random_bipartite(50, 1.5, 2), ArgumentError);

  const auto p = planted_clique(100, 40, 0.5, 3);
  CHECK(p.clique.size() == 40);
  CHECK(verify_clique(p.graph, p.clique));
  CHECK(*chromatic_number(p.graph) == 40);
  CHECK(planted_clique(100, 40, 0.5, 3).graph == p.graph);
  CHECK_FALSE(planted_clique(100, 40, 0.5, 4).graph == p.graph);
  CHECK_THROWS_AS(planted_clique(10, 11, 0.5, 1), ArgumentError);
}

TEST_CASE("graph spec parsing") {
  const auto s = parse_graph_spec("planted:n=200,m=30,density=0.25");
  CHECK(s.kind == GraphSpec::Kind::planted);
  CHECK(s.n == 200);
  CHECK(s.m == 30);
  CHECK(s.density == 0.25);
  CHECK(graph_spec_name(s) == "planted:n=200,m=30,density=0.25");
  CHECK(parse_graph_spec(graph_spec_name(GraphSpec::gnm(300, 20000))).m == 20000);
  CHECK(known_chromatic_number(s) == 30);
  CHECK(known_chromatic_number(GraphSpec::empty(5)) == 1);
  CHECK_FALSE(known_chromatic_number(GraphSpec::bipartite(5, 0.5)).has_value());
  CHECK_THROWS_AS(parse_graph_spec("torus:n=4"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_spec("gnm:n=4"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_spec("gnm:m=4"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_spec("gnm:n=4,m=x"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_spec("bipartite:n=4,colour=2"), ArgumentError);
}

TEST_CASE("edge shrinkage") {
  ShrinkageConfig cfg;
  cfg.graph = GraphSpec::empty(20);
  cfg.t = 3;
  cfg.trials = 3;
  const auto empty = experiment_edge_shrinkage(cfg);
  for (const auto& r : empty.records) {
    CHECK(r["monochromatic"] == nlohmann::json::array({0, 0, 0, 0}));
    CHECK(r["ratios"] == nlohmann::json::array({0.0, 0.0, 0.0}));
  }
  CHECK(empty.summary["iterations_checked"] == 0);

  cfg.graph = GraphSpec::bipartite(60, 0.3);
  cfg.t = 2;
  const auto fits = experiment_edge_shrinkage(cfg);
  for (const auto& r : fits.records) {
    CHECK(r["monochromatic"][1] == 0);
    CHECK(r["checked"] == 1);
  }

  cfg.graph = GraphSpec::gnm(120, 2500);
  cfg.sampling.budget_multiplier = 0.2;
  cfg.trials = 6;
  const auto a = experiment_edge_shrinkage(cfg);
  cfg.exec = Execution::serial;
  const auto b = experiment_edge_shrinkage(cfg);
  CHECK(result_json_text(a) == result_json_text(b));
  CHECK(a.summary["bound"].get<double>() == doctest::Approx(std::pow(120.0, -0.5)));
  check_csv_matches_json(a);
  for (const auto& r : a.records) CHECK(r["monochromatic"][0] == 2500);
}

TEST_CASE("vertex sampling") {
  CHECK(vertex_sampling_threshold(100, 0.5, 40) == doctest::Approx(0.5 / (2 * std::log(100.0)) * 40 - 1));
  CHECK(vertex_sampling_threshold(100, 0.5, 40) == doctest::Approx(1.1715).epsilon(1e-3));

  VertexSamplingConfig cfg;
  cfg.graph = GraphSpec::planted(100, 40, 0.5);
  cfg.p = 0.5;
  cfg.trials = 40;
  const auto res = experiment_vertex_sampling(cfg);
  for (const auto& r : res.records) {
    // indicator iff chi(H) <= 1
    CHECK(r["indicator"].get<bool>() == (r["chi_h"].get<std::size_t>() <= 1));
  }
  CHECK(res.summary["indicator_rate"].get<double>() <= 0.01);
  check_csv_matches_json(res);

  cfg.graph = GraphSpec::empty(30);
  cfg.p = 0.9;
  const auto edgeless = experiment_vertex_sampling(cfg);
  for (const auto& r : edgeless.records) {
    CHECK(r["chi_h"].get<std::size_t>() <= 1);
    CHECK_FALSE(r["indicator"].get<bool>());
  }

  cfg.graph = GraphSpec::bipartite(30, 0.3);
  const auto bip = experiment_vertex_sampling(cfg);
  for (const auto& r : bip.records) CHECK(r["chi_g"].get<std::size_t>() <= 2);
}

TEST_CASE("distinguisher") {
  DistinguisherConfig cfg;
  cfg.small_side = GraphSpec::bipartite(100, 0.5);
  cfg.large_side = GraphSpec::planted(100, 20, 0.5);
  cfg.trials = 0;
  const auto none = experiment_distinguisher(cfg);
  CHECK(none.records.empty());
  CHECK(none.summary.empty());

  cfg.trials = 5;
  for (auto algo : {Distinguisher::random_order, Distinguisher::multipass, Distinguisher::dynamic}) {
    cfg.algorithm = algo;
    cfg.t = algo == Distinguisher::dynamic ? 32 : 2;
    const auto res = experiment_distinguisher(cfg);
    CHECK(res.summary["small_success_count"] == 5);
    CHECK(res.summary["unverified_evidence"] == 0);
    CHECK(res.summary["improper_colorings"] == 0);
    check_csv_matches_json(res);
    cfg.exec = Execution::serial;
    CHECK(result_json_text(experiment_distinguisher(cfg)) == result_json_text(res));
    cfg.exec = Execution::parallel;
  }
  CHECK(distinguisher_from_name("multipass") == Distinguisher::multipass);
  CHECK(distinguisher_name(Distinguisher::dynamic) == "dynamic");
  CHECK_THROWS_AS(distinguisher_from_name("oracle"), ArgumentError);
}

TEST_CASE("result emission") {
  ExperimentResult r;
  r.name = "demo";
  r.seed = 3;
  r.trials = 2;
  r.params = {{"zeta", 1}, {"alpha", "x,y"}};
  r.records = {{{"b", 1}, {"a", "he said \"hi\""}}, {{"a", "plain"}, {"c", {1, 2}}}};
  const std::string json_text = result_json_text(r);
  CHECK(json_text.find("\"alpha\"") < json_text.find("\"zeta\""));
  const auto back = nlohmann::json::parse(json_text);
  CHECK(back["records"].size() == 2);
  CHECK(result_to_csv(r) == "a,b,c\n\"he said \"\"hi\"\"\",1,\nplain,,\"[1,2]\"\n");
  check_csv_matches_json(r);
}
