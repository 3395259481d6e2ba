#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "chromstream/coloring.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/graph.hpp"
#include "chromstream/graph_io.hpp"
#include "chromstream/solver.hpp"
#include "oracles.hpp"

using namespace chromstream;

TEST_CASE("graph construction normalizes and rejects bad edges") {
  const Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edges()[0] == Edge{0, 3});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.degree(0) == 1);
  CHECK(g.neighbors(1).size() == 1);
  CHECK(g.neighbors(1)[0] == 2);

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ArgumentError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ArgumentError);
}

TEST_CASE("proper coloring checks") {
  CHECK(is_proper_coloring(Graph(4, {}), Coloring::uniform(4)));
  CHECK_FALSE(is_proper_coloring(Graph(2, {{0, 1}}), Coloring(std::vector<Color>{0, 0})));
  const Graph c5 = oracle::cycle(5);
  const std::vector<Color> raw{0, 1, 0, 1, 2};
  CHECK(is_proper_coloring(c5, Coloring(raw)));
  CHECK(oracle::proper(c5, raw));
  CHECK_THROWS_AS(is_proper_coloring(c5, Coloring::uniform(4)), ArgumentError);

  const auto mono = find_monochromatic_edge(Graph(3, {{0, 2}, {1, 2}}), Coloring(std::vector<Color>{0, 1, 1}));
  CHECK(mono.found);
  CHECK(mono.edge == Edge{1, 2});
}

TEST_CASE("colorings are canonical") {
  const Coloring c(std::vector<Color>{7, 3, 7, 9});
  CHECK(c.num_colors() == 3);
  CHECK(std::vector<Color>(c.colors().begin(), c.colors().end()) == std::vector<Color>{0, 1, 0, 2});
  CHECK(Coloring::uniform(0).num_colors() == 0);
  CHECK(Coloring::uniform(3).num_colors() == 1);
}

TEST_CASE("chromatic number of small fixtures") {
  CHECK(*chromatic_number(Graph(0, {})) == 0);
  CHECK(*chromatic_number(Graph(5, {})) == 1);
  CHECK(*chromatic_number(oracle::complete(4)) == 4);
  CHECK(*chromatic_number(oracle::cycle(5)) == 3);
  CHECK(oracle::chromatic(oracle::cycle(5)) == 3);
  CHECK(*chromatic_number(oracle::petersen()) == 3);
  CHECK_FALSE(chromatic_number(oracle::complete(5), 4).has_value());
}

TEST_CASE("find_k_coloring") {
  const auto k3 = oracle::complete(3);
  const auto three = find_k_coloring(k3, 3);
  REQUIRE(three);
  CHECK(is_proper_coloring(k3, *three));
  CHECK_FALSE(find_k_coloring(k3, 2).has_value());

  const auto pet = oracle::petersen();
  CHECK(oracle::colorable(pet, 3));
  const auto pc = find_k_coloring(pet, 3);
  REQUIRE(pc);
  CHECK(is_proper_coloring(pet, *pc));
  CHECK(pc->num_colors() <= 3);
  CHECK_FALSE(find_k_coloring(pet, 2).has_value());
}

TEST_CASE("solver agrees with brute force on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 4 + seed % 8;
    const Graph g = oracle::lcg_graph(n, seed, 20 + static_cast<unsigned>(seed % 5) * 15);
    const std::size_t expected = oracle::chromatic(g);
    const auto chi = chromatic_number(g);
    REQUIRE(chi);
    CHECK(*chi == expected);
    const auto best = minimum_coloring(g);
    REQUIRE(best);
    CHECK(best->num_colors() == expected);
    CHECK(is_proper_coloring(g, *best));
    if (expected >= 2) {
      CHECK(find_k_coloring(g, expected).has_value());
      CHECK_FALSE(find_k_coloring(g, expected - 1).has_value());
    }
    const auto clique = greedy_clique(g);
    CHECK(verify_clique(g, clique));
    CHECK(clique.size() <= expected);
    const Coloring greedy = dsatur_coloring(g);
    CHECK(is_proper_coloring(g, greedy));
    CHECK(greedy.num_colors() >= expected);
  }
}

TEST_CASE("solver node budget") {
  const Graph g = oracle::lcg_graph(60, 3, 50);
  CHECK_THROWS_AS(minimum_coloring(g, std::nullopt, SolverLimits{5}), SolverBudgetExceeded);
}

TEST_CASE("connected components") {
  const Graph g(6, {{0, 1}, {2, 3}, {3, 4}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 1});
  CHECK(comps[1] == std::vector<Vertex>{2, 3, 4});
  CHECK(comps[2] == std::vector<Vertex>{5});
}

TEST_CASE("cliques") {
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(verify_clique(oracle::complete(4), all));
  const std::vector<Vertex> tri{0, 1, 2};
  CHECK_FALSE(verify_clique(oracle::cycle(5), tri));
  const auto missing = find_missing_clique_pair(oracle::cycle(5), tri);
  CHECK(missing.found);
  CHECK(missing.pair == Edge{0, 2});
  const std::vector<Vertex> bad{0, 9};
  CHECK_THROWS_AS(verify_clique(oracle::cycle(5), bad), ArgumentError);
}

TEST_CASE("product coloring") {
  const Coloring a(std::vector<Color>{0, 1});
  const Coloring z(std::vector<Color>{0, 0});
  const Coloring p = product_coloring(a, z);
  CHECK(p.num_colors() == 2);
  CHECK(p == a);

  const Coloring c1(std::vector<Color>{0, 0, 1, 1});
  const Coloring c2(std::vector<Color>{0, 1, 0, 1});
  const Coloring c = product_coloring(c1, c2);
  CHECK(c.num_colors() == 4);
  CHECK(std::vector<Color>(c.colors().begin(), c.colors().end()) == std::vector<Color>{0, 1, 2, 3});

  CHECK_THROWS_AS(product_coloring(c1, a), ArgumentError);

  // Common refinement and the monochromatic-iff-both property.
  std::mt19937_64 rng(11);
  const Vertex n = 120;
  std::vector<Color> r1(n), r2(n);
  for (Vertex v = 0; v < n; ++v) {
    r1[v] = static_cast<Color>(rng() % 4);
    r2[v] = static_cast<Color>(rng() % 5);
  }
  const Coloring x = product_coloring(Coloring(r1), Coloring(r2));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      CHECK((x[u] == x[v]) == (r1[u] == r1[v] && r2[u] == r2[v]));
    }
  }
}

TEST_CASE("induced subgraphs") {
  const Graph g = oracle::complete(4);
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(induced_subgraph(g, all).graph == g);
  const std::vector<Vertex> two{0, 1};
  CHECK(induced_subgraph(g, two).graph.num_edges() == 1);

  const std::vector<Vertex> s{3, 1, 0, 3};
  const auto h = induced_subgraph(oracle::cycle(5), s);
  CHECK(h.graph.num_vertices() == 3);
  REQUIRE(h.graph.num_edges() == 1);
  CHECK(h.original[h.graph.edges()[0].u] == 0);
  CHECK(h.original[h.graph.edges()[0].v] == 1);
  CHECK(h.local[3] == 2);
  CHECK(h.local[2] == kNoVertex);
  const std::vector<Vertex> bad{7};
  CHECK_THROWS_AS(induced_subgraph(g, bad), ArgumentError);
}

TEST_CASE("dynamic multigraph") {
  DynamicMultigraph m(3);
  CHECK(finalize_multigraph(m).num_edges() == 0);
  for (int i = 0; i < 3; ++i) m.apply(0, 1, +1);
  CHECK(m.multiplicity(1, 0) == 3);
  CHECK(finalize_multigraph(m) == Graph(3, {{0, 1}}));

  DynamicMultigraph w(3);
  w.apply(0, 1, +1);
  w.apply(1, 0, +1);
  w.apply(1, 2, +1);
  w.apply(1, 2, -1);
  w.apply(0, 2, +1);
  CHECK(finalize_multigraph(w) == Graph(3, {{0, 1}, {0, 2}}));
  CHECK_THROWS_AS(w.apply(1, 2, -1), ValidationError);
  CHECK(w.multiplicity(1, 2) == 0);
  CHECK_THROWS_AS(w.apply(1, 1, +1), ArgumentError);
  CHECK_THROWS_AS(w.apply(0, 3, +1), ArgumentError);
}

TEST_CASE("multigraph result is order independent") {
  std::vector<std::pair<Edge, int>> events;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      events.push_back({{a, b}, +1});
      if ((a + b) % 2 == 0) events.push_back({{a, b}, +1});
    }
  }
  std::mt19937_64 rng(5);
  Graph first;
  for (int round = 0; round < 20; ++round) {
    std::shuffle(events.begin(), events.end(), rng);
    DynamicMultigraph m(6);
    for (const auto& [e, d] : events) m.apply(e.u, e.v, d);
    const Graph g = finalize_multigraph(m);
    if (round == 0) first = g;
    CHECK(g == first);
    CHECK(g == oracle::complete(6));
  }
}

TEST_CASE("graph from edge union") {
  const Graph g = graph_from_edge_union(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("graph text format") {
  const Graph g = oracle::petersen();
  const std::string text = graph_to_string(g);
  CHECK(text.rfind("#graph v1 n=10\n", 0) == 0);
  CHECK(graph_from_string(text) == g);
  CHECK(graph_to_string(graph_from_string(text)) == text);
  CHECK(graph_from_string("#graph v1 n=3\n1 2\n0 1\n") == Graph(3, {{0, 1}, {1, 2}}));

  auto parse_line = [](const std::string& text) -> std::size_t {
    try {
      graph_from_string(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(parse_line("#graph v1 n=3\n0 1\n0 1\n") == 3);
  CHECK(parse_line("#graph v1 n=3\n1 1\n") == 2);
  CHECK(parse_line("#graph v1 n=3\n2 1\n") == 2);
  CHECK(parse_line("#graph v1 n=3\n0 3\n") == 2);
  CHECK(parse_line("#graph v1 n=3\n0 x\n") == 2);
  CHECK(parse_line("#dag v1 n=3\n") == 1);
  CHECK(parse_line("") == 1);
}

TEST_CASE("coloring JSON") {
  const Coloring c(std::vector<Color>{0, 1, 0, 2});
  const auto doc = coloring_to_json(c);
  CHECK(doc["n"] == 4);
  CHECK(doc["num_colors"] == 3);
  CHECK(doc.dump() == R"({"colors":[0,1,0,2],"n":4,"num_colors":3})");
  CHECK(coloring_from_json(doc) == c);
}
