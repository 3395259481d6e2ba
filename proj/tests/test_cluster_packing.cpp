#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "chromstream/cluster_packing.hpp"
#include "chromstream/errors.hpp"
#include "oracles.hpp"

using namespace chromstream;

namespace {

// Independent structural check: clique edges partition the graph, cliques
// in a cluster are disjoint, and no graph edge joins two cliques of the same
// cluster.
bool oracle_packing_ok(const ClusterPackingGraph& cpg) {
  std::map<Edge, int> cover;
  for (const auto& cluster : cpg.clusters) {
    if (cluster.size() != cpg.r) return false;
    std::map<Vertex, std::size_t> owner;
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      if (cluster[j].size() != cpg.k) return false;
      for (Vertex v : cluster[j]) {
        if (!owner.emplace(v, j).second) return false;
      }
      for (std::size_t a = 0; a < cluster[j].size(); ++a) {
        for (std::size_t b = a + 1; b < cluster[j].size(); ++b) {
          ++cover[make_edge(cluster[j][a], cluster[j][b])];
        }
      }
    }
    for (const auto& [u, ju] : owner) {
      for (Vertex v : cpg.graph.neighbors(u)) {
        const auto iv = owner.find(v);
        if (iv != owner.end() && iv->second != ju) return false;
      }
    }
  }
  if (cover.size() != cpg.graph.num_edges()) return false;
  for (const auto& [e, c] : cover) {
    if (c != 1 || !cpg.graph.has_edge(e.u, e.v)) return false;
  }
  return true;
}

std::size_t basic_closed_form(std::size_t n, std::size_t k) {
  return (n / (2 * k * k)) * (n / (2 * k * k * k));
}

std::size_t grouped_closed_form(std::size_t n, std::size_t r, std::size_t k) {
  return (n / (2 * k * r)) * (n / (2 * k * k * r));
}

ClusterPackingGraph with_graph(const ClusterPackingGraph& cpg, std::vector<Edge> edges) {
  ClusterPackingGraph out = cpg;
  out.graph = Graph(cpg.num_vertices(), std::move(edges));
  return out;
}

const CheckResult& check(const VerificationReport& report, const char* name) {
  const CheckResult* c = report.find(name);
  REQUIRE(c != nullptr);
  return *c;
}

}  // namespace

TEST_CASE("Fano family") {
  const SetFamily f = gen_intersection_family(7, 3, 1, 7, 0, FamilyMode::fano);
  REQUIRE(f.sets.size() == 7);
  for (std::size_t a = 0; a < 7; ++a) {
    CHECK(f.sets[a].size() == 3);
    for (std::size_t b = a + 1; b < 7; ++b) {
      std::vector<std::uint32_t> both;
      std::set_intersection(f.sets[a].begin(), f.sets[a].end(), f.sets[b].begin(), f.sets[b].end(),
                            std::back_inserter(both));
      CHECK(both.size() == 1);
    }
  }
  CHECK(verify_family(f).passed());
  CHECK(gen_intersection_family(7, 3, 1, 7, 99, FamilyMode::fano).sets == f.sets);
}

TEST_CASE("random family") {
  const SetFamily f = gen_intersection_family(100, 33, 14, 50, 1);
  REQUIRE(f.sets.size() == 50);
  for (std::size_t a = 0; a < f.sets.size(); ++a) {
    CHECK(f.sets[a].size() == 33);
    CHECK(std::is_sorted(f.sets[a].begin(), f.sets[a].end()));
    CHECK(f.sets[a].back() < 100);
    for (std::size_t b = a + 1; b < f.sets.size(); ++b) {
      std::vector<std::uint32_t> both;
      std::set_intersection(f.sets[a].begin(), f.sets[a].end(), f.sets[b].begin(), f.sets[b].end(),
                            std::back_inserter(both));
      CHECK(both.size() <= 14);
    }
  }
  CHECK(gen_intersection_family(100, 33, 14, 50, 1).sets == f.sets);
  CHECK_THROWS_AS(gen_intersection_family(4, 3, 0, 2, 0), GenerationError);

  SetFamily bad = f;
  bad.sets[1] = bad.sets[0];
  CHECK_FALSE(verify_family(bad).passed());
  CHECK(family_from_json(family_to_json(f)).sets == f.sets);
}

TEST_CASE("basic lines") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{64, 2}, {108, 3}, {256, 2}, {128, 2}, {216, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    const auto cpg = construct_lines_basic(n, k);
    CHECK(cpg.t() == basic_closed_form(n, k));
    CHECK(cpg.r == k);
    CHECK(cpg.k == k);
    CHECK(cpg.num_vertices() == n);
    CHECK(cpg.layout == Layout::basic);
    CHECK(cpg.graph.num_edges() == cpg.t() * cpg.r * k * (k - 1) / 2);
    CHECK(oracle_packing_ok(cpg));
    CHECK(verify_cluster_packing(cpg).passed());
  }
  const auto a = construct_lines_basic(64, 2);
  CHECK(a.t() == 32);
  CHECK(a.graph.num_edges() == 64);
  CHECK(construct_lines_basic(108, 3).t() == 12);
  CHECK(construct_lines_basic(108, 3).graph.num_edges() == 108);
  CHECK_THROWS_AS(construct_lines_basic(8, 2), ArgumentError);
  CHECK_THROWS_AS(construct_lines_basic(65, 2), ArgumentError);
}

TEST_CASE("distinct lines meet in at most one vertex") {
  for (const auto& cpg : {construct_lines_basic(128, 2), construct_lines_basic(108, 3),
                          construct_lines_grouped(256, 2, 2)}) {
    std::vector<std::set<Vertex>> lines;
    for (const auto& cluster : cpg.clusters) {
      for (const auto& clique : cluster) lines.emplace_back(clique.begin(), clique.end());
    }
    for (std::size_t a = 0; a < lines.size(); ++a) {
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        std::size_t shared = 0;
        for (Vertex v : lines[a]) shared += lines[b].count(v);
        CHECK(shared <= 1);
      }
    }
  }
}

TEST_CASE("grouped lines") {
  const auto big = construct_lines_grouped(1024, 4, 2);
  CHECK(big.t() == 2048);
  CHECK(big.t() == grouped_closed_form(1024, 4, 2));
  CHECK(grouped_cluster_count(1024, 4, 2) == 2048);
  CHECK(verify_cluster_packing(big).passed());

  const auto small = construct_lines_grouped(64, 2, 2);
  CHECK(small.t() == grouped_closed_form(64, 2, 2));
  CHECK(small.t() == 32);
  CHECK(oracle_packing_ok(small));
  CHECK(verify_cluster_packing(small).passed());
  CHECK_THROWS_AS(construct_lines_grouped(64, 8, 2), ArgumentError);

  const std::vector<std::size_t> pick{5, 0, 17};
  const auto part = construct_lines_grouped(256, 2, 2, pick);
  const auto full = construct_lines_grouped(256, 2, 2);
  REQUIRE(part.t() == 3);
  CHECK(part.clusters[0] == full.clusters[5]);
  CHECK(part.clusters[1] == full.clusters[0]);
  CHECK(part.clusters[2] == full.clusters[17]);
  CHECK(verify_cluster_packing(part).passed());
}

TEST_CASE("random valid parameter tuples pass verification") {
  for (std::size_t k : {2, 3}) {
    for (std::size_t r : {1, 2, 3, 4}) {
      for (std::size_t n = 16; n <= 600; n += 4) {
        if ((r * k) * (r * k) > n || n % (k * r) != 0) continue;
        if (n / (2 * k * r) == 0 || n / (2 * k * k * r) == 0) continue;
        CAPTURE(n);
        const auto cpg = construct_lines_grouped(n, r, k);
        CHECK(cpg.t() == grouped_closed_form(n, r, k));
        CHECK(verify_cluster_packing(cpg).passed());
        CHECK(oracle_packing_ok(cpg));
      }
    }
  }
}

TEST_CASE("dense construction") {
  DenseParams params;
  params.k = 2;
  params.d = 7;
  params.p = 5;
  params.family = gen_intersection_family(7, 3, 1, 3, 0, FamilyMode::fano);
  const auto cpg = construct_dense(params);
  CHECK(cpg.num_vertices() == 156250);
  REQUIRE(cpg.t() == 3);
  for (const auto& cluster : cpg.clusters) CHECK(cluster.size() == 625);
  CHECK(cpg.graph.num_edges() == 1875);
  CHECK(cpg.layout == Layout::dense);
  CHECK(verify_cluster_packing(cpg).passed());
  CHECK(oracle_packing_ok(cpg));

  // Weight differences along each edge.
  for (std::size_t i = 0; i < cpg.t(); ++i) {
    const auto& set = params.family.sets[i];
    CHECK(dense_line_count(params, set) == cpg.clusters[i].size());
    for (const auto& clique : cpg.clusters[i]) {
      for (std::size_t a = 0; a < clique.size(); ++a) {
        for (std::size_t b = a + 1; b < clique.size(); ++b) {
          const auto u = dense_vertex(params, clique[a]);
          const auto v = dense_vertex(params, clique[b]);
          REQUIRE(u.layer < v.layer);
          CHECK(dense_weight(set, v.x) - dense_weight(set, u.x) ==
                2 * (v.layer - u.layer) * set.size());
        }
      }
    }
  }
}

TEST_CASE("dense single set: line starts and group colors") {
  DenseParams params;
  params.k = 2;
  params.d = 7;
  params.p = 5;
  params.family = gen_intersection_family(7, 3, 1, 1, 0, FamilyMode::fano);
  const auto& set = params.family.sets[0];
  const auto cpg = construct_dense(params);
  REQUIRE(cpg.t() == 1);
  for (const auto& clique : cpg.clusters[0]) {
    const auto start = dense_vertex(params, clique[0]);
    CHECK(start.layer == 0);
    for (auto i : set) CHECK(start.x[i] == 1);
    const auto end = dense_vertex(params, clique[1]);
    CHECK(end.layer == 1);
    CHECK(dense_group(set, end.x) == 3);
    CHECK(dense_group_color(3, 2) == 2);
  }
  CHECK(dense_group_color(1, 2) == 1);
  CHECK(dense_group_color(2, 2) == 0);
  CHECK(dense_group_color(5, 2) == 1);

  // Cluster size equals a direct enumeration of all valid starts.
  std::size_t expected = 0;
  std::vector<std::uint32_t> x(7, 1);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == x.size()) {
      bool ok = dense_group(set, x) % 4 == 1;
      for (auto s : set) ok = ok && x[s] + 4 <= 5;
      expected += ok;
      return;
    }
    for (std::uint32_t c = 1; c <= 5; ++c) {
      x[i] = c;
      walk(i + 1);
    }
  };
  walk(0);
  CHECK(cpg.clusters[0].size() == expected);

  const std::vector<std::uint32_t> y{1, 2, 3, 4, 5, 1, 2};
  CHECK(dense_vertex(params, dense_vertex_id(params, 1, y)).x == y);
}

TEST_CASE("dense k=3 instance") {
  DenseParams params;
  params.k = 3;
  params.d = 7;
  params.p = 7;
  params.family = gen_intersection_family(7, 3, 1, 3, 0, FamilyMode::fano);
  const auto cpg = construct_dense(params);
  CHECK(cpg.num_vertices() == 3 * 823543);
  REQUIRE(cpg.t() == 3);
  for (const auto& cluster : cpg.clusters) CHECK(cluster.size() == 2401);
  CHECK(verify_cluster_packing(cpg).passed());
}

TEST_CASE("dense parameter validation") {
  DenseParams params;
  params.k = 2;
  params.d = 7;
  params.p = 4;
  params.family = gen_intersection_family(7, 3, 1, 3, 0, FamilyMode::fano);
  CHECK_THROWS_AS(construct_dense(params), ArgumentError);
  params.p = 5;
  params.family.theta = 2;  // 2 * theta >= w
  CHECK_THROWS_AS(construct_dense(params), ArgumentError);
  params.family.theta = 1;
  params.d = 8;
  CHECK_THROWS_AS(construct_dense(params), ArgumentError);
  params.d = 7;
  params.p = 1000;
  CHECK_THROWS_AS(construct_dense(params), ResourceError);
}

TEST_CASE("lift") {
  CHECK(lift_permutation(3, 2, 1) == 2);
  CHECK(lift_permutation(3, 3, 3) == 2);
  for (std::size_t x = 1; x <= 4; ++x) CHECK(lift_permutation(4, 1, x) == x);

  const auto base = construct_lines_basic(108, 3);
  const auto lifted = lift_to_k_colorable(base);
  CHECK(lifted.num_vertices() == 3 * base.num_vertices());
  CHECK(lifted.r == base.r * 3);
  CHECK(lifted.t() == base.t());
  CHECK(lifted.layout == Layout::lifted);
  CHECK(verify_cluster_packing(lifted).passed());
  CHECK(oracle_packing_ok(lifted));
  const Coloring by_copy = canonical_coloring(lifted);
  CHECK(by_copy.num_colors() == 3);
  CHECK(is_proper_coloring(lifted.graph, by_copy));

  // r = 2, t = 3, k = 3 input.
  ClusterPackingGraph tiny = make_cluster_packing(
      18, 3, 2, Layout::unspecified,
      {{{0, 1, 2}, {3, 4, 5}}, {{6, 7, 8}, {9, 10, 11}}, {{12, 13, 14}, {15, 16, 17}}});
  const auto lt = lift_to_k_colorable(tiny);
  CHECK(lt.num_vertices() == 54);
  CHECK(lt.r == 6);
  CHECK(lt.t() == 3);
  CHECK(lt.k == 3);
  CHECK(verify_cluster_packing(lt).passed());

  // k = 1: a single copy.
  const auto single = make_cluster_packing(4, 1, 2, Layout::unspecified, {{{0}, {1}}, {{2}, {3}}});
  const auto ls = lift_to_k_colorable(single);
  CHECK(ls.num_vertices() == 4);
  CHECK(ls.clusters == single.clusters);
  CHECK(ls.graph == single.graph);
}

TEST_CASE("canonical coloring") {
  const auto cpg = construct_lines_basic(64, 2);
  const Coloring c = canonical_coloring(cpg);
  CHECK(c.num_colors() == 2);
  for (Vertex v = 0; v < 64; ++v) CHECK(c[v] == (v < 32 ? 0u : 1u));
  CHECK(oracle::proper(cpg.graph, std::vector<std::uint32_t>(c.colors().begin(), c.colors().end())));
  const auto raw = make_cluster_packing(4, 2, 1, Layout::unspecified, {{{0, 1}}});
  CHECK_THROWS_AS(canonical_coloring(raw), UnsupportedInputError);
}

TEST_CASE("verifier catches an injected edge") {
  const auto cpg = construct_lines_basic(64, 2);
  const auto& cluster = cpg.clusters[0];
  const Edge extra = make_edge(cluster[0][0], cluster[1][1]);
  REQUIRE_FALSE(cpg.graph.has_edge(extra.u, extra.v));
  std::vector<Edge> edges(cpg.graph.edges().begin(), cpg.graph.edges().end());
  edges.push_back(extra);
  const auto bad = with_graph(cpg, edges);
  const auto report = verify_cluster_packing(bad);
  CHECK_FALSE(report.passed());
  const auto& induced = check(report, "inducedness");
  CHECK_FALSE(induced.passed);
  const std::string text = "(" + std::to_string(extra.u) + ", " + std::to_string(extra.v) + ")";
  CHECK(induced.detail.find(text) != std::string::npos);
  CHECK_FALSE(check(report, "edge-partition").passed);
  CHECK_FALSE(oracle_packing_ok(bad));
}

TEST_CASE("verifier catches a clique reassigned between clusters") {
  const auto cpg = construct_lines_basic(64, 2);
  ClusterPackingGraph bad = cpg;
  bad.clusters[1][0] = cpg.clusters[0][0];
  const auto report = verify_cluster_packing(bad);
  CHECK_FALSE(check(report, "edge-partition").passed);
  CHECK(check(report, "cluster-shape").passed);
}

TEST_CASE("verifier report is identical under both execution policies") {
  const auto cpg = construct_lines_grouped(256, 2, 2);
  CHECK(verify_cluster_packing(cpg, Execution::serial).to_json() ==
        verify_cluster_packing(cpg, Execution::parallel).to_json());
  ClusterPackingGraph bad = cpg;
  bad.clusters[3][1] = cpg.clusters[2][0];
  bad.clusters[7][0] = cpg.clusters[5][1];
  CHECK(verify_cluster_packing(bad, Execution::serial).to_json() ==
        verify_cluster_packing(bad, Execution::parallel).to_json());
}

TEST_CASE("verifier checks pairwise intersections and shape") {
  // Two clusters with the same vertex span share 4 > r = 2 vertices.
  ClusterPackingGraph cpg;
  cpg.k = 2;
  cpg.r = 2;
  cpg.clusters = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}};
  cpg.graph = Graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  const auto report = verify_cluster_packing(cpg);
  CHECK_FALSE(check(report, "pairwise-intersection").passed);
  CHECK_FALSE(check(report, "inducedness").passed);

  ClusterPackingGraph shape;
  shape.k = 2;
  shape.r = 2;
  shape.clusters = {{{0, 1}}};
  shape.graph = Graph(2, {{0, 1}});
  CHECK_FALSE(check(verify_cluster_packing(shape), "cluster-shape").passed);
}

TEST_CASE("make_cluster_packing rejects colliding cliques") {
  CHECK_THROWS_AS(make_cluster_packing(4, 2, 1, Layout::unspecified, {{{0, 1}}, {{1, 0}}}),
                  ValidationError);
  CHECK_THROWS_AS(make_cluster_packing(4, 2, 1, Layout::unspecified, {{{0, 4}}}), ArgumentError);
}

TEST_CASE("CPG text format") {
  for (const auto& cpg : {construct_lines_basic(64, 2), lift_to_k_colorable(construct_lines_basic(64, 2)),
                          construct_lines_grouped(256, 2, 2)}) {
    const std::string text = cpg_to_string(cpg);
    const auto back = cpg_from_string(text);
    CHECK(back.graph == cpg.graph);
    CHECK(back.clusters == cpg.clusters);
    CHECK(back.layout == cpg.layout);
    CHECK(back.r == cpg.r);
    CHECK(back.k == cpg.k);
    CHECK(cpg_to_string(back) == text);
  }
  CHECK(cpg_to_string(construct_lines_basic(64, 2)).rfind("#cpg v1 n=64 k=2 r=2 t=32 layout=basic\n", 0) == 0);

  auto line_of = [](const std::string& text) -> long {
    try {
      cpg_from_string(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.line());
    }
    return -1;
  };
  CHECK(line_of("#cpg v1 n=4 k=2 r=1 t=2 layout=basic\nC 0 0 0 1\nC 1 0 1 0\n") == 0);
  CHECK(line_of("#cpg v1 n=4 k=2 r=1 t=1 layout=basic\nC 0 0 0 9\n") == 2);
  CHECK(line_of("#cpg v1 n=4 k=2 r=1 t=1 layout=basic\nC 0 0 0\n") == 2);
  CHECK(line_of("#cpg v1 n=4 k=2 r=1 t=1 layout=basic\nX 0 0 0 1\n") == 2);
  CHECK(line_of("#cpg v1 n=4 k=2 r=1 t=1 layout=basic\nC 0 0 0 1\n") == -1);
}
