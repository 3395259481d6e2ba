#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chromstream/cluster_packing.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/solver.hpp"

namespace chromstream {

namespace {

constexpr std::uint64_t kColorabilityNodeBudget = 2'000'000;

std::string edge_text(Edge e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

std::string clique_text(std::size_t cluster, std::size_t clique) {
  return "clique " + std::to_string(cluster) + "/" + std::to_string(clique);
}

// First failure by cluster index, independent of the execution policy.
template <typename Check>
std::string first_failure(Execution exec, std::size_t count, Check&& check) {
  std::vector<std::optional<std::string>> found(count);
  for_each_index(exec, count, [&](std::size_t i) { found[i] = check(i); });
  for (auto& f : found) {
    if (f) return *f;
  }
  return {};
}

std::string out_of_range_vertex(const ClusterPackingGraph& cpg) {
  const Vertex n = cpg.num_vertices();
  for (std::size_t i = 0; i < cpg.t(); ++i) {
    for (std::size_t j = 0; j < cpg.clusters[i].size(); ++j) {
      for (Vertex v : cpg.clusters[i][j]) {
        if (v >= n) {
          return clique_text(i, j) + " has vertex " + std::to_string(v) + " >= n";
        }
      }
    }
  }
  return {};
}

std::string check_partition(const ClusterPackingGraph& cpg) {
  struct Owned {
    Edge edge;
    std::size_t cluster;
    std::size_t clique;
  };
  std::vector<Owned> owned;
  for (std::size_t i = 0; i < cpg.t(); ++i) {
    for (std::size_t j = 0; j < cpg.clusters[i].size(); ++j) {
      const Clique& c = cpg.clusters[i][j];
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
          if (c[a] == c[b]) return clique_text(i, j) + " repeats vertex " + std::to_string(c[a]);
          owned.push_back({make_edge(c[a], c[b]), i, j});
        }
      }
    }
  }
  std::sort(owned.begin(), owned.end(), [](const Owned& a, const Owned& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    if (a.cluster != b.cluster) return a.cluster < b.cluster;
    return a.clique < b.clique;
  });
  const auto edges = cpg.graph.edges();
  std::size_t g = 0;
  for (std::size_t e = 0; e < owned.size(); ++e) {
    const Owned& cur = owned[e];
    if (e > 0 && owned[e - 1].edge == cur.edge) {
      return "edge " + edge_text(cur.edge) + " lies in " +
             clique_text(owned[e - 1].cluster, owned[e - 1].clique) + " and " +
             clique_text(cur.cluster, cur.clique);
    }
    if (g < edges.size() && edges[g] < cur.edge) {
      return "graph edge " + edge_text(edges[g]) + " is covered by no clique";
    }
    if (g == edges.size() || edges[g] != cur.edge) {
      return "edge " + edge_text(cur.edge) + " of " + clique_text(cur.cluster, cur.clique) +
             " is missing from the graph";
    }
    ++g;
  }
  if (g < edges.size()) {
    return "graph edge " + edge_text(edges[g]) + " is covered by no clique";
  }
  return {};
}

std::optional<std::string> check_shape(const ClusterPackingGraph& cpg, std::size_t i) {
  const Cluster& cluster = cpg.clusters[i];
  if (cluster.size() != cpg.r) {
    return "cluster " + std::to_string(i) + " has " + std::to_string(cluster.size()) +
           " cliques, expected " + std::to_string(cpg.r);
  }
  std::vector<std::pair<Vertex, std::size_t>> seen;
  for (std::size_t j = 0; j < cluster.size(); ++j) {
    if (cluster[j].size() != cpg.k) {
      return clique_text(i, j) + " has " + std::to_string(cluster[j].size()) +
             " vertices, expected " + std::to_string(cpg.k);
    }
    for (Vertex v : cluster[j]) seen.emplace_back(v, j);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t a = 1; a < seen.size(); ++a) {
    if (seen[a].first == seen[a - 1].first) {
      return "vertex " + std::to_string(seen[a].first) + " lies in " +
             clique_text(i, seen[a - 1].second) + " and " + clique_text(i, seen[a].second);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_induced(const ClusterPackingGraph& cpg, std::size_t i) {
  std::vector<std::pair<Vertex, std::size_t>> owner;
  for (std::size_t j = 0; j < cpg.clusters[i].size(); ++j) {
    for (Vertex v : cpg.clusters[i][j]) owner.emplace_back(v, j);
  }
  std::sort(owner.begin(), owner.end());
  auto lookup = [&](Vertex v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(owner.begin(), owner.end(), std::pair<Vertex, std::size_t>{v, 0});
    if (it == owner.end() || it->first != v) return std::nullopt;
    return it->second;
  };
  std::optional<Edge> worst;
  for (const auto& [v, j] : owner) {
    for (Vertex w : cpg.graph.neighbors(v)) {
      if (w <= v) continue;
      const auto other = lookup(w);
      if (other && *other != j) {
        const Edge e{v, w};
        if (!worst || e < *worst) worst = e;
      }
    }
  }
  if (worst) {
    return "graph edge " + edge_text(*worst) + " joins two cliques of cluster " +
           std::to_string(i);
  }
  return std::nullopt;
}

// incidence[v] lists the clusters whose span contains v, ascending.
std::optional<std::string> check_intersections(const std::vector<std::vector<Vertex>>& spans,
                                               const std::vector<std::vector<std::uint32_t>>& incidence,
                                               std::size_t r, std::size_t i) {
  std::vector<std::uint32_t> later;
  for (Vertex v : spans[i]) {
    const auto& owners = incidence[v];
    later.insert(later.end(), std::upper_bound(owners.begin(), owners.end(), i), owners.end());
  }
  std::sort(later.begin(), later.end());
  for (std::size_t a = 0; a < later.size();) {
    std::size_t b = a;
    while (b < later.size() && later[b] == later[a]) ++b;
    if (b - a > r) {
      return "clusters " + std::to_string(i) + " and " + std::to_string(later[a]) + " share " +
             std::to_string(b - a) + " vertices, more than r = " + std::to_string(r);
    }
    a = b;
  }
  return std::nullopt;
}

std::string check_colorable(const ClusterPackingGraph& cpg) {
  if (cpg.layout != Layout::unspecified) {
    try {
      const Coloring c = canonical_coloring(cpg);
      const auto mono = find_monochromatic_edge(cpg.graph, c);
      if (mono.found) {
        return "canonical coloring leaves edge " + edge_text(mono.edge) + " monochromatic";
      }
      if (c.num_colors() > cpg.k) return "canonical coloring uses more than k colors";
      return {};
    } catch (const UnsupportedInputError&) {
      // fall through to the exact solver
    }
  }
  try {
    if (find_k_coloring(cpg.graph, cpg.k, SolverLimits{kColorabilityNodeBudget})) return {};
    return "graph has no proper " + std::to_string(cpg.k) + "-coloring";
  } catch (const SolverBudgetExceeded&) {
    return "undetermined: exact search exceeded its node budget";
  }
}

}  // namespace

VerificationReport verify_cluster_packing(const ClusterPackingGraph& cpg, Execution exec) {
  VerificationReport report;
  const std::string range = out_of_range_vertex(cpg);
  if (!range.empty()) {
    for (const char* name :
         {"edge-partition", "cluster-shape", "inducedness", "pairwise-intersection", "k-colorable"}) {
      report.add(name, false, range);
    }
    return report;
  }

  const std::string partition = check_partition(cpg);
  report.add("edge-partition", partition.empty(), partition);

  const std::string shape =
      first_failure(exec, cpg.t(), [&](std::size_t i) { return check_shape(cpg, i); });
  report.add("cluster-shape", shape.empty(), shape);

  const std::string induced =
      first_failure(exec, cpg.t(), [&](std::size_t i) { return check_induced(cpg, i); });
  report.add("inducedness", induced.empty(), induced);

  std::vector<std::vector<Vertex>> spans(cpg.t());
  for_each_index(exec, cpg.t(), [&](std::size_t i) {
    for (const Clique& c : cpg.clusters[i]) spans[i].insert(spans[i].end(), c.begin(), c.end());
    std::sort(spans[i].begin(), spans[i].end());
    spans[i].erase(std::unique(spans[i].begin(), spans[i].end()), spans[i].end());
  });
  std::vector<std::vector<std::uint32_t>> incidence(cpg.num_vertices());
  for (std::size_t i = 0; i < cpg.t(); ++i) {
    for (Vertex v : spans[i]) incidence[v].push_back(static_cast<std::uint32_t>(i));
  }
  const std::string overlap = first_failure(exec, cpg.t(), [&](std::size_t i) {
    return check_intersections(spans, incidence, cpg.r, i);
  });
  report.add("pairwise-intersection", overlap.empty(), overlap);

  const std::string colorable = check_colorable(cpg);
  report.add("k-colorable", colorable.empty(), colorable);
  return report;
}

}  // namespace chromstream
