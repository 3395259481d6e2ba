#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "chromstream/cluster_packing.hpp"
#include "chromstream/errors.hpp"

namespace chromstream {

namespace {

constexpr std::uint64_t kMaxVertices = std::numeric_limits<Vertex>::max();

void require(bool condition, const std::string& message) {
  if (!condition) throw ArgumentError(message);
}

ClusterPackingGraph build_lines(std::size_t n, std::size_t r, std::size_t k, Layout layout,
                                std::span<const std::size_t> selected) {
  const std::size_t layer_size = n / k;
  const std::size_t steps = n / (2 * k * k * r);
  const std::size_t total = grouped_cluster_count(n, r, k);
  std::vector<Cluster> clusters;
  clusters.reserve(selected.size());
  for (std::size_t c : selected) {
    require(c < total, "cluster index " + std::to_string(c) + " out of range");
    const std::size_t start = c / steps;
    const std::size_t step = c % steps + 1;
    Cluster cluster(r, Clique(k));
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t layer = 0; layer < k; ++layer) {
        const std::size_t group = start + layer * step;
        cluster[s][layer] = static_cast<Vertex>(layer * layer_size + group * r + s);
      }
    }
    clusters.push_back(std::move(cluster));
  }
  return make_cluster_packing(static_cast<Vertex>(n), k, r, layout, std::move(clusters));
}

void check_grouped(std::size_t n, std::size_t r, std::size_t k) {
  require(k >= 2, "clique size k must be at least 2");
  require(r >= 1, "cluster size r must be at least 1");
  require(n <= kMaxVertices, "n exceeds the vertex-id range");
  require((r * k) * (r * k) <= n, "need r*k <= sqrt(n)");
  require(n % (k * r) == 0, "k*r must divide n");
  require(n / (2 * k * r) >= 1, "floor(n/(2kr)) must be at least 1");
  require(n / (2 * k * k * r) >= 1, "floor(n/(2k^2 r)) must be at least 1");
}

std::vector<std::size_t> all_indices(std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (value > limit / base) throw ResourceError("dense layer size overflows the vertex-id range");
    value *= base;
  }
  return value;
}

bool contains(std::span<const std::uint32_t> set, std::uint32_t i) {
  return std::binary_search(set.begin(), set.end(), i);
}

// Visits every x in lexicographic order with x_i in [1, p - 2k] on S,
// [1, p] elsewhere, colored c_1 under S.
template <typename Visit>
void for_each_line_start(const DenseParams& params, std::span<const std::uint32_t> set,
                         Visit&& visit) {
  const std::size_t d = params.d;
  std::vector<std::uint32_t> upper(d);
  for (std::size_t i = 0; i < d; ++i) {
    upper[i] = static_cast<std::uint32_t>(contains(set, static_cast<std::uint32_t>(i))
                                              ? params.p - 2 * params.k
                                              : params.p);
  }
  std::vector<std::uint32_t> x(d, 1);
  while (true) {
    if (dense_group_color(dense_group(set, x), params.k) == 1) visit(std::as_const(x));
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (x[pos] < upper[pos]) {
        ++x[pos];
        break;
      }
      x[pos] = 1;
      if (pos == 0) return;
    }
    if (d == 0) return;
  }
}

}  // namespace

std::string layout_name(Layout layout) {
  switch (layout) {
    case Layout::basic: return "basic";
    case Layout::grouped: return "grouped";
    case Layout::dense: return "dense";
    case Layout::lifted: return "lifted";
    case Layout::unspecified: break;
  }
  return "unspecified";
}

Layout layout_from_name(const std::string& name) {
  if (name == "basic") return Layout::basic;
  if (name == "grouped") return Layout::grouped;
  if (name == "dense") return Layout::dense;
  if (name == "lifted") return Layout::lifted;
  if (name == "unspecified") return Layout::unspecified;
  throw ArgumentError("unknown layout '" + name + "'");
}

ClusterPackingGraph make_cluster_packing(Vertex n, std::size_t k, std::size_t r, Layout layout,
                                         std::vector<Cluster> clusters) {
  struct Owned {
    Edge edge;
    std::size_t cluster;
    std::size_t clique;
  };
  std::vector<Owned> owned;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (std::size_t j = 0; j < clusters[i].size(); ++j) {
      const Clique& c = clusters[i][j];
      for (std::size_t a = 0; a < c.size(); ++a) {
        require(c[a] < n, "clique vertex " + std::to_string(c[a]) + " outside [0, n)");
        for (std::size_t b = a + 1; b < c.size(); ++b) {
          require(c[a] != c[b], "clique repeats vertex " + std::to_string(c[a]));
          owned.push_back({make_edge(c[a], c[b]), i, j});
        }
      }
    }
  }
  std::sort(owned.begin(), owned.end(),
            [](const Owned& a, const Owned& b) { return a.edge < b.edge; });
  std::vector<Edge> edges;
  edges.reserve(owned.size());
  for (std::size_t e = 0; e < owned.size(); ++e) {
    if (e > 0 && owned[e].edge == owned[e - 1].edge) {
      const Owned& a = owned[e - 1];
      const Owned& b = owned[e];
      throw ValidationError("edge (" + std::to_string(a.edge.u) + ", " +
                            std::to_string(a.edge.v) + ") implied by clique " +
                            std::to_string(a.cluster) + "/" + std::to_string(a.clique) +
                            " and clique " + std::to_string(b.cluster) + "/" +
                            std::to_string(b.clique));
    }
    edges.push_back(owned[e].edge);
  }
  ClusterPackingGraph out;
  out.graph = Graph(n, std::move(edges));
  out.k = k;
  out.r = r;
  out.layout = layout;
  out.clusters = std::move(clusters);
  return out;
}

std::size_t grouped_cluster_count(std::size_t n, std::size_t r, std::size_t k) {
  return (n / (2 * k * r)) * (n / (2 * k * k * r));
}

ClusterPackingGraph construct_lines_basic(std::size_t n, std::size_t k) {
  require(k >= 2, "clique size k must be at least 2");
  require(n <= kMaxVertices, "n exceeds the vertex-id range");
  require(n % (k * k) == 0, "k^2 must divide n");
  require(n / (2 * k * k) >= 1, "floor(n/(2k^2)) must be at least 1");
  require(n / (2 * k * k * k) >= 1, "floor(n/(2k^3)) must be at least 1");
  return build_lines(n, k, k, Layout::basic, all_indices(grouped_cluster_count(n, k, k)));
}

ClusterPackingGraph construct_lines_grouped(std::size_t n, std::size_t r, std::size_t k) {
  check_grouped(n, r, k);
  return build_lines(n, r, k, Layout::grouped, all_indices(grouped_cluster_count(n, r, k)));
}

ClusterPackingGraph construct_lines_grouped(std::size_t n, std::size_t r, std::size_t k,
                                            std::span<const std::size_t> selected) {
  check_grouped(n, r, k);
  return build_lines(n, r, k, Layout::grouped, selected);
}

void validate_dense_params(const DenseParams& params) {
  const SetFamily& f = params.family;
  require(params.k >= 2, "clique size k must be at least 2");
  require(params.d >= 1, "dimension d must be at least 1");
  require(params.p >= 2 * params.k + 1, "need p >= 2k + 1");
  require(f.d == params.d, "family universe must equal d");
  require(f.w >= 1, "family set size w must be at least 1");
  require(2 * f.theta < f.w, "need theta < w / 2 for inducedness");
  require(!f.sets.empty(), "family must contain at least one set");
  const VerificationReport report = verify_family(f);
  for (const auto& check : report.checks) {
    require(check.passed, "invalid family: " + check.detail);
  }
  const std::uint64_t layer = checked_power(params.p, params.d, kMaxVertices);
  if (layer > kMaxVertices / params.k) {
    throw ResourceError("k * p^d overflows the vertex-id range");
  }
}

std::size_t dense_weight(std::span<const std::uint32_t> set, std::span<const std::uint32_t> x) {
  std::size_t w = 0;
  for (std::uint32_t i : set) w += x[i];
  return w;
}

std::size_t dense_group(std::span<const std::uint32_t> set, std::span<const std::uint32_t> x) {
  return dense_weight(set, x) / set.size();
}

std::size_t dense_group_color(std::size_t group, std::size_t k) {
  const std::size_t period = 2 * k;
  const std::size_t position = (group + period - 1) % period;
  return position % 2 == 0 ? position / 2 + 1 : 0;
}

Vertex dense_vertex_id(const DenseParams& params, std::size_t layer,
                       std::span<const std::uint32_t> x) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < params.d; ++i) index = index * params.p + (x[i] - 1);
  std::uint64_t layer_size = 1;
  for (std::size_t i = 0; i < params.d; ++i) layer_size *= params.p;
  return static_cast<Vertex>(layer * layer_size + index);
}

DenseVertex dense_vertex(const DenseParams& params, Vertex id) {
  std::uint64_t layer_size = 1;
  for (std::size_t i = 0; i < params.d; ++i) layer_size *= params.p;
  DenseVertex out;
  out.layer = id / layer_size;
  std::uint64_t index = id % layer_size;
  out.x.assign(params.d, 1);
  for (std::size_t i = params.d; i > 0; --i) {
    out.x[i - 1] = static_cast<std::uint32_t>(index % params.p + 1);
    index /= params.p;
  }
  return out;
}

std::size_t dense_line_count(const DenseParams& params, std::span<const std::uint32_t> set) {
  std::size_t count = 0;
  for_each_line_start(params, set, [&](const std::vector<std::uint32_t>&) { ++count; });
  return count;
}

ClusterPackingGraph construct_dense(const DenseParams& params) {
  validate_dense_params(params);
  std::uint64_t layer_size = 1;
  for (std::size_t i = 0; i < params.d; ++i) layer_size *= params.p;
  const auto n = static_cast<Vertex>(params.k * layer_size);

  std::vector<Cluster> clusters;
  std::size_t r = 0;
  for (const auto& set : params.family.sets) {
    Cluster cluster;
    for_each_line_start(params, set, [&](const std::vector<std::uint32_t>& x) {
      Clique clique(params.k);
      std::vector<std::uint32_t> y = x;
      for (std::size_t layer = 0; layer < params.k; ++layer) {
        clique[layer] = dense_vertex_id(params, layer, y);
        for (std::uint32_t i : set) y[i] += 2;
      }
      cluster.push_back(std::move(clique));
    });
    r = std::max(r, cluster.size());
    clusters.push_back(std::move(cluster));
  }
  return make_cluster_packing(n, params.k, r, Layout::dense, std::move(clusters));
}

std::size_t lift_permutation(std::size_t k, std::size_t i, std::size_t x) {
  require(k >= 1 && i >= 1 && i <= k && x >= 1 && x <= k, "tau arguments out of range");
  return (x + i - 2) % k + 1;
}

ClusterPackingGraph lift_to_k_colorable(const ClusterPackingGraph& cpg) {
  const std::size_t k = cpg.k;
  const std::uint64_t n = cpg.num_vertices();
  require(k >= 1, "clique size must be at least 1");
  if (n * k > kMaxVertices) throw ResourceError("lifted graph overflows the vertex-id range");

  std::vector<Cluster> clusters;
  clusters.reserve(cpg.t());
  for (std::size_t i = 0; i < cpg.t(); ++i) {
    Cluster lifted;
    lifted.reserve(cpg.clusters[i].size() * k);
    for (const Clique& clique : cpg.clusters[i]) {
      require(clique.size() == k, "every clique must have exactly k vertices");
      for (std::size_t l = 1; l <= k; ++l) {
        Clique out(k);
        for (std::size_t a = 1; a <= k; ++a) {
          out[a - 1] = static_cast<Vertex>((a - 1) * n + clique[lift_permutation(k, l, a) - 1]);
        }
        lifted.push_back(std::move(out));
      }
    }
    clusters.push_back(std::move(lifted));
  }
  return make_cluster_packing(static_cast<Vertex>(n * k), k, cpg.r * k, Layout::lifted,
                              std::move(clusters));
}

Coloring canonical_coloring(const ClusterPackingGraph& cpg) {
  if (cpg.layout == Layout::unspecified) {
    throw UnsupportedInputError("no layer metadata: layout is unspecified");
  }
  const Vertex n = cpg.num_vertices();
  if (cpg.k == 0 || n % cpg.k != 0) {
    throw UnsupportedInputError("vertex count is not a multiple of k");
  }
  const Vertex part = n / static_cast<Vertex>(cpg.k);
  std::vector<Color> raw(n);
  for (Vertex v = 0; v < n; ++v) raw[v] = v / part;
  return Coloring(raw);
}

}  // namespace chromstream
