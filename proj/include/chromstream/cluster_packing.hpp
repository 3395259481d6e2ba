#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromstream/coloring.hpp"
#include "chromstream/graph.hpp"
#include "chromstream/parallel.hpp"
#include "chromstream/report.hpp"

namespace chromstream {

// ---------------------------------------------------------------------------
// Set families with bounded pairwise intersections.

struct SetFamily {
  std::size_t d = 0;      // universe [0, d)
  std::size_t w = 0;      // every set has exactly w elements
  std::size_t theta = 0;  // pairwise intersection bound
  std::vector<std::vector<std::uint32_t>> sets;  // each sorted ascending
};

enum class FamilyMode { random, fano };

// Rejection sampling: each candidate is a uniform w-subset of [0, d), kept
// only if it meets every accepted set in at most theta elements. Fano mode
// returns the first `count` lines of the Fano plane (d = 7, w = 3) and
// ignores the seed. Throws ArgumentError on bad parameters and
// GenerationError (naming the last violated pair) when the retry budget runs
// out.
SetFamily gen_intersection_family(std::size_t d, std::size_t w, std::size_t theta,
                                  std::size_t count, std::uint64_t seed,
                                  FamilyMode mode = FamilyMode::random);

// Re-checks sizes, ranges and all pairwise intersections.
VerificationReport verify_family(const SetFamily& family);

// {"d", "w", "theta", "sets"}. family_from_json throws ParseError on a
// malformed document and does not run verify_family.
nlohmann::json family_to_json(const SetFamily& family);
SetFamily family_from_json(const nlohmann::json& doc);

// ---------------------------------------------------------------------------
// Cluster packing graphs.

enum class Layout { unspecified, basic, grouped, dense, lifted };

std::string layout_name(Layout layout);
Layout layout_from_name(const std::string& name);

using Clique = std::vector<Vertex>;
using Cluster = std::vector<Clique>;

// Graph whose edges split into t induced clusters, each made of r
// vertex-disjoint k-cliques. Clique vertex order is meaningful: for the
// layered layouts, position l lies in layer l.
struct ClusterPackingGraph {
  Graph graph;
  std::size_t k = 0;
  std::size_t r = 0;
  Layout layout = Layout::unspecified;
  std::vector<Cluster> clusters;

  std::size_t t() const { return clusters.size(); }
  Vertex num_vertices() const { return graph.num_vertices(); }
};

// Builds the graph implied by the cliques. Throws ValidationError when two
// cliques imply the same edge and ArgumentError on out-of-range vertices.
ClusterPackingGraph make_cluster_packing(Vertex n, std::size_t k, std::size_t r,
                                         Layout layout, std::vector<Cluster> clusters);

// Geometric lines with groups of size k: n vertices in k layers of n/k,
// t = floor(n/(2k^2)) * floor(n/(2k^3)) clusters of k cliques each.
// Vertex id = layer * (n/k) + group * k + position.
ClusterPackingGraph construct_lines_basic(std::size_t n, std::size_t k);

// Same construction with groups of size r:
// t = floor(n/(2kr)) * floor(n/(2k^2 r)). Requires r*k <= sqrt(n) and k*r | n.
ClusterPackingGraph construct_lines_grouped(std::size_t n, std::size_t r, std::size_t k);

// Only the listed clusters, in the given order (cluster c corresponds to
// start group c / P and step c % P + 1, with P = floor(n/(2k^2 r))).
ClusterPackingGraph construct_lines_grouped(std::size_t n, std::size_t r, std::size_t k,
                                            std::span<const std::size_t> selected);

std::size_t grouped_cluster_count(std::size_t n, std::size_t r, std::size_t k);

struct DenseParams {
  std::size_t k = 2;
  std::size_t d = 0;
  std::size_t p = 0;
  SetFamily family;
};

// Throws ArgumentError unless family.w >= 1, 2*theta < w, p >= 2k+1 and the
// family lives in [0, d); ResourceError if k * p^d does not fit a vertex id.
void validate_dense_params(const DenseParams& params);

// Layers [p]^d (coordinates 1..p). For each set S and each x in layer 1
// colored c_1 under S with x_i + 2k <= p on S, the line
// x, x + 2*1_S, ..., x + 2(k-1)*1_S becomes a k-clique of cluster H_S.
// Vertex id = layer * p^d + sum_i (x_i - 1) * p^(d-1-i).
ClusterPackingGraph construct_dense(const DenseParams& params);

// Coordinates of a dense-layout vertex; x values are 1-based.
struct DenseVertex {
  std::size_t layer = 0;
  std::vector<std::uint32_t> x;
};
DenseVertex dense_vertex(const DenseParams& params, Vertex id);
Vertex dense_vertex_id(const DenseParams& params, std::size_t layer,
                       std::span<const std::uint32_t> x);

// w_S(x) = sum of x_i over i in S.
std::size_t dense_weight(std::span<const std::uint32_t> set, std::span<const std::uint32_t> x);

// Group index floor(w_S(x) / |S|).
std::size_t dense_group(std::span<const std::uint32_t> set, std::span<const std::uint32_t> x);

// Color of a group under the cyclic tuple (c_1, white, c_2, white, ...,
// c_k, white); returns 1..k for c_i and 0 for white. Groups past p-1 keep
// cycling.
std::size_t dense_group_color(std::size_t group, std::size_t k);

// Exact number of lines in the cluster of each set.
std::size_t dense_line_count(const DenseParams& params, std::span<const std::uint32_t> set);

// k copies of the vertex set; clique (i, j, l) takes vertex tau_l(a) of
// clique (i, j) from copy a. Output: n*k vertices, r*k cliques per cluster,
// same t, and each copy is an independent set.
ClusterPackingGraph lift_to_k_colorable(const ClusterPackingGraph& cpg);

// tau_i(x) = ((x + i - 2) mod k) + 1 with 1-based i, x in [1, k].
std::size_t lift_permutation(std::size_t k, std::size_t i, std::size_t x);

// Layer (or copy) coloring v -> v / (n/k). Throws UnsupportedInputError for
// Layout::unspecified.
Coloring canonical_coloring(const ClusterPackingGraph& cpg);

// Check names: "edge-partition", "cluster-shape", "inducedness",
// "pairwise-intersection", "k-colorable". The report is identical under both
// execution policies.
VerificationReport verify_cluster_packing(const ClusterPackingGraph& cpg,
                                          Execution exec = Execution::parallel);

// Text format:
//   #cpg v1 n=<N> k=<K> r=<R> t=<T> layout=<basic|grouped|dense|lifted>
//   C <cluster_index> <clique_index> v_1 ... v_k
void write_cpg(std::ostream& out, const ClusterPackingGraph& cpg);
std::string cpg_to_string(const ClusterPackingGraph& cpg);
ClusterPackingGraph read_cpg(std::istream& in);
ClusterPackingGraph cpg_from_string(const std::string& text);

}  // namespace chromstream
