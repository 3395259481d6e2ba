#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromstream/cluster_packing.hpp"
#include "chromstream/coloring.hpp"
#include "chromstream/graph.hpp"
#include "chromstream/report.hpp"

namespace chromstream {

using EdgeList = std::vector<Edge>;

// Appends the complete biclique between two disjoint vertex sets.
void join_cliques(EdgeList& out, std::span<const Vertex> a, std::span<const Vertex> b);

// ---------------------------------------------------------------------------
// Two players on a line packing with r = k.

struct TwoPlayerInstance {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::optional<bool> ans_override;

  ClusterPackingGraph cpg;
  std::vector<std::uint8_t> x;  // one bit per cluster
  std::size_t i_star = 0;
  EdgeList e1;                  // cliques of clusters with x_i = 1
  EdgeList e2;                  // cross-clique pairs of cluster i_star
  bool ans = false;
  std::vector<Vertex> spec;     // vertices of cluster i_star, ascending

  Graph union_graph() const;
};

// i_star uniform, then x uniform; an override replaces x[i_star].
TwoPlayerInstance gen_two_player(std::size_t n, std::size_t k, std::uint64_t seed,
                                 std::optional<bool> ans_override = {});

// Colors by palette position: spec vertices get their clique index in [0, k),
// every other vertex gets k + layer. Throws PreconditionError when ans = 1.
std::vector<Color> witness_palette_two_player(const TwoPlayerInstance& inst);
Coloring witness_coloring_two_player(const TwoPlayerInstance& inst);

// ---------------------------------------------------------------------------
// Recursive p-player distribution.

// One entry per level a = 3..p, listed bottom-up.
struct LevelPlan {
  std::size_t n = 0;                      // 0 picks the smallest valid n = (k * r_a)^2
  std::optional<std::size_t> t_override;  // clusters to materialize
};

struct RecursivePlan {
  std::size_t base_n = 64;                // n_2, vertices of the two-player base
  std::vector<LevelPlan> levels;
};

// Materializing every cluster of a level with r_a = 256 would take hundreds
// of megabytes; generators keep this many unless told otherwise.
inline constexpr std::size_t kDefaultMaterializedClusters = 16;

// Per-level data of a p-player instance with p >= 3.
struct RecursiveLevel {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t_full = 0;                     // clusters in the full construction
  std::vector<std::size_t> cluster_ids;       // materialized clusters, ascending
  ClusterPackingGraph cpg;                    // only the materialized clusters
  std::size_t i_star = 0;                     // index into cpg.clusters
  std::vector<std::vector<std::uint32_t>> sets;  // S_i, ascending clique indices
  std::vector<std::uint32_t> T;               // ascending
  std::vector<std::uint32_t> intersection;    // S_{i*} and T, ascending
  std::vector<std::vector<std::uint8_t>> x;   // t x r bit matrix
  std::vector<std::uint32_t> sigma;           // child vertex -> clique index in T
};

struct RecursiveInstance {
  std::size_t p = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::optional<bool> ans_override;
  RecursivePlan plan;

  Vertex n = 0;
  bool ans = false;
  std::vector<EdgeList> players;  // p lists
  std::vector<Vertex> spec;       // k^p vertices, ascending

  std::optional<TwoPlayerInstance> base;         // p == 2
  std::optional<RecursiveLevel> level;           // p >= 3
  std::shared_ptr<const RecursiveInstance> child;  // p >= 3

  Graph union_graph() const;
};

// Resolved (n_a, r_a) for a = 2..p; r_2 = k. Throws ArgumentError naming the
// violated constraint.
struct LevelShape {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t_full = 0;
  std::size_t t = 0;
};
std::vector<LevelShape> resolve_plan(std::size_t p, std::size_t k, const RecursivePlan& plan);

RecursiveInstance gen_recursive(std::size_t p, std::size_t k, const RecursivePlan& plan,
                                std::uint64_t seed, std::optional<bool> ans_override = {});

// Raw palette: the child's colors in [0, k(p-1)) on the T-cliques, and
// k(p-1) + layer elsewhere. Throws PreconditionError when ans = 1.
std::vector<Color> witness_palette_recursive(const RecursiveInstance& inst);
Coloring witness_coloring_recursive(const RecursiveInstance& inst);

// ---------------------------------------------------------------------------
// Simultaneous k(k-1)/2-player distribution over a multigraph.

struct SimultaneousInstance {
  std::size_t k = 0;
  std::size_t n_base = 0;
  std::uint64_t seed = 0;
  std::optional<bool> theta_override;

  std::size_t p = 0;
  Vertex n = 0;
  std::size_t t = 0;
  bool theta = false;
  std::size_t j_star = 0;
  std::vector<std::vector<std::uint8_t>> x;  // p x t
  std::vector<Vertex> sigma;                 // position -> vertex id
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> local;  // per player
  std::vector<EdgeList> players;             // relabelled edges per player
  DynamicMultigraph multigraph;
  std::vector<Vertex> v_bipartite;           // ascending
  std::vector<Vertex> v_clique;              // ascending

  Graph final_graph() const { return finalize_multigraph(multigraph); }
};

SimultaneousInstance gen_simultaneous(std::size_t k, std::size_t n_base, std::uint64_t seed,
                                      std::optional<bool> theta_override = {});

// 0 on the left copy, 1 on the right copy, 2 on the clique positions.
// Throws PreconditionError when theta = 1.
Coloring witness_coloring_simultaneous(const SimultaneousInstance& inst);

// ---------------------------------------------------------------------------
// Verification and serialization.

VerificationReport verify_instance(const TwoPlayerInstance& inst);
VerificationReport verify_instance(const RecursiveInstance& inst);
VerificationReport verify_instance(const SimultaneousInstance& inst);

// {"variant", "params", "seed", "ans"|"theta", "spec"|"v_clique", "players", "aux"}
nlohmann::json instance_to_json(const TwoPlayerInstance& inst);
nlohmann::json instance_to_json(const RecursiveInstance& inst);
nlohmann::json instance_to_json(const SimultaneousInstance& inst);

// Regenerates the instance named by the file's variant, params and seed,
// checks the stored edge lists against it and appends the variant's checks.
// Throws ParseError on malformed JSON fields.
VerificationReport verify_instance_json(const nlohmann::json& doc);

}  // namespace chromstream
