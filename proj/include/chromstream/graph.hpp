#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace chromstream {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes the orientation; does not reject self-loops.
constexpr Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on [0, n). Edges are kept sorted and an adjacency
// index (CSR) is built on construction; instances are immutable afterwards.
// Isolated vertices cost one offset entry each.
class Graph {
 public:
  Graph() = default;

  // Throws ArgumentError on a self-loop, a duplicate pair, or an endpoint
  // outside [0, n). Edge orientation is normalized.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

// Undirected multigraph with per-pair multiplicities, fed by +1/-1 updates.
// Single writer.
class DynamicMultigraph {
 public:
  explicit DynamicMultigraph(Vertex n = 0) : n_(n) {}

  Vertex num_vertices() const { return n_; }

  // Throws ArgumentError for a self-loop or out-of-range endpoint, and
  // ValidationError if the update would make the multiplicity negative (the
  // graph is left unchanged in that case).
  void apply(Vertex a, Vertex b, int delta);

  std::int64_t multiplicity(Vertex a, Vertex b) const;
  const std::map<Edge, std::int64_t>& counts() const { return counts_; }

 private:
  Vertex n_;
  std::map<Edge, std::int64_t> counts_;
};

// Simple graph with every pair of positive multiplicity, once.
Graph finalize_multigraph(const DynamicMultigraph& m);

// Graph on |s| vertices with new ids assigned in ascending order of the
// original ids. `original[new_id]` gives the old id; `local[old_id]` gives
// the new id or kNoVertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
  std::vector<Vertex> local;
};

// Duplicates in `s` are ignored; an id >= g.num_vertices() throws ArgumentError.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// True iff every pair of distinct vertices in `s` is adjacent.
bool verify_clique(const Graph& g, std::span<const Vertex> s);

// First non-adjacent pair of `s` in lexicographic order, if any.
struct MissingPair {
  bool found = false;
  Edge pair;
};
MissingPair find_missing_clique_pair(const Graph& g, std::span<const Vertex> s);

// Builds a graph from edges that may repeat; duplicates are merged.
Graph graph_from_edge_union(Vertex n, std::vector<Edge> edges);

}  // namespace chromstream
