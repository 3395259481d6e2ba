#include "chromstream/graph.hpp"

#include <algorithm>
#include <string>

#include "chromstream/errors.hpp"

namespace chromstream {

namespace {

std::string pair_text(Edge e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
    if (e.v >= n_) {
      throw ArgumentError("edge " + pair_text(e) + " has an endpoint >= n = " +
                          std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw ArgumentError("duplicate edge " + pair_text(*dup));

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Sorted edge order leaves every adjacency list sorted.
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

void DynamicMultigraph::apply(Vertex a, Vertex b, int delta) {
  if (a == b) throw ArgumentError("self-loop at vertex " + std::to_string(a));
  if (a >= n_ || b >= n_) {
    throw ArgumentError("endpoint out of range for n = " + std::to_string(n_));
  }
  if (delta != 1 && delta != -1) throw ArgumentError("delta must be +1 or -1");
  const Edge e = make_edge(a, b);
  auto it = counts_.find(e);
  const std::int64_t current = it == counts_.end() ? 0 : it->second;
  if (current + delta < 0) {
    throw ValidationError("pair " + pair_text(e) + " deleted more often than inserted");
  }
  if (it == counts_.end()) {
    counts_.emplace(e, delta);
  } else {
    it->second += delta;
  }
}

std::int64_t DynamicMultigraph::multiplicity(Vertex a, Vertex b) const {
  auto it = counts_.find(make_edge(a, b));
  return it == counts_.end() ? 0 : it->second;
}

Graph finalize_multigraph(const DynamicMultigraph& m) {
  std::vector<Edge> edges;
  for (const auto& [e, count] : m.counts()) {
    if (count > 0) edges.push_back(e);
  }
  return Graph(m.num_vertices(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph out;
  out.local.assign(g.num_vertices(), kNoVertex);
  for (Vertex v : s) {
    if (v >= g.num_vertices()) {
      throw ArgumentError("vertex " + std::to_string(v) + " outside the graph");
    }
    out.local[v] = 0;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (out.local[v] != kNoVertex) {
      out.local[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex v : out.original) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && out.local[w] != kNoVertex) edges.push_back({out.local[v], out.local[w]});
    }
  }
  out.graph = Graph(static_cast<Vertex>(out.original.size()), std::move(edges));
  return out;
}

MissingPair find_missing_clique_pair(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= g.num_vertices()) {
      throw ArgumentError("vertex " + std::to_string(v) + " outside the graph");
    }
  }
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!g.has_edge(sorted[i], sorted[j])) return {true, {sorted[i], sorted[j]}};
    }
  }
  return {};
}

bool verify_clique(const Graph& g, std::span<const Vertex> s) {
  return !find_missing_clique_pair(g, s).found;
}

Graph graph_from_edge_union(Vertex n, std::vector<Edge> edges) {
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

}  // namespace chromstream
