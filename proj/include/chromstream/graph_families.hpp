#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromstream/graph.hpp"

namespace chromstream {

// Uniform graph with exactly m edges. ArgumentError if m > n(n-1)/2.
Graph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed);

// Each vertex joins side 0 or 1 by a fair coin; each cross pair becomes an
// edge with probability `density`.
Graph random_bipartite(std::size_t n, double density, std::uint64_t seed);

// K_m on m uniformly chosen vertices, plus a random bipartite graph of the
// given density on the remaining n - m vertices. No edges between the two.
struct PlantedClique {
  Graph graph;
  std::vector<Vertex> clique;  // ascending
};
PlantedClique planted_clique(std::size_t n, std::size_t m, double background_density,
                             std::uint64_t seed);

// A family member by name, for the experiment runners and the CLI.
struct GraphSpec {
  enum class Kind { empty, gnm, bipartite, planted };
  Kind kind = Kind::empty;
  std::size_t n = 0;
  std::size_t m = 0;       // edges for gnm, clique size for planted
  double density = 0.5;    // bipartite and planted background

  static GraphSpec empty(std::size_t n) { return {Kind::empty, n, 0, 0.0}; }
  static GraphSpec gnm(std::size_t n, std::size_t m) { return {Kind::gnm, n, m, 0.0}; }
  static GraphSpec bipartite(std::size_t n, double density) {
    return {Kind::bipartite, n, 0, density};
  }
  static GraphSpec planted(std::size_t n, std::size_t m, double density) {
    return {Kind::planted, n, m, density};
  }
};

Graph make_graph(const GraphSpec& spec, std::uint64_t seed);

// Chromatic number implied by the family when it does not depend on the
// draw: n > 0 ? 1 : 0 for empty, m for planted with m >= 2. nullopt otherwise.
std::optional<std::size_t> known_chromatic_number(const GraphSpec& spec);

std::string graph_spec_name(const GraphSpec& spec);

// "gnm:n=300,m=20000", "bipartite:n=200,density=0.5",
// "planted:n=200,m=30,density=0.5", "empty:n=10".
GraphSpec parse_graph_spec(const std::string& text);

}  // namespace chromstream
