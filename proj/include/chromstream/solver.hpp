#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chromstream/coloring.hpp"
#include "chromstream/graph.hpp"

namespace chromstream {

// Search-node budget for the exact solver. Zero means unlimited.
struct SolverLimits {
  std::uint64_t max_nodes = 0;
};

// Thrown when the exact search exhausts SolverLimits::max_nodes.
class SolverBudgetExceeded : public std::runtime_error {
 public:
  SolverBudgetExceeded() : std::runtime_error("exact coloring search exceeded its node budget") {}
};

// Proper k-coloring in canonical form, or nullopt if none exists.
// Works per connected component: k = 2 by BFS, k >= 3 by DSATUR-ordered
// backtracking where a vertex may open at most the next unused color.
std::optional<Coloring> find_k_coloring(const Graph& g, std::size_t k,
                                        SolverLimits limits = {});

// Optimal coloring, or nullopt when chi(g) > cap. Search runs k upward from
// the greedy clique bound; a DSATUR coloring supplies the upper bound.
std::optional<Coloring> minimum_coloring(const Graph& g, std::optional<std::size_t> cap = {},
                                         SolverLimits limits = {});

// Exact chi(g); nullopt means "exceeds cap". chi of the empty vertex set is 0.
std::optional<std::size_t> chromatic_number(const Graph& g,
                                            std::optional<std::size_t> cap = {},
                                            SolverLimits limits = {});

// Greedy (non-backtracking) DSATUR coloring; always proper.
Coloring dsatur_coloring(const Graph& g);

// Greedy clique grown along a degeneracy ordering. A lower bound only.
std::vector<Vertex> greedy_clique(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace chromstream
