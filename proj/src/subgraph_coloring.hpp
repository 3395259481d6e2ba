#pragma once

#include <optional>

#include "chromstream/algorithms.hpp"

namespace chromstream::detail {

struct SubgraphColoring {
  std::optional<Coloring> coloring;  // nullopt: more than `cap` colors needed
  bool greedy = false;
};

// Colors a stored subgraph under the options' mode. With a cap, nullopt is
// only returned on an exact answer.
SubgraphColoring color_subgraph(const Graph& h, std::optional<std::size_t> cap,
                                const SamplingOptions& options);

}  // namespace chromstream::detail
