#include <cmath>

#include "chromstream/algorithms.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/rng.hpp"
#include "subgraph_coloring.hpp"

namespace chromstream {

std::size_t sampling_budget(std::size_t n, std::size_t t, double multiplier) {
  if (t == 0) throw ArgumentError("t must be positive");
  if (!(multiplier > 0.0)) throw ArgumentError("budget multiplier must be positive");
  if (n < 2) return 1;
  const double nd = static_cast<double>(n);
  const double value =
      std::ceil(std::pow(nd, 1.0 + 1.0 / static_cast<double>(t)) * std::log(nd) * multiplier);
  return value < 1.0 ? 1 : static_cast<std::size_t>(value);
}

std::string verdict_name(VerdictLabel label) {
  return label == VerdictLabel::small ? "small" : "large";
}

namespace detail {

SubgraphColoring color_subgraph(const Graph& h, std::optional<std::size_t> cap,
                                const SamplingOptions& options) {
  SubgraphColoring out;
  try {
    out.coloring = minimum_coloring(h, cap, options.limits);
  } catch (const SolverBudgetExceeded&) {
    if (options.mode != ColoringMode::exact_or_greedy) throw;
    Coloring greedy = dsatur_coloring(h);
    if (cap && greedy.num_colors() > *cap) throw;
    out.coloring = std::move(greedy);
    out.greedy = true;
  }
  return out;
}

}  // namespace detail

OfflineResult offline_iterative_coloring(const Graph& g, std::size_t t, std::uint64_t seed,
                                         const SamplingOptions& options) {
  if (t < 1) throw ArgumentError("t must be at least 1");
  const Vertex n = g.num_vertices();
  OfflineResult result;
  result.budget = options.budget.value_or(sampling_budget(n, t, options.budget_multiplier));
  result.coloring = Coloring::uniform(n);

  Rng rng(seed);
  std::vector<Edge> mono(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < t; ++i) {
    result.monochromatic.push_back(mono.size());
    if (mono.empty()) continue;
    std::vector<Edge> sample =
        mono.size() <= result.budget ? mono : random_subset(rng, mono, result.budget);
    const Graph h(n, std::move(sample));
    auto colored = detail::color_subgraph(h, std::nullopt, options);
    if (colored.greedy) ++result.greedy_fallbacks;
    const Coloring& ci = *colored.coloring;
    result.coloring = product_coloring(result.coloring, ci);
    std::vector<Edge> next;
    for (const Edge& e : mono) {
      if (ci[e.u] == ci[e.v]) next.push_back(e);
    }
    mono = std::move(next);
  }
  result.monochromatic.push_back(mono.size());
  return result;
}

}  // namespace chromstream
