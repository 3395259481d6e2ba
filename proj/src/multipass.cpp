#include <algorithm>

#include "chromstream/algorithms.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/rng.hpp"
#include "subgraph_coloring.hpp"

namespace chromstream {

Verdict run_multipass(RewindableSource& source, std::size_t q, std::size_t t, std::uint64_t seed,
                      const SamplingOptions& options) {
  if (source.model() != StreamModel::insertion) {
    throw ArgumentError("multipass runner needs an insertion-only stream");
  }
  if (q < 2 || t < 1) throw ArgumentError("need q >= 2 and t >= 1");
  const Vertex n = source.num_vertices();
  Verdict verdict;
  const std::size_t budget =
      options.budget.value_or(sampling_budget(n, t, options.budget_multiplier));
  verdict.stats.budget = budget;
  Coloring current = Coloring::uniform(n);
  Rng rng(seed);

  for (std::size_t pass = 0; pass < t; ++pass) {
    StreamCursor cursor = source.begin_pass();
    std::vector<Edge> reservoir;
    std::size_t seen = 0;
    while (const auto ev = cursor.next()) {
      if (current[ev->u] != current[ev->v]) continue;
      ++seen;
      if (reservoir.size() < budget) {
        reservoir.push_back({ev->u, ev->v});
      } else {
        const std::size_t j = uniform_index(rng, seen);
        if (j < budget) reservoir[j] = {ev->u, ev->v};
      }
    }
    verdict.stats.events_read += cursor.consumed();
    verdict.stats.stored_per_round.push_back(reservoir.size());
    verdict.stats.peak_stored = std::max(verdict.stats.peak_stored, reservoir.size());
    if (seen == 0) break;

    std::sort(reservoir.begin(), reservoir.end());
    Graph h(n, std::move(reservoir));
    ++verdict.stats.rounds;
    auto colored = detail::color_subgraph(h, q, options);
    if (colored.greedy) ++verdict.stats.greedy_fallbacks;
    if (!colored.coloring) {
      verdict.label = VerdictLabel::large;
      verdict.evidence_index = pass;
      verdict.evidence = std::move(h);
      verdict.stats.passes = source.passes_used();
      return verdict;
    }
    current = product_coloring(current, *colored.coloring);
    // The whole monochromatic set fit, so nothing is left for another pass.
    if (seen <= budget) break;
  }
  verdict.stats.passes = source.passes_used();
  verdict.coloring = std::move(current);
  return verdict;
}

}  // namespace chromstream
