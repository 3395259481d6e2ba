#include <algorithm>

#include "chromstream/algorithms.hpp"
#include "chromstream/errors.hpp"
#include "subgraph_coloring.hpp"

namespace chromstream {

Verdict run_random_order(StreamCursor cursor, std::size_t q, std::size_t t,
                         const SamplingOptions& options) {
  if (cursor.model() != StreamModel::insertion) {
    throw ArgumentError("random-order runner needs an insertion-only stream");
  }
  if (q < 2 || t < 2) throw ArgumentError("q and t must be at least 2");
  const Vertex n = cursor.num_vertices();
  Verdict verdict;
  verdict.stats.budget = options.budget.value_or(sampling_budget(n, t, options.budget_multiplier));
  Coloring current = Coloring::uniform(n);

  bool finished = false;
  for (std::size_t round = 0; round < t && !finished; ++round) {
    std::vector<Edge> stored;
    while (stored.size() < verdict.stats.budget) {
      const auto ev = cursor.next();
      if (!ev) {
        finished = true;
        break;
      }
      if (current[ev->u] == current[ev->v]) stored.push_back({ev->u, ev->v});
    }
    verdict.stats.stored_per_round.push_back(stored.size());
    verdict.stats.peak_stored = std::max(verdict.stats.peak_stored, stored.size());
    if (stored.empty()) continue;

    Graph h(n, std::move(stored));
    ++verdict.stats.rounds;
    auto colored = detail::color_subgraph(h, q, options);
    if (colored.greedy) ++verdict.stats.greedy_fallbacks;
    if (!colored.coloring) {
      verdict.label = VerdictLabel::large;
      verdict.evidence_index = round;
      verdict.evidence = std::move(h);
      verdict.stats.events_read = cursor.consumed();
      return verdict;
    }
    current = product_coloring(current, *colored.coloring);
  }
  verdict.stats.events_read = cursor.consumed();
  verdict.coloring = std::move(current);
  return verdict;
}

}  // namespace chromstream
