#include <cmath>
#include <random>

#include "chromstream/algorithms.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/parallel.hpp"
#include "chromstream/rng.hpp"

namespace chromstream {

namespace {

struct Trial {
  std::vector<Vertex> members;  // ascending original ids
  std::vector<Vertex> local;    // original id -> member index or kNoVertex
  std::vector<std::int64_t> counters;

  static std::size_t slot(Vertex a, Vertex b) {  // a < b
    return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
  }
};

}  // namespace

Verdict run_dynamic(StreamCursor cursor, std::size_t q, std::size_t t, std::uint64_t seed,
                    const DynamicOptions& options) {
  if (q < 2) throw ArgumentError("q must be at least 2");
  if (t < 1) throw ArgumentError("t must be at least 1");
  const Vertex n = cursor.num_vertices();
  Verdict verdict;
  const double log2n = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;

  if (static_cast<double>(t) < 4.0 * log2n || n < 2) {
    verdict.stats.full_storage = true;
    DynamicMultigraph whole(n);
    while (const auto ev = cursor.next()) whole.apply(ev->u, ev->v, ev->delta);
    verdict.stats.events_read = cursor.consumed();
    verdict.stats.peak_stored = whole.counts().size();
    Graph g = finalize_multigraph(whole);
    verdict.stats.rounds = 1;
    if (!chromatic_number(g, q, options.limits)) {
      verdict.label = VerdictLabel::large;
      verdict.evidence_index = 0;
      verdict.evidence = std::move(g);
    }
    return verdict;
  }

  const std::size_t trials =
      options.trials.value_or(2 * static_cast<std::size_t>(std::ceil(log2n)));
  const double p = std::min(1.0, 4.0 * std::log(static_cast<double>(n)) / static_cast<double>(t));
  verdict.stats.trials = trials;
  verdict.stats.sample_probability = p;

  Rng rng(seed);
  std::bernoulli_distribution keep(p);
  std::vector<Trial> state(trials);
  for (Trial& trial : state) {
    trial.local.assign(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
      if (keep(rng)) {
        trial.local[v] = static_cast<Vertex>(trial.members.size());
        trial.members.push_back(v);
      }
    }
    const std::size_t s = trial.members.size();
    trial.counters.assign(s * (s > 0 ? s - 1 : 0) / 2, 0);
    verdict.stats.sampled_per_trial.push_back(s);
    verdict.stats.peak_stored += trial.counters.size();
  }

  while (const auto ev = cursor.next()) {
    for (Trial& trial : state) {
      const Vertex a = trial.local[ev->u];
      const Vertex b = trial.local[ev->v];
      if (a == kNoVertex || b == kNoVertex) continue;
      trial.counters[a < b ? Trial::slot(a, b) : Trial::slot(b, a)] += ev->delta;
    }
  }
  verdict.stats.events_read = cursor.consumed();

  std::vector<std::optional<Graph>> large(trials);
  for_each_index(Execution::parallel, trials, [&](std::size_t i) {
    const Trial& trial = state[i];
    std::vector<Edge> edges;
    for (Vertex b = 1; b < trial.members.size(); ++b) {
      for (Vertex a = 0; a < b; ++a) {
        if (trial.counters[Trial::slot(a, b)] > 0) {
          edges.push_back({trial.members[a], trial.members[b]});
        }
      }
    }
    Graph h(n, std::move(edges));
    if (!chromatic_number(h, q, options.limits)) large[i] = std::move(h);
  });
  verdict.stats.rounds = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    if (large[i]) {
      verdict.label = VerdictLabel::large;
      verdict.evidence_index = i;
      verdict.evidence = std::move(large[i]);
      break;
    }
  }
  return verdict;
}

}  // namespace chromstream
