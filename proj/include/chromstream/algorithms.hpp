#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromstream/coloring.hpp"
#include "chromstream/graph.hpp"
#include "chromstream/solver.hpp"
#include "chromstream/streams.hpp"

namespace chromstream {

// ceil(n^(1+1/t) * ln n * multiplier), at least 1.
std::size_t sampling_budget(std::size_t n, std::size_t t, double multiplier = 1.0);

// How each sampled subgraph is colored. `exact` returns chi(H) colors;
// `exact_or_greedy` gives the exact search `limits` nodes and falls back to
// DSATUR when they run out. Any proper coloring keeps M_{i+1} a subset of
// M_i, so the fallback only affects the color count.
enum class ColoringMode { exact, exact_or_greedy };

struct SamplingOptions {
  double budget_multiplier = 1.0;
  std::optional<std::size_t> budget;  // overrides the formula when set
  ColoringMode mode = ColoringMode::exact;
  SolverLimits limits;
};

enum class VerdictLabel { small, large };
std::string verdict_name(VerdictLabel label);

struct RunStats {
  std::size_t budget = 0;
  std::size_t rounds = 0;              // subgraphs colored
  std::size_t passes = 0;              // multipass only
  std::size_t events_read = 0;
  std::size_t peak_stored = 0;         // edges (or counters for the dynamic runner)
  std::vector<std::size_t> stored_per_round;
  std::size_t greedy_fallbacks = 0;
  // dynamic runner
  std::size_t trials = 0;
  double sample_probability = 0.0;
  std::vector<std::size_t> sampled_per_trial;
  bool full_storage = false;           // t < 4 log2 n: whole multigraph kept
};

struct Verdict {
  VerdictLabel label = VerdictLabel::small;
  std::optional<Coloring> coloring;        // "small" from the coloring runners
  std::optional<std::size_t> evidence_index;  // round or trial with chi > q
  std::optional<Graph> evidence;           // that subgraph, on the original ids
  RunStats stats;
};

// Offline iterative coloring with sampling without replacement from the
// current monochromatic set M_i (all of M_i when it fits the budget).
struct OfflineResult {
  Coloring coloring;
  std::vector<std::size_t> monochromatic;  // |M_1|, ..., |M_{t+1}|
  std::size_t budget = 0;
  std::size_t greedy_fallbacks = 0;
};
OfflineResult offline_iterative_coloring(const Graph& g, std::size_t t, std::uint64_t seed,
                                         const SamplingOptions& options = {});

// Single pass over an insertion-only stream: up to t rounds, each storing
// monochromatic edges until the budget fills (a partly filled last round is
// still colored). "large" as soon as a stored subgraph needs more than q
// colors. ArgumentError for a dynamic stream or q, t < 2.
Verdict run_random_order(StreamCursor cursor, std::size_t q, std::size_t t,
                         const SamplingOptions& options = {});

// One reservoir sample of the monochromatic edges per pass, at most t
// passes; stops early once no monochromatic edge remains. EnvironmentError
// when the source refuses a pass.
Verdict run_multipass(RewindableSource& source, std::size_t q, std::size_t t, std::uint64_t seed,
                      const SamplingOptions& options = {});

struct DynamicOptions {
  std::optional<std::size_t> trials;  // default 2 * ceil(log2 n)
  SolverLimits limits;
};

// Vertex-sampling distinguisher for dynamic streams: each trial keeps every
// vertex with probability 4 ln n / t and a signed counter per sampled pair.
Verdict run_dynamic(StreamCursor cursor, std::size_t q, std::size_t t, std::uint64_t seed,
                    const DynamicOptions& options = {});

}  // namespace chromstream
