#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromstream/algorithms.hpp"
#include "chromstream/graph_families.hpp"
#include "chromstream/parallel.hpp"
#include "chromstream/streams.hpp"

namespace chromstream {

struct ExperimentResult {
  std::string name;
  nlohmann::json params = nlohmann::json::object();   // flat key -> value
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<nlohmann::json> records;                // one flat object per trial
  nlohmann::json summary = nlohmann::json::object();  // empty when trials == 0
};

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct WilsonInterval {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double half_width = 0.0;
};
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z = kWilsonZ95);

// {"name", "params", "seed", "trials", "records", "summary"} with sorted keys.
nlohmann::json result_to_json(const ExperimentResult& result);
std::string result_json_text(const ExperimentResult& result);
// Header = sorted union of record keys; one row per trial. Cells hold the
// JSON text of each value (strings unquoted), CSV-quoted when needed.
std::string result_to_csv(const ExperimentResult& result);

// {"label", "coloring"?, "evidence_index"?, "evidence"?: [[u, v], ...], "stats"}.
nlohmann::json verdict_to_json(const Verdict& verdict);

struct ShrinkageConfig {
  GraphSpec graph;
  std::size_t t = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  SamplingOptions sampling{1.0, std::nullopt, ColoringMode::exact_or_greedy, SolverLimits{20000}};
  Execution exec = Execution::parallel;
};
ExperimentResult experiment_edge_shrinkage(const ShrinkageConfig& config);

struct VertexSamplingConfig {
  GraphSpec graph;
  double p = 0.5;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  SolverLimits limits;
  Execution exec = Execution::parallel;
};
// Threshold (p / (2 ln n)) * chi(G) - 1.
double vertex_sampling_threshold(std::size_t n, double p, std::size_t chi);
ExperimentResult experiment_vertex_sampling(const VertexSamplingConfig& config);

enum class Distinguisher { random_order, multipass, dynamic };
std::string distinguisher_name(Distinguisher d);
Distinguisher distinguisher_from_name(const std::string& name);

struct DistinguisherConfig {
  Distinguisher algorithm = Distinguisher::random_order;
  GraphSpec small_side;
  GraphSpec large_side;
  std::size_t q = 2;
  std::size_t t = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Churn churn{500, 2};
  SamplingOptions sampling;
  Execution exec = Execution::parallel;
};
ExperimentResult experiment_distinguisher(const DistinguisherConfig& config);

}  // namespace chromstream
