#include <cmath>
#include <set>
#include <sstream>

#include "chromstream/experiments.hpp"
#include "chromstream/graph_io.hpp"

namespace chromstream {

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  WilsonInterval w;
  if (trials == 0) return w;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  w.estimate = phat;
  w.lower = successes == 0 ? 0.0 : std::max(0.0, center - half);
  w.upper = successes == trials ? 1.0 : std::min(1.0, center + half);
  w.half_width = half;
  return w;
}

nlohmann::json result_to_json(const ExperimentResult& result) {
  nlohmann::json doc;
  doc["name"] = result.name;
  doc["params"] = result.params;
  doc["seed"] = result.seed;
  doc["trials"] = result.trials;
  doc["records"] = nlohmann::json::array();
  for (const auto& record : result.records) doc["records"].push_back(record);
  doc["summary"] = result.summary;
  return doc;
}

std::string result_json_text(const ExperimentResult& result) {
  return result_to_json(result).dump(2) + "\n";
}

namespace {

std::string csv_cell(const nlohmann::json& value) {
  const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string result_to_csv(const ExperimentResult& result) {
  std::set<std::string> keys;
  for (const auto& record : result.records) {
    for (const auto& item : record.items()) keys.insert(item.key());
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& key : keys) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& record : result.records) {
    first = true;
    for (const auto& key : keys) {
      out << (first ? "" : ",");
      first = false;
      if (const auto it = record.find(key); it != record.end()) out << csv_cell(*it);
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json verdict_to_json(const Verdict& verdict) {
  nlohmann::json doc;
  doc["label"] = verdict_name(verdict.label);
  if (verdict.coloring) doc["coloring"] = coloring_to_json(*verdict.coloring);
  if (verdict.evidence_index) doc["evidence_index"] = *verdict.evidence_index;
  if (verdict.evidence) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : verdict.evidence->edges()) edges.push_back({e.u, e.v});
    doc["evidence"] = {{"n", verdict.evidence->num_vertices()}, {"edges", edges}};
  }
  const RunStats& st = verdict.stats;
  doc["stats"] = {{"budget", st.budget},
                  {"rounds", st.rounds},
                  {"passes", st.passes},
                  {"events_read", st.events_read},
                  {"peak_stored", st.peak_stored},
                  {"stored_per_round", st.stored_per_round},
                  {"greedy_fallbacks", st.greedy_fallbacks},
                  {"trials", st.trials},
                  {"sample_probability", st.sample_probability},
                  {"sampled_per_trial", st.sampled_per_trial},
                  {"full_storage", st.full_storage}};
  return doc;
}

}  // namespace chromstream
