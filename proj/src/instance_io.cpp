#include "chromstream/errors.hpp"
#include "chromstream/instances.hpp"

namespace chromstream {

namespace {

using nlohmann::json;

json edges_json(const EdgeList& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json players_json(const std::vector<EdgeList>& players) {
  json out = json::array();
  for (const auto& list : players) out.push_back(edges_json(list));
  return out;
}

json optional_bit(const std::optional<bool>& bit) {
  if (!bit) return nullptr;
  return *bit ? 1 : 0;
}

std::optional<bool> read_optional_bit(const json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<int>() != 0;
}

std::string bit_row(const std::vector<std::uint8_t>& row) {
  std::string out(row.size(), '0');
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j]) out[j] = '1';
  }
  return out;
}

json bit_matrix(const std::vector<std::vector<std::uint8_t>>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(bit_row(row));
  return out;
}

json level_json(const RecursiveLevel& level) {
  return {{"n", level.n},
          {"r", level.r},
          {"t_full", level.t_full},
          {"cluster_ids", level.cluster_ids},
          {"i_star", level.i_star},
          {"T", level.T},
          {"intersection", level.intersection},
          {"sets", level.sets},
          {"sigma", level.sigma},
          {"x", bit_matrix(level.x)}};
}

json plan_json(const RecursivePlan& plan) {
  json levels = json::array();
  for (const LevelPlan& lp : plan.levels) {
    levels.push_back({{"n", lp.n},
                      {"t_override", lp.t_override ? json(*lp.t_override) : json(nullptr)}});
  }
  return {{"base_n", plan.base_n}, {"levels", levels}};
}

RecursivePlan plan_from_json(const json& params) {
  RecursivePlan plan;
  plan.base_n = params.at("base_n").get<std::size_t>();
  for (const json& lp : params.at("levels")) {
    LevelPlan level;
    level.n = lp.at("n").get<std::size_t>();
    if (!lp.at("t_override").is_null()) level.t_override = lp.at("t_override").get<std::size_t>();
    plan.levels.push_back(level);
  }
  return plan;
}

std::vector<EdgeList> players_from_json(const json& players) {
  std::vector<EdgeList> out;
  for (const json& list : players) {
    EdgeList edges;
    for (const json& pair : list) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError(0, "edge must be a [u, v] pair");
      edges.push_back(make_edge(pair[0].get<Vertex>(), pair[1].get<Vertex>()));
    }
    out.push_back(std::move(edges));
  }
  return out;
}

void compare_with_file(VerificationReport& report, const json& doc,
                       const std::vector<EdgeList>& players, const json& regenerated) {
  std::string detail;
  const auto stored = players_from_json(doc.at("players"));
  if (stored.size() != players.size()) {
    detail = "file lists " + std::to_string(stored.size()) + " players, regeneration gives " +
             std::to_string(players.size());
  }
  for (std::size_t q = 0; q < stored.size() && detail.empty(); ++q) {
    if (stored[q] != players[q]) detail = "edge list of player " + std::to_string(q + 1) + " differs";
  }
  for (const char* key : {"ans", "theta", "spec", "v_clique"}) {
    if (!detail.empty()) break;
    if (regenerated.contains(key) && doc.at(key) != regenerated.at(key)) {
      detail = std::string("field '") + key + "' differs";
    }
  }
  report.add("file-matches-regeneration", detail.empty(), detail);
}

void append(VerificationReport& report, VerificationReport more) {
  for (auto& c : more.checks) report.checks.push_back(std::move(c));
}

}  // namespace

json instance_to_json(const TwoPlayerInstance& inst) {
  json doc;
  doc["variant"] = "two-player";
  doc["params"] = {{"n", inst.n}, {"k", inst.k}, {"ans_override", optional_bit(inst.ans_override)}};
  doc["seed"] = inst.seed;
  doc["ans"] = inst.ans ? 1 : 0;
  doc["spec"] = inst.spec;
  doc["players"] = players_json({inst.e1, inst.e2});
  doc["aux"] = {{"i_star", inst.i_star}, {"x", bit_row(inst.x)}, {"t", inst.cpg.t()}};
  return doc;
}

json instance_to_json(const RecursiveInstance& inst) {
  json doc;
  doc["variant"] = "recursive";
  json params = plan_json(inst.plan);
  params["p"] = inst.p;
  params["k"] = inst.k;
  params["ans_override"] = optional_bit(inst.ans_override);
  doc["params"] = params;
  doc["seed"] = inst.seed;
  doc["ans"] = inst.ans ? 1 : 0;
  doc["spec"] = inst.spec;
  doc["players"] = players_json(inst.players);
  json levels = json::array();
  const RecursiveInstance* cur = &inst;
  while (cur->level) {
    json entry = level_json(*cur->level);
    entry["p"] = cur->p;
    levels.push_back(entry);
    cur = cur->child.get();
  }
  json aux = {{"n", inst.n}, {"levels", levels}};
  if (cur->base) aux["base"] = {{"i_star", cur->base->i_star}, {"x", bit_row(cur->base->x)}};
  doc["aux"] = aux;
  return doc;
}

json instance_to_json(const SimultaneousInstance& inst) {
  json doc;
  doc["variant"] = "simultaneous";
  doc["params"] = {{"k", inst.k},
                   {"n_base", inst.n_base},
                   {"theta_override", optional_bit(inst.theta_override)}};
  doc["seed"] = inst.seed;
  doc["theta"] = inst.theta ? 1 : 0;
  doc["v_clique"] = inst.v_clique;
  doc["players"] = players_json(inst.players);
  doc["aux"] = {{"n", inst.n},
                {"p", inst.p},
                {"t", inst.t},
                {"j_star", inst.j_star},
                {"sigma", inst.sigma},
                {"v_bipartite", inst.v_bipartite},
                {"x", bit_matrix(inst.x)}};
  return doc;
}

VerificationReport verify_instance_json(const json& doc) {
  try {
    const std::string variant = doc.at("variant").get<std::string>();
    const json& params = doc.at("params");
    const std::uint64_t seed = doc.at("seed").get<std::uint64_t>();
    VerificationReport report;
    if (variant == "two-player") {
      const auto inst = gen_two_player(params.at("n").get<std::size_t>(),
                                       params.at("k").get<std::size_t>(), seed,
                                       read_optional_bit(params.at("ans_override")));
      compare_with_file(report, doc, {inst.e1, inst.e2}, instance_to_json(inst));
      append(report, verify_instance(inst));
    } else if (variant == "recursive") {
      const auto inst = gen_recursive(params.at("p").get<std::size_t>(),
                                      params.at("k").get<std::size_t>(), plan_from_json(params),
                                      seed, read_optional_bit(params.at("ans_override")));
      compare_with_file(report, doc, inst.players, instance_to_json(inst));
      append(report, verify_instance(inst));
    } else if (variant == "simultaneous") {
      const auto inst = gen_simultaneous(params.at("k").get<std::size_t>(),
                                         params.at("n_base").get<std::size_t>(), seed,
                                         read_optional_bit(params.at("theta_override")));
      compare_with_file(report, doc, inst.players, instance_to_json(inst));
      append(report, verify_instance(inst));
    } else {
      throw ParseError(0, "unknown instance variant '" + variant + "'");
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed instance file: ") + e.what());
  }
}

}  // namespace chromstream
