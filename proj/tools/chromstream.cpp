// chromstream: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 I/O or parse error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromstream/algorithms.hpp"
#include "chromstream/cluster_packing.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/experiments.hpp"
#include "chromstream/graph_families.hpp"
#include "chromstream/graph_io.hpp"
#include "chromstream/instances.hpp"
#include "chromstream/streams.hpp"

namespace cs = chromstream;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadArgs = 2;
constexpr int kIoFailure = 3;

struct Common {
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
};

void emit(const Common& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
  } else {
    cs::write_file(common.output, text);
  }
}

void emit_json(const Common& common, const json& doc) { emit(common, doc.dump(2) + "\n"); }

json parse_json_file(const std::string& path) {
  try {
    return json::parse(cs::read_file(path));
  } catch (const json::parse_error& e) {
    throw cs::ParseError(0, path + ": " + e.what());
  }
}

std::optional<bool> optional_bit(const std::optional<int>& value) {
  if (!value) return std::nullopt;
  return *value != 0;
}

cs::Stream load_stream(const std::string& path) { return cs::stream_from_string(cs::read_file(path)); }
cs::Graph load_graph(const std::string& path) { return cs::graph_from_string(cs::read_file(path)); }

void add_common(CLI::App* cmd, Common& common, bool with_format = false) {
  cmd->add_option("--seed", common.seed, "master seed");
  cmd->add_option("-o,--output", common.output, "output path (default stdout)");
  if (with_format) {
    cmd->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }
}

void emit_experiment(const Common& common, const cs::ExperimentResult& result) {
  emit(common, common.format == "csv" ? cs::result_to_csv(result) : cs::result_json_text(result));
}

int report_exit(const Common& common, const cs::VerificationReport& report) {
  emit_json(common, report.to_json());
  return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming coloring algorithms, cluster packing graphs and hard instances"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;
  auto on = [&action](CLI::App* cmd, std::function<int()> body) {
    cmd->callback([&action, body] { action = body; });
  };

  // ---- gen ---------------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "generate graphs, packings and instances");
  gen->require_subcommand(1);

  std::size_t n = 0, k = 2, r = 2, d = 7, p = 5, w = 3, theta = 1, count = 3;
  std::string input;

  CLI::App* basic = gen->add_subcommand("basic", "geometric lines with groups of size k");
  basic->add_option("--n", n, "vertices")->required();
  basic->add_option("--k", k, "clique size")->required();
  add_common(basic, common);
  on(basic, [&] {
    emit(common, cs::cpg_to_string(cs::construct_lines_basic(n, k)));
    return kOk;
  });

  CLI::App* grouped = gen->add_subcommand("grouped", "geometric lines with groups of size r");
  grouped->add_option("--n", n, "vertices")->required();
  grouped->add_option("--r", r, "cliques per cluster")->required();
  grouped->add_option("--k", k, "clique size")->required();
  add_common(grouped, common);
  on(grouped, [&] {
    emit(common, cs::cpg_to_string(cs::construct_lines_grouped(n, r, k)));
    return kOk;
  });

  std::string family_path;
  CLI::App* dense = gen->add_subcommand("dense", "dense construction on [p]^d layers");
  dense->add_option("--k", k, "clique size")->required();
  dense->add_option("--d", d, "dimension")->required();
  dense->add_option("--p", p, "side length")->required();
  dense->add_option("--family", family_path, "set family JSON (default: Fano lines)");
  dense->add_option("--count", count, "Fano lines when no family is given");
  add_common(dense, common);
  on(dense, [&] {
    cs::DenseParams params;
    params.k = k;
    params.d = d;
    params.p = p;
    params.family = family_path.empty()
                        ? cs::gen_intersection_family(7, 3, 1, count, common.seed, cs::FamilyMode::fano)
                        : cs::family_from_json(parse_json_file(family_path));
    emit(common, cs::cpg_to_string(cs::construct_dense(params)));
    return kOk;
  });

  CLI::App* lift = gen->add_subcommand("lift", "k-colorable lift of a packing");
  lift->add_option("--input", input, "packing file")->required();
  add_common(lift, common);
  on(lift, [&] {
    const auto cpg = cs::cpg_from_string(cs::read_file(input));
    emit(common, cs::cpg_to_string(cs::lift_to_k_colorable(cpg)));
    return kOk;
  });

  std::string mode = "random";
  CLI::App* family = gen->add_subcommand("family", "sets with bounded pairwise intersections");
  family->add_option("--d", d, "universe size")->required();
  family->add_option("--w", w, "set size")->required();
  family->add_option("--theta", theta, "intersection bound")->required();
  family->add_option("--count", count, "number of sets")->required();
  family->add_option("--mode", mode, "random or fano")->check(CLI::IsMember({"random", "fano"}));
  add_common(family, common);
  on(family, [&] {
    const auto fm = mode == "fano" ? cs::FamilyMode::fano : cs::FamilyMode::random;
    emit_json(common, cs::family_to_json(cs::gen_intersection_family(d, w, theta, count, common.seed, fm)));
    return kOk;
  });

  std::optional<int> answer;
  CLI::App* two = gen->add_subcommand("two-player", "two-player instance");
  two->add_option("--n", n, "vertices of the packing")->required();
  two->add_option("--k", k, "clique size")->required();
  two->add_option("--ans", answer, "force the answer bit")->check(CLI::Range(0, 1));
  add_common(two, common);
  on(two, [&] {
    emit_json(common, cs::instance_to_json(cs::gen_two_player(n, k, common.seed, optional_bit(answer))));
    return kOk;
  });

  std::size_t players = 3;
  std::size_t base_n = 64;
  std::vector<std::size_t> level_n;
  std::size_t clusters = cs::kDefaultMaterializedClusters;
  CLI::App* rec = gen->add_subcommand("recursive", "recursive p-player instance");
  rec->add_option("--p", players, "players")->required();
  rec->add_option("--k", k, "clique size")->required();
  rec->add_option("--base-n", base_n, "vertices of the two-player base");
  rec->add_option("--level-n", level_n, "vertices per level a = 3..p (0 = smallest valid)");
  rec->add_option("--clusters", clusters, "clusters materialized per level");
  rec->add_option("--ans", answer, "force the answer bit")->check(CLI::Range(0, 1));
  add_common(rec, common);
  on(rec, [&] {
    if (players < 2) throw cs::ArgumentError("p must be at least 2");
    cs::RecursivePlan plan;
    plan.base_n = base_n;
    if (!level_n.empty() && level_n.size() != players - 2) {
      throw cs::ArgumentError("--level-n needs one value per level (p - 2)");
    }
    for (std::size_t a = 0; a + 2 < players; ++a) {
      plan.levels.push_back({level_n.empty() ? 0 : level_n[a], clusters});
    }
    emit_json(common, cs::instance_to_json(
                          cs::gen_recursive(players, k, plan, common.seed, optional_bit(answer))));
    return kOk;
  });

  std::size_t n_base = 10;
  CLI::App* sim = gen->add_subcommand("simultaneous", "simultaneous-message instance");
  sim->add_option("--k", k, "clique size")->required();
  sim->add_option("--n-base", n_base, "side of each local bipartite graph")->required();
  sim->add_option("--theta", answer, "force the hidden bit")->check(CLI::Range(0, 1));
  add_common(sim, common);
  on(sim, [&] {
    emit_json(common, cs::instance_to_json(
                          cs::gen_simultaneous(k, n_base, common.seed, optional_bit(answer))));
    return kOk;
  });

  std::string spec_text;
  CLI::App* ggraph = gen->add_subcommand("graph", "graph family sample, e.g. planted:n=200,m=30");
  ggraph->add_option("--spec", spec_text, "family spec")->required();
  add_common(ggraph, common);
  on(ggraph, [&] {
    emit(common, cs::graph_to_string(cs::make_graph(cs::parse_graph_spec(spec_text), common.seed)));
    return kOk;
  });

  // ---- stream ------------------------------------------------------------
  CLI::App* stream = app.add_subcommand("stream", "turn a graph into an edge stream");
  stream->require_subcommand(1);

  CLI::App* shuffle = stream->add_subcommand("shuffle", "insertion stream in random order");
  shuffle->add_option("--input", input, "graph file")->required();
  add_common(shuffle, common);
  on(shuffle, [&] {
    emit(common, cs::stream_to_string(cs::to_insertion_stream(load_graph(input), common.seed)));
    return kOk;
  });

  cs::Churn churn{500, 2};
  CLI::App* dyn = stream->add_subcommand("dynamic", "dynamic stream with churn");
  dyn->add_option("--input", input, "graph file")->required();
  dyn->add_option("--extra-pairs", churn.extra_pairs, "non-edges inserted and deleted");
  dyn->add_option("--cycles", churn.cycles, "insert/delete rounds per extra pair");
  add_common(dyn, common);
  on(dyn, [&] {
    emit(common, cs::stream_to_string(cs::to_dynamic_stream(load_graph(input), churn, common.seed)));
    return kOk;
  });

  // ---- run ---------------------------------------------------------------
  CLI::App* run = app.add_subcommand("run", "run a streaming distinguisher");
  run->require_subcommand(1);
  std::size_t q = 2, t = 2;
  cs::SamplingOptions sampling;
  std::optional<std::size_t> trials_opt;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "stream file")->required();
    cmd->add_option("--q", q, "colors on the small side");
    cmd->add_option("--t", t, "rounds or passes");
    add_common(cmd, common);
  };

  CLI::App* ro = run->add_subcommand("random-order", "single pass over a random-order stream");
  add_run_options(ro);
  ro->add_option("--budget-multiplier", sampling.budget_multiplier, "scales the edge budget");
  on(ro, [&] {
    const cs::Stream s = load_stream(input);
    emit_json(common, cs::verdict_to_json(cs::run_random_order(s.cursor(), q, t, sampling)));
    return kOk;
  });

  CLI::App* mp = run->add_subcommand("multipass", "t passes with reservoir sampling");
  add_run_options(mp);
  mp->add_option("--budget-multiplier", sampling.budget_multiplier, "scales the edge budget");
  on(mp, [&] {
    const cs::Stream s = load_stream(input);
    cs::RewindableSource source(s, t);
    emit_json(common, cs::verdict_to_json(cs::run_multipass(source, q, t, common.seed, sampling)));
    return kOk;
  });

  CLI::App* rd = run->add_subcommand("dynamic", "vertex sampling over a dynamic stream");
  add_run_options(rd);
  rd->add_option("--trials", trials_opt, "independent vertex samples (default 2 ceil(log2 n))");
  on(rd, [&] {
    const cs::Stream s = load_stream(input);
    emit_json(common, cs::verdict_to_json(
                          cs::run_dynamic(s.cursor(), q, t, common.seed, cs::DynamicOptions{trials_opt, {}})));
    return kOk;
  });

  // ---- verify ------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "check files produced by gen/run");
  verify->require_subcommand(1);
  bool serial = false;

  CLI::App* vcpg = verify->add_subcommand("cpg", "all five packing checks");
  vcpg->add_option("--input", input, "packing file")->required();
  vcpg->add_flag("--serial", serial, "use the serial reference path");
  add_common(vcpg, common);
  on(vcpg, [&] {
    const auto cpg = cs::cpg_from_string(cs::read_file(input));
    return report_exit(common, cs::verify_cluster_packing(
                                   cpg, serial ? cs::Execution::serial : cs::Execution::parallel));
  });

  CLI::App* vinst = verify->add_subcommand("instance", "regenerate and check an instance file");
  vinst->add_option("--input", input, "instance JSON")->required();
  add_common(vinst, common);
  on(vinst, [&] { return report_exit(common, cs::verify_instance_json(parse_json_file(input))); });

  std::string coloring_path;
  std::optional<std::size_t> max_colors;
  CLI::App* vcol = verify->add_subcommand("coloring", "properness of a coloring");
  vcol->add_option("--graph", input, "graph file")->required();
  vcol->add_option("--coloring", coloring_path, "coloring JSON or a run verdict")->required();
  vcol->add_option("--max-colors", max_colors, "fail above this many colors");
  add_common(vcol, common);
  on(vcol, [&] {
    const cs::Graph g = load_graph(input);
    json doc = parse_json_file(coloring_path);
    if (doc.contains("label")) {
      if (!doc.contains("coloring")) throw cs::ArgumentError("verdict carries no coloring");
      doc = doc["coloring"];
    }
    cs::Coloring c;
    try {
      c = cs::coloring_from_json(doc);
    } catch (const json::exception& e) {
      throw cs::ParseError(0, coloring_path + ": " + e.what());
    }
    cs::VerificationReport report;
    if (c.size() != g.num_vertices()) {
      report.add("size", false, "coloring has " + std::to_string(c.size()) + " entries for " +
                                    std::to_string(g.num_vertices()) + " vertices");
      return report_exit(common, report);
    }
    const auto mono = cs::find_monochromatic_edge(g, c);
    report.add("proper", !mono.found,
               mono.found ? "edge (" + std::to_string(mono.edge.u) + ", " +
                                std::to_string(mono.edge.v) + ") is monochromatic"
                          : "");
    if (max_colors) {
      report.add("color-count", c.num_colors() <= *max_colors,
                 std::to_string(c.num_colors()) + " colors used");
    }
    return report_exit(common, report);
  });

  // ---- experiment --------------------------------------------------------
  CLI::App* exp = app.add_subcommand("experiment", "Monte Carlo experiments");
  exp->require_subcommand(1);
  std::size_t trials = 100;
  bool exp_serial = false;
  auto exec = [&] { return exp_serial ? cs::Execution::serial : cs::Execution::parallel; };

  cs::ShrinkageConfig shrink;
  std::size_t node_limit = 20000;
  CLI::App* esh = exp->add_subcommand("shrinkage", "monochromatic edge shrinkage per iteration");
  esh->add_option("--graph", spec_text, "family spec")->required();
  esh->add_option("--t", t, "iterations");
  esh->add_option("--trials", trials, "trials");
  esh->add_option("--budget-multiplier", sampling.budget_multiplier, "scales the edge budget");
  esh->add_option("--node-limit", node_limit, "exact-search nodes before the DSATUR fallback");
  esh->add_flag("--serial", exp_serial, "run trials serially");
  add_common(esh, common, true);
  on(esh, [&] {
    shrink.graph = cs::parse_graph_spec(spec_text);
    shrink.t = t;
    shrink.trials = trials;
    shrink.seed = common.seed;
    shrink.sampling.budget_multiplier = sampling.budget_multiplier;
    shrink.sampling.limits.max_nodes = node_limit;
    shrink.exec = exec();
    emit_experiment(common, cs::experiment_edge_shrinkage(shrink));
    return kOk;
  });

  double prob = 0.5;
  CLI::App* evs = exp->add_subcommand("vertex-sampling", "chromatic number of vertex samples");
  evs->add_option("--graph", spec_text, "family spec")->required();
  evs->add_option("--p", prob, "keep probability");
  evs->add_option("--trials", trials, "trials");
  evs->add_flag("--serial", exp_serial, "run trials serially");
  add_common(evs, common, true);
  on(evs, [&] {
    cs::VertexSamplingConfig config;
    config.graph = cs::parse_graph_spec(spec_text);
    config.p = prob;
    config.trials = trials;
    config.seed = common.seed;
    config.exec = exec();
    emit_experiment(common, cs::experiment_vertex_sampling(config));
    return kOk;
  });

  std::string algorithm = "random-order";
  std::string small_text, large_text;
  CLI::App* edi = exp->add_subcommand("distinguisher", "success rates on both sides");
  edi->add_option("--algorithm", algorithm, "random-order, multipass or dynamic")
      ->check(CLI::IsMember({"random-order", "multipass", "dynamic"}));
  edi->add_option("--small", small_text, "small-side family spec")->required();
  edi->add_option("--large", large_text, "large-side family spec")->required();
  edi->add_option("--q", q, "colors on the small side");
  edi->add_option("--t", t, "rounds, passes or space parameter");
  edi->add_option("--trials", trials, "trials");
  edi->add_option("--extra-pairs", churn.extra_pairs, "dynamic churn pairs");
  edi->add_option("--cycles", churn.cycles, "dynamic churn cycles");
  edi->add_option("--budget-multiplier", sampling.budget_multiplier, "scales the edge budget");
  edi->add_flag("--serial", exp_serial, "run trials serially");
  add_common(edi, common, true);
  on(edi, [&] {
    cs::DistinguisherConfig config;
    config.algorithm = cs::distinguisher_from_name(algorithm);
    config.small_side = cs::parse_graph_spec(small_text);
    config.large_side = cs::parse_graph_spec(large_text);
    config.q = q;
    config.t = t;
    config.trials = trials;
    config.seed = common.seed;
    config.churn = churn;
    config.sampling = sampling;
    config.exec = exec();
    emit_experiment(common, cs::experiment_distinguisher(config));
    return kOk;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    return action ? action() : kBadArgs;
  } catch (const cs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const cs::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const cs::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kIoFailure;
  } catch (const cs::EnvironmentError& e) {
    std::cerr << "environment: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  }
}
