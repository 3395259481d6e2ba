#include <algorithm>
#include <iterator>
#include <map>

#include "chromstream/errors.hpp"
#include "chromstream/instances.hpp"
#include "chromstream/solver.hpp"

namespace chromstream {

namespace {

std::size_t int_power(std::size_t base, std::size_t exponent) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

std::string edge_text(Edge e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

EdgeList sorted(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string compare_edges(const std::string& what, const EdgeList& expected,
                          const EdgeList& actual) {
  const EdgeList a = sorted(expected);
  const EdgeList b = sorted(actual);
  if (a == b) return {};
  EdgeList missing;
  EdgeList extra;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(missing));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(extra));
  if (!missing.empty()) return what + " lacks edge " + edge_text(missing.front());
  if (!extra.empty()) return what + " has unexpected edge " + edge_text(extra.front());
  return what + " differs in edge multiplicity";
}

void add_clique_check(VerificationReport& report, const Graph& g, const std::vector<Vertex>& s) {
  for (Vertex v : s) {
    if (v >= g.num_vertices()) {
      report.add("spec-clique", false, "vertex " + std::to_string(v) + " out of range");
      return;
    }
  }
  const MissingPair missing = find_missing_clique_pair(g, s);
  report.add("spec-clique", !missing.found,
             missing.found ? "missing pair " + edge_text(missing.pair) : "");
}

template <typename Witness>
void add_witness_check(VerificationReport& report, const Graph& g, std::size_t max_colors,
                       Witness&& witness) {
  try {
    const Coloring c = witness();
    if (c.size() != g.num_vertices()) {
      report.add("witness-coloring", false, "witness has the wrong length");
      return;
    }
    const MonochromaticEdge mono = find_monochromatic_edge(g, c);
    if (mono.found) {
      report.add("witness-coloring", false, "monochromatic edge " + edge_text(mono.edge));
    } else if (c.num_colors() > max_colors) {
      report.add("witness-coloring", false,
                 "uses " + std::to_string(c.num_colors()) + " colors, more than " +
                     std::to_string(max_colors));
    } else {
      report.add("witness-coloring", true,
                 std::to_string(c.num_colors()) + " colors");
    }
  } catch (const std::exception& e) {
    report.add("witness-coloring", false, e.what());
  }
}

void add_clique_edges(EdgeList& out, const Clique& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) out.push_back(make_edge(c[a], c[b]));
  }
}

std::string check_two_player_structure(const TwoPlayerInstance& inst) {
  const std::size_t t = inst.cpg.t();
  if (inst.x.size() != t) return "x has " + std::to_string(inst.x.size()) + " bits, expected t";
  if (inst.i_star >= t) return "i_star out of range";
  if (inst.ans != (inst.x[inst.i_star] == 1)) return "ans differs from x[i_star]";
  EdgeList e1;
  for (std::size_t i = 0; i < t; ++i) {
    if (!inst.x[i]) continue;
    for (const Clique& c : inst.cpg.clusters[i]) add_clique_edges(e1, c);
  }
  if (auto diff = compare_edges("player 1", e1, inst.e1); !diff.empty()) return diff;
  EdgeList e2;
  std::vector<Vertex> spec;
  const Cluster& special = inst.cpg.clusters[inst.i_star];
  for (std::size_t j = 0; j < special.size(); ++j) {
    for (std::size_t l = j + 1; l < special.size(); ++l) join_cliques(e2, special[j], special[l]);
    spec.insert(spec.end(), special[j].begin(), special[j].end());
  }
  if (auto diff = compare_edges("player 2", e2, inst.e2); !diff.empty()) return diff;
  std::sort(spec.begin(), spec.end());
  if (spec != inst.spec) return "spec differs from the vertices of cluster i_star";
  return {};
}

std::string check_level_parameters(const RecursiveInstance& inst) {
  const RecursiveLevel& level = *inst.level;
  const std::size_t r = level.r;
  const std::size_t t = level.cpg.t();
  if (r != 4 * static_cast<std::size_t>(inst.child->n)) return "r_p differs from 4 n_{p-1}";
  if (r % 8 != 0) return "r_p is not divisible by 8";
  if (level.cpg.r != r || level.cpg.k != inst.k) return "packing graph has the wrong shape";
  if (level.sets.size() != t || level.x.size() != t) return "sets or x rows do not match t";
  if (level.i_star >= t) return "i_star out of range";
  auto valid_set = [&](const std::vector<std::uint32_t>& s) {
    return std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end() && (s.empty() || s.back() < r);
  };
  for (std::size_t i = 0; i < t; ++i) {
    if (!valid_set(level.sets[i]) || level.sets[i].size() != r / 4) {
      return "S_" + std::to_string(i) + " is not an r/4-subset of [r]";
    }
    if (level.x[i].size() != r) return "row " + std::to_string(i) + " of x has the wrong length";
  }
  if (!valid_set(level.T) || level.T.size() != r / 4) return "T is not an r/4-subset of [r]";
  std::vector<std::uint32_t> meet;
  const auto& s_star = level.sets[level.i_star];
  std::set_intersection(s_star.begin(), s_star.end(), level.T.begin(), level.T.end(),
                        std::back_inserter(meet));
  if (meet != level.intersection) return "stored intersection differs from S_{i*} and T";
  if (meet.size() != int_power(inst.k, inst.p - 1)) {
    return "S_{i*} and T meet in " + std::to_string(meet.size()) + " cliques, expected k^(p-1)";
  }
  return {};
}

std::string check_row_balance(const RecursiveLevel& level) {
  for (std::size_t i = 0; i < level.x.size(); ++i) {
    std::size_t ones = 0;
    for (std::uint32_t j : level.sets[i]) ones += level.x[i][j];
    if (ones != level.r / 8) {
      return "row " + std::to_string(i) + " has " + std::to_string(ones) +
             " ones inside S_i, expected r/8";
    }
  }
  return {};
}

std::string check_answer(const RecursiveInstance& inst) {
  const RecursiveLevel& level = *inst.level;
  for (std::uint32_t j : level.intersection) {
    if ((level.x[level.i_star][j] == 1) != inst.ans) {
      return "x[i_star][" + std::to_string(j) + "] differs from ans";
    }
  }
  if (inst.child->ans != inst.ans) return "child answer differs from ans";
  return {};
}

std::string check_sigma(const RecursiveInstance& inst) {
  const RecursiveLevel& level = *inst.level;
  if (level.sigma.size() != inst.child->n) return "sigma does not cover the child's vertices";
  std::vector<std::uint32_t> image = level.sigma;
  std::sort(image.begin(), image.end());
  if (image != level.T) return "sigma is not a bijection onto T";
  std::vector<std::uint32_t> spec_image;
  for (Vertex v : inst.child->spec) {
    if (v >= level.sigma.size()) return "child spec vertex out of range";
    spec_image.push_back(level.sigma[v]);
  }
  std::sort(spec_image.begin(), spec_image.end());
  if (spec_image != level.intersection) return "sigma does not map the child spec onto S_{i*} and T";
  return {};
}

std::string check_recursive_edges(const RecursiveInstance& inst) {
  const RecursiveLevel& level = *inst.level;
  if (inst.players.size() != inst.p) return "expected p player edge lists";
  EdgeList e1;
  for (std::size_t i = 0; i < level.cpg.t(); ++i) {
    for (std::uint32_t j : level.sets[i]) {
      if (level.x[i][j]) add_clique_edges(e1, level.cpg.clusters[i][j]);
    }
  }
  if (auto diff = compare_edges("player 1", e1, inst.players[0]); !diff.empty()) return diff;
  const Cluster& target = level.cpg.clusters[level.i_star];
  for (std::size_t q = 0; q < inst.child->players.size(); ++q) {
    EdgeList joined;
    for (const Edge& e : inst.child->players[q]) {
      join_cliques(joined, target[level.sigma[e.u]], target[level.sigma[e.v]]);
    }
    const std::string who = "player " + std::to_string(q + 2);
    if (auto diff = compare_edges(who, joined, inst.players[q + 1]); !diff.empty()) return diff;
  }
  return {};
}

std::string check_recursive_spec(const RecursiveInstance& inst) {
  const RecursiveLevel& level = *inst.level;
  std::vector<Vertex> spec;
  for (std::uint32_t j : level.intersection) {
    const Clique& c = level.cpg.clusters[level.i_star][j];
    spec.insert(spec.end(), c.begin(), c.end());
  }
  std::sort(spec.begin(), spec.end());
  if (spec != inst.spec) return "spec differs from the union of the intersection cliques";
  return {};
}

}  // namespace

VerificationReport verify_instance(const TwoPlayerInstance& inst) {
  VerificationReport report;
  std::string structure;
  try {
    structure = check_two_player_structure(inst);
  } catch (const std::exception& e) {
    structure = e.what();
  }
  report.add("structure", structure.empty(), structure);
  const Graph g = inst.union_graph();
  if (inst.ans) {
    add_clique_check(report, g, inst.spec);
  } else {
    add_witness_check(report, g, 2 * inst.k, [&] { return witness_coloring_two_player(inst); });
  }
  return report;
}

VerificationReport verify_instance(const RecursiveInstance& inst) {
  VerificationReport report;
  if (inst.p == 2) {
    if (!inst.base) {
      report.add("structure", false, "two-player base is missing");
      return report;
    }
    VerificationReport base = verify_instance(*inst.base);
    std::string link;
    if (inst.players.size() != 2 || inst.players[0] != inst.base->e1 ||
        inst.players[1] != inst.base->e2) {
      link = "player lists differ from the two-player instance";
    } else if (inst.spec != inst.base->spec || inst.ans != inst.base->ans) {
      link = "spec or ans differ from the two-player instance";
    }
    report.add("base-link", link.empty(), link);
    for (auto& c : base.checks) report.checks.push_back(std::move(c));
    return report;
  }
  if (!inst.level || !inst.child) {
    report.add("structure", false, "level data or child instance is missing");
    return report;
  }

  auto guarded = [&](const std::string& name, auto&& check) {
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report.add(name, detail.empty(), detail);
    return detail.empty();
  };
  const bool shape_ok = guarded("level-parameters", [&] { return check_level_parameters(inst); });
  if (shape_ok) {
    guarded("row-balance", [&] { return check_row_balance(*inst.level); });
    guarded("answer-consistency", [&] { return check_answer(inst); });
    const bool sigma_ok = guarded("sigma", [&] { return check_sigma(inst); });
    guarded("spec", [&] { return check_recursive_spec(inst); });
    if (sigma_ok) guarded("edges", [&] { return check_recursive_edges(inst); });
  }
  const VerificationReport child = verify_instance(*inst.child);
  std::string child_detail;
  for (const auto& c : child.checks) {
    if (!c.passed) {
      child_detail = c.name + ": " + c.detail;
      break;
    }
  }
  report.add("child", child.passed(), child_detail);

  const Graph g = inst.union_graph();
  if (inst.ans) {
    add_clique_check(report, g, inst.spec);
  } else {
    add_witness_check(report, g, inst.k * inst.p, [&] { return witness_coloring_recursive(inst); });
  }
  return report;
}

VerificationReport verify_instance(const SimultaneousInstance& inst) {
  VerificationReport report;
  const std::size_t nb = inst.n_base;
  const std::size_t half = nb - 1;

  std::string consistency;
  if (inst.x.size() != inst.p) consistency = "x must have p rows";
  for (std::size_t i = 0; i < inst.x.size() && consistency.empty(); ++i) {
    if (inst.x[i].size() != inst.t) {
      consistency = "row " + std::to_string(i) + " of x has the wrong length";
    } else if ((inst.x[i][inst.j_star] == 1) != inst.theta) {
      consistency = "x[" + std::to_string(i) + "][j_star] differs from theta";
    }
  }
  report.add("consistency", consistency.empty(), consistency);

  std::string relabel;
  std::vector<Vertex> perm = inst.sigma;
  std::sort(perm.begin(), perm.end());
  bool perm_ok = perm.size() == inst.n;
  for (std::size_t i = 0; perm_ok && i < perm.size(); ++i) perm_ok = perm[i] == i;
  if (!perm_ok) relabel = "sigma is not a permutation of [n]";
  if (relabel.empty() && (inst.players.size() != inst.p || inst.local.size() != inst.p ||
                          inst.x.size() != inst.p)) {
    relabel = "expected p players";
  }
  std::map<Edge, std::int64_t> expected_counts;
  const std::size_t u_star = inst.j_star / nb;
  const std::size_t v_star = inst.j_star % nb;
  std::size_t pair_index = 0;
  for (std::size_t a = 0; a < inst.k && relabel.empty(); ++a) {
    for (std::size_t b = a + 1; b < inst.k && relabel.empty(); ++b, ++pair_index) {
      const std::size_t i = pair_index;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> local;
      EdgeList global;
      for (std::size_t j = 0; j < inst.t && j < inst.x[i].size(); ++j) {
        if (!inst.x[i][j]) continue;
        const std::size_t u = j / nb;
        const std::size_t v = j % nb;
        local.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
        const Vertex gu = u == u_star ? inst.sigma[2 * half + a]
                                      : inst.sigma[u < u_star ? u : u - 1];
        const Vertex gv = v == v_star ? inst.sigma[2 * half + b]
                                      : inst.sigma[half + (v < v_star ? v : v - 1)];
        global.push_back(make_edge(gu, gv));
        ++expected_counts[make_edge(gu, gv)];
      }
      if (local != inst.local[i]) {
        relabel = "local graph of player " + std::to_string(i) + " differs from row x_i";
      } else {
        relabel = compare_edges("player " + std::to_string(i), global, inst.players[i]);
      }
    }
  }
  if (relabel.empty() && expected_counts.size() != inst.multigraph.counts().size()) {
    relabel = "union multigraph has the wrong support";
  }
  if (relabel.empty()) {
    for (const auto& [e, count] : inst.multigraph.counts()) {
      auto it = expected_counts.find(e);
      if (it == expected_counts.end() || it->second != count) {
        relabel = "union multiplicity of " + edge_text(e) + " is wrong";
        break;
      }
    }
  }
  report.add("relabeling", relabel.empty(), relabel);

  std::string partition;
  if (perm_ok) {
    std::vector<Vertex> left(inst.sigma.begin(), inst.sigma.begin() + 2 * half);
    std::vector<Vertex> right(inst.sigma.begin() + 2 * half, inst.sigma.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != inst.v_bipartite || right != inst.v_clique) {
      partition = "vertex partition differs from sigma";
    }
  } else {
    partition = "sigma is not a permutation of [n]";
  }
  report.add("partition", partition.empty(), partition);

  const Graph g = inst.final_graph();
  std::string bipartite;
  try {
    const InducedSubgraph sub = induced_subgraph(g, inst.v_bipartite);
    if (!find_k_coloring(sub.graph, 2)) bipartite = "union restricted to v_bipartite has an odd cycle";
  } catch (const std::exception& e) {
    bipartite = e.what();
  }
  report.add("bipartite", bipartite.empty(), bipartite);

  if (inst.theta) {
    add_clique_check(report, g, inst.v_clique);
  } else {
    add_witness_check(report, g, 3, [&] { return witness_coloring_simultaneous(inst); });
  }
  return report;
}

}  // namespace chromstream
