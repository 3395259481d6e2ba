#include <algorithm>

#include "chromstream/errors.hpp"
#include "chromstream/instances.hpp"
#include "chromstream/rng.hpp"

namespace chromstream {

void join_cliques(EdgeList& out, std::span<const Vertex> a, std::span<const Vertex> b) {
  for (Vertex u : a) {
    if (std::find(b.begin(), b.end(), u) != b.end()) {
      throw ArgumentError("cannot join cliques sharing vertex " + std::to_string(u));
    }
  }
  out.reserve(out.size() + a.size() * b.size());
  for (Vertex u : a) {
    for (Vertex v : b) out.push_back(make_edge(u, v));
  }
}

Graph TwoPlayerInstance::union_graph() const {
  EdgeList all = e1;
  all.insert(all.end(), e2.begin(), e2.end());
  return graph_from_edge_union(cpg.num_vertices(), std::move(all));
}

TwoPlayerInstance gen_two_player(std::size_t n, std::size_t k, std::uint64_t seed,
                                 std::optional<bool> ans_override) {
  TwoPlayerInstance inst;
  inst.n = n;
  inst.k = k;
  inst.seed = seed;
  inst.ans_override = ans_override;
  inst.cpg = construct_lines_basic(n, k);

  Rng rng(seed);
  const std::size_t t = inst.cpg.t();
  inst.i_star = uniform_index(rng, t);
  inst.x.resize(t);
  for (auto& bit : inst.x) bit = random_bit(rng) ? 1 : 0;
  if (ans_override) inst.x[inst.i_star] = *ans_override ? 1 : 0;
  inst.ans = inst.x[inst.i_star] == 1;

  for (std::size_t i = 0; i < t; ++i) {
    if (!inst.x[i]) continue;
    for (const Clique& c : inst.cpg.clusters[i]) {
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) inst.e1.push_back(make_edge(c[a], c[b]));
      }
    }
  }
  const Cluster& special = inst.cpg.clusters[inst.i_star];
  for (std::size_t j = 0; j < special.size(); ++j) {
    for (std::size_t l = j + 1; l < special.size(); ++l) join_cliques(inst.e2, special[j], special[l]);
    inst.spec.insert(inst.spec.end(), special[j].begin(), special[j].end());
  }
  std::sort(inst.e1.begin(), inst.e1.end());
  std::sort(inst.e2.begin(), inst.e2.end());
  std::sort(inst.spec.begin(), inst.spec.end());
  return inst;
}

std::vector<Color> witness_palette_two_player(const TwoPlayerInstance& inst) {
  if (inst.ans) throw PreconditionError("witness coloring exists only for ans = 0");
  const Vertex n = inst.cpg.num_vertices();
  const Vertex layer_size = n / static_cast<Vertex>(inst.k);
  std::vector<Color> colors(n);
  for (Vertex v = 0; v < n; ++v) colors[v] = static_cast<Color>(inst.k + v / layer_size);
  const Cluster& special = inst.cpg.clusters[inst.i_star];
  for (std::size_t j = 0; j < special.size(); ++j) {
    for (Vertex v : special[j]) colors[v] = static_cast<Color>(j);
  }
  return colors;
}

Coloring witness_coloring_two_player(const TwoPlayerInstance& inst) {
  return Coloring(witness_palette_two_player(inst));
}

}  // namespace chromstream
