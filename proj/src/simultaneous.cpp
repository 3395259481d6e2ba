#include <algorithm>

#include "chromstream/errors.hpp"
#include "chromstream/instances.hpp"
#include "chromstream/rng.hpp"

namespace chromstream {

namespace {

constexpr std::size_t kMaxMatrixEntries = 100'000'000;

// i-th pair (a, b), a < b, of [0, k) in lexicographic order.
std::pair<std::size_t, std::size_t> lex_pair(std::size_t k, std::size_t i) {
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t row = k - 1 - a;
    if (i < row) return {a, a + 1 + i};
    i -= row;
  }
  throw ArgumentError("pair index out of range");
}

}  // namespace

SimultaneousInstance gen_simultaneous(std::size_t k, std::size_t n_base, std::uint64_t seed,
                                      std::optional<bool> theta_override) {
  if (k < 4) throw ArgumentError("k must be at least 4");
  if (n_base < 2) throw ArgumentError("n_base must be at least 2");
  const std::size_t n = k + 2 * (n_base - 1);
  if (2 * k > n) throw ArgumentError("need k <= n/2, i.e. n_base >= k/2 + 1");
  if (n > kNoVertex) throw ResourceError("n exceeds the vertex-id range");
  const std::size_t p = k * (k - 1) / 2;
  const std::size_t t = n_base * n_base;
  if (p > kMaxMatrixEntries / t) throw ResourceError("p * n_base^2 exceeds the memory guard");

  SimultaneousInstance inst;
  inst.k = k;
  inst.n_base = n_base;
  inst.seed = seed;
  inst.theta_override = theta_override;
  inst.p = p;
  inst.n = static_cast<Vertex>(n);
  inst.t = t;

  Rng rng(seed);
  inst.j_star = uniform_index(rng, t);
  inst.theta = random_bit(rng);
  if (theta_override) inst.theta = *theta_override;

  inst.x.assign(p, std::vector<std::uint8_t>(t, 0));
  for (auto& row : inst.x) {
    for (std::size_t j = 0; j < t; ++j) {
      row[j] = j == inst.j_star ? (inst.theta ? 1 : 0) : (random_bit(rng) ? 1 : 0);
    }
  }
  inst.sigma = random_permutation(rng, n);

  const std::size_t u_star = inst.j_star / n_base;
  const std::size_t v_star = inst.j_star % n_base;
  const std::size_t clique_base = 2 * (n_base - 1);
  inst.local.resize(p);
  inst.players.resize(p);
  inst.multigraph = DynamicMultigraph(inst.n);
  for (std::size_t i = 0; i < p; ++i) {
    const auto [a, b] = lex_pair(k, i);
    auto left = [&](std::size_t u) {
      if (u == u_star) return inst.sigma[clique_base + a];
      return inst.sigma[u < u_star ? u : u - 1];
    };
    auto right = [&](std::size_t v) {
      if (v == v_star) return inst.sigma[clique_base + b];
      return inst.sigma[n_base - 1 + (v < v_star ? v : v - 1)];
    };
    for (std::size_t j = 0; j < t; ++j) {
      if (!inst.x[i][j]) continue;
      const std::size_t u = j / n_base;
      const std::size_t v = j % n_base;
      inst.local[i].emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
      const Edge e = make_edge(left(u), right(v));
      inst.players[i].push_back(e);
      inst.multigraph.apply(e.u, e.v, +1);
    }
  }
  inst.v_bipartite.assign(inst.sigma.begin(), inst.sigma.begin() + clique_base);
  inst.v_clique.assign(inst.sigma.begin() + clique_base, inst.sigma.end());
  std::sort(inst.v_bipartite.begin(), inst.v_bipartite.end());
  std::sort(inst.v_clique.begin(), inst.v_clique.end());
  return inst;
}

Coloring witness_coloring_simultaneous(const SimultaneousInstance& inst) {
  if (inst.theta) throw PreconditionError("witness coloring exists only for theta = 0");
  const std::size_t half = inst.n_base - 1;
  std::vector<Color> colors(inst.n, 2);
  for (std::size_t pos = 0; pos < 2 * half; ++pos) colors[inst.sigma[pos]] = pos < half ? 0 : 1;
  return Coloring(colors);
}

}  // namespace chromstream
