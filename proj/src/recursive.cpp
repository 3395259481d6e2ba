#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>

#include "chromstream/errors.hpp"
#include "chromstream/instances.hpp"
#include "chromstream/rng.hpp"

namespace chromstream {

namespace {

std::size_t int_power(std::size_t base, std::size_t exponent) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ArgumentError(message);
}

std::vector<std::uint32_t> set_difference_of(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> iota_u32(std::size_t n) {
  std::vector<std::uint32_t> out(n);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

}  // namespace

Graph RecursiveInstance::union_graph() const {
  EdgeList all;
  for (const auto& list : players) all.insert(all.end(), list.begin(), list.end());
  return graph_from_edge_union(n, std::move(all));
}

std::vector<LevelShape> resolve_plan(std::size_t p, std::size_t k, const RecursivePlan& plan) {
  require(p >= 2, "player count p must be at least 2");
  require(k >= 2, "clique size k must be at least 2");
  require(plan.levels.size() == p - 2,
          "level plan must list one entry per level 3..p (" + std::to_string(p - 2) + ")");
  std::vector<LevelShape> shapes;
  LevelShape base;
  base.n = plan.base_n;
  base.r = k;
  base.t_full = grouped_cluster_count(plan.base_n, k, k);
  base.t = base.t_full;
  shapes.push_back(base);

  constexpr std::size_t kMaxN = std::numeric_limits<Vertex>::max();
  for (std::size_t a = 3; a <= p; ++a) {
    const LevelPlan& lp = plan.levels[a - 3];
    const std::string tag = "level " + std::to_string(a) + ": ";
    LevelShape shape;
    shape.r = 4 * shapes.back().n;
    require(shape.r % 8 == 0, tag + "r_a = 4 n_{a-1} must be divisible by 8");
    require(shape.r / 8 >= int_power(k, a - 1), tag + "need r_a / 8 >= k^(a-1)");
    require(shape.r <= kMaxN / k, tag + "r_a * k exceeds the vertex-id range");
    const std::size_t width = shape.r * k;
    if (lp.n == 0) {
      require(width <= kMaxN / width, tag + "(k r_a)^2 exceeds the vertex-id range");
      shape.n = width * width;
    } else {
      shape.n = lp.n;
    }
    require(shape.n <= kMaxN, tag + "n_a exceeds the vertex-id range");
    require(width <= shape.n / width, tag + "need k r_a <= sqrt(n_a)");
    require(shape.n % width == 0, tag + "k r_a must divide n_a");
    shape.t_full = grouped_cluster_count(shape.n, shape.r, k);
    require(shape.t_full >= 1, tag + "construction has no clusters");
    shape.t = lp.t_override.value_or(std::min(kDefaultMaterializedClusters, shape.t_full));
    require(shape.t >= 1 && shape.t <= shape.t_full,
            tag + "t override must lie in [1, " + std::to_string(shape.t_full) + "]");
    shapes.push_back(shape);
  }
  return shapes;
}

RecursiveInstance gen_recursive(std::size_t p, std::size_t k, const RecursivePlan& plan,
                                std::uint64_t seed, std::optional<bool> ans_override) {
  const std::vector<LevelShape> shapes = resolve_plan(p, k, plan);
  RecursiveInstance inst;
  inst.p = p;
  inst.k = k;
  inst.seed = seed;
  inst.ans_override = ans_override;
  inst.plan = plan;

  if (p == 2) {
    TwoPlayerInstance base = gen_two_player(plan.base_n, k, seed, ans_override);
    inst.n = base.cpg.num_vertices();
    inst.ans = base.ans;
    inst.players = {base.e1, base.e2};
    inst.spec = base.spec;
    inst.base = std::move(base);
    return inst;
  }

  const LevelShape& shape = shapes.back();
  const std::size_t r = shape.r;
  const std::size_t quarter = r / 4;
  const std::size_t eighth = r / 8;
  const std::size_t hit = int_power(k, p - 1);

  Rng rng(seed);
  inst.ans = random_bit(rng);
  if (ans_override) inst.ans = *ans_override;

  RecursiveLevel level;
  level.n = shape.n;
  level.r = r;
  level.t_full = shape.t_full;
  for (std::uint32_t c : random_subset(rng, shape.t_full, shape.t)) level.cluster_ids.push_back(c);
  level.cpg = construct_lines_grouped(shape.n, r, k, level.cluster_ids);
  const std::size_t t = level.cluster_ids.size();
  level.i_star = uniform_index(rng, t);

  const std::vector<std::uint32_t> all_columns = iota_u32(r);
  level.T = random_subset(rng, all_columns, quarter);
  level.intersection = random_subset(rng, level.T, hit);
  level.sets.resize(t);
  {
    const auto outside_t = set_difference_of(all_columns, level.T);
    auto s = random_subset(rng, outside_t, quarter - hit);
    s.insert(s.end(), level.intersection.begin(), level.intersection.end());
    std::sort(s.begin(), s.end());
    level.sets[level.i_star] = std::move(s);
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (i != level.i_star) level.sets[i] = random_subset(rng, all_columns, quarter);
  }

  level.x.assign(t, std::vector<std::uint8_t>(r, 0));
  for (std::size_t i = 0; i < t; ++i) {
    auto& row = level.x[i];
    const auto& s = level.sets[i];
    if (i == level.i_star) {
      for (std::uint32_t j : level.intersection) row[j] = inst.ans ? 1 : 0;
      const auto rest = set_difference_of(s, level.intersection);
      for (std::uint32_t j : random_subset(rng, rest, eighth - (inst.ans ? hit : 0))) row[j] = 1;
    } else {
      for (std::uint32_t j : random_subset(rng, s, eighth)) row[j] = 1;
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (!std::binary_search(s.begin(), s.end(), static_cast<std::uint32_t>(j))) {
        row[j] = random_bit(rng) ? 1 : 0;
      }
    }
  }

  RecursivePlan child_plan = plan;
  child_plan.levels.pop_back();
  auto child = std::make_shared<RecursiveInstance>(
      gen_recursive(p - 1, k, child_plan, derive_seed(seed, 1), inst.ans));

  // The child's spec lands on the intersection cliques, everything else on T \ I.
  level.sigma.assign(child->n, 0);
  {
    auto hit_order = level.intersection;
    std::shuffle(hit_order.begin(), hit_order.end(), rng);
    auto miss_order = set_difference_of(level.T, level.intersection);
    std::shuffle(miss_order.begin(), miss_order.end(), rng);
    std::size_t h = 0;
    std::size_t m = 0;
    for (Vertex v = 0; v < child->n; ++v) {
      const bool special = std::binary_search(child->spec.begin(), child->spec.end(), v);
      level.sigma[v] = special ? hit_order[h++] : miss_order[m++];
    }
  }

  const Cluster& target = level.cpg.clusters[level.i_star];
  inst.n = static_cast<Vertex>(shape.n);
  inst.players.assign(p, {});
  for (std::size_t i = 0; i < t; ++i) {
    for (std::uint32_t j : level.sets[i]) {
      if (!level.x[i][j]) continue;
      const Clique& c = level.cpg.clusters[i][j];
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
          inst.players[0].push_back(make_edge(c[a], c[b]));
        }
      }
    }
  }
  for (std::size_t q = 0; q < child->players.size(); ++q) {
    for (const Edge& e : child->players[q]) {
      join_cliques(inst.players[q + 1], target[level.sigma[e.u]], target[level.sigma[e.v]]);
    }
  }
  for (auto& list : inst.players) std::sort(list.begin(), list.end());

  for (std::uint32_t j : level.intersection) {
    inst.spec.insert(inst.spec.end(), target[j].begin(), target[j].end());
  }
  std::sort(inst.spec.begin(), inst.spec.end());

  inst.level = std::move(level);
  inst.child = std::move(child);
  return inst;
}

std::vector<Color> witness_palette_recursive(const RecursiveInstance& inst) {
  if (inst.ans) throw PreconditionError("witness coloring exists only for ans = 0");
  if (inst.p == 2) return witness_palette_two_player(*inst.base);

  const std::vector<Color> inner = witness_palette_recursive(*inst.child);
  const RecursiveLevel& level = *inst.level;
  const Vertex layer_size = inst.n / static_cast<Vertex>(inst.k);
  const auto offset = static_cast<Color>(inst.k * (inst.p - 1));
  std::vector<Color> colors(inst.n);
  for (Vertex v = 0; v < inst.n; ++v) colors[v] = offset + v / layer_size;
  const Cluster& target = level.cpg.clusters[level.i_star];
  for (Vertex u = 0; u < inst.child->n; ++u) {
    for (Vertex w : target[level.sigma[u]]) colors[w] = inner[u];
  }
  return colors;
}

Coloring witness_coloring_recursive(const RecursiveInstance& inst) {
  return Coloring(witness_palette_recursive(inst));
}

}  // namespace chromstream
