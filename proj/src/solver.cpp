#include "chromstream/solver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace chromstream {

namespace {

// Component-local adjacency with sorted neighbor lists.
struct LocalGraph {
  std::vector<std::vector<std::uint32_t>> adj;

  std::size_t size() const { return adj.size(); }
  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  }
};

// `local` is a scratch array of size n filled with kNoVertex; it is restored
// before returning.
LocalGraph make_local(const Graph& g, const std::vector<Vertex>& members,
                      std::vector<Vertex>& local) {
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
  LocalGraph lg;
  lg.adj.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbors(members[i])) {
      if (local[w] != kNoVertex) lg.adj[i].push_back(local[w]);
    }
    std::sort(lg.adj[i].begin(), lg.adj[i].end());
  }
  for (Vertex v : members) local[v] = kNoVertex;
  return lg;
}

class NodeCounter {
 public:
  explicit NodeCounter(SolverLimits limits) : limits_(limits) {}
  void tick() {
    if (limits_.max_nodes != 0 && ++nodes_ > limits_.max_nodes) throw SolverBudgetExceeded();
  }

 private:
  SolverLimits limits_;
  std::uint64_t nodes_ = 0;
};

std::optional<std::vector<Color>> two_color(const LocalGraph& g) {
  std::vector<int> side(g.size(), -1);
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<std::uint32_t> queue{s};
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t w : g.adj[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return std::vector<Color>(side.begin(), side.end());
}

std::vector<Color> dsatur_greedy(const LocalGraph& g) {
  const std::size_t m = g.size();
  std::vector<Color> color(m, 0);
  std::vector<bool> done(m, false);
  std::vector<std::set<Color>> seen(m);
  // Key: (saturation, degree, -vertex) so that the largest key is chosen and
  // ties fall to the lowest id.
  using Key = std::tuple<std::size_t, std::size_t, std::int64_t>;
  std::set<Key> queue;
  auto key = [&](std::uint32_t v) {
    return Key{seen[v].size(), g.adj[v].size(), -static_cast<std::int64_t>(v)};
  };
  for (std::uint32_t v = 0; v < m; ++v) queue.insert(key(v));
  while (!queue.empty()) {
    auto top = std::prev(queue.end());
    const auto v = static_cast<std::uint32_t>(-std::get<2>(*top));
    queue.erase(top);
    Color c = 0;
    while (seen[v].count(c)) ++c;
    color[v] = c;
    done[v] = true;
    for (std::uint32_t w : g.adj[v]) {
      if (done[w] || seen[w].count(c)) continue;
      queue.erase(key(w));
      seen[w].insert(c);
      queue.insert(key(w));
    }
  }
  return color;
}

std::vector<std::uint32_t> clique_in(const LocalGraph& g) {
  const std::size_t m = g.size();
  if (m == 0) return {};
  // Degeneracy ordering by repeated minimum-degree removal (bucket queue).
  std::vector<std::size_t> deg(m);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < m; ++v) max_deg = std::max(max_deg, deg[v] = g.adj[v].size());
  std::vector<std::vector<std::uint32_t>> buckets(max_deg + 1);
  for (std::uint32_t v = 0; v < m; ++v) buckets[deg[v]].push_back(v);
  std::vector<bool> removed(m, false);
  std::vector<std::size_t> position(m);
  std::size_t next = 0;
  std::size_t cursor = 0;
  while (next < m) {
    cursor = std::min(cursor, max_deg);
    while (buckets[cursor].empty()) ++cursor;
    const std::uint32_t v = buckets[cursor].back();
    buckets[cursor].pop_back();
    if (removed[v] || deg[v] != cursor) continue;
    removed[v] = true;
    position[v] = next++;
    for (std::uint32_t w : g.adj[v]) {
      if (!removed[w]) {
        buckets[--deg[w]].push_back(w);
        if (deg[w] < cursor) cursor = deg[w];
      }
    }
  }

  std::vector<std::uint32_t> best{0};
  std::vector<std::uint32_t> later;
  for (std::uint32_t v = 0; v < m; ++v) {
    later.clear();
    for (std::uint32_t w : g.adj[v]) {
      if (position[w] > position[v]) later.push_back(w);
    }
    if (later.size() + 1 <= best.size()) continue;
    std::sort(later.begin(), later.end(),
              [&](std::uint32_t a, std::uint32_t b) { return position[a] > position[b]; });
    std::vector<std::uint32_t> clique{v};
    for (std::uint32_t w : later) {
      bool fits = std::all_of(clique.begin(), clique.end(),
                              [&](std::uint32_t c) { return g.adjacent(c, w); });
      if (fits) clique.push_back(w);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

class KColorSearch {
 public:
  KColorSearch(const LocalGraph& g, std::size_t k, NodeCounter& counter)
      : g_(g), k_(k), counter_(counter), color_(g.size(), kUncolored),
        blocked_(g.size() * k, 0), saturation_(g.size(), 0) {}

  std::optional<std::vector<Color>> run() {
    if (!extend(0, 0)) return std::nullopt;
    return std::vector<Color>(color_.begin(), color_.end());
  }

 private:
  static constexpr Color kUncolored = static_cast<Color>(-1);

  std::uint32_t select() const {
    std::uint32_t best = 0;
    bool have = false;
    for (std::uint32_t v = 0; v < g_.size(); ++v) {
      if (color_[v] != kUncolored) continue;
      if (!have || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.adj[v].size() > g_.adj[best].size())) {
        best = v;
        have = true;
      }
    }
    return best;
  }

  void assign(std::uint32_t v, Color c) {
    color_[v] = c;
    for (std::uint32_t w : g_.adj[v]) {
      if (blocked_[w * k_ + c]++ == 0) ++saturation_[w];
    }
  }

  void unassign(std::uint32_t v, Color c) {
    color_[v] = kUncolored;
    for (std::uint32_t w : g_.adj[v]) {
      if (--blocked_[w * k_ + c] == 0) --saturation_[w];
    }
  }

  bool extend(std::size_t colored, std::size_t used) {
    if (colored == g_.size()) return true;
    counter_.tick();
    const std::uint32_t v = select();
    const std::size_t limit = std::min(used + 1, k_);
    for (Color c = 0; c < limit; ++c) {
      if (blocked_[v * k_ + c] != 0) continue;
      assign(v, c);
      if (extend(colored + 1, std::max<std::size_t>(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  const LocalGraph& g_;
  std::size_t k_;
  NodeCounter& counter_;
  std::vector<Color> color_;
  std::vector<std::uint32_t> blocked_;
  std::vector<std::size_t> saturation_;
};

std::size_t count_colors(const std::vector<Color>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::size_t count_colors_dense(const std::vector<Color>& colors) {
  std::vector<Color> sorted(colors);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::optional<std::vector<Color>> k_color_component(const LocalGraph& g, std::size_t k,
                                                    NodeCounter& counter) {
  if (k >= g.size()) {
    std::vector<Color> out(g.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Color>(i);
    return out;
  }
  if (k == 0) return std::nullopt;
  if (k == 1) return std::nullopt;  // component has >= 2 vertices, so an edge
  if (k == 2) return two_color(g);
  if (clique_in(g).size() > k) return std::nullopt;
  auto greedy = dsatur_greedy(g);
  if (count_colors_dense(greedy) <= k) return greedy;
  return KColorSearch(g, k, counter).run();
}

// Merges per-component colorings; nullopt from any component aborts.
template <typename Solve>
std::optional<Coloring> solve_by_component(const Graph& g, Solve&& solve) {
  std::vector<Color> raw(g.num_vertices(), 0);
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (const auto& members : connected_components(g)) {
    if (members.size() < 2) continue;
    const LocalGraph lg = make_local(g, members, local);
    std::optional<std::vector<Color>> part = solve(lg);
    if (!part) return std::nullopt;
    for (std::size_t i = 0; i < members.size(); ++i) raw[members[i]] = (*part)[i];
  }
  return Coloring(raw);
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<Coloring> find_k_coloring(const Graph& g, std::size_t k, SolverLimits limits) {
  if (k == 0) {
    if (g.num_vertices() == 0) return Coloring{};
    return std::nullopt;
  }
  NodeCounter counter(limits);
  return solve_by_component(
      g, [&](const LocalGraph& lg) { return k_color_component(lg, k, counter); });
}

std::optional<Coloring> minimum_coloring(const Graph& g, std::optional<std::size_t> cap,
                                         SolverLimits limits) {
  NodeCounter counter(limits);
  return solve_by_component(g, [&](const LocalGraph& lg) -> std::optional<std::vector<Color>> {
    const std::size_t lower = clique_in(lg).size();
    if (cap && lower > *cap) return std::nullopt;
    auto greedy = dsatur_greedy(lg);
    const std::size_t upper = count_colors(greedy);
    for (std::size_t k = lower; k < upper; ++k) {
      if (cap && k > *cap) return std::nullopt;
      auto found = k == 2 ? two_color(lg) : KColorSearch(lg, k, counter).run();
      if (found) return found;
    }
    if (cap && upper > *cap) return std::nullopt;
    return greedy;
  });
}

std::optional<std::size_t> chromatic_number(const Graph& g, std::optional<std::size_t> cap,
                                            SolverLimits limits) {
  auto best = minimum_coloring(g, cap, limits);
  if (!best) return std::nullopt;
  return best->num_colors();
}

Coloring dsatur_coloring(const Graph& g) {
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  return Coloring(dsatur_greedy(make_local(g, all, local)));
}

std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> best;
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (const auto& members : connected_components(g)) {
    if (members.size() <= best.size()) continue;
    const auto clique = clique_in(make_local(g, members, local));
    if (clique.size() > best.size()) {
      best.clear();
      for (std::uint32_t i : clique) best.push_back(members[i]);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace chromstream
