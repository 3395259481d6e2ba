#include "chromstream/coloring.hpp"

#include <string>
#include <unordered_map>

#include "chromstream/errors.hpp"

namespace chromstream {

Coloring::Coloring(std::span<const Color> raw) : colors_(raw.size()) {
  std::unordered_map<Color, Color> relabel;
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto [it, inserted] = relabel.try_emplace(raw[v], static_cast<Color>(relabel.size()));
    colors_[v] = it->second;
  }
  num_colors_ = relabel.size();
}

Coloring Coloring::uniform(std::size_t n) {
  Coloring c;
  c.colors_.assign(n, 0);
  c.num_colors_ = n == 0 ? 0 : 1;
  return c;
}

MonochromaticEdge find_monochromatic_edge(const Graph& g, const Coloring& c) {
  if (c.size() != g.num_vertices()) {
    throw ArgumentError("coloring covers " + std::to_string(c.size()) +
                        " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  for (const Edge& e : g.edges()) {
    if (c[e.u] == c[e.v]) return {true, e};
  }
  return {};
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  return !find_monochromatic_edge(g, c).found;
}

Coloring product_coloring(const Coloring& c1, const Coloring& c2) {
  if (c1.size() != c2.size()) throw ArgumentError("product of colorings with different sizes");
  std::vector<Color> raw(c1.size());
  std::unordered_map<std::uint64_t, Color> pair_ids;
  for (std::size_t v = 0; v < c1.size(); ++v) {
    const std::uint64_t key = (static_cast<std::uint64_t>(c1[v]) << 32) | c2[v];
    auto [it, inserted] = pair_ids.try_emplace(key, static_cast<Color>(pair_ids.size()));
    raw[v] = it->second;
  }
  return Coloring(raw);
}

}  // namespace chromstream
