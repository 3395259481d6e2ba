#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chromstream/graph.hpp"

namespace chromstream {

using Color = std::uint32_t;

// Total map vertex -> color in canonical form: the ids used are exactly
// {0, ..., num_colors - 1}, numbered by first appearance in vertex order.
class Coloring {
 public:
  Coloring() = default;

  // Relabels `raw` into canonical form; any color ids are accepted.
  explicit Coloring(std::span<const Color> raw);
  explicit Coloring(const std::vector<Color>& raw)
      : Coloring(std::span<const Color>(raw)) {}

  // Every vertex gets color 0 (zero colors when n == 0).
  static Coloring uniform(std::size_t n);

  std::size_t size() const { return colors_.size(); }
  std::size_t num_colors() const { return num_colors_; }
  std::span<const Color> colors() const { return colors_; }
  Color operator[](Vertex v) const { return colors_[v]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  std::size_t num_colors_ = 0;
};

// Throws ArgumentError when c.size() != g.num_vertices().
bool is_proper_coloring(const Graph& g, const Coloring& c);

// First monochromatic edge, if any. Same size rule as is_proper_coloring.
struct MonochromaticEdge {
  bool found = false;
  Edge edge;
};
MonochromaticEdge find_monochromatic_edge(const Graph& g, const Coloring& c);

// Common refinement: u and v share a color iff they share one in both
// factors. Throws ArgumentError on a size mismatch.
Coloring product_coloring(const Coloring& c1, const Coloring& c2);

}  // namespace chromstream
