#include <cstdlib>
#include <set>
#include <sstream>

#include "chromstream/errors.hpp"
#include "chromstream/graph_families.hpp"
#include "chromstream/rng.hpp"

namespace chromstream {

namespace {

void check_vertex_count(std::size_t n) {
  if (n >= kNoVertex) throw ArgumentError("vertex count too large");
}

void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw ArgumentError("density must lie in [0, 1]");
}

// Random cross edges between the two coin-flip sides of `members`.
void add_bipartite(Rng& rng, const std::vector<Vertex>& members, double density,
                   std::vector<Edge>& edges) {
  std::vector<bool> side(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) side[i] = random_bit(rng);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (side[i] != side[j] && coin(rng)) edges.push_back(make_edge(members[i], members[j]));
    }
  }
}

}  // namespace

Graph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  check_vertex_count(n);
  const std::uint64_t all_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > all_pairs) {
    throw ArgumentError("G(n, m) needs m <= n(n-1)/2 = " + std::to_string(all_pairs));
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  if (2 * static_cast<std::uint64_t>(m) <= all_pairs) {
    std::set<Edge> picked;
    while (picked.size() < m) {
      const auto a = static_cast<Vertex>(uniform_index(rng, n));
      const auto b = static_cast<Vertex>(uniform_index(rng, n));
      if (a != b) picked.insert(make_edge(a, b));
    }
    edges.assign(picked.begin(), picked.end());
  } else {
    std::vector<Edge> pool;
    pool.reserve(all_pairs);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) pool.push_back({a, b});
    }
    edges = random_subset(rng, pool, m);
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

Graph random_bipartite(std::size_t n, double density, std::uint64_t seed) {
  check_vertex_count(n);
  check_density(density);
  Rng rng(seed);
  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  std::vector<Edge> edges;
  add_bipartite(rng, all, density, edges);
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

PlantedClique planted_clique(std::size_t n, std::size_t m, double background_density,
                             std::uint64_t seed) {
  check_vertex_count(n);
  check_density(background_density);
  if (m > n) throw ArgumentError("planted clique larger than the vertex count");
  Rng rng(seed);
  PlantedClique out;
  out.clique = random_subset(rng, n, m);
  std::vector<bool> in_clique(n, false);
  for (Vertex v : out.clique) in_clique[v] = true;
  std::vector<Vertex> rest;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_clique[v]) rest.push_back(static_cast<Vertex>(v));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) edges.push_back({out.clique[i], out.clique[j]});
  }
  add_bipartite(rng, rest, background_density, edges);
  out.graph = Graph(static_cast<Vertex>(n), std::move(edges));
  return out;
}

Graph make_graph(const GraphSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case GraphSpec::Kind::empty:
      check_vertex_count(spec.n);
      return Graph(static_cast<Vertex>(spec.n), {});
    case GraphSpec::Kind::gnm:
      return gnm_graph(spec.n, spec.m, seed);
    case GraphSpec::Kind::bipartite:
      return random_bipartite(spec.n, spec.density, seed);
    case GraphSpec::Kind::planted:
      return planted_clique(spec.n, spec.m, spec.density, seed).graph;
  }
  throw ArgumentError("unknown graph family");
}

std::optional<std::size_t> known_chromatic_number(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::empty:
      return spec.n > 0 ? 1 : 0;
    case GraphSpec::Kind::planted:
      if (spec.m >= 2) return spec.m;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

namespace {

std::string format_density(double d) {
  std::ostringstream out;
  out << d;
  return out.str();
}

}  // namespace

std::string graph_spec_name(const GraphSpec& spec) {
  const std::string n = "n=" + std::to_string(spec.n);
  switch (spec.kind) {
    case GraphSpec::Kind::empty:
      return "empty:" + n;
    case GraphSpec::Kind::gnm:
      return "gnm:" + n + ",m=" + std::to_string(spec.m);
    case GraphSpec::Kind::bipartite:
      return "bipartite:" + n + ",density=" + format_density(spec.density);
    case GraphSpec::Kind::planted:
      return "planted:" + n + ",m=" + std::to_string(spec.m) +
             ",density=" + format_density(spec.density);
  }
  return "unknown";
}

GraphSpec parse_graph_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  GraphSpec spec;
  if (kind == "empty") {
    spec.kind = GraphSpec::Kind::empty;
    spec.density = 0.0;
  } else if (kind == "gnm") {
    spec.kind = GraphSpec::Kind::gnm;
    spec.density = 0.0;
  } else if (kind == "bipartite") {
    spec.kind = GraphSpec::Kind::bipartite;
  } else if (kind == "planted") {
    spec.kind = GraphSpec::Kind::planted;
  } else {
    throw ArgumentError("unknown graph family '" + kind + "' (empty, gnm, bipartite, planted)");
  }
  bool have_n = false;
  bool have_m = false;
  if (colon != std::string::npos) {
    std::istringstream fields(text.substr(colon + 1));
    std::string item;
    while (std::getline(fields, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ArgumentError("expected key=value in '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      char* end = nullptr;
      if (key == "n" || key == "m") {
        const unsigned long long parsed = std::strtoull(value.c_str(), &end, 10);
        if (value.empty() || *end != '\0' || value[0] == '-') {
          throw ArgumentError("'" + key + "' must be a non-negative integer");
        }
        (key == "n" ? spec.n : spec.m) = static_cast<std::size_t>(parsed);
        (key == "n" ? have_n : have_m) = true;
      } else if (key == "density") {
        spec.density = std::strtod(value.c_str(), &end);
        if (value.empty() || *end != '\0') throw ArgumentError("'density' must be a number");
      } else {
        throw ArgumentError("unknown graph parameter '" + key + "'");
      }
    }
  }
  if (!have_n) throw ArgumentError("graph spec needs n=");
  const bool needs_m = spec.kind == GraphSpec::Kind::gnm || spec.kind == GraphSpec::Kind::planted;
  if (needs_m && !have_m) throw ArgumentError("graph spec needs m=");
  return spec;
}

}  // namespace chromstream
