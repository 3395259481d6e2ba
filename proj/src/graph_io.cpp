#include "chromstream/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "chromstream/errors.hpp"

namespace chromstream {

void write_graph(std::ostream& out, const Graph& g) {
  out << "#graph v1 n=" << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

std::uint64_t parse_unsigned(const std::string& token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

const std::string& HeaderFields::get(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  throw ParseError(1, "header is missing field '" + key + "'");
}

HeaderFields parse_header(const std::string& line, const std::string& tag) {
  std::istringstream in(line);
  std::string first, version;
  in >> first >> version;
  if (first != tag) throw ParseError(1, "expected header starting with '" + tag + "'");
  if (version != "v1") throw ParseError(1, "unsupported format version '" + version + "'");
  HeaderFields out;
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError(1, "malformed header field '" + token + "'");
    out.fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return out;
}

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty graph file");
  const HeaderFields header = parse_header(line, "#graph");
  const std::uint64_t n = parse_unsigned(header.get("n"), 1);
  if (n > kNoVertex) throw ParseError(1, "vertex count too large");

  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError(line_no, "expected 'u v'");
    }
    const std::uint64_t u = parse_unsigned(a, line_no);
    const std::uint64_t v = parse_unsigned(b, line_no);
    if (u >= v) throw ParseError(line_no, "edge must satisfy u < v");
    if (v >= n) throw ParseError(line_no, "vertex id out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    lines.push_back(line_no);
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return edges[x] < edges[y]; });
  std::size_t repeat = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      repeat = repeat == 0 ? lines[order[i]] : std::min(repeat, lines[order[i]]);
    }
  }
  if (repeat != 0) throw ParseError(repeat, "duplicate edge");
  try {
    return Graph(static_cast<Vertex>(n), std::move(edges));
  } catch (const ArgumentError& e) {
    throw ParseError(0, e.what());
  }
}

Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

nlohmann::json coloring_to_json(const Coloring& c) {
  nlohmann::json j;
  j["n"] = c.size();
  j["num_colors"] = c.num_colors();
  j["colors"] = std::vector<Color>(c.colors().begin(), c.colors().end());
  return j;
}

Coloring coloring_from_json(const nlohmann::json& j) {
  try {
    const auto colors = j.at("colors").get<std::vector<Color>>();
    if (j.at("n").get<std::size_t>() != colors.size()) {
      throw ParseError(0, "coloring 'n' does not match the colors array");
    }
    return Coloring(colors);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed coloring JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace chromstream
