#include <istream>
#include <ostream>
#include <sstream>

#include "chromstream/cluster_packing.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/graph_io.hpp"

namespace chromstream {

void write_cpg(std::ostream& out, const ClusterPackingGraph& cpg) {
  out << "#cpg v1 n=" << cpg.num_vertices() << " k=" << cpg.k << " r=" << cpg.r
      << " t=" << cpg.t() << " layout=" << layout_name(cpg.layout) << '\n';
  for (std::size_t i = 0; i < cpg.t(); ++i) {
    for (std::size_t j = 0; j < cpg.clusters[i].size(); ++j) {
      out << "C " << i << ' ' << j;
      for (Vertex v : cpg.clusters[i][j]) out << ' ' << v;
      out << '\n';
    }
  }
}

std::string cpg_to_string(const ClusterPackingGraph& cpg) {
  std::ostringstream out;
  write_cpg(out, cpg);
  return out.str();
}

ClusterPackingGraph read_cpg(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty cpg file");
  const HeaderFields header = parse_header(line, "#cpg");
  const std::uint64_t n = parse_unsigned(header.get("n"), 1);
  const std::uint64_t k = parse_unsigned(header.get("k"), 1);
  const std::uint64_t r = parse_unsigned(header.get("r"), 1);
  const std::uint64_t t = parse_unsigned(header.get("t"), 1);
  if (n > kNoVertex) throw ParseError(1, "vertex count too large");
  Layout layout;
  try {
    layout = layout_from_name(header.get("layout"));
  } catch (const ArgumentError& e) {
    throw ParseError(1, e.what());
  }

  std::vector<Cluster> clusters(t);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag, token;
    fields >> tag;
    if (tag != "C") throw ParseError(line_no, "expected a clique line starting with 'C'");
    std::vector<std::uint64_t> values;
    while (fields >> token) values.push_back(parse_unsigned(token, line_no));
    if (values.size() != 2 + k) {
      throw ParseError(line_no, "expected cluster index, clique index and " + std::to_string(k) +
                                    " vertices");
    }
    const std::uint64_t i = values[0];
    const std::uint64_t j = values[1];
    if (i >= t) throw ParseError(line_no, "cluster index out of range");
    if (j != clusters[i].size()) {
      throw ParseError(line_no, "clique indices of a cluster must be consecutive from 0");
    }
    Clique clique;
    for (std::size_t a = 2; a < values.size(); ++a) {
      if (values[a] >= n) throw ParseError(line_no, "vertex id out of range");
      clique.push_back(static_cast<Vertex>(values[a]));
    }
    clusters[i].push_back(std::move(clique));
  }
  try {
    return make_cluster_packing(static_cast<Vertex>(n), k, r, layout, std::move(clusters));
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(0, e.what());
  }
}

ClusterPackingGraph cpg_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_cpg(in);
}

nlohmann::json family_to_json(const SetFamily& family) {
  return {{"d", family.d}, {"w", family.w}, {"theta", family.theta}, {"sets", family.sets}};
}

SetFamily family_from_json(const nlohmann::json& doc) {
  try {
    SetFamily family;
    family.d = doc.at("d").get<std::size_t>();
    family.w = doc.at("w").get<std::size_t>();
    family.theta = doc.at("theta").get<std::size_t>();
    family.sets = doc.at("sets").get<std::vector<std::vector<std::uint32_t>>>();
    return family;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("set family: ") + e.what());
  }
}

}  // namespace chromstream
