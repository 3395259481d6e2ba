#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromstream/coloring.hpp"
#include "chromstream/graph.hpp"

namespace chromstream {

// Text format: "#graph v1 n=<N>" followed by one "u v" line per edge,
// 0-indexed, u < v, sorted, LF line endings.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

// Accepts edge lines in any order; rejects duplicates, self-loops, u > v
// and out-of-range ids with a ParseError carrying the line number.
Graph read_graph(std::istream& in);
Graph graph_from_string(const std::string& text);

// {"colors":[...],"n":N,"num_colors":K}
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

// Whole-file helpers; throw IoError when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Splits "key=value" header tokens, e.g. parse_header_fields("#cpg v1 n=4 k=2").
// The first two tokens (tag, version) are checked against the arguments.
struct HeaderFields {
  std::vector<std::pair<std::string, std::string>> fields;
  const std::string& get(const std::string& key) const;
};
HeaderFields parse_header(const std::string& line, const std::string& tag);

std::uint64_t parse_unsigned(const std::string& token, std::size_t line_no);

}  // namespace chromstream
