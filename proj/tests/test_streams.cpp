#include <doctest.h>

#include <algorithm>
#include <map>

#include "chromstream/errors.hpp"
#include "chromstream/graph_families.hpp"
#include "chromstream/streams.hpp"
#include "oracles.hpp"

using namespace chromstream;

namespace {

std::size_t line_of_parse_error(const std::string& text) {
  try {
    stream_from_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("stream construction validates events") {
  const Stream s(3, StreamModel::insertion, {{2, 0, +1}, {1, 2, +1}});
  CHECK(s.events()[0] == StreamEvent{0, 2, +1});
  CHECK_THROWS_AS(Stream(3, StreamModel::insertion, {{1, 1, +1}}), ArgumentError);
  CHECK_THROWS_AS(Stream(3, StreamModel::insertion, {{0, 3, +1}}), ArgumentError);
  CHECK_THROWS_AS(Stream(3, StreamModel::dynamic, {{0, 1, 2}}), ArgumentError);
  CHECK_THROWS_AS(Stream(3, StreamModel::insertion, {{0, 1, +1}, {1, 0, +1}}), ValidationError);
  CHECK_THROWS_AS(Stream(3, StreamModel::insertion, {{0, 1, -1}}), ValidationError);
  CHECK_THROWS_AS(Stream(3, StreamModel::dynamic, {{0, 1, +1}, {0, 1, -1}, {0, 1, -1}}),
                  ValidationError);
  CHECK_NOTHROW(Stream(3, StreamModel::dynamic, {{0, 1, +1}, {0, 1, +1}, {0, 1, -1}}));
}

TEST_CASE("cursor is one-way") {
  const Stream s(4, StreamModel::insertion, {{0, 1, +1}, {2, 3, +1}});
  StreamCursor c = s.cursor();
  CHECK(c.next()->u == 0);
  CHECK(c.consumed() == 1);
  CHECK(c.next()->u == 2);
  CHECK_FALSE(c.next().has_value());
  CHECK(c.consumed() == 2);
}

TEST_CASE("rewindable source enforces the pass limit") {
  const Stream s(2, StreamModel::insertion, {{0, 1, +1}});
  RewindableSource src(s, 2);
  auto a = src.begin_pass();
  auto b = src.begin_pass();
  CHECK(a.next().has_value());
  CHECK(b.next().has_value());
  CHECK(src.passes_used() == 2);
  CHECK_THROWS_AS(src.begin_pass(), EnvironmentError);
}

TEST_CASE("insertion streams") {
  CHECK(to_insertion_stream(Graph(5, {})).size() == 0);
  const Graph k3 = oracle::complete(3);
  const Stream plain = to_insertion_stream(k3);
  REQUIRE(plain.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(plain.events()[i].u == k3.edges()[i].u);
    CHECK(plain.events()[i].v == k3.edges()[i].v);
  }
  CHECK(to_insertion_stream(k3, 1) == to_insertion_stream(k3, 1));
  CHECK(final_graph(to_insertion_stream(k3, 4)) == k3);
}

TEST_CASE("shuffled K3 orders are uniform") {
  const Graph k3 = oracle::complete(3);
  std::map<std::vector<std::uint32_t>, std::size_t> counts;
  const std::size_t draws = 6000;
  for (std::uint64_t seed = 0; seed < draws; ++seed) {
    const Stream s = to_insertion_stream(k3, seed);
    std::vector<std::uint32_t> order;
    for (const auto& ev : s.events()) order.push_back(ev.u * 3 + ev.v);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::uint32_t>{1, 2, 5});
    ++counts[order];
  }
  REQUIRE(counts.size() == 6);
  double chi2 = 0.0;
  for (const auto& [order, c] : counts) {
    const double diff = static_cast<double>(c) - 1000.0;
    chi2 += diff * diff / 1000.0;
  }
  // 5 degrees of freedom; 0.999 quantile 20.5.
  CHECK(chi2 < 20.5);
}

TEST_CASE("dynamic streams") {
  const Graph k3 = oracle::complete(3);
  const Stream none = to_dynamic_stream(k3, {}, 1);
  CHECK(none.model() == StreamModel::dynamic);
  CHECK(none.size() == 3);
  for (const auto& ev : none.events()) CHECK(ev.delta == +1);

  // No non-edge exists in K3; the churn cap leaves the stream unchanged.
  CHECK(to_dynamic_stream(k3, {2, 1}, 1).size() == 3);

  const Graph path(5, {{0, 1}, {1, 2}, {2, 3}});
  const Stream s = to_dynamic_stream(path, {2, 1}, 3);
  CHECK(s.size() == 3 + 2 * 2);
  CHECK(final_graph(s) == path);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_bipartite(40, 0.3, seed);
    const Stream d = to_dynamic_stream(g, {50, 3}, seed);
    CHECK(d.size() == g.num_edges() + 50 * 2 * 3);
    CHECK(final_graph(d) == g);
    // Replaying never goes negative; the constructor would have thrown.
    std::map<Edge, long> running;
    bool ok = true;
    for (const auto& ev : d.events()) ok = ok && (running[{ev.u, ev.v}] += ev.delta) >= 0;
    CHECK(ok);
    CHECK(to_dynamic_stream(g, {50, 3}, seed) == d);
  }

  // Dense graph: the enumeration path for picking non-edges.
  const Graph dense = gnm_graph(12, 60, 2);
  const Stream ds = to_dynamic_stream(dense, {6, 2}, 2);
  CHECK(final_graph(ds) == dense);
  CHECK(ds.size() == 60 + 6 * 4);
}

TEST_CASE("stream text format") {
  const Graph g = random_bipartite(30, 0.4, 5);
  for (const Stream& s : {to_insertion_stream(g, 3), to_dynamic_stream(g, {20, 2}, 3), Stream()}) {
    const std::string text = stream_to_string(s);
    CHECK(stream_from_string(text) == s);
    CHECK(stream_to_string(stream_from_string(text)) == text);
  }
  CHECK(stream_to_string(Stream(3, StreamModel::dynamic, {{2, 1, +1}, {1, 2, -1}})) ==
        "#stream v1 n=3 model=dyn\n1 2 +1\n1 2 -1\n");
  CHECK(stream_from_string("#stream v1 n=3 model=ins\n2 1 +1\n").events()[0] == StreamEvent{1, 2, +1});

  CHECK(line_of_parse_error("#stream v1 n=3 model=ins\n0 0 +1\n") == 2);
  CHECK(line_of_parse_error("#stream v1 n=3 model=ins\n0 1 +2\n") == 2);
  CHECK(line_of_parse_error("#stream v1 n=3 model=ins\n0 1\n") == 2);
  CHECK(line_of_parse_error("#stream v1 n=3 model=ins\n0 1 +1\n0 5 +1\n") == 3);
  CHECK(line_of_parse_error("#stream v1 n=3 model=xyz\n") == 1);
  CHECK(line_of_parse_error("") == 1);
  CHECK_THROWS_AS(stream_from_string("#stream v1 n=3 model=dyn\n0 1 -1\n"), ValidationError);
  CHECK_THROWS_AS(stream_from_string("#stream v1 n=3 model=ins\n0 1 +1\n1 0 +1\n"), ValidationError);
  try {
    stream_from_string("#stream v1 n=3 model=dyn\n0 1 +1\n\n0 2 -1\n");
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}
