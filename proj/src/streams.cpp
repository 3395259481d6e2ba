#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "chromstream/errors.hpp"
#include "chromstream/graph_io.hpp"
#include "chromstream/rng.hpp"
#include "chromstream/streams.hpp"

namespace chromstream {

namespace {

struct Violation {
  std::size_t index;
  std::string message;
};

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

std::optional<Violation> find_violation(StreamModel model, const std::vector<StreamEvent>& events) {
  std::map<Edge, std::int64_t> counts;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const StreamEvent& ev = events[i];
    const Edge e{ev.u, ev.v};
    if (model == StreamModel::insertion) {
      if (ev.delta != +1) return Violation{i, "insertion-only stream contains a deletion"};
      if (++counts[e] > 1) return Violation{i, "pair " + pair_text(ev.u, ev.v) + " inserted twice"};
    } else if ((counts[e] += ev.delta) < 0) {
      return Violation{i, "pair " + pair_text(ev.u, ev.v) + " deleted more often than inserted"};
    }
  }
  return std::nullopt;
}

}  // namespace

Stream::Stream(Vertex n, StreamModel model, std::vector<StreamEvent> events)
    : n_(n), model_(model), events_(std::move(events)) {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    StreamEvent& ev = events_[i];
    if (ev.u == ev.v) throw ArgumentError("event " + std::to_string(i) + " is a self-loop");
    if (ev.u >= n_ || ev.v >= n_) {
      throw ArgumentError("event " + std::to_string(i) + " has an endpoint outside [0, n)");
    }
    if (ev.delta != 1 && ev.delta != -1) {
      throw ArgumentError("event " + std::to_string(i) + " has delta other than +1/-1");
    }
    if (ev.u > ev.v) std::swap(ev.u, ev.v);
  }
  if (auto bad = find_violation(model_, events_)) {
    throw ValidationError("event " + std::to_string(bad->index) + ": " + bad->message);
  }
}

StreamCursor RewindableSource::begin_pass() {
  if (passes_ >= max_passes_) {
    throw EnvironmentError("stream source refuses pass " + std::to_string(passes_ + 1) +
                           " (limit " + std::to_string(max_passes_) + ")");
  }
  ++passes_;
  return StreamCursor(*stream_);
}

Stream to_insertion_stream(const Graph& g, std::optional<std::uint64_t> shuffle_seed) {
  std::vector<StreamEvent> events;
  events.reserve(g.num_edges());
  for (const Edge& e : g.edges()) events.push_back({e.u, e.v, +1});
  if (shuffle_seed) {
    Rng rng(*shuffle_seed);
    std::shuffle(events.begin(), events.end(), rng);
  }
  return Stream(g.num_vertices(), StreamModel::insertion, std::move(events));
}

Stream to_dynamic_stream(const Graph& g, Churn churn, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t all_pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t available = all_pairs - g.num_edges();
  const std::size_t wanted =
      churn.cycles == 0 ? 0 : static_cast<std::size_t>(std::min<std::uint64_t>(churn.extra_pairs, available));

  std::vector<Edge> extras;
  if (wanted > 0 && wanted * 2 <= available) {
    std::set<Edge> picked;
    while (picked.size() < wanted) {
      const auto a = static_cast<Vertex>(uniform_index(rng, n));
      const auto b = static_cast<Vertex>(uniform_index(rng, n));
      if (a == b || g.has_edge(a, b)) continue;
      picked.insert(make_edge(a, b));
    }
    extras.assign(picked.begin(), picked.end());
    std::shuffle(extras.begin(), extras.end(), rng);
  } else if (wanted > 0) {
    std::vector<Edge> pool;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!g.has_edge(a, b)) pool.push_back({a, b});
      }
    }
    extras = random_subset(rng, pool, wanted);
  }

  // One token per event; owner < m is a graph edge, otherwise an extra pair.
  const std::size_t m = g.num_edges();
  std::vector<std::uint32_t> tokens;
  tokens.reserve(m + extras.size() * 2 * churn.cycles);
  for (std::size_t i = 0; i < m; ++i) tokens.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = 0; i < extras.size(); ++i) {
    tokens.insert(tokens.end(), 2 * churn.cycles, static_cast<std::uint32_t>(m + i));
  }
  std::shuffle(tokens.begin(), tokens.end(), rng);

  std::vector<std::size_t> emitted(extras.size(), 0);
  std::vector<StreamEvent> events;
  events.reserve(tokens.size());
  const auto edges = g.edges();
  for (std::uint32_t owner : tokens) {
    if (owner < m) {
      events.push_back({edges[owner].u, edges[owner].v, +1});
    } else {
      const std::size_t i = owner - m;
      const int delta = emitted[i]++ % 2 == 0 ? +1 : -1;
      events.push_back({extras[i].u, extras[i].v, delta});
    }
  }
  return Stream(g.num_vertices(), StreamModel::dynamic, std::move(events));
}

DynamicMultigraph replay(const Stream& s) {
  DynamicMultigraph m(s.num_vertices());
  for (const StreamEvent& ev : s.events()) m.apply(ev.u, ev.v, ev.delta);
  return m;
}

Graph final_graph(const Stream& s) { return finalize_multigraph(replay(s)); }

void write_stream(std::ostream& out, const Stream& s) {
  out << "#stream v1 n=" << s.num_vertices()
      << " model=" << (s.model() == StreamModel::insertion ? "ins" : "dyn") << '\n';
  for (const StreamEvent& ev : s.events()) {
    out << ev.u << ' ' << ev.v << ' ' << (ev.delta > 0 ? "+1" : "-1") << '\n';
  }
}

std::string stream_to_string(const Stream& s) {
  std::ostringstream out;
  write_stream(out, s);
  return out.str();
}

Stream read_stream(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty stream file");
  const HeaderFields header = parse_header(line, "#stream");
  const std::uint64_t n = parse_unsigned(header.get("n"), 1);
  if (n > kNoVertex) throw ParseError(1, "vertex count too large");
  const std::string& model_name = header.get("model");
  StreamModel model;
  if (model_name == "ins") {
    model = StreamModel::insertion;
  } else if (model_name == "dyn") {
    model = StreamModel::dynamic;
  } else {
    throw ParseError(1, "model must be 'ins' or 'dyn'");
  }

  std::vector<StreamEvent> events;
  std::vector<std::size_t> lines;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b, d, extra;
    if (!(fields >> a >> b >> d) || (fields >> extra)) {
      throw ParseError(line_no, "expected 'u v +1|-1'");
    }
    const std::uint64_t u = parse_unsigned(a, line_no);
    const std::uint64_t v = parse_unsigned(b, line_no);
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    int delta;
    if (d == "+1") {
      delta = +1;
    } else if (d == "-1") {
      delta = -1;
    } else {
      throw ParseError(line_no, "delta must be +1 or -1");
    }
    events.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), delta});
    lines.push_back(line_no);
  }
  for (auto& ev : events) {
    if (ev.u > ev.v) std::swap(ev.u, ev.v);
  }
  if (auto bad = find_violation(model, events)) {
    throw ValidationError("line " + std::to_string(lines[bad->index]) + ": " + bad->message);
  }
  return Stream(static_cast<Vertex>(n), model, std::move(events));
}

Stream stream_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_stream(in);
}

}  // namespace chromstream
