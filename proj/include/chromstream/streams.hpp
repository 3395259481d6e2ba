#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chromstream/graph.hpp"

namespace chromstream {

enum class StreamModel { insertion, dynamic };

struct StreamEvent {
  Vertex u = 0;
  Vertex v = 0;
  int delta = +1;

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

class StreamCursor;

// Immutable event sequence. Construction normalizes each pair to u < v and
// validates the model: ArgumentError for self-loops, ids >= n or a delta
// other than +1/-1; ValidationError for a repeated insertion-only pair or a
// dynamic prefix with negative multiplicity.
class Stream {
 public:
  Stream() = default;
  Stream(Vertex n, StreamModel model, std::vector<StreamEvent> events);

  Vertex num_vertices() const { return n_; }
  StreamModel model() const { return model_; }
  std::size_t size() const { return events_.size(); }
  std::span<const StreamEvent> events() const { return events_; }

  StreamCursor cursor() const;

  friend bool operator==(const Stream&, const Stream&) = default;

 private:
  Vertex n_ = 0;
  StreamModel model_ = StreamModel::insertion;
  std::vector<StreamEvent> events_;
};

// One-way iterator. The stream must outlive the cursor.
class StreamCursor {
 public:
  explicit StreamCursor(const Stream& s) : stream_(&s) {}

  std::optional<StreamEvent> next() {
    if (pos_ == stream_->size()) return std::nullopt;
    return stream_->events()[pos_++];
  }
  Vertex num_vertices() const { return stream_->num_vertices(); }
  StreamModel model() const { return stream_->model(); }
  std::size_t consumed() const { return pos_; }

 private:
  const Stream* stream_;
  std::size_t pos_ = 0;
};

inline StreamCursor Stream::cursor() const { return StreamCursor(*this); }

// Hands out a fresh cursor per pass, up to max_passes; one more request
// throws EnvironmentError.
class RewindableSource {
 public:
  RewindableSource(const Stream& s, std::size_t max_passes) : stream_(&s), max_passes_(max_passes) {}

  StreamCursor begin_pass();
  std::size_t passes_used() const { return passes_; }
  std::size_t max_passes() const { return max_passes_; }
  Vertex num_vertices() const { return stream_->num_vertices(); }
  StreamModel model() const { return stream_->model(); }

 private:
  const Stream* stream_;
  std::size_t max_passes_;
  std::size_t passes_ = 0;
};

// One +1 per edge, in edge-list order or under a seeded uniform shuffle.
Stream to_insertion_stream(const Graph& g, std::optional<std::uint64_t> shuffle_seed = {});

struct Churn {
  std::size_t extra_pairs = 0;  // non-edges inserted and deleted again
  std::size_t cycles = 0;       // insert/delete rounds per extra pair
};

// Dynamic stream whose final graph is g: every edge inserted once, and
// `extra_pairs` uniformly chosen non-edges (capped at the number available)
// each inserted and deleted `cycles` times. All events are interleaved
// uniformly at random while each pair keeps its own +1/-1 order.
Stream to_dynamic_stream(const Graph& g, Churn churn, std::uint64_t seed);

// Replays the events; every multiplicity stays non-negative by construction.
DynamicMultigraph replay(const Stream& s);
Graph final_graph(const Stream& s);

// Text format: "#stream v1 n=<N> model=<ins|dyn>", then "u v +1|-1" lines.
void write_stream(std::ostream& out, const Stream& s);
std::string stream_to_string(const Stream& s);
// ParseError (with line) for malformed lines or self-loops; ValidationError
// (with line) for model violations.
Stream read_stream(std::istream& in);
Stream stream_from_string(const std::string& text);

}  // namespace chromstream
