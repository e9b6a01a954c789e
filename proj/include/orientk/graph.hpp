#pragma once

// Undirected multigraphs, multidigraphs and (partial) orientations.
//
// Vertices are identified by a dense index and carry a unique string label.
// Edges and arcs are identified by their insertion position; that id is the
// only handle orientations and witnesses use, since endpoint pairs are
// ambiguous once parallel edges exist.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace orientk {

using VertexId = int;
using EdgeId = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Endpoints {
  VertexId first;
  VertexId second;

  VertexId other(VertexId v) const { return v == first ? second : first; }
  bool operator==(const Endpoints&) const = default;
};

namespace detail {

class LabelTable {
 public:
  VertexId add(std::string label);
  VertexId id(std::string_view label) const;
  std::optional<VertexId> find(std::string_view label) const;
  const std::string& label(VertexId v) const;
  std::span<const std::string> labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  void check(VertexId v) const;

  bool operator==(const LabelTable& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

}  // namespace detail

class Multigraph {
 public:
  Multigraph() = default;

  VertexId add_vertex(std::string label);
  EdgeId add_edge(VertexId u, VertexId v);
  EdgeId add_edge(std::string_view u, std::string_view v);

  int vertex_count() const { return labels_.size(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& label(VertexId v) const { return labels_.label(v); }
  std::span<const std::string> labels() const { return labels_.labels(); }
  VertexId id(std::string_view label) const { return labels_.id(label); }
  std::optional<VertexId> find(std::string_view label) const {
    return labels_.find(label);
  }

  Endpoints edge(EdgeId e) const;
  std::span<const Endpoints> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const;

  int degree(VertexId v) const;
  int degree_between(VertexId u, VertexId v) const;

  bool operator==(const Multigraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  detail::LabelTable labels_;
  std::vector<Endpoints> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

class Multidigraph {
 public:
  Multidigraph() = default;

  VertexId add_vertex(std::string label);
  EdgeId add_arc(VertexId tail, VertexId head);
  EdgeId add_arc(std::string_view tail, std::string_view head);

  int vertex_count() const { return labels_.size(); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const std::string& label(VertexId v) const { return labels_.label(v); }
  std::span<const std::string> labels() const { return labels_.labels(); }
  VertexId id(std::string_view label) const { return labels_.id(label); }
  std::optional<VertexId> find(std::string_view label) const {
    return labels_.find(label);
  }

  /// `first` is the tail, `second` the head.
  Endpoints arc(EdgeId a) const;
  std::span<const Endpoints> arcs() const { return arcs_; }
  std::span<const EdgeId> out_arcs(VertexId v) const;
  std::span<const EdgeId> in_arcs(VertexId v) const;

  int indegree(VertexId v) const;
  int outdegree(VertexId v) const;

  bool operator==(const Multidigraph& other) const {
    return labels_ == other.labels_ && arcs_ == other.arcs_;
  }

 private:
  detail::LabelTable labels_;
  std::vector<Endpoints> arcs_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

enum class Direction : std::uint8_t { Forward, Reversed, Undecided };

/// Per-edge direction relative to the stored endpoint order of a Multigraph.
class PartialOrientation {
 public:
  PartialOrientation() = default;
  explicit PartialOrientation(int edge_count,
                              Direction fill = Direction::Undecided)
      : dirs_(static_cast<std::size_t>(edge_count), fill) {}

  int size() const { return static_cast<int>(dirs_.size()); }
  Direction operator[](EdgeId e) const { return dirs_.at(static_cast<std::size_t>(e)); }
  void set(EdgeId e, Direction d) { dirs_.at(static_cast<std::size_t>(e)) = d; }
  bool decided(EdgeId e) const { return (*this)[e] != Direction::Undecided; }
  bool is_total() const;
  int undecided_count() const;
  std::span<const Direction> values() const { return dirs_; }

  bool operator==(const PartialOrientation&) const = default;

 private:
  std::vector<Direction> dirs_;
};

/// The head of edge `e` of `g` under direction `d` (which must be decided).
VertexId head_of(const Multigraph& g, EdgeId e, Direction d);
VertexId tail_of(const Multigraph& g, EdgeId e, Direction d);

int degree(const Multigraph& g, std::string_view v);
int degree_between(const Multigraph& g, std::string_view u, std::string_view v);
int indegree(const Multidigraph& d, std::string_view v);
int outdegree(const Multidigraph& d, std::string_view v);

Multidigraph orient(const Multigraph& g, const PartialOrientation& o);

struct UnderlyingGraph {
  Multigraph graph;
  PartialOrientation orientation;
};

UnderlyingGraph underlying(const Multidigraph& d);

Multidigraph reorient(const Multidigraph& d, std::span<const EdgeId> reversal);

/// Connected (isolated vertices ignored) with every degree even.
bool is_eulerian(const Multigraph& g);

}  // namespace orientk
