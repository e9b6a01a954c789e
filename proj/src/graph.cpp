#include "orientk/graph.hpp"

#include <algorithm>
#include <numeric>

namespace orientk {

namespace detail {

VertexId LabelTable::add(std::string label) {
  if (label.empty()) throw GraphError("empty vertex label");
  if (index_.contains(label)) throw GraphError("duplicate vertex: " + label);
  const auto id = static_cast<VertexId>(labels_.size());
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  return id;
}

VertexId LabelTable::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw GraphError("unknown vertex: " + std::string(label));
}

std::optional<VertexId> LabelTable::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& LabelTable::label(VertexId v) const {
  check(v);
  return labels_[static_cast<std::size_t>(v)];
}

void LabelTable::check(VertexId v) const {
  if (v < 0 || v >= size())
    throw GraphError("vertex id out of range: " + std::to_string(v));
}

}  // namespace detail

VertexId Multigraph::add_vertex(std::string label) {
  const VertexId v = labels_.add(std::move(label));
  incidence_.emplace_back();
  return v;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  labels_.check(u);
  labels_.check(v);
  if (u == v) throw GraphError("self-loop at " + labels_.label(u));
  const auto e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  incidence_[static_cast<std::size_t>(u)].push_back(e);
  incidence_[static_cast<std::size_t>(v)].push_back(e);
  return e;
}

EdgeId Multigraph::add_edge(std::string_view u, std::string_view v) {
  return add_edge(labels_.id(u), labels_.id(v));
}

Endpoints Multigraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw GraphError("edge id out of range: " + std::to_string(e));
  return edges_[static_cast<std::size_t>(e)];
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
  labels_.check(v);
  return incidence_[static_cast<std::size_t>(v)];
}

int Multigraph::degree(VertexId v) const {
  return static_cast<int>(incident(v).size());
}

int Multigraph::degree_between(VertexId u, VertexId v) const {
  labels_.check(v);
  if (u == v) throw GraphError("degree_between needs distinct vertices");
  const auto inc = incident(u);
  return static_cast<int>(std::count_if(inc.begin(), inc.end(), [&](EdgeId e) {
    return edges_[static_cast<std::size_t>(e)].other(u) == v;
  }));
}

VertexId Multidigraph::add_vertex(std::string label) {
  const VertexId v = labels_.add(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

EdgeId Multidigraph::add_arc(VertexId tail, VertexId head) {
  labels_.check(tail);
  labels_.check(head);
  if (tail == head) throw GraphError("self-loop at " + labels_.label(tail));
  const auto a = static_cast<EdgeId>(arcs_.size());
  arcs_.push_back({tail, head});
  out_[static_cast<std::size_t>(tail)].push_back(a);
  in_[static_cast<std::size_t>(head)].push_back(a);
  return a;
}

EdgeId Multidigraph::add_arc(std::string_view tail, std::string_view head) {
  return add_arc(labels_.id(tail), labels_.id(head));
}

Endpoints Multidigraph::arc(EdgeId a) const {
  if (a < 0 || a >= arc_count())
    throw GraphError("arc id out of range: " + std::to_string(a));
  return arcs_[static_cast<std::size_t>(a)];
}

std::span<const EdgeId> Multidigraph::out_arcs(VertexId v) const {
  labels_.check(v);
  return out_[static_cast<std::size_t>(v)];
}

std::span<const EdgeId> Multidigraph::in_arcs(VertexId v) const {
  labels_.check(v);
  return in_[static_cast<std::size_t>(v)];
}

int Multidigraph::indegree(VertexId v) const {
  return static_cast<int>(in_arcs(v).size());
}

int Multidigraph::outdegree(VertexId v) const {
  return static_cast<int>(out_arcs(v).size());
}

bool PartialOrientation::is_total() const {
  return std::none_of(dirs_.begin(), dirs_.end(),
                      [](Direction d) { return d == Direction::Undecided; });
}

int PartialOrientation::undecided_count() const {
  return static_cast<int>(
      std::count(dirs_.begin(), dirs_.end(), Direction::Undecided));
}

VertexId head_of(const Multigraph& g, EdgeId e, Direction d) {
  const Endpoints ends = g.edge(e);
  switch (d) {
    case Direction::Forward:
      return ends.second;
    case Direction::Reversed:
      return ends.first;
    case Direction::Undecided:
      break;
  }
  throw GraphError("edge " + std::to_string(e) + " is undecided");
}

VertexId tail_of(const Multigraph& g, EdgeId e, Direction d) {
  return g.edge(e).other(head_of(g, e, d));
}

int degree(const Multigraph& g, std::string_view v) {
  return g.degree(g.id(v));
}

int degree_between(const Multigraph& g, std::string_view u,
                   std::string_view v) {
  return g.degree_between(g.id(u), g.id(v));
}

int indegree(const Multidigraph& d, std::string_view v) {
  return d.indegree(d.id(v));
}

int outdegree(const Multidigraph& d, std::string_view v) {
  return d.outdegree(d.id(v));
}

Multidigraph orient(const Multigraph& g, const PartialOrientation& o) {
  if (o.size() != g.edge_count())
    throw GraphError("orientation length " + std::to_string(o.size()) +
                     " does not match edge count " +
                     std::to_string(g.edge_count()));
  Multidigraph d;
  for (const auto& label : g.labels()) d.add_vertex(label);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!o.decided(e))
      throw GraphError("edge " + std::to_string(e) + " is undecided");
    const VertexId head = head_of(g, e, o[e]);
    d.add_arc(g.edge(e).other(head), head);
  }
  return d;
}

UnderlyingGraph underlying(const Multidigraph& d) {
  UnderlyingGraph result;
  for (const auto& label : d.labels()) result.graph.add_vertex(label);
  result.orientation = PartialOrientation(d.arc_count(), Direction::Forward);
  // Edges list the lower vertex id first, so antiparallel arcs become
  // parallel edges with opposite directions.
  for (EdgeId a = 0; a < d.arc_count(); ++a) {
    const Endpoints arc = d.arc(a);
    result.graph.add_edge(std::min(arc.first, arc.second), std::max(arc.first, arc.second));
    if (arc.first > arc.second) result.orientation.set(a, Direction::Reversed);
  }
  return result;
}

Multidigraph reorient(const Multidigraph& d, std::span<const EdgeId> reversal) {
  std::vector<bool> flip(static_cast<std::size_t>(d.arc_count()), false);
  for (EdgeId a : reversal) {
    if (a < 0 || a >= d.arc_count())
      throw GraphError("arc id out of range: " + std::to_string(a));
    flip[static_cast<std::size_t>(a)] = true;
  }
  Multidigraph out;
  for (const auto& label : d.labels()) out.add_vertex(label);
  for (EdgeId a = 0; a < d.arc_count(); ++a) {
    const Endpoints ends = d.arc(a);
    if (flip[static_cast<std::size_t>(a)])
      out.add_arc(ends.second, ends.first);
    else
      out.add_arc(ends.first, ends.second);
  }
  return out;
}

bool is_eulerian(const Multigraph& g) {
  const int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) % 2 != 0) return false;

  // Union-find over edges; every vertex with an edge must share one root.
  std::vector<VertexId> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  };
  for (const Endpoints& e : g.edges())
    parent[static_cast<std::size_t>(find(e.first))] = find(e.second);

  std::optional<VertexId> root;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    const VertexId r = find(v);
    if (root && *root != r) return false;
    root = r;
  }
  return true;
}

}  // namespace orientk
