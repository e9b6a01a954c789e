#pragma once

// Shared generators and independent oracles for the test suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orientk/connectivity.hpp"
#include "orientk/graph.hpp"
#include "orientk/reduction.hpp"

namespace support {

using namespace orientk;

inline std::string vname(int i) { return "v" + std::to_string(i); }

inline Multigraph empty_graph(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vname(i));
  return g;
}

inline Multidigraph empty_digraph(int n) {
  Multidigraph d;
  for (int i = 0; i < n; ++i) d.add_vertex(vname(i));
  return d;
}

inline Multigraph complete_graph(int n, int multiplicity = 1) {
  Multigraph g = empty_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int r = 0; r < multiplicity; ++r) g.add_edge(i, j);
  return g;
}

inline Multigraph cycle_graph(int n) {
  Multigraph g = empty_graph(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Multidigraph complete_digraph(int n) {
  Multidigraph d = empty_digraph(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) d.add_arc(i, j);
  return d;
}

inline Multidigraph directed_cycle(int n) {
  Multidigraph d = empty_digraph(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

inline Multigraph random_multigraph(std::mt19937_64& rng, int min_vertices,
                                    int max_vertices, int max_edges) {
  const int n = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
  Multigraph g = empty_graph(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m && n > 1; ++i) {
    const int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_edge(u, v);
  }
  return g;
}

inline Multidigraph random_digraph(std::mt19937_64& rng, int min_vertices,
                                   int max_vertices, int max_arcs) {
  const int n = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_arcs)(rng);
  Multidigraph d = empty_digraph(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m && n > 1; ++i) {
    const int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    d.add_arc(u, v);
  }
  return d;
}

/// Random 2-edge-connected multigraph: a Hamiltonian cycle plus chords.
inline Multigraph random_two_edge_connected(std::mt19937_64& rng, int max_vertices,
                                            int max_extra) {
  const int n = std::uniform_int_distribution<int>(3, max_vertices)(rng);
  Multigraph g = empty_graph(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < n; ++i)
    g.add_edge(order[static_cast<std::size_t>(i)],
               order[static_cast<std::size_t>((i + 1) % n)]);
  const int extra = std::uniform_int_distribution<int>(0, max_extra)(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    const int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_edge(u, v);
  }
  return g;
}

/// Hierholzer: an Euler circuit through every edge, or nullopt. Isolated
/// vertices are ignored; an edgeless graph has the empty circuit.
inline std::optional<std::vector<EdgeId>> euler_circuit(const Multigraph& g) {
  if (g.edge_count() == 0) return std::vector<EdgeId>{};
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return std::nullopt;
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<std::size_t> next(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<std::pair<VertexId, EdgeId>> stack{{g.edge(0).first, -1}};
  std::vector<EdgeId> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    const auto& inc = g.incident(v);
    auto& i = next[static_cast<std::size_t>(v)];
    while (i < inc.size() && used[static_cast<std::size_t>(inc[i])]) ++i;
    if (i == inc.size()) {
      if (stack.back().second >= 0) circuit.push_back(stack.back().second);
      stack.pop_back();
      continue;
    }
    const EdgeId e = inc[i];
    used[static_cast<std::size_t>(e)] = true;
    stack.push_back({g.edge(e).other(v), e});
  }
  if (static_cast<int>(circuit.size()) != g.edge_count()) return std::nullopt;
  return circuit;
}

/// The circuit is a closed trail using each edge exactly once.
inline bool is_euler_circuit(const Multigraph& g, const std::vector<EdgeId>& c) {
  if (static_cast<int>(c.size()) != g.edge_count()) return false;
  if (c.empty()) return true;
  std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : c) ++seen.at(static_cast<std::size_t>(e));
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) return false;
  // Walk: consecutive edges share the current vertex.
  for (VertexId start : {g.edge(c[0]).first, g.edge(c[0]).second}) {
    VertexId at = start;
    bool ok = true;
    for (EdgeId e : c) {
      const Endpoints ends = g.edge(e);
      if (ends.first != at && ends.second != at) {
        ok = false;
        break;
      }
      at = ends.other(at);
    }
    if (ok && at == start) return true;
  }
  return false;
}

/// Visits every total orientation; `fn` returns false to stop.
inline void for_each_orientation(const Multigraph& g,
                                 const std::function<bool(const PartialOrientation&)>& fn) {
  const int m = g.edge_count();
  PartialOrientation o(m, Direction::Forward);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (int e = 0; e < m; ++e)
      o.set(e, (mask >> e) & 1 ? Direction::Reversed : Direction::Forward);
    if (!fn(o)) return;
  }
}

/// Every vertex has at least k in- and k out-arcs under `o`.
inline bool degrees_allow(const Multigraph& g, const PartialOrientation& o, int k) {
  std::vector<int> in(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId h = head_of(g, e, o[e]);
    ++in[static_cast<std::size_t>(h)];
    ++out[static_cast<std::size_t>(g.edge(e).other(h))];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in[static_cast<std::size_t>(v)] < k || out[static_cast<std::size_t>(v)] < k) return false;
  return true;
}

/// k-connectivity by exhaustive separator search over every ordered pair.
inline bool brute_force_k_connected(const Multidigraph& d, int k) {
  if (d.vertex_count() <= k) return false;
  for (VertexId u = 0; u < d.vertex_count(); ++u)
    for (VertexId v = u + 1; v < d.vertex_count(); ++v)
      if (brute_force_separator(d, u, v, k)) return false;
  return true;
}

/// All k-connected total orientations of g (by enumeration of 2^|E|).
inline std::vector<PartialOrientation> k_connected_orientations(const Multigraph& g, int k,
                                                                bool first_only = false) {
  std::vector<PartialOrientation> found;
  if (g.vertex_count() <= k) return found;
  for_each_orientation(g, [&](const PartialOrientation& o) {
    if (degrees_allow(g, o, k) && is_k_connected(orient(g, o), k).ok()) {
      found.push_back(o);
      if (first_only) return false;
    }
    return true;
  });
  return found;
}

/// Completions of a partial orientation that are k-connected.
inline bool has_k_connected_completion(const Multigraph& g, const PartialOrientation& p,
                                       int k) {
  std::vector<EdgeId> free;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!p.decided(e)) free.push_back(e);
  PartialOrientation o = p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i)
      o.set(free[i], (mask >> i) & 1 ? Direction::Reversed : Direction::Forward);
    if (degrees_allow(g, o, k) && is_k_connected(orient(g, o), k).ok()) return true;
  }
  return false;
}

/// Per ordered vertex pair, the number of decided arcs.
inline std::map<std::pair<VertexId, VertexId>, int> arc_counts(const Multigraph& g,
                                                               const PartialOrientation& o) {
  std::map<std::pair<VertexId, VertexId>, int> counts;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!o.decided(e)) continue;
    const VertexId h = head_of(g, e, o[e]);
    ++counts[{g.edge(e).other(h), h}];
  }
  return counts;
}

/// Random NAE instance over at most `max_vars` variables with 1..max_clauses
/// clauses of 2 or 3 literals; unused variables are dropped.
inline NaeInstance random_nae(std::mt19937_64& rng, int max_vars, int max_clauses) {
  const int clauses = std::uniform_int_distribution<int>(1, max_clauses)(rng);
  std::uniform_int_distribution<int> var(0, max_vars - 1);
  std::vector<std::vector<Literal>> raw;
  for (int c = 0; c < clauses; ++c) {
    const int width = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<Literal> clause;
    for (int i = 0; i < width; ++i) clause.push_back({var(rng), rng() % 2 == 0});
    raw.push_back(clause);
  }
  std::map<int, int> renumber;
  for (const auto& clause : raw)
    for (const Literal& lit : clause) renumber.emplace(lit.variable, 0);
  NaeInstance instance;
  for (auto& [old, fresh] : renumber) {
    fresh = static_cast<int>(instance.variables.size());
    instance.variables.push_back(std::string(1, static_cast<char>('x' + old % 3)) +
                                 std::to_string(old / 3));
  }
  for (auto clause : raw) {
    for (Literal& lit : clause) lit.variable = renumber[lit.variable];
    instance.clauses.push_back(clause);
  }
  return instance;
}

}  // namespace support
