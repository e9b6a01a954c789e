#include "orientk/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "orientk/flow.hpp"
#include "parallel.hpp"

namespace orientk {

namespace {

int in_node(VertexId v) { return 2 * v; }
int out_node(VertexId v) { return 2 * v + 1; }

// Collapses a split-network node path into vertex labels.
Path to_vertex_path(const std::vector<int>& nodes, int vertex_nodes) {
  Path path;
  for (int node : nodes) {
    if (node >= vertex_nodes) continue;  // super terminals
    const VertexId v = node / 2;
    if (path.empty() || path.back() != v) path.push_back(v);
  }
  return path;
}

void check_pair(int n, VertexId u, VertexId v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw GraphError("vertex id out of range");
  if (u == v) throw std::invalid_argument("pair needs two distinct vertices");
}

std::vector<std::pair<VertexId, VertexId>> unordered_pairs(
    std::span<const VertexId> vertices) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      pairs.emplace_back(vertices[i], vertices[j]);
  return pairs;
}

std::vector<VertexId> all_vertices(int n) {
  std::vector<VertexId> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  return vs;
}

// Union-find connectivity of u and v in g minus removed vertices/edges.
bool connected_without(const Multigraph& g, VertexId u, VertexId v,
                       const std::vector<bool>& removed_vertex,
                       const std::vector<bool>& removed_edge) {
  std::vector<VertexId> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (removed_edge[static_cast<std::size_t>(e)]) continue;
    const Endpoints ends = g.edge(e);
    if (removed_vertex[static_cast<std::size_t>(ends.first)] ||
        removed_vertex[static_cast<std::size_t>(ends.second)])
      continue;
    parent[static_cast<std::size_t>(find(ends.first))] = find(ends.second);
  }
  return find(u) == find(v);
}

// Visits every k-subset of [0, n) in lexicographic order; stops when fn
// returns true.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

MixedCutFlow mixed_cut_flow_limited(const Multigraph& g, VertexId u,
                                    VertexId v, Capacity limit,
                                    bool* reached_limit) {
  check_pair(g.vertex_count(), u, v);
  const int n = g.vertex_count();
  const Capacity inf = g.edge_count() + 1;
  FlowNetwork net(2 * n);
  for (VertexId w = 0; w < n; ++w)
    net.add_arc(in_node(w), out_node(w), (w == u || w == v) ? inf : 2);
  for (const Endpoints& e : g.edges()) {
    net.add_arc(out_node(e.first), in_node(e.second), 1);
    net.add_arc(out_node(e.second), in_node(e.first), 1);
  }
  net.set_terminals(out_node(u), in_node(v));
  const FlowResult flow = max_flow_min_cut(net, limit);

  MixedCutFlow result;
  if (reached_limit) *reached_limit = flow.reached_limit;
  if (!flow.reached_limit) {
    const auto& side = flow.source_side;
    for (VertexId w = 0; w < n; ++w)
      if (w != u && w != v && side[static_cast<std::size_t>(in_node(w))] &&
          !side[static_cast<std::size_t>(out_node(w))])
        result.cut.vertices.push_back(w);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Endpoints ends = g.edge(e);
      const bool forward = side[static_cast<std::size_t>(out_node(ends.first))] &&
                           !side[static_cast<std::size_t>(in_node(ends.second))];
      const bool backward = side[static_cast<std::size_t>(out_node(ends.second))] &&
                            !side[static_cast<std::size_t>(in_node(ends.first))];
      if (forward || backward) result.cut.edges.push_back(e);
    }
    if (result.cut.value() != flow.value)
      throw std::logic_error("mixed cut value differs from flow value");
  }
  for (const auto& nodes : decompose_paths(net, flow))
    result.paths.push_back(to_vertex_path(nodes, 2 * n));
  return result;
}

}  // namespace

DirectedConnectivity directed_connectivity(const Multidigraph& d,
                                           VertexId from, VertexId to,
                                           int limit) {
  check_pair(d.vertex_count(), from, to);
  const int n = d.vertex_count();
  DirectedConnectivity result;
  result.from = from;
  result.to = to;

  int direct = 0;
  for (EdgeId a : d.out_arcs(from))
    if (d.arc(a).second == to) ++direct;
  result.has_direct_arc = direct > 0;
  for (int i = 0; i < direct; ++i) result.paths.push_back({from, to});
  if (result.has_direct_arc && limit >= 0) {
    result.value = n - 1;
    return result;
  }

  const Capacity inf = d.arc_count() + 1;
  FlowNetwork net(2 * n);
  for (VertexId w = 0; w < n; ++w)
    net.add_arc(in_node(w), out_node(w), (w == from || w == to) ? inf : 1);
  for (const Endpoints& a : d.arcs()) {
    if (a.second == from || a.first == to) continue;
    if (a.first == from && a.second == to) continue;
    net.add_arc(out_node(a.first), in_node(a.second), inf);
  }
  net.set_terminals(out_node(from), in_node(to));
  const FlowResult flow =
      max_flow_min_cut(net, limit >= 0 ? Capacity{limit} : kNoLimit);
  for (const auto& nodes : decompose_paths(net, flow))
    result.paths.push_back(to_vertex_path(nodes, 2 * n));

  if (result.has_direct_arc) {
    result.value = n - 1;
  } else {
    result.value = static_cast<int>(flow.value);
    if (!flow.reached_limit) {
      for (VertexId w = 0; w < n; ++w)
        if (flow.source_side[static_cast<std::size_t>(in_node(w))] &&
            !flow.source_side[static_cast<std::size_t>(out_node(w))])
          result.separator.push_back(w);
      if (static_cast<int>(result.separator.size()) != result.value)
        throw std::logic_error("separator size differs from flow value");
    }
  }
  return result;
}

PairConnectivity vertex_conn_pair(const Multidigraph& d, VertexId u,
                                  VertexId v) {
  PairConnectivity result;
  result.forward = directed_connectivity(d, u, v);
  result.backward = directed_connectivity(d, v, u);
  result.value = std::min(result.forward.value, result.backward.value);
  return result;
}

namespace {

std::optional<KConnectivity> pair_failure(const Multidigraph& d, VertexId u,
                                          VertexId v, int k) {
  for (const auto& [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
    DirectedConnectivity dir = directed_connectivity(d, from, to, k);
    if (dir.value < k) {
      KConnectivity fail;
      fail.status = KConnectivity::Status::Separated;
      fail.from = from;
      fail.to = to;
      fail.separator = std::move(dir.separator);
      return fail;
    }
  }
  return std::nullopt;
}

// A vertex with fewer than k distinct out- (in-) neighbours is cut off by
// deleting them.
std::optional<KConnectivity> neighbourhood_failure(const Multidigraph& d,
                                                   int k) {
  const int n = d.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    for (const bool outgoing : {true, false}) {
      std::vector<bool> nbr(static_cast<std::size_t>(n), false);
      int count = 0;
      for (EdgeId a : outgoing ? d.out_arcs(v) : d.in_arcs(v)) {
        const VertexId w = outgoing ? d.arc(a).second : d.arc(a).first;
        if (!nbr[static_cast<std::size_t>(w)]) {
          nbr[static_cast<std::size_t>(w)] = true;
          ++count;
        }
      }
      if (count >= k) continue;
      VertexId other = 0;
      while (other == v || nbr[static_cast<std::size_t>(other)]) ++other;
      KConnectivity fail;
      fail.status = KConnectivity::Status::Separated;
      fail.from = outgoing ? v : other;
      fail.to = outgoing ? other : v;
      for (VertexId w = 0; w < n; ++w)
        if (nbr[static_cast<std::size_t>(w)]) fail.separator.push_back(w);
      return fail;
    }
  }
  return std::nullopt;
}

}  // namespace

KConnectivity is_k_connected(const Multidigraph& d, int k, int threads) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (d.vertex_count() <= k) {
    KConnectivity r;
    r.status = KConnectivity::Status::TooFewVertices;
    return r;
  }
  if (auto fail = neighbourhood_failure(d, k)) return *fail;
  return is_set_k_connected(d, all_vertices(d.vertex_count()), k, threads);
}

KConnectivity is_set_k_connected(const Multidigraph& d,
                                 std::span<const VertexId> vertices, int k,
                                 int threads) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto pairs = unordered_pairs(vertices);
  auto fail = detail::first_failure(pairs.size(), threads, [&](std::size_t i) {
    return pair_failure(d, pairs[i].first, pairs[i].second, k);
  });
  if (fail) return fail->second;
  return {};
}

std::vector<VertexId> difan_constraint_set(int vertex_count,
                                           std::span<const VertexId> from,
                                           std::span<const VertexId> to) {
  std::vector<bool> excluded(static_cast<std::size_t>(vertex_count), false);
  if (from.size() == 1)
    for (VertexId x : from) excluded[static_cast<std::size_t>(x)] = true;
  if (to.size() == 1)
    for (VertexId y : to) excluded[static_cast<std::size_t>(y)] = true;
  std::vector<VertexId> u;
  for (VertexId v = 0; v < vertex_count; ++v)
    if (!excluded[static_cast<std::size_t>(v)]) u.push_back(v);
  return u;
}

std::optional<Difan> difan(const Multidigraph& d,
                           std::span<const VertexId> from,
                           std::span<const VertexId> to, int k) {
  const int n = d.vertex_count();
  if (from.empty() || to.empty())
    throw std::invalid_argument("difan ends must be nonempty");
  std::vector<int> side(static_cast<std::size_t>(n), 0);  // 1 = X, 2 = Y
  for (VertexId x : from) side.at(static_cast<std::size_t>(x)) = 1;
  for (VertexId y : to) {
    if (side.at(static_cast<std::size_t>(y)) == 1)
      throw std::invalid_argument("difan ends must be disjoint");
    side[static_cast<std::size_t>(y)] = 2;
  }

  Difan result;
  result.constrained = difan_constraint_set(n, from, to);
  std::vector<bool> capped(static_cast<std::size_t>(n), false);
  for (VertexId w : result.constrained) capped[static_cast<std::size_t>(w)] = true;

  const Capacity inf = d.arc_count() + n + 1;
  FlowNetwork net(2 * n + 2);
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  for (VertexId w = 0; w < n; ++w)
    net.add_arc(in_node(w), out_node(w), capped[static_cast<std::size_t>(w)] ? 1 : inf);
  for (const Endpoints& a : d.arcs()) {
    // Paths leave X once and stop at the first vertex of Y.
    if (side[static_cast<std::size_t>(a.second)] == 1 ||
        side[static_cast<std::size_t>(a.first)] == 2)
      continue;
    net.add_arc(out_node(a.first), in_node(a.second), 1);
  }
  for (VertexId x : from) net.add_arc(source, in_node(x), inf);
  for (VertexId y : to) net.add_arc(out_node(y), sink, inf);
  net.set_terminals(source, sink);

  const FlowResult flow = max_flow_min_cut(net, k);
  if (flow.value < k) return std::nullopt;
  for (const auto& nodes : decompose_paths(net, flow))
    result.paths.push_back(to_vertex_path(nodes, 2 * n));
  return result;
}

bool is_u_disjoint(std::span<const Path> paths,
                   std::span<const VertexId> constrained) {
  for (VertexId w : constrained) {
    int uses = 0;
    for (const Path& p : paths)
      if (std::find(p.begin(), p.end(), w) != p.end()) ++uses;
    if (uses > 1) return false;
  }
  return true;
}

MixedCutFlow mixed_cut_flow(const Multigraph& g, VertexId u, VertexId v) {
  return mixed_cut_flow_limited(g, u, v, kNoLimit, nullptr);
}

MixedCut min_mixed_cut(const Multigraph& g, VertexId u, VertexId v) {
  return mixed_cut_flow(g, u, v).cut;
}

WeakConnectivity is_weakly_2k_connected(const Multigraph& g, int k,
                                        int threads) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  WeakConnectivity result;
  if (g.vertex_count() <= k) {
    result.status = WeakConnectivity::Status::TooFewVertices;
    return result;
  }
  const auto vertices = all_vertices(g.vertex_count());
  const auto pairs = unordered_pairs(vertices);
  auto fail = detail::first_failure(
      pairs.size(), threads, [&](std::size_t i) -> std::optional<MixedCut> {
        bool reached = false;
        auto flow = mixed_cut_flow_limited(g, pairs[i].first, pairs[i].second,
                                           2 * k, &reached);
        if (reached) return std::nullopt;
        return std::move(flow.cut);
      });
  if (fail) {
    result.status = WeakConnectivity::Status::Separated;
    result.u = pairs[fail->first].first;
    result.v = pairs[fail->first].second;
    result.cut = std::move(fail->second);
  }
  return result;
}

std::vector<bool> reachable_from(const Multidigraph& d, VertexId source,
                                 const std::vector<bool>& removed) {
  std::vector<bool> seen(static_cast<std::size_t>(d.vertex_count()), false);
  auto is_removed = [&](VertexId v) {
    return !removed.empty() && removed[static_cast<std::size_t>(v)];
  };
  if (is_removed(source)) return seen;
  std::vector<VertexId> stack{source};
  seen[static_cast<std::size_t>(source)] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId a : d.out_arcs(v)) {
      const VertexId w = d.arc(a).second;
      if (seen[static_cast<std::size_t>(w)] || is_removed(w)) continue;
      seen[static_cast<std::size_t>(w)] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

bool is_strongly_connected(const Multidigraph& d) {
  const int n = d.vertex_count();
  if (n == 0) return true;
  const auto forward = reachable_from(d, 0, {});
  if (std::find(forward.begin(), forward.end(), false) != forward.end())
    return false;
  Multidigraph reversed;
  for (const auto& label : d.labels()) reversed.add_vertex(label);
  for (const Endpoints& a : d.arcs()) reversed.add_arc(a.second, a.first);
  const auto backward = reachable_from(reversed, 0, {});
  return std::find(backward.begin(), backward.end(), false) == backward.end();
}

std::optional<MixedCut> brute_force_mixed_cut(const Multigraph& g, VertexId u,
                                              VertexId v, int bound) {
  check_pair(g.vertex_count(), u, v);
  const int n = g.vertex_count();
  std::vector<VertexId> others;
  for (VertexId w = 0; w < n; ++w)
    if (w != u && w != v) others.push_back(w);

  for (int value = 0; value < bound; ++value) {
    for (int nu = 0; 2 * nu <= value; ++nu) {
      const int nf = value - 2 * nu;
      std::optional<MixedCut> found;
      for_each_combination(static_cast<int>(others.size()), nu,
                           [&](const std::vector<int>& ui) {
        std::vector<bool> removed_vertex(static_cast<std::size_t>(n), false);
        for (int i : ui)
          removed_vertex[static_cast<std::size_t>(others[static_cast<std::size_t>(i)])] = true;
        std::vector<EdgeId> live;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          const Endpoints ends = g.edge(e);
          if (!removed_vertex[static_cast<std::size_t>(ends.first)] &&
              !removed_vertex[static_cast<std::size_t>(ends.second)])
            live.push_back(e);
        }
        return for_each_combination(static_cast<int>(live.size()), nf,
                                    [&](const std::vector<int>& fi) {
          std::vector<bool> removed_edge(static_cast<std::size_t>(g.edge_count()), false);
          for (int i : fi)
            removed_edge[static_cast<std::size_t>(live[static_cast<std::size_t>(i)])] = true;
          if (connected_without(g, u, v, removed_vertex, removed_edge))
            return false;
          MixedCut cut;
          for (int i : ui) cut.vertices.push_back(others[static_cast<std::size_t>(i)]);
          for (int i : fi) cut.edges.push_back(live[static_cast<std::size_t>(i)]);
          found = std::move(cut);
          return true;
        });
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<VertexId>> brute_force_separator(
    const Multidigraph& d, VertexId u, VertexId v, int bound) {
  check_pair(d.vertex_count(), u, v);
  const int n = d.vertex_count();
  std::vector<VertexId> others;
  for (VertexId w = 0; w < n; ++w)
    if (w != u && w != v) others.push_back(w);

  for (int size = 0; size < bound && size <= static_cast<int>(others.size()); ++size) {
    std::optional<std::vector<VertexId>> found;
    for_each_combination(static_cast<int>(others.size()), size,
                         [&](const std::vector<int>& idx) {
      std::vector<VertexId> sep;
      for (int i : idx) sep.push_back(others[static_cast<std::size_t>(i)]);
      if (!separator_separates(d, u, v, sep)) return false;
      found = std::move(sep);
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool mixed_cut_separates(const Multigraph& g, VertexId u, VertexId v,
                         const MixedCut& cut) {
  std::vector<bool> removed_vertex(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<bool> removed_edge(static_cast<std::size_t>(g.edge_count()), false);
  for (VertexId w : cut.vertices) {
    if (w == u || w == v) return false;
    removed_vertex.at(static_cast<std::size_t>(w)) = true;
  }
  for (EdgeId e : cut.edges) removed_edge.at(static_cast<std::size_t>(e)) = true;
  return !connected_without(g, u, v, removed_vertex, removed_edge);
}

bool separator_separates(const Multidigraph& d, VertexId u, VertexId v,
                         std::span<const VertexId> separator) {
  std::vector<bool> removed(static_cast<std::size_t>(d.vertex_count()), false);
  for (VertexId w : separator) {
    if (w == u || w == v) return false;
    removed.at(static_cast<std::size_t>(w)) = true;
  }
  const auto from_u = reachable_from(d, u, removed);
  if (!from_u[static_cast<std::size_t>(v)]) return true;
  const auto from_v = reachable_from(d, v, removed);
  return !from_v[static_cast<std::size_t>(u)];
}

std::string format_separator(std::span<const std::string> labels,
                             std::span<const VertexId> separator) {
  std::ostringstream out;
  out << "SEPARATOR";
  for (VertexId v : separator) out << ' ' << labels[static_cast<std::size_t>(v)];
  return out.str();
}

std::string format_mixed_cut(std::span<const std::string> labels,
                             const MixedCut& cut) {
  std::ostringstream out;
  out << "MIXEDCUT U:";
  for (VertexId v : cut.vertices) out << ' ' << labels[static_cast<std::size_t>(v)];
  out << " F:";
  for (EdgeId e : cut.edges) out << " e" << e;
  return out.str();
}

std::string format_paths(std::span<const std::string> labels,
                         std::span<const Path> paths) {
  std::ostringstream out;
  out << "DIFAN";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    out << (i == 0 ? " path:" : " / path:");
    for (VertexId v : paths[i]) out << ' ' << labels[static_cast<std::size_t>(v)];
  }
  return out.str();
}

}  // namespace orientk
