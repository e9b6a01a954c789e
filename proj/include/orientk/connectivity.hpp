#pragma once

// Flow-based vertex connectivity of multidigraphs and weak 2k-connectivity
// (mixed vertex/edge cuts) of multigraphs, with checkable witnesses.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orientk/graph.hpp"

namespace orientk {

using Path = std::vector<VertexId>;

/// A set of vertices U and edges F whose removal disconnects a vertex pair.
struct MixedCut {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int value() const {
    return 2 * static_cast<int>(vertices.size()) + static_cast<int>(edges.size());
  }
};

/// Dipaths from X to Y, pairwise disjoint on `constrained`.
struct Difan {
  std::vector<Path> paths;
  std::vector<VertexId> constrained;
};

/// Vertex-disjoint routing in one direction `from` -> `to`.
struct DirectedConnectivity {
  VertexId from = -1;
  VertexId to = -1;
  /// Minimum separator size, or n-1 when a direct arc makes the direction
  /// inseparable.
  int value = 0;
  bool has_direct_arc = false;
  /// Internally vertex-disjoint dipaths (direct arcs listed individually).
  std::vector<Path> paths;
  /// A minimum separator; empty when has_direct_arc.
  std::vector<VertexId> separator;
};

struct PairConnectivity {
  /// Minimum of the two directions.
  int value = 0;
  DirectedConnectivity forward;
  DirectedConnectivity backward;

  const DirectedConnectivity& deficient() const {
    return backward.value < forward.value ? backward : forward;
  }
};

/// Max number of internally disjoint dipaths (Menger), both directions.
PairConnectivity vertex_conn_pair(const Multidigraph& d, VertexId u, VertexId v);

/// One direction only; stops early once `limit` disjoint dipaths exist, in
/// which case `value` is a lower bound and no separator is reported.
DirectedConnectivity directed_connectivity(const Multidigraph& d, VertexId from,
                                           VertexId to, int limit = -1);

struct KConnectivity {
  enum class Status { Connected, TooFewVertices, Separated };
  Status status = Status::Connected;
  VertexId from = -1;
  VertexId to = -1;
  std::vector<VertexId> separator;

  bool ok() const { return status == Status::Connected; }
};

/// `threads` <= 0 means all hardware threads.
KConnectivity is_k_connected(const Multidigraph& d, int k, int threads = 1);

/// Every pair inside `vertices` is k-connected in `d` (separators may use any
/// vertex of `d`).
KConnectivity is_set_k_connected(const Multidigraph& d,
                                 std::span<const VertexId> vertices, int k,
                                 int threads = 1);

/// k dipaths from X to Y that are disjoint on the vertex set prescribed by
/// the sizes of X and Y; nullopt when fewer than k exist.
std::optional<Difan> difan(const Multidigraph& d,
                           std::span<const VertexId> from,
                           std::span<const VertexId> to, int k);

/// The constraint set for a difan from X to Y.
std::vector<VertexId> difan_constraint_set(int vertex_count,
                                           std::span<const VertexId> from,
                                           std::span<const VertexId> to);

bool is_u_disjoint(std::span<const Path> paths,
                   std::span<const VertexId> constrained);

struct MixedCutFlow {
  MixedCut cut;
  /// Unit flow paths; each internal vertex appears on at most two.
  std::vector<Path> paths;
};

MixedCut min_mixed_cut(const Multigraph& g, VertexId u, VertexId v);
MixedCutFlow mixed_cut_flow(const Multigraph& g, VertexId u, VertexId v);

struct WeakConnectivity {
  enum class Status { Connected, TooFewVertices, Separated };
  Status status = Status::Connected;
  VertexId u = -1;
  VertexId v = -1;
  MixedCut cut;

  bool ok() const { return status == Status::Connected; }
};

WeakConnectivity is_weakly_2k_connected(const Multigraph& g, int k,
                                        int threads = 1);

bool is_strongly_connected(const Multidigraph& d);

/// Exhaustive oracles. The returned cut/separator is one of minimum value
/// among those below `bound`.
std::optional<MixedCut> brute_force_mixed_cut(const Multigraph& g, VertexId u,
                                              VertexId v, int bound);
std::optional<std::vector<VertexId>> brute_force_separator(
    const Multidigraph& d, VertexId u, VertexId v, int bound);

/// Re-checks a witness by traversal: after deleting it, u and v are
/// disconnected (resp. not strongly connected).
bool mixed_cut_separates(const Multigraph& g, VertexId u, VertexId v,
                         const MixedCut& cut);
bool separator_separates(const Multidigraph& d, VertexId u, VertexId v,
                         std::span<const VertexId> separator);

/// Reachability from `source` in `d` minus `removed` vertices.
std::vector<bool> reachable_from(const Multidigraph& d, VertexId source,
                                 const std::vector<bool>& removed = {});

std::string format_separator(std::span<const std::string> labels,
                             std::span<const VertexId> separator);
std::string format_mixed_cut(std::span<const std::string> labels,
                             const MixedCut& cut);
std::string format_paths(std::span<const std::string> labels,
                         std::span<const Path> paths);

}  // namespace orientk
