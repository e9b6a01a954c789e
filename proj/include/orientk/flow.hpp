#pragma once

// Integral max-flow / min-cut on small capacitated networks (Dinic phases).

#include <cstdint>
#include <limits>
#include <vector>

namespace orientk {

using Capacity = std::int64_t;

class FlowNetwork {
 public:
  struct Arc {
    int tail;
    int head;
    Capacity capacity;
  };

  FlowNetwork() = default;
  explicit FlowNetwork(int nodes) : nodes_(nodes) {}

  int add_node() { return nodes_++; }
  /// Returns the arc index; capacities must be nonnegative.
  int add_arc(int tail, int head, Capacity capacity);

  void set_terminals(int source, int sink);

  int node_count() const { return nodes_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int i) const { return arcs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int source() const { return source_; }
  int sink() const { return sink_; }

 private:
  int nodes_ = 0;
  std::vector<Arc> arcs_;
  int source_ = -1;
  int sink_ = -1;
};

struct FlowResult {
  Capacity value = 0;
  /// Per-arc flow, indexed like FlowNetwork::arcs().
  std::vector<Capacity> flow;
  /// Nodes reachable from the source in the final residual network. Only a
  /// minimum cut when the flow is maximum (i.e. `limit` was not reached).
  std::vector<bool> source_side;
  /// Arcs leaving `source_side`; saturated, total capacity == value when the
  /// flow is maximum.
  std::vector<int> cut_arcs;
  bool reached_limit = false;
};

inline constexpr Capacity kNoLimit = std::numeric_limits<Capacity>::max();

/// Stops augmenting once the value reaches `limit`; `reached_limit` reports
/// whether that happened (in which case the cut fields are not a min cut).
FlowResult max_flow_min_cut(const FlowNetwork& network,
                            Capacity limit = kNoLimit);

/// Splits an integral flow into unit source-sink node paths, cancelling
/// circulations. Returns exactly `result.value` paths.
std::vector<std::vector<int>> decompose_paths(const FlowNetwork& network,
                                              const FlowResult& result);

}  // namespace orientk
