#include "orientk/flow.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orientk {

int FlowNetwork::add_arc(int tail, int head, Capacity capacity) {
  if (tail < 0 || tail >= nodes_ || head < 0 || head >= nodes_)
    throw std::invalid_argument("flow arc endpoint out of range");
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  arcs_.push_back({tail, head, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

void FlowNetwork::set_terminals(int source, int sink) {
  if (source < 0 || source >= nodes_ || sink < 0 || sink >= nodes_)
    throw std::invalid_argument("terminal out of range");
  if (source == sink) throw std::invalid_argument("source equals sink");
  source_ = source;
  sink_ = sink;
}

namespace {

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : n_(net.node_count()), adj_(static_cast<std::size_t>(n_)) {
    residual_.reserve(net.arcs().size() * 2);
    for (const auto& a : net.arcs()) {
      adj_[static_cast<std::size_t>(a.tail)].push_back(
          static_cast<int>(residual_.size()));
      residual_.push_back({a.head, a.capacity});
      adj_[static_cast<std::size_t>(a.head)].push_back(
          static_cast<int>(residual_.size()));
      residual_.push_back({a.tail, 0});
    }
  }

  Capacity run(int s, int t, Capacity limit) {
    Capacity total = 0;
    while (total < limit && bfs(s, t)) {
      iter_.assign(static_cast<std::size_t>(n_), 0);
      while (total < limit) {
        const Capacity pushed = dfs(s, t, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const auto& r = residual_[static_cast<std::size_t>(id)];
        if (r.cap > 0 && !seen[static_cast<std::size_t>(r.to)]) {
          seen[static_cast<std::size_t>(r.to)] = true;
          stack.push_back(r.to);
        }
      }
    }
    return seen;
  }

  // Flow on original arc i is the residual capacity of its reverse twin.
  Capacity flow_on(int i) const {
    return residual_[static_cast<std::size_t>(2 * i + 1)].cap;
  }

 private:
  struct Residual {
    int to;
    Capacity cap;
  };

  bool bfs(int s, int t) {
    level_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<int> queue{s};
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const auto& r = residual_[static_cast<std::size_t>(id)];
        if (r.cap > 0 && level_[static_cast<std::size_t>(r.to)] < 0) {
          level_[static_cast<std::size_t>(r.to)] =
              level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(r.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  Capacity dfs(int v, int t, Capacity want) {
    if (v == t) return want;
    auto& it = iter_[static_cast<std::size_t>(v)];
    const auto& edges = adj_[static_cast<std::size_t>(v)];
    for (; it < edges.size(); ++it) {
      const int id = edges[it];
      auto& r = residual_[static_cast<std::size_t>(id)];
      if (r.cap <= 0 || level_[static_cast<std::size_t>(r.to)] !=
                            level_[static_cast<std::size_t>(v)] + 1)
        continue;
      const Capacity got = dfs(r.to, t, std::min(want, r.cap));
      if (got > 0) {
        r.cap -= got;
        residual_[static_cast<std::size_t>(id ^ 1)].cap += got;
        return got;
      }
    }
    return 0;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<Residual> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace

FlowResult max_flow_min_cut(const FlowNetwork& network, Capacity limit) {
  if (network.source() < 0) throw std::invalid_argument("terminals not set");
  Dinic dinic(network);
  FlowResult result;
  result.value = dinic.run(network.source(), network.sink(), limit);
  result.reached_limit = result.value >= limit;
  result.flow.resize(network.arcs().size());
  for (int i = 0; i < network.arc_count(); ++i)
    result.flow[static_cast<std::size_t>(i)] = dinic.flow_on(i);
  result.source_side = dinic.reachable(network.source());
  for (int i = 0; i < network.arc_count(); ++i) {
    const auto& a = network.arc(i);
    if (result.source_side[static_cast<std::size_t>(a.tail)] &&
        !result.source_side[static_cast<std::size_t>(a.head)])
      result.cut_arcs.push_back(i);
  }
  return result;
}

std::vector<std::vector<int>> decompose_paths(const FlowNetwork& network,
                                              const FlowResult& result) {
  const int n = network.node_count();
  std::vector<Capacity> left = result.flow;
  std::vector<std::vector<int>> out_arcs(static_cast<std::size_t>(n));
  for (int i = 0; i < network.arc_count(); ++i)
    if (left[static_cast<std::size_t>(i)] > 0)
      out_arcs[static_cast<std::size_t>(network.arc(i).tail)].push_back(i);

  auto next_arc = [&](int v) -> int {
    for (int i : out_arcs[static_cast<std::size_t>(v)])
      if (left[static_cast<std::size_t>(i)] > 0) return i;
    return -1;
  };

  std::vector<std::vector<int>> paths;
  const int s = network.source();
  const int t = network.sink();
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (Capacity unit = 0; unit < result.value; ++unit) {
    std::vector<int> nodes{s};
    std::vector<int> arcs;
    position[static_cast<std::size_t>(s)] = 0;
    while (nodes.back() != t) {
      const int a = next_arc(nodes.back());
      if (a < 0) throw std::logic_error("flow is not conserved");
      const int head = network.arc(a).head;
      const int seen_at = position[static_cast<std::size_t>(head)];
      if (seen_at >= 0) {
        // Circulation: cancel it and resume from its start node.
        left[static_cast<std::size_t>(a)] -= 1;
        for (std::size_t j = static_cast<std::size_t>(seen_at); j < arcs.size(); ++j)
          left[static_cast<std::size_t>(arcs[j])] -= 1;
        for (std::size_t j = static_cast<std::size_t>(seen_at) + 1; j < nodes.size(); ++j)
          position[static_cast<std::size_t>(nodes[j])] = -1;
        nodes.resize(static_cast<std::size_t>(seen_at) + 1);
        arcs.resize(static_cast<std::size_t>(seen_at));
        continue;
      }
      position[static_cast<std::size_t>(head)] = static_cast<int>(nodes.size());
      nodes.push_back(head);
      arcs.push_back(a);
    }
    for (int a : arcs) left[static_cast<std::size_t>(a)] -= 1;
    for (int v : nodes) position[static_cast<std::size_t>(v)] = -1;
    paths.push_back(std::move(nodes));
  }
  return paths;
}

}  // namespace orientk
