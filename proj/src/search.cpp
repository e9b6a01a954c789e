#include "orientk/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace orientk {

namespace {

class ForcingState {
 public:
  ForcingState(const Multigraph& g, int k, PartialOrientation p)
      : g_(g), k_(k), o_(std::move(p)) {
    const int n = g.vertex_count();
    in_.assign(static_cast<std::size_t>(n), 0);
    out_.assign(static_cast<std::size_t>(n), 0);
    undecided_.assign(static_cast<std::size_t>(n), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Endpoints ends = g.edge(e);
      if (!o_.decided(e)) {
        ++undecided_[static_cast<std::size_t>(ends.first)];
        ++undecided_[static_cast<std::size_t>(ends.second)];
        continue;
      }
      const VertexId head = head_of(g, e, o_[e]);
      ++in_[static_cast<std::size_t>(head)];
      ++out_[static_cast<std::size_t>(ends.other(head))];
    }
  }

  ForcingResult run() {
    std::vector<VertexId> work;
    std::vector<bool> queued(static_cast<std::size_t>(g_.vertex_count()), true);
    for (VertexId v = g_.vertex_count() - 1; v >= 0; --v) work.push_back(v);
    pending_ = &work;
    queued_ = &queued;
    while (!work.empty() && reason_.empty()) {
      const VertexId v = work.back();
      work.pop_back();
      queued[static_cast<std::size_t>(v)] = false;
      process(v);
    }
    ForcingResult result;
    result.contradiction = !reason_.empty();
    result.reason = reason_;
    result.orientation = std::move(o_);
    return result;
  }

 private:
  void decide(EdgeId e, VertexId head) {
    const Endpoints ends = g_.edge(e);
    o_.set(e, head == ends.second ? Direction::Forward : Direction::Reversed);
    for (VertexId v : {ends.first, ends.second}) {
      --undecided_[static_cast<std::size_t>(v)];
      if (!(*queued_)[static_cast<std::size_t>(v)]) {
        (*queued_)[static_cast<std::size_t>(v)] = true;
        pending_->push_back(v);
      }
    }
    ++in_[static_cast<std::size_t>(head)];
    ++out_[static_cast<std::size_t>(ends.other(head))];
  }

  void fail(VertexId v, const std::string& what) {
    if (reason_.empty()) reason_ = g_.label(v) + ": " + what;
  }

  void process(VertexId v) {
    const auto i = static_cast<std::size_t>(v);
    if (in_[i] + undecided_[i] < k_) return fail(v, "cannot reach indegree k");
    if (out_[i] + undecided_[i] < k_) return fail(v, "cannot reach outdegree k");

    if (undecided_[i] > 0 &&
        (in_[i] + undecided_[i] == k_ || out_[i] + undecided_[i] == k_)) {
      const bool inward = in_[i] + undecided_[i] == k_;
      for (EdgeId e : g_.incident(v))
        if (!o_.decided(e)) decide(e, inward ? v : g_.edge(e).other(v));
    }

    if (g_.degree(v) != 2 * k_) return;
    std::map<VertexId, std::vector<EdgeId>> groups;
    for (EdgeId e : g_.incident(v)) groups[g_.edge(e).other(v)].push_back(e);
    for (const auto& [nbr, edges] : groups) {
      if (edges.size() < 2) continue;
      if (edges.size() > 2)
        return fail(v, "degree 2k with " + std::to_string(edges.size()) +
                           " parallel edges to " + g_.label(nbr));
      const EdgeId a = edges[0];
      const EdgeId b = edges[1];
      if (o_.decided(a) && o_.decided(b)) {
        if (head_of(g_, a, o_[a]) == head_of(g_, b, o_[b]))
          return fail(v, "parallel pair to " + g_.label(nbr) +
                             " has equal directions");
      } else if (o_.decided(a)) {
        decide(b, g_.edge(a).other(head_of(g_, a, o_[a])));
      } else if (o_.decided(b)) {
        decide(a, g_.edge(b).other(head_of(g_, b, o_[b])));
      } else {
        const VertexId low = std::min(v, nbr);
        const VertexId high = std::max(v, nbr);
        decide(a, high);
        decide(b, low);
      }
    }
  }

  const Multigraph& g_;
  int k_;
  PartialOrientation o_;
  std::vector<int> in_;
  std::vector<int> out_;
  std::vector<int> undecided_;
  std::vector<VertexId>* pending_ = nullptr;
  std::vector<bool>* queued_ = nullptr;
  std::string reason_;
};

// Undecided edge whose less-free endpoint has the fewest undecided ends.
EdgeId choose_branch_edge(const Multigraph& g, const PartialOrientation& p) {
  std::vector<int> free_ends(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (p.decided(e)) continue;
    ++free_ends[static_cast<std::size_t>(g.edge(e).first)];
    ++free_ends[static_cast<std::size_t>(g.edge(e).second)];
  }
  EdgeId best = -1;
  int best_score = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (p.decided(e)) continue;
    const int score = std::min(free_ends[static_cast<std::size_t>(g.edge(e).first)],
                               free_ends[static_cast<std::size_t>(g.edge(e).second)]);
    if (best < 0 || score < best_score) {
      best = e;
      best_score = score;
    }
  }
  return best;
}

class Searcher {
 public:
  Searcher(const Multigraph& g, int k, const SearchOptions& options)
      : g_(g), k_(k), options_(options) {}

  enum class Result { Found, Refuted, Aborted };

  Result explore(const PartialOrientation& p) {
    if (++nodes_ > options_.budget) return Result::Aborted;
    const Multidigraph optimistic = optimistic_digraph(g_, p);
    KConnectivity check = is_k_connected(optimistic, k_, options_.threads);
    if (!check.ok()) {
      ++separator_leaves_;
      if (static_cast<int>(branches_.size()) <= options_.max_separator_branches) {
        branches_.push_back({p, std::move(check.separator)});
        failed_pairs_.emplace_back(check.from, check.to);
      }
      return Result::Refuted;
    }
    if (p.is_total()) {
      found_ = p;
      return Result::Found;
    }
    const EdgeId e = choose_branch_edge(g_, p);
    for (const Direction dir : {Direction::Forward, Direction::Reversed}) {
      PartialOrientation child = p;
      child.set(e, dir);
      ForcingResult forced = propagate_forcing(g_, k_, child);
      if (forced.contradiction) {
        if (++nodes_ > options_.budget) return Result::Aborted;
        ++contradiction_leaves_;
        continue;
      }
      const Result r = explore(forced.orientation);
      if (r != Result::Refuted) return r;
    }
    return Result::Refuted;
  }

  std::int64_t nodes() const { return nodes_; }
  std::int64_t separator_leaves() const { return separator_leaves_; }
  std::int64_t contradiction_leaves() const { return contradiction_leaves_; }
  std::vector<SeparatorBranch>& branches() { return branches_; }
  const std::vector<std::pair<VertexId, VertexId>>& failed_pairs() const {
    return failed_pairs_;
  }
  std::optional<PartialOrientation>& found() { return found_; }

 private:
  const Multigraph& g_;
  int k_;
  const SearchOptions& options_;
  std::int64_t nodes_ = 0;
  std::int64_t separator_leaves_ = 0;
  std::int64_t contradiction_leaves_ = 0;
  std::vector<SeparatorBranch> branches_;
  std::vector<std::pair<VertexId, VertexId>> failed_pairs_;
  std::optional<PartialOrientation> found_;
};

// Ordered pairs of V - S that are not joined by a dipath in D - S.
std::int64_t disconnected_pairs(const Multidigraph& d, std::span<const VertexId> s) {
  std::vector<bool> removed(static_cast<std::size_t>(d.vertex_count()), false);
  for (VertexId v : s) removed[static_cast<std::size_t>(v)] = true;
  std::int64_t count = 0;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    const auto seen = reachable_from(d, v, removed);
    for (VertexId w = 0; w < d.vertex_count(); ++w)
      count += !removed[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)];
  }
  return count;
}

// If some separator refutes every branch, report one for all of them: the
// candidate disconnecting the most ordered pairs, earliest on ties. Candidates
// are each branch's separator and the minimum separator nearest the other end
// of its failed pair.
void share_separator(const Multigraph& g, int k, std::vector<SeparatorBranch>& branches,
                     const std::vector<std::pair<VertexId, VertexId>>& failed,
                     const std::vector<std::vector<VertexId>>& hints) {
  auto refutes_all = [&](const std::vector<VertexId>& s) {
    return static_cast<int>(s.size()) < k &&
           std::all_of(branches.begin(), branches.end(), [&](const auto& b) {
             return refute_with_separator(g, k, b.orientation, s);
           });
  };
  for (const auto& hint : hints) {
    if (!refutes_all(hint)) continue;
    for (auto& b : branches) b.separator = hint;
    return;
  }
  std::vector<Multidigraph> optimistic;
  std::vector<std::vector<VertexId>> candidates;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    candidates.push_back(branches[i].separator);
    const Multidigraph& d = optimistic.emplace_back(optimistic_digraph(g, branches[i].orientation));
    std::vector<EdgeId> all(static_cast<std::size_t>(d.arc_count()));
    for (EdgeId a = 0; a < d.arc_count(); ++a) all[static_cast<std::size_t>(a)] = a;
    const DirectedConnectivity back =
        directed_connectivity(reorient(d, all), failed[i].second, failed[i].first);
    if (!back.has_direct_arc && back.value < k) candidates.push_back(back.separator);
  }
  const std::vector<VertexId>* best = nullptr;
  std::int64_t best_score = -1;
  for (const auto& s : candidates) {
    if (!refutes_all(s)) continue;
    std::int64_t score = 0;
    for (const auto& d : optimistic) score += disconnected_pairs(d, s);
    if (score > best_score) {
      best = &s;
      best_score = score;
    }
  }
  if (best == nullptr) return;
  const std::vector<VertexId> chosen = *best;
  for (auto& b : branches) b.separator = chosen;
}

}  // namespace

ForcingResult propagate_forcing(const Multigraph& g, int k,
                                const PartialOrientation& p) {
  if (p.size() != g.edge_count())
    throw std::invalid_argument("orientation length does not match the graph");
  return ForcingState(g, k, p).run();
}

Multidigraph optimistic_digraph(const Multigraph& g,
                                const PartialOrientation& p) {
  Multidigraph d;
  for (const auto& label : g.labels()) d.add_vertex(label);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Endpoints ends = g.edge(e);
    if (p.decided(e)) {
      const VertexId head = head_of(g, e, p[e]);
      d.add_arc(ends.other(head), head);
    } else {
      d.add_arc(ends.first, ends.second);
      d.add_arc(ends.second, ends.first);
    }
  }
  return d;
}

bool refute_with_separator(const Multigraph& g, int k,
                           const PartialOrientation& p,
                           std::span<const VertexId> separator) {
  if (static_cast<int>(separator.size()) >= k)
    throw std::invalid_argument("separator must have fewer than k vertices");
  const Multidigraph d = optimistic_digraph(g, p);
  std::vector<bool> removed(static_cast<std::size_t>(d.vertex_count()), false);
  for (VertexId v : separator) removed.at(static_cast<std::size_t>(v)) = true;
  const auto root_it = std::find(removed.begin(), removed.end(), false);
  if (root_it == removed.end()) return false;
  const auto root = static_cast<VertexId>(root_it - removed.begin());

  Multidigraph reversed;
  for (const auto& label : d.labels()) reversed.add_vertex(label);
  for (const Endpoints& a : d.arcs()) reversed.add_arc(a.second, a.first);
  const auto forward = reachable_from(d, root, removed);
  const auto backward = reachable_from(reversed, root, removed);
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    if (!forward[static_cast<std::size_t>(v)] || !backward[static_cast<std::size_t>(v)])
      return true;
  }
  return false;
}

SearchOutcome search(const Multigraph& g, int k, const SearchOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SearchOutcome outcome;
  auto refuted = [&](std::string evidence) {
    outcome.status = SearchOutcome::Status::RefutedExhaustive;
    outcome.evidence = std::move(evidence);
    return outcome;
  };

  if (g.vertex_count() <= k) return refuted("|V| <= k");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 2 * k)
      return refuted("degree of " + g.label(v) + " is " +
                     std::to_string(g.degree(v)) + " < 2k");
  if (!options.skip_weak_check) {
    const WeakConnectivity weak = is_weakly_2k_connected(g, k, options.threads);
    if (!weak.ok())
      return refuted("not weakly 2k-connected: " + g.label(weak.u) + " " +
                     g.label(weak.v) + " " + format_mixed_cut(g.labels(), weak.cut));
  }

  ForcingResult root = propagate_forcing(g, k, PartialOrientation(g.edge_count()));
  if (root.contradiction) return refuted("forcing contradiction at " + root.reason);

  Searcher searcher(g, k, options);
  const auto result = searcher.explore(root.orientation);
  outcome.nodes = searcher.nodes();
  switch (result) {
    case Searcher::Result::Found:
      outcome.status = SearchOutcome::Status::Found;
      outcome.orientation = std::move(searcher.found());
      break;
    case Searcher::Result::Aborted:
      outcome.status = SearchOutcome::Status::Unknown;
      outcome.evidence = "budget of " + std::to_string(options.budget) +
                         " nodes exhausted";
      break;
    case Searcher::Result::Refuted: {
      const bool separators_only = searcher.contradiction_leaves() == 0 &&
                                   searcher.separator_leaves() <= options.max_separator_branches;
      std::ostringstream evidence;
      evidence << "search tree exhausted: " << outcome.nodes << " nodes, "
               << searcher.separator_leaves() << " separator prunes, "
               << searcher.contradiction_leaves() << " forcing contradictions";
      outcome.evidence = evidence.str();
      if (separators_only) {
        outcome.status = SearchOutcome::Status::RefutedBySeparator;
        outcome.branches = std::move(searcher.branches());
        share_separator(g, k, outcome.branches, searcher.failed_pairs(),
                        options.separator_hints);
      } else {
        outcome.status = SearchOutcome::Status::RefutedExhaustive;
      }
      break;
    }
  }
  return outcome;
}

std::string to_string(SearchOutcome::Status status) {
  switch (status) {
    case SearchOutcome::Status::Found:
      return "Found";
    case SearchOutcome::Status::RefutedExhaustive:
      return "RefutedExhaustive";
    case SearchOutcome::Status::RefutedBySeparator:
      return "RefutedBySeparator";
    case SearchOutcome::Status::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

EquivalenceReport check_reduction_equivalence(const NaeInstance& instance,
                                              int k, int threads,
                                              bool eulerized) {
  const int n = static_cast<int>(instance.variables.size());
  if (n > 16) throw std::invalid_argument("too many variables for exhaustive check");
  Encoding enc = encode(instance, k);
  if (eulerized) enc = eulerize(enc);

  EquivalenceReport report;
  report.holds = true;
  report.assignments = 1 << n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Assignment sigma = assignment_from_mask(n, mask);
    const bool nae = nae_satisfied(instance, sigma);
    const bool connected =
        is_k_connected(natural_reorientation(enc, sigma), k, threads).ok();
    report.nae_satisfying += nae;
    report.k_connected += connected;
    if (nae != connected && report.holds) {
      report.holds = false;
      report.counterexample = mask;
    }
  }
  return report;
}

}  // namespace orientk
