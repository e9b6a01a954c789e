#pragma once

// Exact search for k-connected orientations of small multigraphs.
//
// Degree forcing at tight vertices prunes the tree; every node is also
// tested against the "optimistic" digraph (decided edges as arcs, undecided
// edges as antiparallel arc pairs). Every completion of the node is a
// subgraph of that digraph, so a separator of size < k in it refutes the
// whole subtree.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orientk/connectivity.hpp"
#include "orientk/graph.hpp"
#include "orientk/reduction.hpp"

namespace orientk {

struct ForcingResult {
  bool contradiction = false;
  /// Human-readable reason when contradiction is set.
  std::string reason;
  PartialOrientation orientation;
};

/// Closes `p` under the forcing rules. At a vertex of degree 2k two parallel
/// edges to the same neighbour take opposite directions; a vertex whose
/// in-ends (out-ends) can only reach k by taking every undecided end gets
/// them all; a vertex that cannot reach k in-ends or k out-ends is a
/// contradiction.
///
/// When both edges of such a parallel pair are undecided the lower edge id
/// is directed away from the lower endpoint id. Swapping the two edges yields
/// the same digraph, so this loses no solutions.
ForcingResult propagate_forcing(const Multigraph& g, int k,
                                const PartialOrientation& p);

Multidigraph optimistic_digraph(const Multigraph& g,
                                const PartialOrientation& p);

/// True iff the optimistic digraph of p minus `separator` is not strongly
/// connected; then no completion of p is k-connected. Requires |S| < k.
bool refute_with_separator(const Multigraph& g, int k,
                           const PartialOrientation& p,
                           std::span<const VertexId> separator);

struct SeparatorBranch {
  PartialOrientation orientation;
  std::vector<VertexId> separator;
};

struct SearchOutcome {
  enum class Status { Found, RefutedExhaustive, RefutedBySeparator, Unknown };
  Status status = Status::Unknown;
  std::optional<PartialOrientation> orientation;
  std::vector<SeparatorBranch> branches;
  /// Failed necessary condition or other note for RefutedExhaustive.
  std::string evidence;
  std::int64_t nodes = 0;

  bool refuted() const {
    return status == Status::RefutedExhaustive ||
           status == Status::RefutedBySeparator;
  }
};

struct SearchOptions {
  std::int64_t budget = 10'000'000;
  int threads = 1;
  /// Skip the weak 2k-connectivity precheck (callers that already ran it).
  bool skip_weak_check = false;
  /// Refutations with at most this many leaves, all separator prunes, are
  /// reported as RefutedBySeparator.
  int max_separator_branches = 64;
  /// Separators to try first when choosing one shared by all branches; a
  /// hint is used only if it refutes every branch.
  std::vector<std::vector<VertexId>> separator_hints;
};

SearchOutcome search(const Multigraph& g, int k, const SearchOptions& options = {});

std::string to_string(SearchOutcome::Status status);

struct EquivalenceReport {
  bool holds = false;
  int assignments = 0;
  int nae_satisfying = 0;
  int k_connected = 0;
  /// First assignment (as a bit mask over variables) where the two sides
  /// disagree.
  std::optional<std::uint64_t> counterexample;
};

/// For every assignment: NAE-satisfied <=> the natural reorientation of the
/// encoding is k-connected.
EquivalenceReport check_reduction_equivalence(const NaeInstance& instance,
                                              int k, int threads = 1,
                                              bool eulerized = false);

}  // namespace orientk
