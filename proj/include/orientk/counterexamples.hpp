#pragma once

// Weakly 2k-connected multigraphs without k-connected orientations.
//
// G_k (k >= 4, n odd, n >= k^2): complete graphs on A and B (|A| = |B| = n),
// a set C of k-3 vertices, four vertices w, x, y, z, the cycle
// a z y x w b c a (a in A, b in B, c in C), and parallel pairs from
// C + {w, x, y, z} into A - a and B - b with every host in at most one pair.
//
// G_3 / H_3: ten- and eight-vertex examples for k = 3, rebuilt from a list of
// structural constraints (see g3_constraint_violations).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orientk/connectivity.hpp"
#include "orientk/graph.hpp"
#include "orientk/search.hpp"

namespace orientk {

struct GkParams {
  int k = 0;
  int n = 0;
  std::vector<VertexId> A;
  std::vector<VertexId> B;
  std::vector<VertexId> C;
  VertexId a = -1, b = -1, c = -1;
  VertexId w = -1, x = -1, y = -1, z = -1;
};

struct GkInstance {
  Multigraph graph;
  GkParams params;
};

/// Smallest odd n >= k^2.
int default_gk_n(int k);

GkInstance build_Gk(int k, int n);
inline GkInstance build_Gk(int k) { return build_Gk(k, default_gk_n(k)); }

/// C + {x, y}, the separator left by either forced chain through a z y x w b.
std::vector<VertexId> gk_separator(const GkParams& params);

/// Roles of `g` when it is exactly build_Gk(k, n) for some k, n.
std::optional<GkParams> recognize_gk(const Multigraph& g);

/// Pairs hub -> hosts for one side of G_k, in hub order:
/// C - c, c, w, y, x for the A side and C - c, c, z, x, y for the B side.
struct PairDemand {
  VertexId hub;
  int count;
};

class InfeasibleDemand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Greedy over host order: result[i] holds the hosts of demands[i].
std::vector<std::vector<VertexId>> realize_pairs(
    const std::vector<PairDemand>& demands, const std::vector<VertexId>& hosts);

// G_3 vertex labels.
extern const std::vector<std::string> kG3Labels;

Multigraph build_G3_candidate();
Multigraph build_H3_candidate();

/// H_3 from a G_3 candidate: drop t_a, t_b and add the triangles
/// u_a v_a y and u_b v_b x.
Multigraph h3_from_g3(const Multigraph& g3);

/// Each entry names one violated structural constraint of a G_3 candidate;
/// empty means every constraint holds.
std::vector<std::string> g3_constraint_violations(const Multigraph& g3);

struct G3Reconstruction {
  std::optional<Multigraph> graph;
  /// Candidates passing the structural constraints, in enumeration order.
  int structural_candidates = 0;
  /// Index of the first candidate (among the structural ones) that validated.
  int validated_index = -1;
};

/// Enumerates pair placements passing the structural constraints and returns
/// the first whose G_3 and H_3 both validate (weakly 6-connected, no
/// 3-connected orientation).
G3Reconstruction reconstruct_G3(std::int64_t budget = 10'000'000, int threads = 1);

struct CounterexampleReport {
  bool eulerian = false;
  WeakConnectivity weak;
  SearchOutcome orientation;

  bool weakly_2k() const { return weak.ok(); }
  /// Weakly 2k-connected and provably without a k-connected orientation.
  bool confirmed() const { return weakly_2k() && orientation.refuted(); }
};

/// `separator_hints` as in SearchOptions.
CounterexampleReport verify_counterexample(
    const Multigraph& g, int k, std::int64_t budget = 10'000'000, int threads = 1,
    std::vector<std::vector<VertexId>> separator_hints = {});

}  // namespace orientk
