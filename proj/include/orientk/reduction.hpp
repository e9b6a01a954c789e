#pragma once

// Not-All-Equal SAT instances and their compilation into digraphs whose
// k-connected reorientations correspond to NAE-satisfying assignments.
//
// Gadget vocabulary (labels in parentheses):
//   L (L.i)      k-1 hub vertices shared by all clause gadgets; l = L.0
//   M (M.i)      k-2 vertices shared by all literal gadgets;   m = M.0
//   w^C (w.Cj)   clause hub, joined to L by a complete digraph
//   per literal slot of a clause:
//     u (u.Cj.s.x), u' (u1..), u'' (u2..), u''' (u3..), t (t..), v^C (vc..)
//     special arc e between w^C and u, f arc between t and u'
//   v_x (v.x)    circuit vertex of variable x; Delta_x runs through v_x and
//                every f arc of x
//   N = L + M + {v_x} + {v^C}, a complete digraph.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orientk/graph.hpp"

namespace orientk {

struct Literal {
  int variable;
  bool positive;
  bool operator==(const Literal&) const = default;
};

struct NaeInstance {
  std::vector<std::string> variables;
  std::vector<std::vector<Literal>> clauses;

  int slot_count() const;
};

using Assignment = std::vector<bool>;

/// Format: "p nae" header, optional "vars <name>..." line fixing variable
/// order, then "clause <lit> <lit> [<lit>]" lines with lit = name | !name.
NaeInstance parse_nae(std::string_view text);
std::string serialize_nae(const NaeInstance& instance);

/// Checks clause shape (2 or 3 literals) and that every variable is used.
void validate(const NaeInstance& instance);

bool nae_satisfied(const NaeInstance& instance, const Assignment& assignment);

struct NaeSolution {
  bool satisfiable = false;
  std::optional<Assignment> model;
  std::uint64_t satisfying_count = 0;
};

NaeSolution nae_bruteforce(const NaeInstance& instance);

/// Assignment from the low bits of `mask` (bit i = variable i).
Assignment assignment_from_mask(int variables, std::uint64_t mask);

struct SlotGadget {
  int clause = 0;
  int position = 0;
  int variable = 0;
  bool positive = true;
  VertexId u = -1;
  VertexId t = -1;
  VertexId u1 = -1;  // u'
  VertexId u2 = -1;  // u''
  VertexId u3 = -1;  // u'''
  VertexId vc = -1;  // v^C
  EdgeId special = -1;
  EdgeId f = -1;
};

struct ClauseGadget {
  VertexId w = -1;
  std::vector<int> slots;
};

struct VariableGadget {
  std::string name;
  VertexId v = -1;
  /// Delta_x in traversal order; includes the f arcs.
  std::vector<EdgeId> circuit;
  std::vector<int> slots;
};

struct GadgetMap {
  int k = 0;
  int vertex_count = 0;
  int arc_count = 0;
  std::vector<std::string> labels;
  std::vector<VertexId> L;
  std::vector<VertexId> M;
  VertexId m = -1;
  VertexId l = -1;
  std::vector<VertexId> N;
  std::vector<VertexId> W;
  std::vector<ClauseGadget> clauses;
  std::vector<SlotGadget> slots;
  std::vector<VariableGadget> variables;
  /// Arcs belonging to antiparallel pairs (complete digraphs included).
  std::vector<EdgeId> pair_arcs;
  /// Eulerization arcs F; empty until eulerize().
  std::vector<EdgeId> eulerization;

  std::string role(VertexId v) const;
};

struct Encoding {
  Multidigraph digraph;
  GadgetMap map;
};

Encoding encode(const NaeInstance& instance, int k);
Encoding eulerize(const Encoding& encoding);

/// Arc ids reversed by the natural reorientation of `assignment`.
std::vector<EdgeId> natural_reversal(const GadgetMap& map,
                                     const Assignment& assignment);
Multidigraph natural_reorientation(const Encoding& encoding,
                                   const Assignment& assignment);

/// Per-arc reversal flags of a reorientation `reoriented` of `original`.
std::vector<bool> reversal_flags(const Multidigraph& original,
                                 const Multidigraph& reoriented);

bool is_consistent(const GadgetMap& map, const std::vector<bool>& reversed);
bool is_consistent(const Multidigraph& original, const GadgetMap& map,
                   const Multidigraph& reoriented);

class InconsistentReorientation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Assignment decode(const GadgetMap& map, const std::vector<bool>& reversed);
Assignment decode(const Multidigraph& original, const GadgetMap& map,
                  const Multidigraph& reoriented);

/// Clause hub w^C has an outgoing and an incoming special arc in `d`.
bool star_condition(const GadgetMap& map, const Multidigraph& d, int clause);

/// Structural premises of the consistency argument; each returned string
/// names one violated fact (empty = all hold):
///   t and u' of every slot have degree 2k with k-1 antiparallel pairs, and
///   degree 2k-2 without their f and Delta arcs;
///   in D - (M + t) exactly one arc enters and one leaves {u,u',u'',u'''},
///   namely the special arc and a Delta arc.
std::vector<std::string> degree_ledger_violations(const Encoding& encoding);
std::vector<std::string> boundary_violations(const Encoding& encoding);

/// Vertices of odd degree in the underlying graph.
std::vector<VertexId> odd_degree_vertices(const Multidigraph& d);

/// The clause (x, x) at k = 3, eulerized: an Eulerian weakly 6-connected
/// graph with no 3-connected orientation.
Encoding build_H3_prime();

std::string gadget_map_to_json(const GadgetMap& map);
GadgetMap gadget_map_from_json(std::string_view text);

}  // namespace orientk
