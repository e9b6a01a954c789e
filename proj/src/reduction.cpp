#include "orientk/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orientk/graph_io.hpp"

namespace orientk {

int NaeInstance::slot_count() const {
  int total = 0;
  for (const auto& c : clauses) total += static_cast<int>(c.size());
  return total;
}

namespace {

std::vector<std::string_view> words_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

NaeInstance parse_nae(std::string_view text) {
  NaeInstance instance;
  std::map<std::string, int, std::less<>> index;
  bool header = false;
  bool declared = false;
  int number = 0;
  auto variable = [&](std::string_view name, int line) {
    if (auto it = index.find(name); it != index.end()) return it->second;
    if (declared)
      throw ParseError(line, "undeclared variable '" + std::string(name) + "'");
    const int id = static_cast<int>(instance.variables.size());
    instance.variables.emplace_back(name);
    index.emplace(std::string(name), id);
    return id;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    const auto w = words_of(raw);
    if (w.empty() || w.front().front() == '#') continue;
    if (!header) {
      if (w.size() != 2 || w[0] != "p" || w[1] != "nae")
        throw ParseError(number, "expected 'p nae' header");
      header = true;
      continue;
    }
    if (w[0] == "vars") {
      if (declared || !instance.clauses.empty())
        throw ParseError(number, "'vars' must come once, before clauses");
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (index.contains(w[i]))
          throw ParseError(number, "variable '" + std::string(w[i]) + "' repeated");
        variable(w[i], number);
      }
      declared = true;
      continue;
    }
    if (w[0] == "clause") {
      if (w.size() < 3 || w.size() > 4)
        throw ParseError(number, "a clause needs 2 or 3 literals");
      std::vector<Literal> clause;
      for (std::size_t i = 1; i < w.size(); ++i) {
        std::string_view lit = w[i];
        const bool negated = lit.front() == '!';
        if (negated) lit.remove_prefix(1);
        if (lit.empty()) throw ParseError(number, "empty literal");
        clause.push_back({variable(lit, number), !negated});
      }
      instance.clauses.push_back(std::move(clause));
      continue;
    }
    throw ParseError(number, "unrecognized line '" + std::string(w[0]) + "'");
  }
  if (!header) throw ParseError(0, "missing 'p nae' header");
  validate(instance);
  return instance;
}

std::string serialize_nae(const NaeInstance& instance) {
  std::ostringstream out;
  out << "p nae\nvars";
  for (const auto& v : instance.variables) out << ' ' << v;
  out << '\n';
  for (const auto& clause : instance.clauses) {
    out << "clause";
    for (const Literal& lit : clause)
      out << ' ' << (lit.positive ? "" : "!")
          << instance.variables.at(static_cast<std::size_t>(lit.variable));
    out << '\n';
  }
  return out.str();
}

void validate(const NaeInstance& instance) {
  std::vector<bool> used(instance.variables.size(), false);
  for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
    const auto& clause = instance.clauses[c];
    if (clause.size() < 2 || clause.size() > 3)
      throw std::invalid_argument("clause " + std::to_string(c) +
                                  " must have 2 or 3 literals");
    for (const Literal& lit : clause) {
      if (lit.variable < 0 ||
          lit.variable >= static_cast<int>(instance.variables.size()))
        throw std::invalid_argument("clause " + std::to_string(c) +
                                    " names an unknown variable");
      used[static_cast<std::size_t>(lit.variable)] = true;
    }
  }
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v])
      throw std::invalid_argument("variable '" + instance.variables[v] +
                                  "' occurs in no clause");
}

bool nae_satisfied(const NaeInstance& instance, const Assignment& assignment) {
  if (assignment.size() != instance.variables.size())
    throw std::invalid_argument("assignment size mismatch");
  for (const auto& clause : instance.clauses) {
    bool any_true = false;
    bool any_false = false;
    for (const Literal& lit : clause) {
      const bool value =
          assignment[static_cast<std::size_t>(lit.variable)] == lit.positive;
      (value ? any_true : any_false) = true;
    }
    if (!any_true || !any_false) return false;
  }
  return true;
}

Assignment assignment_from_mask(int variables, std::uint64_t mask) {
  Assignment a(static_cast<std::size_t>(variables));
  for (int i = 0; i < variables; ++i) a[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return a;
}

NaeSolution nae_bruteforce(const NaeInstance& instance) {
  const int n = static_cast<int>(instance.variables.size());
  if (n > 24) throw std::invalid_argument("too many variables for brute force");
  NaeSolution solution;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment a = assignment_from_mask(n, mask);
    if (!nae_satisfied(instance, a)) continue;
    ++solution.satisfying_count;
    if (!solution.model) solution.model = std::move(a);
  }
  solution.satisfiable = solution.satisfying_count > 0;
  return solution;
}

std::string GadgetMap::role(VertexId v) const {
  const std::string& label = labels.at(static_cast<std::size_t>(v));
  const auto dot = label.find('.');
  return label.substr(0, dot);
}

namespace {

class Builder {
 public:
  explicit Builder(Encoding& enc) : enc_(enc) {}

  VertexId vertex(std::string label) {
    enc_.map.labels.push_back(label);
    return enc_.digraph.add_vertex(std::move(label));
  }

  EdgeId arc(VertexId tail, VertexId head) {
    return enc_.digraph.add_arc(tail, head);
  }

  void pair(VertexId a, VertexId b) {
    enc_.map.pair_arcs.push_back(arc(a, b));
    enc_.map.pair_arcs.push_back(arc(b, a));
  }

  // Complete digraph on `vs`, skipping pairs inside `skip`.
  void complete(const std::vector<VertexId>& vs,
                const std::set<VertexId>& skip = {}) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!(skip.contains(vs[i]) && skip.contains(vs[j]))) pair(vs[i], vs[j]);
  }

 private:
  Encoding& enc_;
};

}  // namespace

Encoding encode(const NaeInstance& instance, int k) {
  if (k < 3) throw std::invalid_argument("encoding needs k >= 3");
  validate(instance);

  Encoding enc;
  GadgetMap& map = enc.map;
  map.k = k;
  Builder b(enc);

  for (int i = 0; i < k - 1; ++i) map.L.push_back(b.vertex("L." + std::to_string(i)));
  for (int i = 0; i < k - 2; ++i) map.M.push_back(b.vertex("M." + std::to_string(i)));
  map.l = map.L.front();
  map.m = map.M.front();

  for (const auto& name : instance.variables) {
    VariableGadget var;
    var.name = name;
    var.v = b.vertex("v." + name);
    map.variables.push_back(std::move(var));
  }

  for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
    const std::string tag = "C" + std::to_string(c);
    ClauseGadget clause;
    clause.w = b.vertex("w." + tag);
    map.W.push_back(clause.w);
    for (std::size_t s = 0; s < instance.clauses[c].size(); ++s) {
      const Literal lit = instance.clauses[c][s];
      const std::string suffix = "." + tag + "." + std::to_string(s) + "." +
                                 instance.variables[static_cast<std::size_t>(lit.variable)];
      SlotGadget slot;
      slot.clause = static_cast<int>(c);
      slot.position = static_cast<int>(s);
      slot.variable = lit.variable;
      slot.positive = lit.positive;
      slot.u = b.vertex("u" + suffix);
      slot.t = b.vertex("t" + suffix);
      slot.u1 = b.vertex("u1" + suffix);
      slot.u2 = b.vertex("u2" + suffix);
      slot.u3 = b.vertex("u3" + suffix);
      slot.vc = b.vertex("vc" + suffix);
      clause.slots.push_back(static_cast<int>(map.slots.size()));
      map.variables[static_cast<std::size_t>(lit.variable)].slots.push_back(
          static_cast<int>(map.slots.size()));
      map.slots.push_back(slot);
    }
    map.clauses.push_back(std::move(clause));
  }

  // Clause gadgets: L + w^C complete (L's own arcs come with N), special arcs.
  for (ClauseGadget& clause : map.clauses) {
    for (VertexId l : map.L) b.pair(l, clause.w);
    for (int s : clause.slots) {
      SlotGadget& slot = map.slots[static_cast<std::size_t>(s)];
      slot.special = slot.positive ? b.arc(clause.w, slot.u) : b.arc(slot.u, clause.w);
    }
  }

  // Literal gadgets: M + {u, u'', u'''} complete (M's own arcs come with N),
  // then the antiparallel pairs.
  const std::set<VertexId> m_set(map.M.begin(), map.M.end());
  for (SlotGadget& slot : map.slots) {
    std::vector<VertexId> core = map.M;
    core.insert(core.end(), {slot.u, slot.u2, slot.u3});
    b.complete(core, m_set);
    b.pair(slot.vc, slot.t);
    b.pair(slot.t, slot.u3);
    b.pair(slot.u3, slot.u1);
    b.pair(slot.u1, slot.u2);
    for (std::size_t i = 1; i < map.M.size(); ++i) {
      b.pair(slot.t, map.M[i]);
      b.pair(slot.u1, map.M[i]);
    }
  }

  for (SlotGadget& slot : map.slots)
    slot.f = slot.positive ? b.arc(slot.t, slot.u1) : b.arc(slot.u1, slot.t);

  // Delta_x: v_x -> tail(f) -f-> head(f) -> tail(next f) ... -> v_x.
  for (VariableGadget& var : map.variables) {
    VertexId at = var.v;
    for (int s : var.slots) {
      const SlotGadget& slot = map.slots[static_cast<std::size_t>(s)];
      const Endpoints f = enc.digraph.arc(slot.f);
      var.circuit.push_back(b.arc(at, f.first));
      var.circuit.push_back(slot.f);
      at = f.second;
    }
    var.circuit.push_back(b.arc(at, var.v));
  }

  map.N.insert(map.N.end(), map.L.begin(), map.L.end());
  map.N.insert(map.N.end(), map.M.begin(), map.M.end());
  for (const VariableGadget& var : map.variables) map.N.push_back(var.v);
  for (const SlotGadget& slot : map.slots) map.N.push_back(slot.vc);
  b.complete(map.N);

  map.vertex_count = enc.digraph.vertex_count();
  map.arc_count = enc.digraph.arc_count();
  std::sort(map.pair_arcs.begin(), map.pair_arcs.end());
  return enc;
}

Encoding eulerize(const Encoding& encoding) {
  const GadgetMap& src = encoding.map;
  if (src.arc_count != encoding.digraph.arc_count() ||
      src.vertex_count != encoding.digraph.vertex_count() ||
      src.k < 3 || src.M.empty() || src.L.empty())
    throw std::invalid_argument("eulerize needs an encode() result");
  if (!src.eulerization.empty())
    throw std::invalid_argument("encoding is already eulerized");

  Encoding out = encoding;
  for (const ClauseGadget& clause : src.clauses) {
    for (int s : clause.slots)
      out.map.eulerization.push_back(
          out.digraph.add_arc(src.slots[static_cast<std::size_t>(s)].u, src.m));
    if (clause.slots.size() % 2 == 1) {
      out.map.eulerization.push_back(out.digraph.add_arc(src.m, src.l));
      out.map.eulerization.push_back(out.digraph.add_arc(src.l, clause.w));
    }
  }
  out.map.arc_count = out.digraph.arc_count();
  return out;
}

std::vector<EdgeId> natural_reversal(const GadgetMap& map,
                                     const Assignment& assignment) {
  if (assignment.size() != map.variables.size())
    throw std::invalid_argument("assignment must cover every variable");
  std::vector<EdgeId> reversed;
  for (std::size_t x = 0; x < map.variables.size(); ++x) {
    if (assignment[x]) continue;
    const VariableGadget& var = map.variables[x];
    reversed.insert(reversed.end(), var.circuit.begin(), var.circuit.end());
    for (int s : var.slots)
      reversed.push_back(map.slots[static_cast<std::size_t>(s)].special);
  }
  std::sort(reversed.begin(), reversed.end());
  return reversed;
}

Multidigraph natural_reorientation(const Encoding& encoding,
                                   const Assignment& assignment) {
  return reorient(encoding.digraph, natural_reversal(encoding.map, assignment));
}

std::vector<bool> reversal_flags(const Multidigraph& original,
                                 const Multidigraph& reoriented) {
  if (original.arc_count() != reoriented.arc_count() ||
      original.vertex_count() != reoriented.vertex_count())
    throw std::invalid_argument("not a reorientation: sizes differ");
  std::vector<bool> flags(static_cast<std::size_t>(original.arc_count()));
  for (EdgeId a = 0; a < original.arc_count(); ++a) {
    const Endpoints x = original.arc(a);
    const Endpoints y = reoriented.arc(a);
    if (x == y)
      flags[static_cast<std::size_t>(a)] = false;
    else if (x.first == y.second && x.second == y.first)
      flags[static_cast<std::size_t>(a)] = true;
    else
      throw std::invalid_argument("not a reorientation: arc " +
                                  std::to_string(a) + " changed endpoints");
  }
  return flags;
}

namespace {

// The common reversal flag of Delta_x and its special arcs, or nullopt.
std::optional<bool> uniform_flag(const GadgetMap& map, const VariableGadget& var,
                                 const std::vector<bool>& reversed) {
  const bool flag = reversed[static_cast<std::size_t>(var.circuit.front())];
  for (EdgeId a : var.circuit)
    if (reversed[static_cast<std::size_t>(a)] != flag) return std::nullopt;
  for (int s : var.slots)
    if (reversed[static_cast<std::size_t>(map.slots[static_cast<std::size_t>(s)].special)] != flag)
      return std::nullopt;
  return flag;
}

}  // namespace

bool is_consistent(const GadgetMap& map, const std::vector<bool>& reversed) {
  if (static_cast<int>(reversed.size()) != map.arc_count)
    throw std::invalid_argument("reversal flags do not match the gadget map");
  for (EdgeId a : map.pair_arcs)
    if (reversed[static_cast<std::size_t>(a)]) return false;
  return std::all_of(map.variables.begin(), map.variables.end(),
                     [&](const VariableGadget& var) {
                       return uniform_flag(map, var, reversed).has_value();
                     });
}

bool is_consistent(const Multidigraph& original, const GadgetMap& map,
                   const Multidigraph& reoriented) {
  return is_consistent(map, reversal_flags(original, reoriented));
}

Assignment decode(const GadgetMap& map, const std::vector<bool>& reversed) {
  if (!is_consistent(map, reversed))
    throw InconsistentReorientation("reorientation is not consistent");
  Assignment assignment;
  for (const VariableGadget& var : map.variables)
    assignment.push_back(!*uniform_flag(map, var, reversed));
  return assignment;
}

Assignment decode(const Multidigraph& original, const GadgetMap& map,
                  const Multidigraph& reoriented) {
  return decode(map, reversal_flags(original, reoriented));
}

bool star_condition(const GadgetMap& map, const Multidigraph& d, int clause) {
  const ClauseGadget& c = map.clauses.at(static_cast<std::size_t>(clause));
  bool leaves = false;
  bool enters = false;
  for (int s : c.slots) {
    const Endpoints e = d.arc(map.slots[static_cast<std::size_t>(s)].special);
    if (e.first == c.w) leaves = true;
    if (e.second == c.w) enters = true;
  }
  return leaves && enters;
}

namespace {

// Undirected degree of v and the number of neighbours joined to v by arcs in
// both directions.
std::pair<int, int> degree_and_pairs(const Multidigraph& d, VertexId v) {
  std::map<VertexId, std::pair<int, int>> by_neighbour;  // (out, in)
  for (EdgeId a : d.out_arcs(v)) ++by_neighbour[d.arc(a).second].first;
  for (EdgeId a : d.in_arcs(v)) ++by_neighbour[d.arc(a).first].second;
  int pairs = 0;
  for (const auto& [w, counts] : by_neighbour)
    pairs += std::min(counts.first, counts.second);
  return {d.outdegree(v) + d.indegree(v), pairs};
}

}  // namespace

std::vector<std::string> degree_ledger_violations(const Encoding& encoding) {
  const Multidigraph& d = encoding.digraph;
  const GadgetMap& map = encoding.map;
  const int k = map.k;
  std::set<EdgeId> circuit_arcs;
  for (const VariableGadget& var : map.variables)
    circuit_arcs.insert(var.circuit.begin(), var.circuit.end());

  std::vector<std::string> out;
  for (const SlotGadget& slot : map.slots) {
    for (VertexId v : {slot.t, slot.u1}) {
      const auto [deg, pairs] = degree_and_pairs(d, v);
      const std::string& name = map.labels[static_cast<std::size_t>(v)];
      if (deg != 2 * k)
        out.push_back(name + ": degree " + std::to_string(deg) + " != 2k");
      if (pairs != k - 1)
        out.push_back(name + ": " + std::to_string(pairs) +
                      " antiparallel pairs != k-1");
      int on_circuit = 0;
      for (EdgeId a : d.out_arcs(v)) on_circuit += circuit_arcs.contains(a);
      for (EdgeId a : d.in_arcs(v)) on_circuit += circuit_arcs.contains(a);
      if (deg - on_circuit != 2 * k - 2)
        out.push_back(name + ": degree without f/Delta arcs " +
                      std::to_string(deg - on_circuit) + " != 2k-2");
    }
  }
  return out;
}

std::vector<std::string> boundary_violations(const Encoding& encoding) {
  const Multidigraph& d = encoding.digraph;
  const GadgetMap& map = encoding.map;
  std::set<EdgeId> circuit_arcs;
  for (const VariableGadget& var : map.variables)
    circuit_arcs.insert(var.circuit.begin(), var.circuit.end());

  std::vector<std::string> out;
  for (const SlotGadget& slot : map.slots) {
    std::set<VertexId> removed(map.M.begin(), map.M.end());
    removed.insert(slot.t);
    const std::set<VertexId> inside{slot.u, slot.u1, slot.u2, slot.u3};
    std::vector<EdgeId> entering;
    std::vector<EdgeId> leaving;
    for (EdgeId a = 0; a < d.arc_count(); ++a) {
      const Endpoints e = d.arc(a);
      if (removed.contains(e.first) || removed.contains(e.second)) continue;
      const bool tail_in = inside.contains(e.first);
      const bool head_in = inside.contains(e.second);
      if (head_in && !tail_in) entering.push_back(a);
      if (tail_in && !head_in) leaving.push_back(a);
    }
    const std::string name = map.labels[static_cast<std::size_t>(slot.u)];
    if (entering.size() != 1 || leaving.size() != 1) {
      out.push_back(name + ": " + std::to_string(entering.size()) +
                    " arcs enter and " + std::to_string(leaving.size()) +
                    " leave the literal gadget");
      continue;
    }
    const EdgeId special = slot.positive ? entering.front() : leaving.front();
    const EdgeId delta = slot.positive ? leaving.front() : entering.front();
    if (special != slot.special)
      out.push_back(name + ": boundary arc is not the special arc");
    if (!circuit_arcs.contains(delta))
      out.push_back(name + ": boundary arc is not on Delta");
  }
  return out;
}

std::vector<VertexId> odd_degree_vertices(const Multidigraph& d) {
  std::vector<VertexId> odd;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if ((d.indegree(v) + d.outdegree(v)) % 2 != 0) odd.push_back(v);
  return odd;
}

Encoding build_H3_prime() {
  NaeInstance instance;
  instance.variables = {"x"};
  instance.clauses = {{{0, true}, {0, true}}};
  return eulerize(encode(instance, 3));
}

// JSON uses labels for vertices so a map can be read without the graph.
std::string gadget_map_to_json(const GadgetMap& map) {
  using nlohmann::json;
  auto label = [&](VertexId v) { return map.labels.at(static_cast<std::size_t>(v)); };
  auto labels = [&](const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(label(v));
    return out;
  };

  json j;
  j["k"] = map.k;
  j["arc_count"] = map.arc_count;
  j["vertices"] = map.labels;
  json roles = json::object();
  for (VertexId v = 0; v < map.vertex_count; ++v) roles[label(v)] = map.role(v);
  j["roles"] = roles;
  j["L"] = labels(map.L);
  j["M"] = labels(map.M);
  j["m"] = label(map.m);
  j["l"] = label(map.l);
  j["N"] = labels(map.N);
  j["W"] = labels(map.W);
  json clauses = json::array();
  for (const ClauseGadget& clause : map.clauses) {
    json c;
    c["w"] = label(clause.w);
    json slots = json::array();
    for (int s : clause.slots) {
      const SlotGadget& slot = map.slots[static_cast<std::size_t>(s)];
      slots.push_back({{"variable", map.variables[static_cast<std::size_t>(slot.variable)].name},
                       {"positive", slot.positive},
                       {"u", label(slot.u)},
                       {"t", label(slot.t)},
                       {"u'", label(slot.u1)},
                       {"u''", label(slot.u2)},
                       {"u'''", label(slot.u3)},
                       {"v^C", label(slot.vc)},
                       {"e", slot.special},
                       {"f", slot.f}});
    }
    c["slots"] = slots;
    clauses.push_back(c);
  }
  j["clauses"] = clauses;
  json variables = json::array();
  for (const VariableGadget& var : map.variables)
    variables.push_back({{"name", var.name}, {"v_x", label(var.v)}, {"Delta", var.circuit}});
  j["variables"] = variables;
  j["pairs"] = map.pair_arcs;
  j["F"] = map.eulerization;
  return j.dump(2);
}

GadgetMap gadget_map_from_json(std::string_view text) {
  using nlohmann::json;
  GadgetMap map;
  try {
    const json j = json::parse(text);
    map.k = j.at("k").get<int>();
    map.arc_count = j.at("arc_count").get<int>();
    map.labels = j.at("vertices").get<std::vector<std::string>>();
    map.vertex_count = static_cast<int>(map.labels.size());
    std::map<std::string, VertexId> index;
    for (VertexId v = 0; v < map.vertex_count; ++v)
      index.emplace(map.labels[static_cast<std::size_t>(v)], v);
    auto id = [&](const json& label) {
      auto it = index.find(label.get<std::string>());
      if (it == index.end()) throw std::invalid_argument("unknown vertex in gadget map");
      return it->second;
    };
    auto ids = [&](const json& arr) {
      std::vector<VertexId> out;
      for (const auto& x : arr) out.push_back(id(x));
      return out;
    };
    auto arc_id = [&](const json& x) {
      const int a = x.get<int>();
      if (a < 0 || a >= map.arc_count) throw std::invalid_argument("arc id out of range in gadget map");
      return a;
    };
    map.L = ids(j.at("L"));
    map.M = ids(j.at("M"));
    map.m = id(j.at("m"));
    map.l = id(j.at("l"));
    map.N = ids(j.at("N"));
    map.W = ids(j.at("W"));
    std::map<std::string, int> var_index;
    for (const auto& var : j.at("variables")) {
      VariableGadget g;
      g.name = var.at("name").get<std::string>();
      g.v = id(var.at("v_x"));
      for (const auto& a : var.at("Delta")) g.circuit.push_back(arc_id(a));
      var_index.emplace(g.name, static_cast<int>(map.variables.size()));
      map.variables.push_back(std::move(g));
    }
    for (const auto& clause : j.at("clauses")) {
      ClauseGadget c;
      c.w = id(clause.at("w"));
      for (const auto& s : clause.at("slots")) {
        SlotGadget slot;
        slot.clause = static_cast<int>(map.clauses.size());
        slot.position = static_cast<int>(c.slots.size());
        const auto it = var_index.find(s.at("variable").get<std::string>());
        if (it == var_index.end()) throw std::invalid_argument("unknown variable in gadget map");
        slot.variable = it->second;
        slot.positive = s.at("positive").get<bool>();
        slot.u = id(s.at("u"));
        slot.t = id(s.at("t"));
        slot.u1 = id(s.at("u'"));
        slot.u2 = id(s.at("u''"));
        slot.u3 = id(s.at("u'''"));
        slot.vc = id(s.at("v^C"));
        slot.special = arc_id(s.at("e"));
        slot.f = arc_id(s.at("f"));
        const int index_of_slot = static_cast<int>(map.slots.size());
        c.slots.push_back(index_of_slot);
        map.variables[static_cast<std::size_t>(slot.variable)].slots.push_back(index_of_slot);
        map.slots.push_back(slot);
      }
      map.clauses.push_back(std::move(c));
    }
    for (const auto& a : j.at("pairs")) map.pair_arcs.push_back(arc_id(a));
    for (const auto& a : j.at("F")) map.eulerization.push_back(arc_id(a));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed gadget map: ") + e.what());
  }
  return map;
}

}  // namespace orientk
