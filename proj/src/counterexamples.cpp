#include "orientk/counterexamples.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "orientk/graph_io.hpp"

namespace orientk {

int default_gk_n(int k) {
  int n = k * k;
  return n % 2 == 1 ? n : n + 1;
}

std::vector<std::vector<VertexId>> realize_pairs(
    const std::vector<PairDemand>& demands, const std::vector<VertexId>& hosts) {
  std::size_t total = 0;
  for (const PairDemand& d : demands) {
    if (d.count < 0) throw InfeasibleDemand("negative pair demand");
    total += static_cast<std::size_t>(d.count);
  }
  if (total > hosts.size())
    throw InfeasibleDemand("pair demand " + std::to_string(total) +
                           " exceeds " + std::to_string(hosts.size()) + " hosts");
  std::vector<std::vector<VertexId>> result;
  std::size_t next = 0;
  for (const PairDemand& d : demands) {
    result.emplace_back(hosts.begin() + static_cast<std::ptrdiff_t>(next),
                        hosts.begin() + static_cast<std::ptrdiff_t>(next + d.count));
    next += static_cast<std::size_t>(d.count);
  }
  return result;
}

GkInstance build_Gk(int k, int n) {
  if (k < 4) throw std::invalid_argument("G_k needs k >= 4");
  if (n % 2 == 0) throw std::invalid_argument("G_k needs odd n");
  if (n < k * k) throw std::invalid_argument("G_k needs n >= k^2");

  GkInstance inst;
  Multigraph& g = inst.graph;
  GkParams& p = inst.params;
  p.k = k;
  p.n = n;
  for (int i = 0; i < n; ++i) p.A.push_back(g.add_vertex("A." + std::to_string(i)));
  for (int i = 0; i < n; ++i) p.B.push_back(g.add_vertex("B." + std::to_string(i)));
  for (int i = 0; i < k - 3; ++i) p.C.push_back(g.add_vertex("C." + std::to_string(i)));
  p.a = p.A[0];
  p.b = p.B[0];
  p.c = p.C[0];
  p.w = g.add_vertex("w");
  p.x = g.add_vertex("x");
  p.y = g.add_vertex("y");
  p.z = g.add_vertex("z");

  for (const auto* side : {&p.A, &p.B})
    for (std::size_t i = 0; i < side->size(); ++i)
      for (std::size_t j = i + 1; j < side->size(); ++j)
        g.add_edge((*side)[i], (*side)[j]);

  const std::array<VertexId, 8> cycle{p.a, p.z, p.y, p.x, p.w, p.b, p.c, p.a};
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) g.add_edge(cycle[i], cycle[i + 1]);

  const int half = (k + 1) / 2;
  std::vector<PairDemand> into_a;
  std::vector<PairDemand> into_b;
  for (std::size_t i = 1; i < p.C.size(); ++i) {
    into_a.push_back({p.C[i], half});
    into_b.push_back({p.C[i], half});
  }
  into_a.push_back({p.c, half});
  into_b.push_back({p.c, half});
  into_a.push_back({p.w, k - 1});
  into_b.push_back({p.z, k - 1});
  into_a.push_back({p.y, 1});
  into_b.push_back({p.x, 1});
  into_a.push_back({p.x, k - 2});
  into_b.push_back({p.y, k - 2});

  auto place = [&](const std::vector<PairDemand>& demands,
                   const std::vector<VertexId>& side) {
    const std::vector<VertexId> hosts(side.begin() + 1, side.end());
    const auto assignment = realize_pairs(demands, hosts);
    for (std::size_t i = 0; i < demands.size(); ++i)
      for (VertexId h : assignment[i]) {
        g.add_edge(demands[i].hub, h);
        g.add_edge(demands[i].hub, h);
      }
  };
  place(into_a, p.A);
  place(into_b, p.B);
  return inst;
}

std::vector<VertexId> gk_separator(const GkParams& params) {
  std::vector<VertexId> s = params.C;
  s.push_back(params.x);
  s.push_back(params.y);
  std::sort(s.begin(), s.end());
  return s;
}

std::optional<GkParams> recognize_gk(const Multigraph& g) {
  int c = 0;
  while (g.find("C." + std::to_string(c))) ++c;
  int n = 0;
  while (g.find("A." + std::to_string(n))) ++n;
  const int k = c + 3;
  if (k < 4 || n % 2 == 0 || n < k * k) return std::nullopt;
  GkInstance inst = build_Gk(k, n);
  if (!(inst.graph == g)) return std::nullopt;
  return inst.params;
}

// ---------------------------------------------------------------------------
// G_3 / H_3

const std::vector<std::string> kG3Labels{"u_a", "v_a", "w_a", "t_a", "u_b",
                                         "v_b", "w_b", "t_b", "x",   "y"};

namespace {

enum G3 { ua, va, wa, ta, ub, vb, wb, tb, X, Y, kG3Size };

constexpr std::array<int, 8> kPath{ua, va, wb, Y, X, wa, vb, ub};
constexpr std::array<std::array<int, 2>, 6> kTPairs{
    {{ta, ua}, {ta, va}, {ta, Y}, {tb, ub}, {tb, vb}, {tb, X}}};

using Mult = std::array<std::array<int, kG3Size>, kG3Size>;

bool side_a(int v) { return v == ua || v == va || v == wa || v == ta; }
bool side_b(int v) { return v == ub || v == vb || v == wb || v == tb; }

bool is_path_edge(int p, int q) {
  for (std::size_t i = 0; i + 1 < kPath.size(); ++i)
    if ((kPath[i] == p && kPath[i + 1] == q) || (kPath[i] == q && kPath[i + 1] == p))
      return true;
  return false;
}

bool is_internal(int v) {
  return std::find(kPath.begin() + 1, kPath.end() - 1, v) != kPath.end() - 1;
}

const std::string& name(int v) { return kG3Labels[static_cast<std::size_t>(v)]; }

// Free slots: vertex pairs avoiding t_a, t_b, path edges, and A-B pairs.
std::vector<std::array<int, 2>> free_slots() {
  std::vector<std::array<int, 2>> slots;
  for (int p = 0; p < kG3Size; ++p)
    for (int q = p + 1; q < kG3Size; ++q) {
      if (p == ta || p == tb || q == ta || q == tb) continue;
      if (is_path_edge(p, q)) continue;
      if ((side_a(p) && side_b(q)) || (side_b(p) && side_a(q))) continue;
      slots.push_back({p, q});
    }
  return slots;
}

// H_3 added edges, optional.
constexpr std::array<std::array<int, 2>, 6> kH3Added{
    {{ua, va}, {va, Y}, {Y, ua}, {ub, vb}, {vb, X}, {X, ub}}};

// Returns true when every constraint holds. With `out`, collects every
// violation; without, stops at the first one.
bool check_g3(const Mult& m, std::vector<std::string>* out) {
  bool ok = true;
  auto violated = [&](const std::string& what) {
    ok = false;
    if (out) out->push_back(what);
    return out != nullptr;
  };
  std::array<int, kG3Size> deg{};
  for (int p = 0; p < kG3Size; ++p)
    for (int q = 0; q < kG3Size; ++q) deg[p] += m[p][q];

  for (std::size_t i = 0; i + 1 < kPath.size(); ++i)
    if (m[kPath[i]][kPath[i + 1]] != 1 &&
        !violated("path edge " + name(kPath[i]) + "-" + name(kPath[i + 1]) +
                  " is not simple"))
      return false;

  for (int p = 0; p < kG3Size; ++p)
    for (int q = p + 1; q < kG3Size; ++q) {
      if (m[p][q] > 2 &&
          !violated("multiplicity of " + name(p) + "-" + name(q) + " exceeds 2"))
        return false;
      if (m[p][q] >= 2 && deg[p] != 6 && deg[q] != 6 &&
          !violated("pair " + name(p) + "-" + name(q) +
                    " has no endpoint of degree 6"))
        return false;
      const bool cross = (side_a(p) && side_b(q)) || (side_b(p) && side_a(q));
      if (cross && m[p][q] > 0 && !is_path_edge(p, q) &&
          !violated("extra A-B edge " + name(p) + "-" + name(q)))
        return false;
    }

  for (int v = 0; v < kG3Size; ++v) {
    if (deg[v] < 6 && !violated("degree of " + name(v) + " below 6")) return false;
    if (!is_internal(v)) continue;
    int simple = 0;
    for (int q = 0; q < kG3Size; ++q) simple += m[v][q] == 1;
    if (deg[v] != 6 && !violated("internal vertex " + name(v) + " has degree " +
                                 std::to_string(deg[v])))
      return false;
    if (simple != 2 &&
        !violated("internal vertex " + name(v) + " has " +
                  std::to_string(simple) + " simple edges"))
      return false;
  }

  for (int t : {static_cast<int>(ta), static_cast<int>(tb)}) {
    for (int q = 0; q < kG3Size; ++q) {
      const bool expected =
          std::any_of(kTPairs.begin(), kTPairs.end(),
                      [&](const auto& e) { return e[0] == t && e[1] == q; });
      if (m[t][q] != (expected ? 2 : 0) &&
          !violated(name(t) + " is not paired exactly with its three neighbours"))
        return false;
    }
  }

  // In H_3 the added triangle and path edges stay simple.
  for (const auto& e : kH3Added)
    if (m[e[0]][e[1]] + 1 > 2 &&
        !violated("H_3 edge " + name(e[0]) + "-" + name(e[1]) + " exceeds multiplicity 2"))
      return false;
  for (const auto& e : std::array<std::array<int, 2>, 4>{{{va, Y}, {Y, ua}, {vb, X}, {X, ub}}})
    if (m[e[0]][e[1]] != 0 &&
        !violated("H_3 edge " + name(e[0]) + "-" + name(e[1]) + " is not simple"))
      return false;
  return ok;
}

Mult multiplicities(const Multigraph& g) {
  if (!std::ranges::equal(g.labels(), kG3Labels))
    throw std::invalid_argument("graph does not use the G_3 vertex labels");
  Mult m{};
  for (const Endpoints& e : g.edges()) {
    ++m[e.first][e.second];
    ++m[e.second][e.first];
  }
  return m;
}

Multigraph g3_from_slots(const std::vector<std::array<int, 2>>& slots,
                         const std::vector<int>& mult) {
  Multigraph g;
  for (const auto& label : kG3Labels) g.add_vertex(label);
  for (std::size_t i = 0; i + 1 < kPath.size(); ++i) g.add_edge(kPath[i], kPath[i + 1]);
  for (const auto& e : kTPairs) {
    g.add_edge(e[0], e[1]);
    g.add_edge(e[0], e[1]);
  }
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (int r = 0; r < mult[i]; ++r) g.add_edge(slots[i][0], slots[i][1]);
  return g;
}

// Frozen output of reconstruct_G3().
constexpr std::string_view kG3Fixture = R"(graph undirected
v u_a
v v_a
v w_a
v t_a
v u_b
v v_b
v w_b
v t_b
v x
v y
e u_a v_a
e v_a w_b
e w_b y
e y x
e x w_a
e w_a v_b
e v_b u_b
e t_a u_a
e t_a u_a
e t_a v_a
e t_a v_a
e t_a y
e t_a y
e t_b u_b
e t_b u_b
e t_b v_b
e t_b v_b
e t_b x
e t_b x
e u_a w_a
e u_a w_a
e u_a x
e u_a x
e v_a w_a
e v_a w_a
e u_b w_b
e u_b w_b
e u_b y
e u_b y
e v_b w_b
e v_b w_b
)";

bool validates(const Multigraph& g, std::int64_t budget, int threads) {
  return verify_counterexample(g, 3, budget, threads).confirmed();
}

}  // namespace

std::vector<std::string> g3_constraint_violations(const Multigraph& g3) {
  std::vector<std::string> out;
  check_g3(multiplicities(g3), &out);
  return out;
}

Multigraph h3_from_g3(const Multigraph& g3) {
  const VertexId t_a = g3.id("t_a");
  const VertexId t_b = g3.id("t_b");
  Multigraph h;
  for (const auto& label : g3.labels())
    if (label != "t_a" && label != "t_b") h.add_vertex(label);
  for (const Endpoints& e : g3.edges()) {
    if (e.first == t_a || e.first == t_b || e.second == t_a || e.second == t_b) continue;
    h.add_edge(g3.label(e.first), g3.label(e.second));
  }
  for (const auto& e : kH3Added) h.add_edge(name(e[0]), name(e[1]));
  return h;
}

Multigraph build_G3_candidate() { return parse_undirected(kG3Fixture); }

Multigraph build_H3_candidate() { return h3_from_g3(build_G3_candidate()); }

G3Reconstruction reconstruct_G3(std::int64_t budget, int threads) {
  const auto slots = free_slots();
  G3Reconstruction result;
  Mult base{};
  auto bump = [](Mult& m, int p, int q, int by) {
    m[p][q] += by;
    m[q][p] += by;
  };
  for (std::size_t i = 0; i + 1 < kPath.size(); ++i) bump(base, kPath[i], kPath[i + 1], 1);
  for (const auto& e : kTPairs) bump(base, e[0], e[1], 2);

  std::vector<int> mult(slots.size(), 0);
  while (true) {
    Mult m = base;
    for (std::size_t i = 0; i < slots.size(); ++i) bump(m, slots[i][0], slots[i][1], mult[i]);
    if (check_g3(m, nullptr)) {
      const Multigraph g3 = g3_from_slots(slots, mult);
      if (validates(g3, budget, threads) && validates(h3_from_g3(g3), budget, threads)) {
        result.graph = g3;
        result.validated_index = result.structural_candidates;
        ++result.structural_candidates;
        return result;
      }
      ++result.structural_candidates;
    }
    std::size_t i = 0;
    while (i < mult.size() && mult[i] == 2) mult[i++] = 0;
    if (i == mult.size()) break;
    ++mult[i];
  }
  return result;
}

CounterexampleReport verify_counterexample(
    const Multigraph& g, int k, std::int64_t budget, int threads,
    std::vector<std::vector<VertexId>> separator_hints) {
  CounterexampleReport report;
  report.eulerian = is_eulerian(g);
  report.weak = is_weakly_2k_connected(g, k, threads);
  if (!report.weak.ok() && report.weak.status == WeakConnectivity::Status::Separated) {
    report.orientation.status = SearchOutcome::Status::RefutedExhaustive;
    report.orientation.evidence =
        "not weakly 2k-connected: " + g.label(report.weak.u) + " " +
        g.label(report.weak.v) + " " + format_mixed_cut(g.labels(), report.weak.cut);
    return report;
  }
  SearchOptions options;
  options.budget = budget;
  options.threads = threads;
  options.skip_weak_check = true;
  options.separator_hints = std::move(separator_hints);
  report.orientation = search(g, k, options);
  return report;
}

}  // namespace orientk
