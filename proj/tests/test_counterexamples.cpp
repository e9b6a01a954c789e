#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "orientk/counterexamples.hpp"
#include "orientk/graph_io.hpp"
#include "support.hpp"

using namespace orientk;

namespace {

int into(const Multigraph& g, VertexId v, const std::vector<VertexId>& side) {
  int d = 0;
  for (VertexId s : side) d += g.degree_between(v, s);
  return d;
}

int ceil_half(int k) { return (k + 1) / 2; }

std::vector<std::string> names(const Multigraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

}  // namespace

TEST_CASE("build_Gk sizes and errors") {
  const GkInstance g4 = build_Gk(4, 17);
  CHECK(g4.graph.vertex_count() == 39);
  CHECK(g4.graph.edge_count() == 311);
  for (VertexId v : {g4.params.w, g4.params.x, g4.params.y, g4.params.z})
    CHECK(g4.graph.degree(v) == 8);
  CHECK(default_gk_n(4) == 17);
  CHECK(default_gk_n(5) == 25);
  CHECK_THROWS(build_Gk(4, 16));
  CHECK_THROWS(build_Gk(3, 9));
  CHECK_THROWS(build_Gk(4, 15));
}

TEST_CASE("build_Gk degree equations hold exactly") {
  for (int k : {4, 5, 6}) {
    CAPTURE(k);
    const GkInstance inst = build_Gk(k);
    const Multigraph& g = inst.graph;
    const GkParams& p = inst.params;
    CHECK(static_cast<int>(p.A.size()) == p.n);
    CHECK(static_cast<int>(p.B.size()) == p.n);
    CHECK(static_cast<int>(p.C.size()) == k - 3);
    for (std::size_t i = 1; i < p.C.size(); ++i) {
      CHECK(into(g, p.C[i], p.A) == 2 * ceil_half(k));
      CHECK(into(g, p.C[i], p.B) == 2 * ceil_half(k));
    }
    CHECK(into(g, p.c, p.A) == 2 * ceil_half(k) + 1);
    CHECK(into(g, p.c, p.B) == 2 * ceil_half(k) + 1);
    CHECK(into(g, p.w, p.A) == 2 * k - 2);
    CHECK(into(g, p.z, p.B) == 2 * k - 2);
    CHECK(into(g, p.y, p.A) == 2);
    CHECK(into(g, p.x, p.B) == 2);
    CHECK(into(g, p.x, p.A) == 2 * k - 4);
    CHECK(into(g, p.y, p.B) == 2 * k - 4);
    for (VertexId v : {p.w, p.x, p.y, p.z}) CHECK(g.degree(v) == 2 * k);
    CHECK(is_eulerian(g));

    // A and B induce complete simple graphs.
    for (const auto* side : {&p.A, &p.B})
      for (std::size_t i = 0; i < side->size(); ++i)
        for (std::size_t j = i + 1; j < side->size(); ++j)
          CHECK(g.degree_between((*side)[i], (*side)[j]) == 1);

    // Pair incidence and multiplicities.
    std::map<VertexId, int> pairs_at;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
        const int mult = g.degree_between(u, v);
        CHECK(mult <= 2);
        if (mult == 2) {
          ++pairs_at[u];
          ++pairs_at[v];
        }
      }
    for (const auto* side : {&p.A, &p.B})
      for (VertexId v : *side) CHECK(pairs_at[v] <= 1);
    CHECK(pairs_at[p.a] == 0);
    CHECK(pairs_at[p.b] == 0);
  }
}

TEST_CASE("realize_pairs") {
  const std::vector<VertexId> three{10, 11, 12};
  const auto all = realize_pairs({{1, 3}}, three);
  CHECK(all == std::vector<std::vector<VertexId>>{{10, 11, 12}});
  const std::vector<VertexId> four{10, 11, 12, 13};
  CHECK_THROWS_AS(realize_pairs({{1, 3}, {2, 2}}, four), InfeasibleDemand);

  // G_4 A-side demand: c 2, w 3, y 1, x 2 = 8 of 16 hosts.
  const GkInstance g4 = build_Gk(4, 17);
  int used = 0;
  for (std::size_t i = 1; i < g4.params.A.size(); ++i)
    used += g4.graph.degree(g4.params.A[i]) > 16;
  CHECK(used == 8);
}

TEST_CASE("recognize_gk and gk_separator") {
  const GkInstance g4 = build_Gk(4, 17);
  const auto params = recognize_gk(g4.graph);
  REQUIRE(params);
  CHECK(params->k == 4);
  CHECK(params->n == 17);
  const auto s = gk_separator(*params);
  CHECK(s.size() == 3);
  CHECK(names(g4.graph, s) == std::vector<std::string>{"C.0", "x", "y"});

  Multigraph changed = g4.graph;
  changed.add_edge("A.3", "B.3");
  CHECK_FALSE(recognize_gk(changed));
  CHECK_FALSE(recognize_gk(support::complete_graph(4)));
}

TEST_CASE("G_3 candidate satisfies every structural constraint") {
  const Multigraph g3 = build_G3_candidate();
  CHECK(g3.vertex_count() == 10);
  const auto violations = g3_constraint_violations(g3);
  for (const auto& v : violations) INFO(v);
  CHECK(violations.empty());

  const auto mult = [&](const char* a, const char* b) { return degree_between(g3, a, b); };
  // The simple path.
  const std::vector<std::string> path{"u_a", "v_a", "w_b", "y", "x", "w_a", "v_b", "u_b"};
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    CHECK(mult(path[i].c_str(), path[i + 1].c_str()) == 1);
  // Internal path vertices: degree 6, exactly their two path edges simple.
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const VertexId v = g3.id(path[i]);
    CHECK(g3.degree(v) == 6);
    int simple = 0;
    for (VertexId u = 0; u < g3.vertex_count(); ++u)
      if (u != v) simple += g3.degree_between(u, v) == 1;
    CHECK(simple == 2);
  }
  // Minimum degree and multiplicity bound; pairs touch a degree-6 vertex.
  for (VertexId v = 0; v < g3.vertex_count(); ++v) CHECK(g3.degree(v) >= 6);
  for (VertexId u = 0; u < g3.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g3.vertex_count(); ++v) {
      CHECK(g3.degree_between(u, v) <= 2);
      if (g3.degree_between(u, v) == 2) CHECK((g3.degree(u) == 6 || g3.degree(v) == 6));
    }
  // Without x and y the sides meet only in v_a w_b and w_a v_b.
  const std::vector<std::string> side_a{"u_a", "v_a", "w_a", "t_a"};
  const std::vector<std::string> side_b{"u_b", "v_b", "w_b", "t_b"};
  int cross = 0;
  for (const auto& a : side_a)
    for (const auto& b : side_b) cross += mult(a.c_str(), b.c_str());
  CHECK(cross == 2);
  CHECK(mult("v_a", "w_b") == 1);
  CHECK(mult("w_a", "v_b") == 1);
}

TEST_CASE("structural check reports individual violations") {
  Multigraph g3 = build_G3_candidate();
  g3.add_edge("u_a", "u_b");
  const auto v = g3_constraint_violations(g3);
  CHECK(v.size() >= 1);
  bool cross = false;
  for (const auto& s : v) cross |= s.find("A-B") != std::string::npos;
  CHECK(cross);
  CHECK_THROWS(g3_constraint_violations(support::complete_graph(10)));
}

TEST_CASE("H_3 candidate") {
  const Multigraph h3 = build_H3_candidate();
  CHECK(h3.vertex_count() == 8);
  CHECK(h3.edge_count() == 25);
  CHECK_FALSE(h3.find("t_a"));
  for (auto [a, b, c] : {std::tuple{"v_a", "y", "w_b"}, std::tuple{"v_b", "x", "w_a"}}) {
    CHECK(degree_between(h3, a, b) >= 1);
    CHECK(degree_between(h3, b, c) >= 1);
    CHECK(degree_between(h3, c, a) >= 1);
  }
  CHECK(h3 == h3_from_g3(build_G3_candidate()));
}

TEST_CASE("G_3 reconstruction reproduces the frozen fixture") {
  const G3Reconstruction r = reconstruct_G3();
  REQUIRE(r.graph);
  CHECK(*r.graph == build_G3_candidate());
  CHECK(serialize_graph(*r.graph) == serialize_graph(build_G3_candidate()));
  CHECK(r.validated_index == 0);
}

TEST_CASE("verify_counterexample examples") {
  const GkInstance g4 = build_Gk(4, 17);
  const CounterexampleReport r =
      verify_counterexample(g4.graph, 4, 10'000'000, 1, {gk_separator(g4.params)});
  CHECK(r.eulerian);
  CHECK(r.weakly_2k());
  REQUIRE(r.orientation.status == SearchOutcome::Status::RefutedBySeparator);
  CHECK(r.orientation.branches.size() == 2);
  for (const auto& b : r.orientation.branches) CHECK(b.separator == gk_separator(g4.params));

  const CounterexampleReport k4 = verify_counterexample(support::complete_graph(4), 1);
  REQUIRE(k4.orientation.status == SearchOutcome::Status::Found);
  CHECK(is_k_connected(orient(support::complete_graph(4), *k4.orientation.orientation), 1).ok());
  CHECK_FALSE(k4.confirmed());

  const CounterexampleReport k2 = verify_counterexample(support::complete_graph(2), 1);
  CHECK_FALSE(k2.weakly_2k());
  CHECK(k2.orientation.status == SearchOutcome::Status::RefutedExhaustive);

  for (const Multigraph& g : {build_G3_candidate(), build_H3_candidate()}) {
    const CounterexampleReport c = verify_counterexample(g, 3);
    CHECK(c.weakly_2k());
    CHECK(c.orientation.refuted());
    CHECK(c.confirmed());
  }
}

TEST_CASE("verify_counterexample never contradicts itself") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 80; ++round) {
    const Multigraph g = support::random_two_edge_connected(rng, 6, 6);
    for (int k = 1; k <= 2; ++k) {
      const CounterexampleReport r = verify_counterexample(g, k);
      if (r.orientation.status == SearchOutcome::Status::Found) {
        CHECK(r.weakly_2k());
        CHECK(is_k_connected(orient(g, *r.orientation.orientation), k).ok());
      }
      if (k == 1) CHECK(r.orientation.status == SearchOutcome::Status::Found);
    }
  }
}
