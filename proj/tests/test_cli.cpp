#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "orientk/graph_io.hpp"
#include "orientk/reduction.hpp"

namespace fs = std::filesystem;
using orientk::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("orientk_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string at(const std::string& name) { return (scratch() / name).string(); }

void put(const std::string& name, const std::string& text) { orientk::write_file(at(name), text); }

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orientk");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json cli_json(std::vector<std::string> args, int expect) {
  args.insert(args.begin(), "--json");
  const Result r = cli(args);
  INFO(r.out);
  INFO(r.err);
  CHECK(r.code == expect);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["exit_code"] == expect);
  return doc;
}

}  // namespace

TEST_CASE("fnv1a digest") {
  CHECK(orientk::cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(orientk::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("generators and Euler/weak checks on G_4") {
  auto gen = cli_json({"gen", "gk", "--k", "4", "--n", "17", "-o", at("g4.graph")}, 0);
  CHECK(gen["outcome"]["vertices"] == 39);
  CHECK(gen["outputs"][0]["fnv1a64"] ==
        orientk::cli::fnv1a_hex(orientk::read_file(at("g4.graph"))));
  auto euler = cli_json({"check", "euler", at("g4.graph")}, 0);
  CHECK(euler["outcome"]["holds"] == true);
  CHECK(euler["inputs"][0]["fnv1a64"] == gen["outputs"][0]["fnv1a64"]);
  CHECK(cli_json({"check", "weak", "--k", "4", at("g4.graph")}, 0)["outcome"]["holds"] == true);
  auto weak5 = cli_json({"check", "weak", "--k", "5", at("g4.graph")}, 1);
  CHECK(weak5["outcome"]["witness"]["verified"] == true);
  CHECK(weak5["outcome"]["witness"]["value"].get<int>() < 10);

  CHECK(cli({"gen", "gk", "--k", "4", "--n", "16", "-o", at("bad.graph")}).code == 2);
  CHECK(cli({"gen", "gk", "--k", "3", "-o", at("bad.graph")}).code == 2);
}

TEST_CASE("verify counterexample on G_4 and the k = 3 examples") {
  cli({"gen", "gk", "--k", "4", "-o", at("g4d.graph")});
  auto v = cli_json({"verify", "counterexample", "--k", "4", at("g4d.graph")}, 0);
  const auto& o = v["outcome"];
  CHECK(o["eulerian"] == true);
  CHECK(o["weakly_2k"] == true);
  CHECK(o["orientation_status"]["status"] == "RefutedBySeparator");
  REQUIRE(o["orientation_status"]["branches"].size() == 2);
  for (const auto& b : o["orientation_status"]["branches"])
    CHECK(b["separator"] == nlohmann::ordered_json::array({"C.0", "x", "y"}));

  CHECK(cli({"gen", "h3", "-o", at("h3.graph")}).code == 0);
  CHECK(cli({"gen", "g3", "-o", at("g3.graph")}).code == 0);
  CHECK(orientk::parse_undirected(orientk::read_file(at("h3.graph"))).vertex_count() == 8);
  CHECK(cli({"verify", "counterexample", "--k", "3", at("h3.graph")}).code == 0);
  CHECK(cli({"verify", "counterexample", "--k", "3", at("g3.graph")}).code == 0);
  CHECK(cli({"verify", "counterexample", "--k", "3", "--budget", "1", at("h3.graph")}).code == 3);

  // A graph with an orientation is not a counterexample.
  put("k5.graph", "graph undirected\nv a\nv b\nv c\nv d\nv e\n"
                  "e a b\ne a c\ne a d\ne a e\ne b c\ne b d\ne b e\ne c d\ne c e\ne d e\n");
  auto k5 = cli_json({"verify", "counterexample", "--k", "2", at("k5.graph")}, 1);
  CHECK(k5["outcome"]["orientation_status"]["status"] == "Found");
}

TEST_CASE("search and kconn") {
  put("tri.graph", "graph undirected\nv a\nv b\nv c\ne a b\ne b c\ne c a\n");
  auto s = cli_json({"search", "--k", "1", at("tri.graph"), "-o", at("tri.orient")}, 0);
  CHECK(s["outcome"]["status"] == "Found");
  CHECK(s["outcome"]["verified"] == true);
  CHECK(cli({"check", "kconn", "--k", "1", at("tri.graph"), at("tri.orient")}).code == 0);
  CHECK(cli({"check", "kconn", "--k", "2", at("tri.graph"), at("tri.orient")}).code == 1);
  auto certs = cli_json({"--certificates", "check", "kconn", "--k", "1", at("tri.graph"), at("tri.orient")}, 0);
  CHECK(certs["outcome"]["certificates"].size() == 6);

  put("edge.graph", "graph undirected\nv a\nv b\ne a b\n");
  put("edge.orient", "0 +\n");
  auto e = cli_json({"check", "kconn", "--k", "1", at("edge.graph"), at("edge.orient")}, 1);
  CHECK(e["outcome"]["witness"]["verified"] == true);
  CHECK(e["outcome"]["witness"]["separator"].empty());
  CHECK(cli({"search", "--k", "1", at("edge.graph")}).code == 1);

  // Directed input: the orientation file reverses arcs.
  put("cyc.graph", "graph directed\nv a\nv b\nv c\ne a b\ne b c\ne a c\n");
  put("flip.orient", "2 -\n");
  CHECK(cli({"check", "kconn", "--k", "1", at("cyc.graph"), at("flip.orient")}).code == 0);
  put("none.orient", "");
  CHECK(cli({"check", "kconn", "--k", "1", at("cyc.graph"), at("none.orient")}).code == 1);
  // Partial orientation of an undirected graph is a usage error.
  CHECK(cli({"check", "kconn", "--k", "1", at("tri.graph"), at("none.orient")}).code == 2);

  put("h3s.graph", orientk::read_file(at("h3.graph")));
  CHECK(cli({"search", "--k", "3", "--budget", "2", at("h3s.graph")}).code == 3);
  CHECK(cli({"search", "--k", "3", at("h3s.graph")}).code == 1);
}

TEST_CASE("encode, decode and verify reduction") {
  put("p.nae", "p nae\nclause x y !z\n");
  auto enc = cli_json({"encode", "--k", "3", at("p.nae"), "-o", at("p.graph"), "--map", at("p.json")}, 0);
  CHECK(enc["outcome"]["vertices"] == 25);
  CHECK(enc["outcome"]["arcs"] == 148);
  auto eul = cli_json({"encode", "--k", "3", at("p.nae"), "-o", at("pe.graph"), "--map",
                       at("pe.json"), "--eulerize"}, 0);
  CHECK(eul["outcome"]["eulerization_arcs"] == 5);
  CHECK(eul["outcome"]["eulerian"] == true);
  CHECK(cli({"check", "euler", at("pe.graph")}).code == 0);
  CHECK(cli({"check", "euler", at("p.graph")}).code == 1);

  // All-preserved reorientation decodes to all-true.
  put("keep.orient", "");
  auto d = cli_json({"decode", at("p.json"), at("keep.orient")}, 0);
  CHECK(d["outcome"]["assignment"]["x"] == true);

  // Reversing Delta_y and its special arc gives y = false.
  const orientk::GadgetMap map = orientk::gadget_map_from_json(orientk::read_file(at("p.json")));
  std::string flip;
  for (auto a : orientk::natural_reversal(map, {true, false, true}))
    flip += std::to_string(a) + " -\n";
  put("y.orient", flip);
  auto dy = cli_json({"decode", at("p.json"), at("y.orient")}, 0);
  CHECK(dy["outcome"]["assignment"]["y"] == false);
  CHECK(dy["outcome"]["assignment"]["z"] == true);
  put("bad.orient", std::to_string(map.variables[0].circuit[0]) + " -\n");
  auto bad = cli_json({"decode", at("p.json"), at("bad.orient")}, 1);
  CHECK(bad["outcome"]["holds"] == false);

  auto vr = cli_json({"verify", "reduction", "--k", "3", at("p.nae")}, 0);
  CHECK(vr["outcome"]["nae_satisfying"] == 6);
  CHECK(vr["outcome"]["k_connected"] == 6);
  CHECK(vr["outcome"]["nae_bruteforce"] == 6);

  auto h = cli_json({"gen", "h3-prime", "-o", at("h3p.graph"), "--map", at("h3p.json")}, 0);
  CHECK(h["outcome"]["vertices"] == 17);
  CHECK(h["outcome"]["eulerian"] == true);
  CHECK(cli({"check", "weak", "--k", "3", at("h3p.graph")}).code == 0);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check", "weak", at("g4.graph")}).code == 2);
  CHECK(cli({"check", "weak", "--k", "4", at("missing.graph")}).code == 2);
  CHECK(cli({"search", "--k", "1", "--budget", "0", at("tri.graph")}).code == 2);
  put("broken.graph", "graph undirected\nv a\ne a b\n");
  const Result r = cli({"check", "euler", at("broken.graph")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(r.out.find("exit_code: 2") != std::string::npos);
  put("broken.nae", "p nae\nclause x\n");
  CHECK(cli({"verify", "reduction", "--k", "3", at("broken.nae")}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("text report") {
  const Result r = cli({"check", "euler", at("tri.graph")});
  CHECK(r.code == 0);
  CHECK(r.out.find("command: orientk check euler") == 0);
  CHECK(r.out.find("input: " + at("tri.graph") + " fnv1a64=") != std::string::npos);
  CHECK(r.out.find("holds: true") != std::string::npos);
  CHECK(r.out.find("exit_code: 0") != std::string::npos);
}

TEST_CASE("JSON report round-trips") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "check", "weak", "--k", "5", at("g4.graph")},
        std::vector<std::string>{"--json", "verify", "counterexample", "--k", "3", at("h3.graph")},
        std::vector<std::string>{"--json", "decode", at("p.json"), at("bad.orient")}}) {
    const Result r = cli(args);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(nlohmann::ordered_json::parse(doc.dump()) == doc);
    CHECK(doc["exit_code"] == r.code);
    for (const char* key : {"command", "inputs", "outputs", "outcome", "elapsed_seconds", "exit_code"})
      CHECK(doc.contains(key));
  }
}

TEST_CASE("ORIENTK_THREADS fallback") {
  ::setenv("ORIENTK_THREADS", "2", 1);
  CHECK(cli({"check", "weak", "--k", "4", at("g4.graph")}).code == 0);
  ::setenv("ORIENTK_THREADS", "lots", 1);
  CHECK(cli({"check", "weak", "--k", "4", at("g4.graph")}).code == 2);
  CHECK(cli({"--threads", "1", "check", "weak", "--k", "4", at("g4.graph")}).code == 0);
  ::unsetenv("ORIENTK_THREADS");
}
