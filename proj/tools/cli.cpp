#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "orientk/connectivity.hpp"
#include "orientk/counterexamples.hpp"
#include "orientk/graph.hpp"
#include "orientk/graph_io.hpp"
#include "orientk/reduction.hpp"
#include "orientk/search.hpp"

namespace orientk::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad input discovered after argument parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  bool json = false;
  bool certificates = false;
  int threads = 1;
  int k = 0;
  int n = 0;
  std::int64_t budget = 10'000'000;
  bool eulerize = false;
  std::string output;
  std::string map;
  std::string graph;
  std::string second;  // orientation or NAE file
};

class Session {
 public:
  explicit Session(const Settings& s) : s_(s) {}

  std::string load(const std::string& path) {
    std::string text = read_file(path);
    inputs_.push_back({{"path", path}, {"fnv1a64", fnv1a_hex(text)}});
    return text;
  }

  Multigraph load_undirected(const std::string& path) {
    AnyGraph any = parse_graph(load(path));
    if (auto* g = std::get_if<Multigraph>(&any)) return std::move(*g);
    return underlying(std::get<Multidigraph>(any)).graph;
  }

  void save(const std::string& path, const std::string& content) {
    write_file(path, content);
    outputs_.push_back({{"path", path}, {"fnv1a64", fnv1a_hex(content)}});
  }

  json& outcome() { return outcome_; }
  const json& inputs() const { return inputs_; }
  const json& outputs() const { return outputs_; }

 private:
  const Settings& s_;
  json inputs_ = json::array();
  json outputs_ = json::array();
  json outcome_ = json::object();
};

std::vector<std::string> names(const Multigraph& g, std::span<const VertexId> vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

json path_list(std::span<const std::string> labels, std::span<const Path> paths) {
  json out = json::array();
  for (const Path& p : paths) {
    json one = json::array();
    for (VertexId v : p) one.push_back(labels[static_cast<std::size_t>(v)]);
    out.push_back(std::move(one));
  }
  return out;
}

json mixed_cut_json(const Multigraph& g, VertexId u, VertexId v, const WeakConnectivity& w) {
  json out;
  if (w.status == WeakConnectivity::Status::TooFewVertices) {
    out["reason"] = "|V| <= k";
    return out;
  }
  out["u"] = g.label(u);
  out["v"] = g.label(v);
  out["cut_vertices"] = names(g, w.cut.vertices);
  out["cut_edges"] = w.cut.edges;
  out["value"] = w.cut.value();
  out["text"] = format_mixed_cut(g.labels(), w.cut);
  out["verified"] = mixed_cut_separates(g, u, v, w.cut);
  return out;
}

json outcome_status(const SearchOutcome& o, const Multigraph& g) {
  json out;
  out["status"] = to_string(o.status);
  out["nodes"] = o.nodes;
  if (!o.evidence.empty()) out["evidence"] = o.evidence;
  if (o.orientation) out["orientation"] = serialize_orientation(*o.orientation);
  if (!o.branches.empty()) {
    json branches = json::array();
    for (const auto& b : o.branches) {
      const int decided = b.orientation.size() - b.orientation.undecided_count();
      branches.push_back({{"separator", names(g, b.separator)},
                          {"text", format_separator(g.labels(), b.separator)},
                          {"decided_edges", decided},
                          {"orientation", serialize_orientation(b.orientation)}});
    }
    out["branches"] = std::move(branches);
  }
  return out;
}

int exit_for(const SearchOutcome& o) {
  switch (o.status) {
    case SearchOutcome::Status::Found:
      return kHolds;
    case SearchOutcome::Status::Unknown:
      return kBudget;
    default:
      return kRefuted;
  }
}

// ---- subcommands ----------------------------------------------------------

int gen_gk(const Settings& s, Session& io) {
  const int n = s.n > 0 ? s.n : default_gk_n(s.k);
  const GkInstance inst = build_Gk(s.k, n);
  io.save(s.output, serialize_graph(inst.graph));
  io.outcome() = {{"k", s.k}, {"n", n}, {"vertices", inst.graph.vertex_count()},
                  {"edges", inst.graph.edge_count()}};
  return kHolds;
}

int gen_fixed(const Settings& s, Session& io, const Multigraph& g) {
  io.save(s.output, serialize_graph(g));
  io.outcome() = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  return kHolds;
}

int write_encoding(const Settings& s, Session& io, const Encoding& enc) {
  io.save(s.output, serialize_graph(enc.digraph));
  io.save(s.map, gadget_map_to_json(enc.map));
  io.outcome() = {{"k", enc.map.k},
                  {"vertices", enc.digraph.vertex_count()},
                  {"arcs", enc.digraph.arc_count()},
                  {"eulerization_arcs", enc.map.eulerization.size()},
                  {"eulerian", is_eulerian(underlying(enc.digraph).graph)}};
  return kHolds;
}

int encode_cmd(const Settings& s, Session& io) {
  const NaeInstance inst = parse_nae(io.load(s.second));
  Encoding enc = encode(inst, s.k);
  if (s.eulerize) enc = eulerize(enc);
  return write_encoding(s, io, enc);
}

int check_weak(const Settings& s, Session& io) {
  const Multigraph g = io.load_undirected(s.graph);
  const WeakConnectivity w = is_weakly_2k_connected(g, s.k, s.threads);
  json& out = io.outcome();
  out["property"] = "weakly 2k-connected";
  out["k"] = s.k;
  out["holds"] = w.ok();
  if (!w.ok()) out["witness"] = mixed_cut_json(g, w.u, w.v, w);
  if (w.ok() && s.certificates) {
    json certs = json::array();
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
        const MixedCutFlow f = mixed_cut_flow(g, u, v);
        certs.push_back({{"u", g.label(u)}, {"v", g.label(v)}, {"value", f.cut.value()},
                         {"paths", path_list(g.labels(), f.paths)}});
      }
    out["certificates"] = std::move(certs);
  }
  return w.ok() ? kHolds : kRefuted;
}

int check_kconn(const Settings& s, Session& io) {
  AnyGraph any = parse_graph(io.load(s.graph));
  const std::string orientation_text = io.load(s.second);
  Multidigraph d;
  if (auto* g = std::get_if<Multigraph>(&any)) {
    const PartialOrientation o = parse_orientation(orientation_text, g->edge_count());
    if (!o.is_total()) throw UsageError("orientation leaves edges undecided");
    d = orient(*g, o);
  } else {
    const Multidigraph& base = std::get<Multidigraph>(any);
    const PartialOrientation o = parse_orientation(orientation_text, base.arc_count());
    std::vector<EdgeId> reversed;
    for (EdgeId a = 0; a < base.arc_count(); ++a)
      if (o[a] == Direction::Reversed) reversed.push_back(a);
    d = reorient(base, reversed);
  }
  const KConnectivity kc = is_k_connected(d, s.k, s.threads);
  json& out = io.outcome();
  out["property"] = "k-connected";
  out["k"] = s.k;
  out["holds"] = kc.ok();
  if (kc.status == KConnectivity::Status::TooFewVertices) {
    out["witness"] = {{"reason", "|V| <= k"}};
  } else if (!kc.ok()) {
    out["witness"] = {{"from", d.label(kc.from)},
                      {"to", d.label(kc.to)},
                      {"separator", [&] {
                         std::vector<std::string> v;
                         for (VertexId x : kc.separator) v.push_back(d.label(x));
                         return v;
                       }()},
                      {"text", format_separator(d.labels(), kc.separator)},
                      {"verified", separator_separates(d, kc.from, kc.to, kc.separator)}};
  }
  if (kc.ok() && s.certificates) {
    json certs = json::array();
    for (VertexId u = 0; u < d.vertex_count(); ++u)
      for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (u == v) continue;
        const DirectedConnectivity c = directed_connectivity(d, u, v, s.k);
        certs.push_back({{"from", d.label(u)}, {"to", d.label(v)},
                         {"paths", path_list(d.labels(), c.paths)}});
      }
    out["certificates"] = std::move(certs);
  }
  return kc.ok() ? kHolds : kRefuted;
}

int check_euler(const Settings& s, Session& io) {
  const Multigraph g = io.load_undirected(s.graph);
  const bool euler = is_eulerian(g);
  json& out = io.outcome();
  out["property"] = "Eulerian";
  out["holds"] = euler;
  if (!euler) {
    std::vector<std::string> odd;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) % 2 == 1) odd.push_back(g.label(v));
    if (odd.empty())
      out["witness"] = {{"reason", "edges lie in more than one component"}};
    else
      out["witness"] = {{"odd_degree", odd}};
  }
  return euler ? kHolds : kRefuted;
}

int search_cmd(const Settings& s, Session& io) {
  const Multigraph g = io.load_undirected(s.graph);
  SearchOptions options;
  options.budget = s.budget;
  options.threads = s.threads;
  const SearchOutcome o = search(g, s.k, options);
  json& out = io.outcome();
  out["k"] = s.k;
  out["property"] = "has a k-connected orientation";
  out.update(outcome_status(o, g));
  if (o.orientation) {
    out["verified"] = is_k_connected(orient(g, *o.orientation), s.k, s.threads).ok();
    if (!s.output.empty()) io.save(s.output, serialize_orientation(*o.orientation));
  }
  return exit_for(o);
}

int decode_cmd(const Settings& s, Session& io) {
  const GadgetMap map = gadget_map_from_json(io.load(s.map));
  const PartialOrientation o = parse_orientation(io.load(s.second), map.arc_count);
  std::vector<bool> reversed(static_cast<std::size_t>(map.arc_count), false);
  for (EdgeId a = 0; a < map.arc_count; ++a)
    reversed[static_cast<std::size_t>(a)] = o[a] == Direction::Reversed;
  json& out = io.outcome();
  out["property"] = "consistent reorientation";
  try {
    const Assignment sigma = decode(map, reversed);
    json assignment = json::object();
    for (std::size_t i = 0; i < map.variables.size(); ++i)
      assignment[map.variables[i].name] = static_cast<bool>(sigma[i]);
    out["holds"] = true;
    out["assignment"] = std::move(assignment);
    return kHolds;
  } catch (const InconsistentReorientation& e) {
    out["holds"] = false;
    out["witness"] = {{"reason", e.what()}};
    return kRefuted;
  }
}

int verify_counterexample_cmd(const Settings& s, Session& io) {
  const Multigraph g = io.load_undirected(s.graph);
  std::vector<std::vector<VertexId>> hints;
  if (const auto params = recognize_gk(g); params && params->k == s.k)
    hints.push_back(gk_separator(*params));
  const CounterexampleReport r = verify_counterexample(g, s.k, s.budget, s.threads, hints);
  json& out = io.outcome();
  out["k"] = s.k;
  out["property"] = "weakly 2k-connected without k-connected orientation";
  out["eulerian"] = r.eulerian;
  out["weakly_2k"] = r.weakly_2k();
  if (!r.weakly_2k()) out["weak_witness"] = mixed_cut_json(g, r.weak.u, r.weak.v, r.weak);
  out["orientation_status"] = outcome_status(r.orientation, g);
  out["holds"] = r.confirmed();
  if (r.orientation.status == SearchOutcome::Status::Unknown) return kBudget;
  return r.confirmed() ? kHolds : kRefuted;
}

int verify_reduction_cmd(const Settings& s, Session& io) {
  const NaeInstance inst = parse_nae(io.load(s.second));
  const EquivalenceReport rep = check_reduction_equivalence(inst, s.k, s.threads, s.eulerize);
  json& out = io.outcome();
  out["k"] = s.k;
  out["property"] = "NAE-satisfied iff natural reorientation k-connected";
  out["eulerized"] = s.eulerize;
  out["holds"] = rep.holds;
  out["assignments"] = rep.assignments;
  out["nae_satisfying"] = rep.nae_satisfying;
  out["k_connected"] = rep.k_connected;
  out["nae_bruteforce"] = nae_bruteforce(inst).satisfying_count;
  if (rep.counterexample) {
    const Assignment sigma = assignment_from_mask(static_cast<int>(inst.variables.size()),
                                                  *rep.counterexample);
    json a = json::object();
    for (std::size_t i = 0; i < sigma.size(); ++i) a[inst.variables[i]] = static_cast<bool>(sigma[i]);
    out["witness"] = {{"assignment", a}};
  }
  return rep.holds ? kHolds : kRefuted;
}

// ---- report ----------------------------------------------------------------

std::string scalar_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void write_text(std::ostream& out, const json& doc) {
  out << "command: " << doc["command"].get<std::string>() << '\n';
  for (const auto& in : doc["inputs"])
    out << "input: " << in["path"].get<std::string>() << " fnv1a64=" << in["fnv1a64"].get<std::string>() << '\n';
  for (const auto& o : doc["outputs"])
    out << "output: " << o["path"].get<std::string>() << " fnv1a64=" << o["fnv1a64"].get<std::string>() << '\n';
  std::function<void(const std::string&, const json&)> emit = [&](const std::string& key,
                                                                   const json& v) {
    if (v.is_object()) {
      for (const auto& [k, inner] : v.items()) emit(key.empty() ? k : key + "." + k, inner);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) emit(key + "[" + std::to_string(i) + "]", v[i]);
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      out << key << ":\n" << v.get<std::string>();
    } else {
      out << key << ": " << scalar_text(v) << '\n';
    }
  };
  emit("", doc["outcome"]);
  out << "elapsed_seconds: " << doc["elapsed_seconds"].dump() << '\n';
  out << "exit_code: " << doc["exit_code"].get<int>() << '\n';
}

int threads_from_env() {
  const char* env = std::getenv("ORIENTK_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError("ORIENTK_THREADS is not an integer");
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Settings s;
  std::optional<int> threads;

  CLI::App app{"k-connected orientations of multigraphs", "orientk"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", s.json, "Emit the report as JSON");
  app.add_flag("--certificates", s.certificates, "Dump flow certificates for positive checks");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto add_k = [&](CLI::App* c) { c->add_option("--k", s.k, "Connectivity k")->required(); };
  auto add_out = [&](CLI::App* c) { c->add_option("-o", s.output, "Output file")->required(); };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", s.budget, "Search node budget")->check(CLI::PositiveNumber);
  };

  std::function<int(Session&)> handler;
  auto bind = [&](CLI::App* c, std::function<int(const Settings&, Session&)> fn) {
    c->callback([&handler, fn = std::move(fn), &s] {
      handler = [fn, &s](Session& io) { return fn(s, io); };
    });
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate counterexample graphs");
  gen->require_subcommand(1);
  CLI::App* gen_gk_cmd = gen->add_subcommand("gk", "G_k for k >= 4");
  add_k(gen_gk_cmd);
  gen_gk_cmd->add_option("--n", s.n, "Size of A and B (odd, >= k^2)");
  add_out(gen_gk_cmd);
  bind(gen_gk_cmd, gen_gk);
  CLI::App* gen_g3 = gen->add_subcommand("g3", "The ten-vertex k = 3 example");
  add_out(gen_g3);
  bind(gen_g3, [](const Settings& st, Session& io) { return gen_fixed(st, io, build_G3_candidate()); });
  CLI::App* gen_h3 = gen->add_subcommand("h3", "The eight-vertex k = 3 example");
  add_out(gen_h3);
  bind(gen_h3, [](const Settings& st, Session& io) { return gen_fixed(st, io, build_H3_candidate()); });
  CLI::App* gen_h3p = gen->add_subcommand("h3-prime", "The Eulerian k = 3 example (digraph and map)");
  add_out(gen_h3p);
  gen_h3p->add_option("--map", s.map, "Gadget map output")->required();
  bind(gen_h3p, [](const Settings& st, Session& io) { return write_encoding(st, io, build_H3_prime()); });

  CLI::App* enc = app.add_subcommand("encode", "Encode an NAE instance as a digraph");
  add_k(enc);
  enc->add_option("naefile", s.second, "NAE instance")->required();
  add_out(enc);
  enc->add_option("--map", s.map, "Gadget map output")->required();
  enc->add_flag("--eulerize", s.eulerize, "Add the Eulerization arcs");
  bind(enc, encode_cmd);

  CLI::App* check = app.add_subcommand("check", "Check a property");
  check->require_subcommand(1);
  CLI::App* weak = check->add_subcommand("weak", "Weak 2k-connectivity");
  add_k(weak);
  weak->add_option("graph", s.graph)->required();
  bind(weak, check_weak);
  CLI::App* kconn = check->add_subcommand("kconn", "k-connectivity of an orientation");
  add_k(kconn);
  kconn->add_option("graph", s.graph)->required();
  kconn->add_option("orientation", s.second)->required();
  bind(kconn, check_kconn);
  CLI::App* euler = check->add_subcommand("euler", "Eulerian test");
  euler->add_option("graph", s.graph)->required();
  bind(euler, check_euler);

  CLI::App* srch = app.add_subcommand("search", "Search for a k-connected orientation");
  add_k(srch);
  add_budget(srch);
  srch->add_option("graph", s.graph)->required();
  srch->add_option("-o", s.output, "Write a found orientation here");
  bind(srch, search_cmd);

  CLI::App* dec = app.add_subcommand("decode", "Assignment from a consistent reorientation");
  dec->add_option("map", s.map)->required();
  dec->add_option("orientation", s.second)->required();
  bind(dec, decode_cmd);

  CLI::App* verify = app.add_subcommand("verify", "End-to-end verification");
  verify->require_subcommand(1);
  CLI::App* vc = verify->add_subcommand("counterexample", "Weakly 2k-connected, not k-orientable");
  add_k(vc);
  add_budget(vc);
  vc->add_option("graph", s.graph)->required();
  bind(vc, verify_counterexample_cmd);
  CLI::App* vr = verify->add_subcommand("reduction", "Reduction equivalence over all assignments");
  add_k(vr);
  vr->add_option("naefile", s.second)->required();
  vr->add_flag("--eulerize", s.eulerize, "Use the Eulerized encoding");
  bind(vr, verify_reduction_cmd);

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  std::string command;
  for (std::size_t i = 0; i < argv.size(); ++i) command += (i ? " " : "") + argv[i];
  Session io(s);
  int code = kUsage;
  std::string error;
  try {
    s.threads = threads ? *threads : threads_from_env();
    code = handler(io);
  } catch (const ParseError& e) {
    error = std::string("parse error: ") + e.what();
  } catch (const std::exception& e) {
    error = e.what();
  }
  if (!error.empty()) {
    code = kUsage;
    err << "orientk: " << error << '\n';
    io.outcome() = {{"error", error}};
  }

  json doc;
  doc["command"] = command;
  doc["inputs"] = io.inputs();
  doc["outputs"] = io.outputs();
  doc["outcome"] = io.outcome();
  doc["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  doc["exit_code"] = code;
  if (s.json)
    out << doc.dump(2) << '\n';
  else
    write_text(out, doc);
  return code;
}

}  // namespace orientk::cli
