#include "orientk/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace orientk {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

// Calls fn(line_number, words) for every non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    const auto words = split_words(line);
    if (!words.empty() && words.front().front() != '#') fn(number, words);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

struct RawGraph {
  bool directed = false;
  std::vector<std::string> vertices;
  std::vector<int> vertex_lines;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<int> edge_lines;
};

RawGraph parse_raw(std::string_view text) {
  RawGraph raw;
  bool have_header = false;
  bool in_edges = false;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& w) {
    if (!have_header) {
      if (w.size() != 2 || w[0] != "graph" ||
          (w[1] != "undirected" && w[1] != "directed"))
        throw ParseError(line,
                         "expected 'graph undirected' or 'graph directed'");
      raw.directed = w[1] == "directed";
      have_header = true;
      return;
    }
    if (w[0] == "v") {
      if (w.size() != 2) throw ParseError(line, "expected 'v <label>'");
      if (in_edges) throw ParseError(line, "vertex line after edge lines");
      raw.vertices.emplace_back(w[1]);
      raw.vertex_lines.push_back(line);
      return;
    }
    if (w[0] == "e") {
      if (w.size() != 3)
        throw ParseError(line, "expected 'e <label> <label>'");
      in_edges = true;
      raw.edges.emplace_back(std::string(w[1]), std::string(w[2]));
      raw.edge_lines.push_back(line);
      return;
    }
    throw ParseError(line, "unrecognized line '" + std::string(w[0]) + "'");
  });
  if (!have_header) throw ParseError(0, "missing graph header");
  return raw;
}

template <typename G, typename AddFn>
G build(const RawGraph& raw, AddFn add) {
  G g;
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    if (g.find(raw.vertices[i]))
      throw ParseError(raw.vertex_lines[i],
                       "duplicate vertex '" + raw.vertices[i] + "'");
    g.add_vertex(raw.vertices[i]);
  }
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const auto& [u, v] = raw.edges[i];
    const int line = raw.edge_lines[i];
    if (!g.find(u)) throw ParseError(line, "undeclared vertex '" + u + "'");
    if (!g.find(v)) throw ParseError(line, "undeclared vertex '" + v + "'");
    if (u == v) throw ParseError(line, "self-loop at '" + u + "'");
    add(g, u, v);
  }
  return g;
}

Multigraph build_undirected(const RawGraph& raw) {
  return build<Multigraph>(raw, [](Multigraph& g, const std::string& u,
                                   const std::string& v) { g.add_edge(u, v); });
}

Multidigraph build_directed(const RawGraph& raw) {
  return build<Multidigraph>(
      raw, [](Multidigraph& g, const std::string& u, const std::string& v) {
        g.add_arc(u, v);
      });
}

template <typename G>
std::string serialize(const G& g, bool directed, std::span<const Endpoints> es) {
  std::ostringstream out;
  out << "graph " << (directed ? "directed" : "undirected") << '\n';
  for (const auto& label : g.labels()) out << "v " << label << '\n';
  for (const Endpoints& e : es)
    out << "e " << g.label(e.first) << ' ' << g.label(e.second) << '\n';
  return out.str();
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  const RawGraph raw = parse_raw(text);
  if (raw.directed) return build_directed(raw);
  return build_undirected(raw);
}

Multigraph parse_undirected(std::string_view text) {
  const RawGraph raw = parse_raw(text);
  if (raw.directed) throw ParseError(1, "expected an undirected graph");
  return build_undirected(raw);
}

Multidigraph parse_directed(std::string_view text) {
  const RawGraph raw = parse_raw(text);
  if (!raw.directed) throw ParseError(1, "expected a directed graph");
  return build_directed(raw);
}

std::string serialize_graph(const Multigraph& g) {
  return serialize(g, false, g.edges());
}

std::string serialize_graph(const Multidigraph& d) {
  return serialize(d, true, d.arcs());
}

std::string serialize_graph(const AnyGraph& g) {
  return std::visit([](const auto& x) { return serialize_graph(x); }, g);
}

PartialOrientation parse_orientation(std::string_view text, int edge_count) {
  PartialOrientation o(edge_count);
  std::vector<bool> seen(static_cast<std::size_t>(edge_count), false);
  for_each_line(text, [&](int line, const std::vector<std::string_view>& w) {
    if (w.size() != 2) throw ParseError(line, "expected '<edge_id> <+|->'");
    int id = -1;
    const auto [ptr, ec] =
        std::from_chars(w[0].data(), w[0].data() + w[0].size(), id);
    if (ec != std::errc() || ptr != w[0].data() + w[0].size())
      throw ParseError(line, "bad edge id '" + std::string(w[0]) + "'");
    if (id < 0 || id >= edge_count)
      throw ParseError(line, "edge id " + std::to_string(id) + " out of range");
    if (seen[static_cast<std::size_t>(id)])
      throw ParseError(line, "edge id " + std::to_string(id) + " repeated");
    seen[static_cast<std::size_t>(id)] = true;
    if (w[1] == "+")
      o.set(id, Direction::Forward);
    else if (w[1] == "-")
      o.set(id, Direction::Reversed);
    else
      throw ParseError(line, "direction must be '+' or '-'");
  });
  return o;
}

std::string serialize_orientation(const PartialOrientation& o) {
  std::ostringstream out;
  for (EdgeId e = 0; e < o.size(); ++e) {
    if (!o.decided(e)) continue;
    out << e << ' ' << (o[e] == Direction::Forward ? '+' : '-') << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace orientk
