#pragma once

// Line-based text formats.
//
//   # comment
//   graph undirected          (or: graph directed)
//   v <label>
//   e <label> <label>
//
// Edge (arc) ids are the 0-based positions of the e-lines. An orientation
// file holds "<edge_id> <+|->" lines; ids that do not appear are undecided.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "orientk/graph.hpp"

namespace orientk {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

using AnyGraph = std::variant<Multigraph, Multidigraph>;

AnyGraph parse_graph(std::string_view text);
Multigraph parse_undirected(std::string_view text);
Multidigraph parse_directed(std::string_view text);

std::string serialize_graph(const Multigraph& g);
std::string serialize_graph(const Multidigraph& d);
std::string serialize_graph(const AnyGraph& g);

PartialOrientation parse_orientation(std::string_view text, int edge_count);
std::string serialize_orientation(const PartialOrientation& o);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace orientk
