#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"
#include "mdirection.hpp"

namespace bipmatch {

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
//
//   graph:     p bip <n1> <n2> <m>      then m lines   e <u> <v>
//   matching:  m <u> <v>                (edges must exist in the graph)
//   digraph:   p dig <n> <m>            then m lines   a <u> <v>
//
// In a graph file every edge has u < n1 <= v < n1 + n2.

BipartiteGraph parse_graph(std::string_view text);
// `comment` lines are emitted first, each prefixed with "# ".
std::string serialize_graph(const BipartiteGraph& graph, std::string_view comment = {});

Matching parse_matching(const BipartiteGraph& graph, std::string_view text);
std::string serialize_matching(const Matching& matching);

Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& digraph);

std::string read_file(const std::string& path);

}  // namespace bipmatch
