#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace bipmatch {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Splits into non-empty, comment-stripped token lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) ++pos;
      std::size_t start = pos;
      while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t' && raw[pos] != '\r') ++pos;
      if (pos > start) line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int to_int(std::string_view token, int line, ParseErrorKind kind) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
    throw ParseError(kind, line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

std::string pair_text(int u, int v) { return std::to_string(u) + " " + std::to_string(v); }

}  // namespace

BipartiteGraph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "p")
    throw ParseError(ParseErrorKind::MissingHeader, lines.empty() ? 0 : lines[0].number,
                     "missing 'p bip' header");
  const Line& head = lines[0];
  if (head.tokens.size() != 5 || head.tokens[1] != "bip")
    throw ParseError(ParseErrorKind::MalformedHeader, head.number,
                     "header must be 'p bip <n1> <n2> <m>'");
  const int n1 = to_int(head.tokens[2], head.number, ParseErrorKind::MalformedHeader);
  const int n2 = to_int(head.tokens[3], head.number, ParseErrorKind::MalformedHeader);
  const int m = to_int(head.tokens[4], head.number, ParseErrorKind::MalformedHeader);

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e" || line.tokens.size() != 3)
      throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 'e <u> <v>'");
    const int u = to_int(line.tokens[1], line.number, ParseErrorKind::MalformedLine);
    const int v = to_int(line.tokens[2], line.number, ParseErrorKind::MalformedLine);
    if (u >= n1 + n2 || v >= n1 + n2)
      throw ParseError(ParseErrorKind::UnknownVertex, line.number,
                       "edge " + pair_text(u, v) + " references an unknown vertex");
    if ((u < n1) == (v < n1))
      throw ParseError(ParseErrorKind::IntraClassEdge, line.number,
                       "edge " + pair_text(u, v) + " joins two vertices of the same class");
    Edge e = u < n1 ? Edge{u, v} : Edge{v, u};
    if (!seen.insert(e).second)
      throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                       "duplicate edge " + pair_text(u, v));
    edges.push_back(e);
  }
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(ParseErrorKind::CountMismatch, head.number,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return BipartiteGraph(n1, n2, std::move(edges));
}

std::string serialize_graph(const BipartiteGraph& graph, std::string_view comment) {
  std::ostringstream out;
  while (!comment.empty()) {
    auto end = comment.find('\n');
    out << "# " << comment.substr(0, end) << '\n';
    comment = end == std::string_view::npos ? std::string_view{} : comment.substr(end + 1);
  }
  out << "p bip " << graph.n1() << ' ' << graph.n2() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Matching parse_matching(const BipartiteGraph& graph, std::string_view text) {
  Matching m;
  std::vector<char> used(graph.vertex_count(), 0);
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] != "m" || line.tokens.size() != 3)
      throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 'm <u> <v>'");
    const int u = to_int(line.tokens[1], line.number, ParseErrorKind::MalformedLine);
    const int v = to_int(line.tokens[2], line.number, ParseErrorKind::MalformedLine);
    if (!graph.contains(u) || !graph.contains(v))
      throw ParseError(ParseErrorKind::UnknownVertex, line.number,
                       "matching edge " + pair_text(u, v) + " references an unknown vertex");
    if (!graph.has_edge(u, v))
      throw ParseError(ParseErrorKind::NotAnEdge, line.number,
                       "matching edge " + pair_text(u, v) + " is not an edge of the graph");
    if (used[u] || used[v])
      throw ParseError(ParseErrorKind::SharedVertex, line.number,
                       "matching edge " + pair_text(u, v) + " shares a vertex with another");
    used[u] = used[v] = 1;
    m.edges.push_back(make_edge(graph, u, v));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::string serialize_matching(const Matching& matching) {
  std::ostringstream out;
  for (const Edge& e : matching.edges) out << "m " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Digraph parse_digraph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "p")
    throw ParseError(ParseErrorKind::MissingHeader, lines.empty() ? 0 : lines[0].number,
                     "missing 'p dig' header");
  const Line& head = lines[0];
  if (head.tokens.size() != 4 || head.tokens[1] != "dig")
    throw ParseError(ParseErrorKind::MalformedHeader, head.number,
                     "header must be 'p dig <n> <m>'");
  const int n = to_int(head.tokens[2], head.number, ParseErrorKind::MalformedHeader);
  const int m = to_int(head.tokens[3], head.number, ParseErrorKind::MalformedHeader);
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "a" || line.tokens.size() != 3)
      throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 'a <u> <v>'");
    const int u = to_int(line.tokens[1], line.number, ParseErrorKind::MalformedLine);
    const int v = to_int(line.tokens[2], line.number, ParseErrorKind::MalformedLine);
    if (u >= n || v >= n)
      throw ParseError(ParseErrorKind::UnknownVertex, line.number,
                       "arc " + pair_text(u, v) + " references an unknown node");
    if (u == v) throw ParseError(ParseErrorKind::Loop, line.number, "loop at node " + std::to_string(u));
    if (!seen.insert({u, v}).second)
      throw ParseError(ParseErrorKind::DuplicateEdge, line.number, "duplicate arc " + pair_text(u, v));
    arcs.push_back({u, v});
  }
  if (static_cast<int>(arcs.size()) != m)
    throw ParseError(ParseErrorKind::CountMismatch, head.number,
                     "header announces " + std::to_string(m) + " arcs, found " +
                         std::to_string(arcs.size()));
  return Digraph(n, std::move(arcs));
}

std::string serialize_digraph(const Digraph& digraph) {
  std::ostringstream out;
  out << "p dig " << digraph.node_count() << ' ' << digraph.arc_count() << '\n';
  for (const Arc& a : digraph.arcs()) out << "a " << a.from << ' ' << a.to << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace bipmatch
