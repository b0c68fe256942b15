// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bipmatch/bipmatch.h"

namespace {

using json = nlohmann::json;

enum Exit { kYes = 0, kNo = 3, kUsage = 2, kCapacity = 4, kRedFlag = 5 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(bm_status s) {
  switch (s) {
    case BM_ERR_CAPACITY: return kCapacity;
    case BM_ERR_ANOMALY: return kRedFlag;
    default: return kUsage;
  }
}

void check(bm_status s) {
  if (s != BM_OK) throw Failure{exit_for(s), std::string(bm_status_name(s)) + ": " + bm_last_error()};
}

struct GraphFree {
  void operator()(bm_graph* g) const { bm_graph_free(g); }
};
struct MatchingFree {
  void operator()(bm_matching* m) const { bm_matching_free(m); }
};
struct DigraphFree {
  void operator()(bm_digraph* d) const { bm_digraph_free(d); }
};
struct BracesFree {
  void operator()(bm_braces* b) const { bm_braces_free(b); }
};
using Graph = std::unique_ptr<bm_graph, GraphFree>;
using MatchingPtr = std::unique_ptr<bm_matching, MatchingFree>;
using DigraphPtr = std::unique_ptr<bm_digraph, DigraphFree>;
using BracesPtr = std::unique_ptr<bm_braces, BracesFree>;

std::string take(char* s) {
  std::string out = s ? s : "";
  bm_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_json(const std::string& text) {
  auto at = text.find_first_not_of(" \t\r\n");
  return at != std::string::npos && text[at] == '{';
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Failure{kUsage, std::string("bad json: ") + e.what()};
  }
}

std::vector<int> flat_pairs(const json& list, const char* what) {
  std::vector<int> flat;
  try {
    for (const auto& p : list) {
      if (p.size() != 2) throw Failure{kUsage, std::string("bad ") + what + " entry"};
      flat.push_back(p[0].get<int>());
      flat.push_back(p[1].get<int>());
    }
  } catch (const json::exception& e) {
    throw Failure{kUsage, std::string("bad json: ") + e.what()};
  }
  return flat;
}

// JSON mirrors the text formats: {"p": "bip", "n1", "n2", "m", "e": [[u, v], ...]}.
Graph graph_from_json(const json& j) {
  if (j.value("p", "") != "bip") throw Failure{kUsage, "json graph needs \"p\": \"bip\""};
  auto flat = flat_pairs(j.value("e", json::array()), "edge");
  const int m = static_cast<int>(flat.size() / 2);
  if (j.contains("m") && j["m"] != m) throw Failure{kUsage, "json graph: edge count does not match \"m\""};
  bm_graph* g = nullptr;
  check(bm_graph_new(j.value("n1", 0), j.value("n2", 0), flat.data(), m, &g));
  return Graph(g);
}

Graph load_graph(const std::string& path) {
  std::string text = slurp(path);
  if (looks_like_json(text)) return graph_from_json(parse_json(text));
  bm_graph* g = nullptr;
  check(bm_graph_parse(text.c_str(), &g));
  return Graph(g);
}

json graph_json(const bm_graph* g) {
  json edges = json::array();
  for (int i = 0; i < bm_graph_edge_count(g); ++i) {
    int u, v;
    check(bm_graph_edge(g, i, &u, &v));
    edges.push_back({u, v});
  }
  return {{"p", "bip"}, {"n1", bm_graph_n1(g)}, {"n2", bm_graph_n2(g)}, {"m", bm_graph_edge_count(g)}, {"e", edges}};
}

json matching_json(const bm_matching* m) {
  json edges = json::array();
  for (int i = 0; i < bm_matching_size(m); ++i) {
    int u, v;
    check(bm_matching_edge(m, i, &u, &v));
    edges.push_back({u, v});
  }
  return {{"m", edges}};
}

json digraph_json(const bm_digraph* d) {
  json arcs = json::array();
  for (int i = 0; i < bm_digraph_arc_count(d); ++i) {
    int a, b;
    check(bm_digraph_arc(d, i, &a, &b));
    arcs.push_back({a, b});
  }
  return {{"p", "dig"}, {"n", bm_digraph_node_count(d)}, {"m", bm_digraph_arc_count(d)}, {"a", arcs}};
}

std::string graph_text(const bm_graph* g, const std::string& comment = {}) {
  char* s = nullptr;
  check(bm_graph_serialize(g, comment.empty() ? nullptr : comment.c_str(), &s));
  return take(s);
}

std::string matching_text(const bm_matching* m) {
  char* s = nullptr;
  check(bm_matching_serialize(m, &s));
  return take(s);
}

std::string digraph_text(const bm_digraph* d) {
  char* s = nullptr;
  check(bm_digraph_serialize(d, &s));
  return take(s);
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    for (char& c : tok)
      if (c == ',') c = ' ';
    std::istringstream part(tok);
    int v;
    while (part >> v) out.push_back(v);
    if (!part.eof()) throw Failure{kUsage, "bad vertex list '" + text + "'"};
  }
  return out;
}

const std::map<std::string, std::string> kLabellings = {
    {"c4", "c4: K2,2, class 1 {0,1}, class 2 {2,3}"},
    {"k33", "k33: class 1 {0,1,2} complete to class 2 {3,4,5}"},
    {"cube", "cube: 3-bit words, even parity 000,011,101,110 -> 0..3, odd 001,010,100,111 -> 4..7"},
    {"heawood", "heawood: Fano plane, points 0..6, line 7+j = {j, j+1, j+3} mod 7"},
    {"rotunda", "rotunda: three cubes glued on (0,4,1,5), cycle edges removed"},
    {"t10", "t10: three K3,3 glued on (0,3,1,4), cycle edges removed"},
    {"moebius", "moebius: rim cycle of length 4k+2, rungs join positions i and i+2k+1"},
};

struct Options {
  bool json = false;
  std::uint32_t seed = 1;
};

int cmd_gen(const Options& o, const std::string& name, int k, int n, double density) {
  bm_graph* raw = nullptr;
  std::string comment;
  if (name == "random") {
    check(bm_graph_random_matching_covered(n, density, o.seed, &raw));
    comment = "random matching covered, n=" + std::to_string(n) + " density=" + std::to_string(density) +
              " seed=" + std::to_string(o.seed);
  } else {
    check(bm_graph_generate(name.c_str(), k, &raw));
    auto it = kLabellings.find(name);
    if (it != kLabellings.end()) comment = it->second;
    if (name == "moebius") comment += ", k=" + std::to_string(k);
  }
  Graph g(raw);
  if (o.json) {
    json j = graph_json(g.get());
    j["comment"] = comment;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << graph_text(g.get(), comment);
  }
  return kYes;
}

int cmd_pm(const Options& o, const std::string& file) {
  Graph g = load_graph(file);
  int has = 0;
  check(bm_has_perfect_matching(g.get(), &has));
  if (!has) {
    if (o.json)
      std::cout << json{{"perfect", false}}.dump() << '\n';
    else
      std::cout << "no perfect matching\n";
    return kNo;
  }
  bm_matching* raw = nullptr;
  check(bm_perfect_matching(g.get(), &raw));
  MatchingPtr m(raw);
  if (o.json) {
    json j = matching_json(m.get());
    j["perfect"] = true;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << matching_text(m.get());
  }
  return kYes;
}

BracesPtr decompose(const bm_graph* g, const std::optional<std::uint32_t>& seed) {
  bm_braces* raw = nullptr;
  check(bm_brace_decomposition(g, seed ? &*seed : nullptr, &raw));
  return BracesPtr(raw);
}

Graph brace_graph(const bm_braces* b, int i) {
  bm_graph* raw = nullptr;
  check(bm_braces_graph(b, i, &raw));
  return Graph(raw);
}

int cmd_braces(const Options& o, const std::string& file, bool random_order) {
  Graph g = load_graph(file);
  auto braces = decompose(g.get(), random_order ? std::optional(o.seed) : std::nullopt);
  json all = json::array();
  for (int i = 0; i < bm_braces_count(braces.get()); ++i) {
    Graph b = brace_graph(braces.get(), i);
    char* prov = nullptr;
    check(bm_braces_provenance(braces.get(), i, &prov));
    std::string table = take(prov);
    if (o.json) {
      json entry = graph_json(b.get());
      json rows = json::array();
      std::istringstream in(table);
      for (std::string line; std::getline(in, line);) rows.push_back(line);
      entry["provenance"] = rows;
      all.push_back(entry);
    } else {
      std::cout << graph_text(b.get(), "brace " + std::to_string(i));
      std::istringstream in(table);
      for (std::string line; std::getline(in, line);) std::cout << "# " << line << '\n';
    }
  }
  if (o.json) std::cout << json{{"braces", all}}.dump() << '\n';
  return kYes;
}

int cmd_k33free(const Options& o, const std::string& file) {
  Graph g = load_graph(file);
  auto braces = decompose(g.get(), std::nullopt);
  bool free = true;
  json verdicts = json::array();
  for (int i = 0; i < bm_braces_count(braces.get()); ++i) {
    Graph b = brace_graph(braces.get(), i);
    int has = 0;
    const int n = bm_graph_n1(b.get()) + bm_graph_n2(b.get());
    // Leaves on two vertices are single edges, trivially free.
    if (n >= 4) check(bm_brace_contains_k33(b.get(), &has));
    free = free && !has;
    if (o.json)
      verdicts.push_back({{"brace", i}, {"vertices", n}, {"k33_free", !has}});
    else
      std::cout << "brace " << i << " (" << n << " vertices): " << (has ? "contains K3,3" : "K3,3-free") << '\n';
  }
  if (o.json)
    std::cout << json{{"braces", verdicts}, {"k33_free", free}}.dump() << '\n';
  else
    std::cout << "K3,3-free: " << (free ? "yes" : "no") << '\n';
  return free ? kYes : kNo;
}

struct Terminals {
  int a1 = -1, a2 = -1, b1 = -1, b2 = -1;
};

void add_terminals(CLI::App* app, Terminals& t) {
  app->add_option("--a1", t.a1, "class-1 terminal linked to b1")->required();
  app->add_option("--a2", t.a2, "class-1 terminal linked to b2")->required();
  app->add_option("--b1", t.b1, "class-2 terminal")->required();
  app->add_option("--b2", t.b2, "class-2 terminal")->required();
}

int print_verdict(const Options& o, bool yes, json extra = json::object()) {
  if (o.json) {
    extra["result"] = yes;
    std::cout << extra.dump() << '\n';
  } else {
    std::cout << (yes ? "yes" : "no") << '\n';
  }
  return yes ? kYes : kNo;
}

json witness_json(const std::string& text) {
  json j{{"m", json::array()}, {"paths", json::array()}};
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::vector<int> ids;
    for (int v; ls >> v;) ids.push_back(v);
    if (tag == "m")
      j["m"].push_back(ids);
    else if (tag == "path")
      j["paths"].push_back(ids);
  }
  return j;
}

int oracle_mlp(const Options& o, const std::string& file, const Terminals& t, bool show_witness) {
  Graph g = load_graph(file);
  int yes = 0;
  char* w = nullptr;
  check(bm_oracle_2mlp(g.get(), t.a1, t.a2, t.b1, t.b2, &yes, show_witness ? &w : nullptr));
  std::string witness = take(w);
  if (o.json) {
    json extra = json::object();
    if (!witness.empty()) extra["witness"] = witness_json(witness);
    return print_verdict(o, yes, extra);
  }
  std::cout << (yes ? "yes" : "no") << '\n';
  if (!witness.empty()) std::cout << witness;
  return yes ? kYes : kNo;
}

int cmd_mlp2(const Options& o, const std::string& file, const Terminals& t, bool witness, bool verbose) {
  Graph g = load_graph(file);
  int yes = 0;
  char* trace = nullptr;
  check(bm_solve_2mlp(g.get(), t.a1, t.a2, t.b1, t.b2, &yes, verbose ? &trace : nullptr));
  std::string lines = take(trace);
  json extra = json::object();
  if (verbose) {
    if (o.json) {
      json rows = json::array();
      std::istringstream in(lines);
      for (std::string line; std::getline(in, line);) rows.push_back(line);
      extra["trace"] = rows;
    } else {
      std::cout << lines;
    }
  }
  if (witness && yes) {
    // The polynomial path has no paths to show; the oracle finds them.
    int linked = 0;
    char* w = nullptr;
    check(bm_oracle_2mlp(g.get(), t.a1, t.a2, t.b1, t.b2, &linked, &w));
    std::string text = take(w);
    if (!linked) throw Failure{kRedFlag, "oracle found no witness for a linked instance"};
    if (o.json) {
      extra["witness"] = witness_json(text);
    } else {
      std::cout << "yes\n" << text;
      return kYes;
    }
  }
  return print_verdict(o, yes, extra);
}

int cmd_convert(const Options& o, const std::string& file, const std::string& matching_file) {
  std::string text = slurp(file);
  bool is_digraph = false;
  json j;
  if (looks_like_json(text)) {
    j = parse_json(text);
    is_digraph = j.value("p", "") == "dig";
  } else {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      std::istringstream ls(line);
      std::string a, b;
      ls >> a >> b;
      if (a.empty() || a[0] == '#') continue;
      is_digraph = a == "p" && b == "dig";
      break;
    }
  }

  if (is_digraph) {
    bm_digraph* rawd = nullptr;
    if (!j.is_null()) {
      auto flat = flat_pairs(j.value("a", json::array()), "arc");
      std::string t = "p dig " + std::to_string(j.value("n", 0)) + " " + std::to_string(flat.size() / 2) + "\n";
      for (std::size_t i = 0; i < flat.size(); i += 2)
        t += "a " + std::to_string(flat[i]) + " " + std::to_string(flat[i + 1]) + "\n";
      check(bm_digraph_parse(t.c_str(), &rawd));
    } else {
      check(bm_digraph_parse(text.c_str(), &rawd));
    }
    DigraphPtr d(rawd);
    bm_graph* rawg = nullptr;
    bm_matching* rawm = nullptr;
    check(bm_from_digraph(d.get(), &rawg, &rawm));
    Graph g(rawg);
    MatchingPtr m(rawm);
    if (o.json) {
      json out = graph_json(g.get());
      out["matching"] = matching_json(m.get())["m"];
      std::cout << out.dump() << '\n';
    } else {
      std::cout << graph_text(g.get()) << matching_text(m.get());
    }
    return kYes;
  }

  Graph g = j.is_null() ? load_graph(file) : graph_from_json(j);
  bm_matching* rawm = nullptr;
  if (!matching_file.empty()) {
    std::string mt = slurp(matching_file);
    if (looks_like_json(mt)) {
      json mj = parse_json(mt);
      std::string t;
      auto flat = flat_pairs(mj.value("m", json::array()), "matching");
      for (std::size_t i = 0; i < flat.size(); i += 2)
        t += "m " + std::to_string(flat[i]) + " " + std::to_string(flat[i + 1]) + "\n";
      mt = t;
    }
    check(bm_matching_parse(g.get(), mt.c_str(), &rawm));
  } else {
    check(bm_perfect_matching(g.get(), &rawm));
  }
  MatchingPtr m(rawm);
  bm_digraph* rawd = nullptr;
  check(bm_m_direction(g.get(), m.get(), &rawd));
  DigraphPtr d(rawd);
  if (o.json)
    std::cout << digraph_json(d.get()).dump() << '\n';
  else
    std::cout << digraph_text(d.get());
  return kYes;
}

int cmd_crosscheck(const Options& o, const std::vector<std::string>& files, int orders, int max_mlp) {
  int total_bad = 0;
  json all = json::array();
  for (const auto& file : files) {
    Graph g = load_graph(file);
    char* report = nullptr;
    int bad = 0;
    check(bm_crosscheck(g.get(), o.seed, orders, max_mlp, &report, &bad));
    std::string text = take(report);
    total_bad += bad;
    if (o.json) {
      json rows = json::array();
      std::istringstream in(text);
      for (std::string line; std::getline(in, line);) rows.push_back(line);
      all.push_back({{"file", file}, {"checks", rows}, {"disagreements", bad}});
    } else {
      std::cout << "== " << file << '\n' << text;
    }
  }
  if (o.json)
    std::cout << json{{"graphs", all}, {"disagreements", total_bad}}.dump() << '\n';
  else
    std::cout << (total_bad ? "DISAGREEMENTS: " + std::to_string(total_bad) : std::string("all checks agree")) << '\n';
  return total_bad ? kRedFlag : kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching theory on bipartite graphs: braces, K3,3 matching minors, 2-linkage"};
  app.require_subcommand(1);
  Options o;
  bool json_format = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--format",
           [&](const std::string& f) { json_format = f == "json"; },
           "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "seed for randomized choices");
  };

  std::string file, name = "heawood", matching_file;
  int k = 1, n = 10;
  double density = 0.2;
  auto* gen = app.add_subcommand("gen", "write a named or random graph");
  gen->add_option("--name", name, "c4 k33 cube heawood rotunda t10 moebius random")->required();
  gen->add_option("--k", k, "moebius ladder parameter");
  gen->add_option("--n", n, "random: vertices per class");
  gen->add_option("--density", density, "random: extra edge probability");
  add_common(gen);

  auto* pm = app.add_subcommand("pm", "a perfect matching");
  pm->add_option("graph", file)->required();
  add_common(pm);

  bool random_order = false;
  auto* braces = app.add_subcommand("braces", "brace decomposition with provenance");
  braces->add_option("graph", file)->required();
  braces->add_flag("--random-order", random_order, "random tight-cut order drawn from --seed");
  add_common(braces);

  auto* k33 = app.add_subcommand("k33free", "K3,3 matching minor test per brace");
  k33->add_option("graph", file)->required();
  add_common(k33);

  Terminals t;
  bool witness = false, verbose = false;
  auto* mlp = app.add_subcommand("mlp2", "2-matching-linkage");
  mlp->add_option("graph", file)->required();
  add_terminals(mlp, t);
  mlp->add_flag("--witness", witness, "show paths (exhaustive search, small graphs only)");
  mlp->add_flag("--verbose", verbose, "per-cover trace");
  add_common(mlp);

  auto* convert = app.add_subcommand("convert", "graph -> M-direction, or digraph -> graph + matching");
  convert->add_option("input", file)->required();
  convert->add_option("--matching", matching_file, "perfect matching for a graph input");
  add_common(convert);

  auto* oracle = app.add_subcommand("oracle", "exhaustive reference answers");
  oracle->require_subcommand(1);
  auto* o_mlp = oracle->add_subcommand("mlp2", "2-matching-linkage by search");
  o_mlp->add_option("graph", file)->required();
  add_terminals(o_mlp, t);
  o_mlp->add_flag("--witness", witness, "show matching and paths");
  add_common(o_mlp);
  std::string cycle_text, kind = "conformal", shore_text;
  auto* o_cross = oracle->add_subcommand("cross", "matching cross over a conformal cycle");
  o_cross->add_option("graph", file)->required();
  o_cross->add_option("--cycle", cycle_text, "cycle vertices in order")->required();
  o_cross->add_option("--kind", kind, "plain, strong or conformal")->check(CLI::IsMember({"plain", "strong", "conformal"}));
  add_common(o_cross);
  auto* o_k33 = oracle->add_subcommand("k33", "conformal K3,3 bisubdivision search");
  o_k33->add_option("graph", file)->required();
  add_common(o_k33);
  auto* o_tight = oracle->add_subcommand("tightcut", "tight cut by enumerating perfect matchings");
  o_tight->add_option("graph", file)->required();
  o_tight->add_option("--shore", shore_text, "shore vertices")->required();
  add_common(o_tight);

  std::vector<std::string> files;
  int orders = 20, max_mlp = 12;
  auto* cross = app.add_subcommand("crosscheck", "polynomial results against the oracle");
  cross->add_option("graphs", files)->required();
  cross->add_option("--orders", orders, "random decomposition orders");
  cross->add_option("--max-mlp-vertices", max_mlp, "largest graph for the full 2-MLP sweep");
  add_common(cross);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kUsage;
  }
  o.json = json_format;

  try {
    if (gen->parsed()) return cmd_gen(o, name, k, n, density);
    if (pm->parsed()) return cmd_pm(o, file);
    if (braces->parsed()) return cmd_braces(o, file, random_order);
    if (k33->parsed()) return cmd_k33free(o, file);
    if (mlp->parsed()) return cmd_mlp2(o, file, t, witness, verbose);
    if (convert->parsed()) return cmd_convert(o, file, matching_file);
    if (cross->parsed()) return cmd_crosscheck(o, files, orders, max_mlp);
    if (o_mlp->parsed()) return oracle_mlp(o, file, t, witness);
    if (o_cross->parsed()) {
      Graph g = load_graph(file);
      auto c = parse_ids(cycle_text);
      bm_cross_kind ck = kind == "plain" ? BM_CROSS_PLAIN : kind == "strong" ? BM_CROSS_STRONG : BM_CROSS_CONFORMAL;
      int yes = 0;
      check(bm_oracle_cross(g.get(), c.data(), static_cast<int>(c.size()), ck, &yes));
      return print_verdict(o, yes);
    }
    if (o_k33->parsed()) {
      Graph g = load_graph(file);
      int yes = 0;
      check(bm_oracle_contains_k33(g.get(), &yes));
      // Same convention as k33free: success means free.
      if (o.json)
        std::cout << json{{"k33_free", !yes}}.dump() << '\n';
      else
        std::cout << "K3,3-free: " << (yes ? "no" : "yes") << '\n';
      return yes ? kNo : kYes;
    }
    if (o_tight->parsed()) {
      Graph g = load_graph(file);
      auto s = parse_ids(shore_text);
      int yes = 0;
      check(bm_oracle_tight_cut(g.get(), s.data(), static_cast<int>(s.size()), &yes));
      return print_verdict(o, yes);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kUsage;
}
