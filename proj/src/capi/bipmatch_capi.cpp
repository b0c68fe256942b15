#include "bipmatch/bipmatch.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <random>
#include <sstream>
#include <string>

#include "braces.hpp"
#include "crosscheck.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "k33.hpp"
#include "matching.hpp"
#include "mdirection.hpp"
#include "mlp.hpp"
#include "oracle.hpp"

using namespace bipmatch;

struct bm_graph {
  BipartiteGraph g;
};
struct bm_matching {
  Matching m;
};
struct bm_digraph {
  Digraph d;
};
struct bm_braces {
  std::vector<Brace> list;
};

namespace {

thread_local std::string last_error;

bm_status fail(bm_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
bm_status guarded(F&& body) {
  try {
    body();
    return BM_OK;
  } catch (const ParseError& e) {
    return fail(BM_ERR_PARSE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(BM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const PreconditionError& e) {
    return fail(BM_ERR_PRECONDITION, e.what());
  } catch (const CapacityError& e) {
    return fail(BM_ERR_CAPACITY, e.what());
  } catch (const StructuralAnomaly& e) {
    return fail(BM_ERR_ANOMALY, e.what());
  } catch (const IoError& e) {
    return fail(BM_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BM_ERR_INTERNAL, "unknown error");
  }
}

struct NullArg : InvalidArgument {
  NullArg() : InvalidArgument("null pointer argument") {}
};

template <class... P>
void need(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArg();
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int* dup(const std::vector<int>& v) {
  int* out = static_cast<int*>(std::malloc(sizeof(int) * (v.empty() ? 1 : v.size())));
  if (!out) throw std::bad_alloc();
  if (!v.empty()) std::memcpy(out, v.data(), sizeof(int) * v.size());
  return out;
}

std::vector<Vertex> ints(const int* p, int n) {
  if (n < 0) throw InvalidArgument("negative length");
  if (n > 0) need(p);
  return std::vector<Vertex>(p, p + n);
}

void check_index(int i, int size) {
  if (i < 0 || i >= size) throw InvalidArgument("index " + std::to_string(i) + " out of range");
}

std::string path_text(const std::vector<Vertex>& path) {
  std::string s;
  for (Vertex v : path) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string cover_text(const Cover& cover) {
  std::string s;
  for (const Edge& e : cover) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

}  // namespace

extern "C" {

const char* bm_last_error(void) { return last_error.c_str(); }

const char* bm_status_name(bm_status status) {
  switch (status) {
    case BM_OK: return "ok";
    case BM_ERR_PARSE: return "parse error";
    case BM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BM_ERR_PRECONDITION: return "precondition violated";
    case BM_ERR_CAPACITY: return "capacity exceeded";
    case BM_ERR_ANOMALY: return "structural anomaly";
    case BM_ERR_IO: return "i/o error";
    case BM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void bm_string_free(char* s) { std::free(s); }
void bm_ints_free(int* p) { std::free(p); }

bm_status bm_graph_parse(const char* text, bm_graph** out) {
  return guarded([&] {
    need(text, out);
    *out = new bm_graph{parse_graph(text)};
  });
}

bm_status bm_graph_read_file(const char* path, bm_graph** out) {
  return guarded([&] {
    need(path, out);
    *out = new bm_graph{parse_graph(read_file(path))};
  });
}

bm_status bm_graph_new(int n1, int n2, const int* edges, int m, bm_graph** out) {
  return guarded([&] {
    need(out);
    if (n1 < 0 || n2 < 0) throw InvalidArgument("negative class size");
    auto flat = ints(edges, 2 * m);
    std::vector<Edge> list;
    for (int i = 0; i < m; ++i) {
      Vertex a = flat[2 * i], b = flat[2 * i + 1];
      if (a > b) std::swap(a, b);
      list.push_back({a, b});
    }
    *out = new bm_graph{BipartiteGraph(n1, n2, std::move(list))};
  });
}

void bm_graph_free(bm_graph* g) { delete g; }
int bm_graph_n1(const bm_graph* g) { return g ? g->g.n1() : 0; }
int bm_graph_n2(const bm_graph* g) { return g ? g->g.n2() : 0; }
int bm_graph_edge_count(const bm_graph* g) { return g ? g->g.edge_count() : 0; }

bm_status bm_graph_edge(const bm_graph* g, int i, int* u, int* v) {
  return guarded([&] {
    need(g, u, v);
    check_index(i, g->g.edge_count());
    *u = g->g.edges()[i].u;
    *v = g->g.edges()[i].v;
  });
}

bm_status bm_graph_serialize(const bm_graph* g, const char* comment, char** out) {
  return guarded([&] {
    need(g, out);
    *out = dup(serialize_graph(g->g, comment ? comment : ""));
  });
}

bm_status bm_graph_generate(const char* name, int k, bm_graph** out) {
  return guarded([&] {
    need(name, out);
    auto kind = named_graph_from_string(name);
    if (!kind) throw InvalidArgument(std::string("unknown graph name '") + name + "'");
    *out = new bm_graph{generate(NamedGraph{*kind, k})};
  });
}

bm_status bm_graph_random_matching_covered(int n, double density, uint32_t seed, bm_graph** out) {
  return guarded([&] {
    need(out);
    std::mt19937 rng(seed);
    *out = new bm_graph{random_matching_covered(n, density, rng)};
  });
}

bm_status bm_graph_isomorphic(const bm_graph* a, const bm_graph* b, int* out) {
  return guarded([&] {
    need(a, b, out);
    *out = is_isomorphic(a->g, b->g);
  });
}

bm_status bm_max_matching(const bm_graph* g, bm_matching** out) {
  return guarded([&] {
    need(g, out);
    *out = new bm_matching{max_matching(g->g)};
  });
}

bm_status bm_perfect_matching(const bm_graph* g, bm_matching** out) {
  return guarded([&] {
    need(g, out);
    auto m = perfect_matching(g->g);
    if (!m) throw PreconditionError("graph has no perfect matching");
    *out = new bm_matching{std::move(*m)};
  });
}

bm_status bm_matching_parse(const bm_graph* g, const char* text, bm_matching** out) {
  return guarded([&] {
    need(g, text, out);
    *out = new bm_matching{parse_matching(g->g, text)};
  });
}

void bm_matching_free(bm_matching* m) { delete m; }
int bm_matching_size(const bm_matching* m) { return m ? static_cast<int>(m->m.size()) : 0; }

bm_status bm_matching_edge(const bm_matching* m, int i, int* u, int* v) {
  return guarded([&] {
    need(m, u, v);
    check_index(i, static_cast<int>(m->m.size()));
    *u = m->m.edges[i].u;
    *v = m->m.edges[i].v;
  });
}

bm_status bm_matching_serialize(const bm_matching* m, char** out) {
  return guarded([&] {
    need(m, out);
    *out = dup(serialize_matching(m->m));
  });
}

bm_status bm_has_perfect_matching(const bm_graph* g, int* out) {
  return guarded([&] {
    need(g, out);
    *out = has_perfect_matching(g->g);
  });
}

bm_status bm_is_matching_covered(const bm_graph* g, int* out) {
  return guarded([&] {
    need(g, out);
    *out = is_matching_covered(g->g);
  });
}

bm_status bm_is_extendible(const bm_graph* g, int k, int* out) {
  return guarded([&] {
    need(g, out);
    *out = is_extendible(g->g, k);
  });
}

bm_status bm_digraph_parse(const char* text, bm_digraph** out) {
  return guarded([&] {
    need(text, out);
    *out = new bm_digraph{parse_digraph(text)};
  });
}

void bm_digraph_free(bm_digraph* d) { delete d; }
int bm_digraph_node_count(const bm_digraph* d) { return d ? d->d.node_count() : 0; }
int bm_digraph_arc_count(const bm_digraph* d) { return d ? d->d.arc_count() : 0; }

bm_status bm_digraph_arc(const bm_digraph* d, int i, int* from, int* to) {
  return guarded([&] {
    need(d, from, to);
    check_index(i, d->d.arc_count());
    *from = d->d.arcs()[i].from;
    *to = d->d.arcs()[i].to;
  });
}

bm_status bm_digraph_serialize(const bm_digraph* d, char** out) {
  return guarded([&] {
    need(d, out);
    *out = dup(serialize_digraph(d->d));
  });
}

bm_status bm_digraph_is_strongly_connected(const bm_digraph* d, int* out) {
  return guarded([&] {
    need(d, out);
    *out = is_strongly_connected(d->d);
  });
}

bm_status bm_m_direction(const bm_graph* g, const bm_matching* perfect, bm_digraph** out) {
  return guarded([&] {
    need(g, perfect, out);
    *out = new bm_digraph{m_direction(g->g, perfect->m).digraph};
  });
}

bm_status bm_from_digraph(const bm_digraph* d, bm_graph** graph, bm_matching** perfect) {
  return guarded([&] {
    need(d, graph, perfect);
    auto [g, m] = from_digraph(d->d);
    auto* gh = new bm_graph{std::move(g)};
    try {
      *perfect = new bm_matching{std::move(m)};
    } catch (...) {
      delete gh;
      throw;
    }
    *graph = gh;
  });
}

bm_status bm_reach_internally_conformal(const bm_graph* g, const bm_matching* perfect, int a, int b, int* out) {
  return guarded([&] {
    need(g, perfect, out);
    *out = reach_internally_conformal(g->g, perfect->m, a, b);
  });
}

bm_status bm_is_brace(const bm_graph* g, int* out) {
  return guarded([&] {
    need(g, out);
    *out = is_brace(g->g);
  });
}

bm_status bm_find_tight_cut(const bm_graph* g, int* found, int** shore, int* size) {
  return guarded([&] {
    need(g, found, shore, size);
    auto cut = find_nontrivial_tight_cut(g->g);
    if (!cut) {
      *found = 0;
      return;
    }
    *shore = dup(cut->shore);
    *size = static_cast<int>(cut->shore.size());
    *found = 1;
  });
}

bm_status bm_verify_tight_cut(const bm_graph* g, const int* shore, int size, int* out) {
  return guarded([&] {
    need(g, out);
    *out = verify_tight_cut(g->g, ints(shore, size));
  });
}

bm_status bm_brace_decomposition(const bm_graph* g, const uint32_t* seed, bm_braces** out) {
  return guarded([&] {
    need(g, out);
    if (seed) {
      std::mt19937 rng(*seed);
      *out = new bm_braces{brace_decomposition(g->g, &rng)};
    } else {
      *out = new bm_braces{brace_decomposition(g->g)};
    }
  });
}

void bm_braces_free(bm_braces* b) { delete b; }
int bm_braces_count(const bm_braces* b) { return b ? static_cast<int>(b->list.size()) : 0; }

bm_status bm_braces_graph(const bm_braces* b, int i, bm_graph** out) {
  return guarded([&] {
    need(b, out);
    check_index(i, static_cast<int>(b->list.size()));
    *out = new bm_graph{b->list[i].graph};
  });
}

bm_status bm_braces_provenance(const bm_braces* b, int i, char** out) {
  return guarded([&] {
    need(b, out);
    check_index(i, static_cast<int>(b->list.size()));
    *out = dup(provenance_table(b->list[i]));
  });
}

bm_status bm_brace_contains_k33(const bm_graph* g, int* out) {
  return guarded([&] {
    need(g, out);
    *out = brace_contains_k33(g->g);
  });
}

bm_status bm_contains_k33(const bm_graph* g, int* out) {
  return guarded([&] {
    need(g, out);
    *out = contains_k33(g->g);
  });
}

bm_status bm_solve_2mlp(const bm_graph* g, int a1, int a2, int b1, int b2, int* out, char** trace) {
  return guarded([&] {
    need(g, out);
    MlpProblem p{g->g, a1, a2, b1, b2};
    std::vector<CoverTrace> steps;
    const bool yes = solve_2mlp(p, trace ? &steps : nullptr);
    if (trace) {
      std::ostringstream s;
      for (const auto& t : steps) {
        s << "cover " << cover_text(t.cover) << ": " << t.branch;
        if (t.brace_verdict) s << " k33=" << (*t.brace_verdict ? "yes" : "no");
        s << " -> " << (t.result ? "yes" : "no") << '\n';
      }
      *trace = dup(s.str());
    }
    *out = yes;
  });
}

bm_status bm_oracle_2mlp(const bm_graph* g, int a1, int a2, int b1, int b2, int* out, char** witness) {
  return guarded([&] {
    need(g, out);
    MlpProblem p{g->g, a1, a2, b1, b2};
    validate_problem(p);
    auto r = brute_2mlp(p);
    if (witness && r.witness) {
      std::string s = serialize_matching(r.witness->matching);
      s += "path " + path_text(r.witness->path1) + "\n";
      s += "path " + path_text(r.witness->path2) + "\n";
      *witness = dup(s);
    } else if (witness) {
      *witness = nullptr;
    }
    *out = r.linked;
  });
}

bm_status bm_oracle_cross(const bm_graph* g, const int* cycle, int length, bm_cross_kind kind, int* out) {
  return guarded([&] {
    need(g, out);
    auto c = ints(cycle, length);
    switch (kind) {
      case BM_CROSS_PLAIN: *out = has_matching_cross(g->g, c); break;
      case BM_CROSS_STRONG: *out = has_strong_matching_cross(g->g, c); break;
      case BM_CROSS_CONFORMAL: *out = has_conformal_cross(g->g, c); break;
      default: throw InvalidArgument("unknown cross kind");
    }
  });
}

bm_status bm_oracle_contains_k33(const bm_graph* g, int* out) {
  return guarded([&] {
    need(g, out);
    *out = brute_contains_k33(g->g);
  });
}

bm_status bm_oracle_tight_cut(const bm_graph* g, const int* shore, int size, int* out) {
  return guarded([&] {
    need(g, out);
    *out = check_tight_cut_bruteforce(g->g, ints(shore, size));
  });
}

bm_status bm_oracle_perfect_matching_count(const bm_graph* g, int64_t* out) {
  return guarded([&] {
    need(g, out);
    *out = static_cast<int64_t>(enumerate_perfect_matchings(g->g).size());
  });
}

bm_status bm_crosscheck(const bm_graph* g, uint32_t seed, int orders, int max_mlp_vertices, char** report,
                        int* disagreements) {
  return guarded([&] {
    need(g, report, disagreements);
    CrosscheckOptions options;
    options.seed = seed;
    options.decomposition_orders = orders;
    options.max_mlp_vertices = max_mlp_vertices;
    std::ostringstream s;
    int bad = 0;
    for (const auto& r : crosscheck(g->g, options)) {
      s << r.name << ": " << (r.skipped ? "skipped" : r.agree ? "agree" : "DISAGREE");
      if (!r.detail.empty()) s << " (" << r.detail << ")";
      s << '\n';
      if (!r.skipped && !r.agree) ++bad;
    }
    *report = dup(s.str());
    *disagreements = bad;
  });
}

}  // extern "C"
