#include "cograph_hc/cograph_hc.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <variant>

#include "cograph_hc/coloring.hpp"
#include "cograph_hc/cotree.hpp"
#include "cograph_hc/error.hpp"
#include "cograph_hc/generator.hpp"
#include "cograph_hc/graph.hpp"
#include "cograph_hc/hc_algorithms.hpp"
#include "cograph_hc/theorems.hpp"

struct hc_graph {
  cohc::Graph g;
};
struct hc_cotree {
  cohc::Cotree t;
};
struct hc_coloring {
  cohc::Coloring c;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_key;

hc_status status_of(cohc::ErrorCode code) {
  switch (code) {
    case cohc::ErrorCode::InvalidArgument: return HC_ERR_INVALID_ARGUMENT;
    case cohc::ErrorCode::Parse: return HC_ERR_PARSE;
    case cohc::ErrorCode::Io: return HC_ERR_IO;
    case cohc::ErrorCode::NotCograph: return HC_ERR_NOT_COGRAPH;
    case cohc::ErrorCode::Mismatch: return HC_ERR_MISMATCH;
    case cohc::ErrorCode::NotHc: return HC_ERR_NOT_HC;
    case cohc::ErrorCode::SizeGuard: return HC_ERR_SIZE_GUARD;
  }
  return HC_ERR_INTERNAL;
}

template <class F>
hc_status guarded(F&& f) {
  last_error.clear();
  last_key.clear();
  try {
    f();
    return HC_OK;
  } catch (const cohc::Error& e) {
    last_error = e.what();
    last_key = e.key();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    last_key = "internal";
  } catch (const std::exception& e) {
    last_error = e.what();
    last_key = "internal";
  }
  return HC_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw cohc::Error(cohc::ErrorCode::InvalidArgument, "null-argument", what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

cohc::InjectionChooser make_chooser(hc_chooser kind, std::uint64_t seed) {
  switch (kind) {
    case HC_CHOOSER_IDENTITY: return cohc::InjectionChooser::identity_prefix();
    case HC_CHOOSER_RANDOM: return cohc::InjectionChooser::seeded_random(seed);
  }
  throw cohc::Error(cohc::ErrorCode::InvalidArgument, "bad-chooser", "unknown chooser");
}

std::string vertex_list(const cohc::Graph& g, const cohc::VertexSet& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + g.name(vs[i]);
  return s + "}";
}

std::string color_list(const std::vector<cohc::Color>& cs) {
  std::string s = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " " : "") + std::to_string(cs[i]);
  return s + "}";
}

std::string describe(const cohc::Graph& g, const cohc::Verdict& v, const cohc::Cotree* t) {
  if (v.accepted) return "accepted";
  std::string s = std::string(cohc::axiom_name(v.axiom)) + " violation";
  if (t && v.node >= 0) s += " at node " + cohc::newick_subtree(*t, v.node);
  s += ": " + vertex_list(g, v.first) + " colors " + color_list(v.first_colors) + " and " + vertex_list(g, v.second) +
       " colors " + color_list(v.second_colors);
  return s;
}

}  // namespace

extern "C" {

const char* hc_last_error(void) { return last_error.c_str(); }
const char* hc_last_error_key(void) { return last_key.c_str(); }
void hc_string_free(char* s) { std::free(s); }

hc_status hc_graph_parse(const char* text, hc_graph** out) {
  return guarded([&] {
    require(text && out, "text and out are required");
    *out = new hc_graph{cohc::parse_edge_list(text)};
  });
}

hc_status hc_graph_read_file(const char* path, hc_graph** out) {
  return guarded([&] {
    require(path && out, "path and out are required");
    *out = new hc_graph{cohc::read_edge_list_file(path)};
  });
}

hc_status hc_graph_write_file(const hc_graph* g, const char* path) {
  return guarded([&] {
    require(g && path, "graph and path are required");
    cohc::write_edge_list_file(g->g, path);
  });
}

hc_status hc_graph_format(const hc_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "graph and out are required");
    put(out, cohc::format_edge_list(g->g));
  });
}

size_t hc_graph_vertex_count(const hc_graph* g) { return g ? g->g.size() : 0; }
size_t hc_graph_edge_count(const hc_graph* g) { return g ? g->g.edge_count() : 0; }

hc_status hc_graph_vertex_name(const hc_graph* g, size_t v, char** out) {
  return guarded([&] {
    require(g && out, "graph and out are required");
    if (v >= g->g.size()) throw cohc::Error(cohc::ErrorCode::InvalidArgument, "bad-vertex-id", std::to_string(v));
    put(out, g->g.name(static_cast<cohc::VertexId>(v)));
  });
}

hc_status hc_graph_find_vertex(const hc_graph* g, const char* name, size_t* out) {
  return guarded([&] {
    require(g && name && out, "graph, name and out are required");
    const cohc::VertexId v = g->g.find(name);
    if (v < 0) throw cohc::Error(cohc::ErrorCode::InvalidArgument, "unknown-vertex", name);
    *out = static_cast<size_t>(v);
  });
}

void hc_graph_free(hc_graph* g) { delete g; }

hc_status hc_recognize(const hc_graph* g, int* is_cograph, hc_cotree** cotree, int32_t witness[4]) {
  return guarded([&] {
    require(g && is_cograph, "graph and is_cograph are required");
    cohc::Recognition r = cohc::build_cotree(g->g);
    if (auto* t = std::get_if<cohc::Cotree>(&r)) {
      *is_cograph = 1;
      if (cotree) *cotree = new hc_cotree{std::move(*t)};
    } else {
      *is_cograph = 0;
      const auto& w = std::get<cohc::P4Witness>(r);
      if (witness)
        for (int i = 0; i < 4; ++i) witness[i] = w.path[static_cast<std::size_t>(i)];
    }
  });
}

hc_status hc_cotree_parse(const char* text, const hc_graph* g, hc_cotree** out) {
  return guarded([&] {
    require(text && out, "text and out are required");
    *out = new hc_cotree{g ? cohc::newick_read(text, g->g) : cohc::newick_read(text)};
  });
}

hc_status hc_cotree_read_file(const char* path, const hc_graph* g, hc_cotree** out) {
  return guarded([&] {
    require(path && g && out, "path, graph and out are required");
    *out = new hc_cotree{cohc::read_newick_file(path, g->g)};
  });
}

hc_status hc_cotree_format(const hc_cotree* t, char** out) {
  return guarded([&] {
    require(t && out, "cotree and out are required");
    put(out, cohc::newick_write(t->t));
  });
}

hc_status hc_cotree_binarize(const hc_cotree* t, hc_binarize strategy, hc_cotree** out) {
  return guarded([&] {
    require(t && out, "cotree and out are required");
    cohc::BinarizeStrategy s;
    switch (strategy) {
      case HC_BINARIZE_LEFT_COMB: s = cohc::BinarizeStrategy::LeftComb; break;
      case HC_BINARIZE_CHI_ASCENDING: s = cohc::BinarizeStrategy::ChiAscending; break;
      case HC_BINARIZE_MAX_FIRST: s = cohc::BinarizeStrategy::MaxFirst; break;
      default: throw cohc::Error(cohc::ErrorCode::InvalidArgument, "bad-strategy", "unknown binarization strategy");
    }
    *out = new hc_cotree{cohc::to_binary(t->t, s).tree()};
  });
}

hc_status hc_cotree_make_discriminating(const hc_cotree* t, hc_cotree** out) {
  return guarded([&] {
    require(t && out, "cotree and out are required");
    *out = new hc_cotree{cohc::make_discriminating(t->t)};
  });
}

int hc_cotree_is_binary(const hc_cotree* t) { return t && t->t.is_binary() ? 1 : 0; }
size_t hc_cotree_chromatic_number(const hc_cotree* t) { return t ? cohc::chromatic_number(t->t) : 0; }
void hc_cotree_free(hc_cotree* t) { delete t; }

hc_status hc_coloring_parse(const char* text, const hc_graph* g, hc_coloring** out) {
  return guarded([&] {
    require(text && g && out, "text, graph and out are required");
    *out = new hc_coloring{cohc::parse_coloring(text, g->g)};
  });
}

hc_status hc_coloring_read_file(const char* path, const hc_graph* g, hc_coloring** out) {
  return guarded([&] {
    require(path && g && out, "path, graph and out are required");
    *out = new hc_coloring{cohc::read_coloring_file(path, g->g)};
  });
}

hc_status hc_coloring_write_file(const hc_coloring* c, const hc_graph* g, const char* path) {
  return guarded([&] {
    require(c && g && path, "coloring, graph and path are required");
    cohc::write_coloring_file(c->c, g->g, path);
  });
}

hc_status hc_coloring_format(const hc_coloring* c, const hc_graph* g, char** out) {
  return guarded([&] {
    require(c && g && out, "coloring, graph and out are required");
    put(out, cohc::format_coloring(c->c, g->g));
  });
}

size_t hc_coloring_color_count(const hc_coloring* c) { return c ? c->c.color_count() : 0; }

hc_status hc_coloring_color(const hc_coloring* c, size_t v, int32_t* out) {
  return guarded([&] {
    require(c && out, "coloring and out are required");
    if (v >= c->c.size()) throw cohc::Error(cohc::ErrorCode::InvalidArgument, "bad-vertex-id", std::to_string(v));
    *out = c->c[static_cast<cohc::VertexId>(v)];
  });
}

void hc_coloring_free(hc_coloring* c) { delete c; }

hc_status hc_color_greedy(const hc_graph* g, const int32_t* order, size_t order_len, hc_coloring** out) {
  return guarded([&] {
    require(g && out, "graph and out are required");
    std::vector<cohc::VertexId> ord;
    if (order) {
      ord.assign(order, order + order_len);
    } else {
      ord.resize(g->g.size());
      for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<cohc::VertexId>(i);
    }
    *out = new hc_coloring{cohc::greedy_coloring(g->g, ord)};
  });
}

hc_status hc_color_alg1(const hc_graph* g, hc_chooser chooser, uint64_t seed, hc_coloring** out) {
  return guarded([&] {
    require(g && out, "graph and out are required");
    *out = new hc_coloring{cohc::alg1_color(g->g, make_chooser(chooser, seed)).coloring};
  });
}

hc_status hc_color_alg2(const hc_graph* g, const hc_cotree* t, hc_chooser chooser, uint64_t seed, hc_coloring** out) {
  return guarded([&] {
    require(g && t && out, "graph, cotree and out are required");
    *out = new hc_coloring{cohc::alg2_color(g->g, t->t, make_chooser(chooser, seed))};
  });
}

hc_status hc_verify(const hc_graph* g, const hc_cotree* binary_tree, const hc_coloring* c, int* accepted,
                    char** report) {
  return guarded([&] {
    require(g && binary_tree && c && accepted, "graph, cotree, coloring and accepted are required");
    const cohc::BinaryCotree bt(binary_tree->t);
    const cohc::Verdict v = cohc::verify_hc(g->g, bt, c->c);
    *accepted = v.accepted ? 1 : 0;
    put(report, describe(g->g, v, &bt.tree()));
  });
}

hc_status hc_is_hc(const hc_graph* g, const hc_coloring* c, int* accepted, char** report) {
  return guarded([&] {
    require(g && c && accepted, "graph, coloring and accepted are required");
    cohc::check_domain(g->g, c->c);
    const cohc::Verdict v = cohc::is_hc_coloring(g->g, c->c);
    *accepted = v.accepted ? 1 : 0;
    put(report, describe(g->g, v, nullptr));
  });
}

hc_status hc_is_greedy(const hc_graph* g, const hc_coloring* c, int* accepted) {
  return guarded([&] {
    require(g && c && accepted, "graph, coloring and accepted are required");
    cohc::check_domain(g->g, c->c);
    *accepted = cohc::is_proper(g->g, c->c) && cohc::is_greedy(g->g, c->c) ? 1 : 0;
  });
}

hc_status hc_is_proper(const hc_graph* g, const hc_coloring* c, int* accepted) {
  return guarded([&] {
    require(g && c && accepted, "graph, coloring and accepted are required");
    cohc::check_domain(g->g, c->c);
    *accepted = cohc::is_proper(g->g, c->c) ? 1 : 0;
  });
}

hc_status hc_count(const hc_graph* g, const hc_cotree* t, char** report, char** labeled_total) {
  return guarded([&] {
    require(g, "graph is required");
    cohc::CountReport r = [&] {
      if (!t) return cohc::count_hc_total(g->g);
      cohc::BinaryCotree bt = cohc::to_binary(t->t, cohc::BinarizeStrategy::LeftComb);
      if (!cohc::realizes(bt.tree(), g->g))
        throw cohc::Error(cohc::ErrorCode::Mismatch, "cotree-graph-mismatch", "the cotree does not realize the graph");
      return cohc::count_hc_wrt(bt);
    }();
    put(report, cohc::format_count_report(r));
    put(labeled_total, r.labeled_total.str());
  });
}

hc_status hc_reconstruct(const hc_graph* g, const hc_coloring* c, hc_cotree** out) {
  return guarded([&] {
    require(g && c && out, "graph, coloring and out are required");
    *out = new hc_cotree{cohc::reconstruct_cotree(g->g, c->c).tree()};
  });
}

hc_status hc_check(size_t max_n, const char* theorems, size_t threads, int* all_passed, char** report) {
  return guarded([&] {
    require(all_passed, "all_passed is required");
    cohc::oracle::CheckOptions opt;
    opt.threads = threads;
    if (theorems) {
      std::stringstream ss(theorems);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto id = cohc::oracle::parse_theorem(item);
        if (!id) throw cohc::Error(cohc::ErrorCode::InvalidArgument, "unknown-theorem", item);
        opt.theorems.push_back(*id);
      }
    }
    if (max_n == 0 || max_n > cohc::kMaxExhaustiveN)
      throw cohc::Error(cohc::ErrorCode::SizeGuard, "size-guard",
                        "max-n must lie in 1.." + std::to_string(cohc::kMaxExhaustiveN));
    std::vector<cohc::Graph> corpus;
    for (std::size_t n = 1; n <= max_n; ++n) cohc::for_each_cograph(n, [&](const cohc::Graph& g) { corpus.push_back(g); });
    const auto reports = cohc::oracle::check_theorems(corpus, opt);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    *all_passed = ok ? 1 : 0;
    put(report, cohc::oracle::format_reports(reports));
  });
}

hc_status hc_generate(size_t n, uint64_t seed, size_t max_arity, double balance, hc_graph** graph, hc_cotree** cotree) {
  return guarded([&] {
    require(graph, "graph is required");
    cohc::GenParams p;
    p.n = n;
    p.seed = seed;
    p.max_arity = max_arity;
    p.balance = balance;
    cohc::GeneratedCograph gc = cohc::random_cograph(p);
    *graph = new hc_graph{std::move(gc.graph)};
    if (cotree) *cotree = new hc_cotree{std::move(gc.cotree)};
  });
}

}  // extern "C"
