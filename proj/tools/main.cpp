// cograph-hc: command-line front end over the C API.
// Exit codes: 0 success/accept, 1 reject or negative result, 2 usage or I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cograph_hc/cograph_hc.h"

namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

struct Failure {
  int code;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<hc_graph, Deleter<hc_graph, hc_graph_free>>;
using CotreePtr = std::unique_ptr<hc_cotree, Deleter<hc_cotree, hc_cotree_free>>;
using ColoringPtr = std::unique_ptr<hc_coloring, Deleter<hc_coloring, hc_coloring_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  hc_string_free(s);
  return out;
}

// Non-cograph input is a negative result; everything else is an error.
void check(hc_status st) {
  if (st == HC_OK) return;
  std::cerr << "error: " << hc_last_error() << "\n";
  throw Failure{st == HC_ERR_NOT_COGRAPH ? kReject : kUsage};
}

GraphPtr load_graph(const std::string& path) {
  hc_graph* g = nullptr;
  check(hc_graph_read_file(path.c_str(), &g));
  return GraphPtr(g);
}

CotreePtr load_cotree(const std::string& path, const hc_graph* g) {
  hc_cotree* t = nullptr;
  check(hc_cotree_read_file(path.c_str(), g, &t));
  return CotreePtr(t);
}

ColoringPtr load_coloring(const std::string& path, const hc_graph* g) {
  hc_coloring* c = nullptr;
  check(hc_coloring_read_file(path.c_str(), g, &c));
  return ColoringPtr(c);
}

std::string vertex_name(const hc_graph* g, std::size_t v) {
  char* s = nullptr;
  check(hc_graph_vertex_name(g, v, &s));
  return take(s);
}

std::string cotree_text(const hc_cotree* t) {
  char* s = nullptr;
  check(hc_cotree_format(t, &s));
  return take(s);
}

int run_recognize(const std::string& graph_file) {
  GraphPtr g = load_graph(graph_file);
  int is_cograph = 0;
  hc_cotree* t = nullptr;
  int32_t w[4];
  check(hc_recognize(g.get(), &is_cograph, &t, w));
  CotreePtr tree(t);
  if (is_cograph) {
    std::cout << "COGRAPH " << cotree_text(tree.get()) << "\n";
    return kOk;
  }
  std::cout << "NOT-COGRAPH";
  for (int32_t v : w) std::cout << ' ' << vertex_name(g.get(), static_cast<std::size_t>(v));
  std::cout << "\n";
  return kReject;
}

int run_cotree(const std::string& graph_file, const std::string& binary, const std::string& out_file) {
  GraphPtr g = load_graph(graph_file);
  int is_cograph = 0;
  hc_cotree* t = nullptr;
  int32_t w[4];
  check(hc_recognize(g.get(), &is_cograph, &t, w));
  if (!is_cograph) {
    std::cout << "NOT-COGRAPH";
    for (int32_t v : w) std::cout << ' ' << vertex_name(g.get(), static_cast<std::size_t>(v));
    std::cout << "\n";
    return kReject;
  }
  CotreePtr tree(t);
  if (!binary.empty()) {
    const hc_binarize s = binary == "left-comb"      ? HC_BINARIZE_LEFT_COMB
                          : binary == "chi-ascending" ? HC_BINARIZE_CHI_ASCENDING
                                                      : HC_BINARIZE_MAX_FIRST;
    hc_cotree* b = nullptr;
    check(hc_cotree_binarize(tree.get(), s, &b));
    tree.reset(b);
  }
  const std::string text = cotree_text(tree.get());
  if (out_file.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_file);
    if (!(out << text << "\n")) {
      std::cerr << "error: io-error: cannot write " << out_file << "\n";
      return kUsage;
    }
  }
  return kOk;
}

int run_color(const std::string& graph_file, const std::string& method, const std::vector<std::string>& order,
              const std::optional<std::uint64_t>& seed, const std::string& out_file) {
  GraphPtr g = load_graph(graph_file);
  hc_coloring* c = nullptr;
  if (method == "greedy") {
    std::vector<int32_t> ids;
    for (const auto& name : order) {
      std::size_t v = 0;
      check(hc_graph_find_vertex(g.get(), name.c_str(), &v));
      ids.push_back(static_cast<int32_t>(v));
    }
    check(hc_color_greedy(g.get(), order.empty() ? nullptr : ids.data(), ids.size(), &c));
  } else {
    check(hc_color_alg1(g.get(), seed ? HC_CHOOSER_RANDOM : HC_CHOOSER_IDENTITY, seed.value_or(0), &c));
  }
  ColoringPtr col(c);
  if (out_file.empty()) {
    char* s = nullptr;
    check(hc_coloring_format(col.get(), g.get(), &s));
    std::cout << take(s);
  } else {
    check(hc_coloring_write_file(col.get(), g.get(), out_file.c_str()));
  }
  std::cout << "colors " << hc_coloring_color_count(col.get()) << "\n";
  return kOk;
}

int run_verify(const std::string& graph_file, const std::string& coloring_file, const std::string& cotree_file) {
  GraphPtr g = load_graph(graph_file);
  ColoringPtr c = load_coloring(coloring_file, g.get());
  int accepted = 0;
  char* report = nullptr;
  if (!cotree_file.empty()) {
    CotreePtr t = load_cotree(cotree_file, g.get());
    check(hc_verify(g.get(), t.get(), c.get(), &accepted, &report));
    std::cout << take(report) << "\n";
    return accepted ? kOk : kReject;
  }
  int proper = 0, greedy = 0;
  check(hc_is_proper(g.get(), c.get(), &proper));
  check(hc_is_hc(g.get(), c.get(), &accepted, &report));
  const std::string why = take(report);
  check(hc_is_greedy(g.get(), c.get(), &greedy));
  std::cout << "proper=" << (proper ? "yes" : "no") << " hc=" << (accepted ? "yes" : "no")
            << " greedy=" << (greedy ? "yes" : "no") << "\n";
  if (!accepted) std::cout << why << "\n";
  return accepted ? kOk : kReject;
}

int run_count(const std::string& graph_file, const std::string& cotree_file) {
  GraphPtr g = load_graph(graph_file);
  CotreePtr t;
  if (!cotree_file.empty()) t = load_cotree(cotree_file, g.get());
  char* report = nullptr;
  check(hc_count(g.get(), t.get(), &report, nullptr));
  std::cout << take(report);
  return kOk;
}

int run_check(std::size_t max_n, const std::string& theorems, std::size_t threads) {
  int passed = 0;
  char* report = nullptr;
  check(hc_check(max_n, theorems.empty() ? nullptr : theorems.c_str(), threads, &passed, &report));
  std::cout << take(report);
  return passed ? kOk : kReject;
}

int run_gen(std::size_t n, std::uint64_t seed, std::size_t max_arity, double balance, const std::string& out_file,
            const std::string& cotree_out) {
  hc_graph* gp = nullptr;
  hc_cotree* tp = nullptr;
  check(hc_generate(n, seed, max_arity, balance, &gp, &tp));
  GraphPtr g(gp);
  CotreePtr t(tp);
  char* s = nullptr;
  check(hc_graph_format(g.get(), &s));
  std::ostringstream text;
  text << "# seed " << seed << " n " << n << " max-arity " << max_arity << " balance " << balance << "\n" << take(s);
  if (out_file.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_file);
    if (!(out << text.str())) {
      std::cerr << "error: io-error: cannot write " << out_file << "\n";
      return kUsage;
    }
  }
  if (!cotree_out.empty()) {
    std::ofstream out(cotree_out);
    if (!(out << cotree_text(t.get()) << "\n")) {
      std::cerr << "error: io-error: cannot write " << cotree_out << "\n";
      return kUsage;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical colorings of cographs"};
  app.require_subcommand(1);

  std::string graph_file, coloring_file, cotree_file, out_file, cotree_out, binary, method = "greedy", theorems;
  std::vector<std::string> order;
  std::optional<std::uint64_t> seed;
  std::uint64_t gen_seed = 0;
  std::size_t max_n = 0, threads = 0, n = 0, max_arity = 4;
  double balance = 0.5;

  auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is a cograph");
  recognize->add_option("graph", graph_file, "Edge-list file")->required();

  auto* cotree = app.add_subcommand("cotree", "Print the discriminating cotree in Newick form");
  cotree->add_option("graph", graph_file, "Edge-list file")->required();
  cotree->add_option("--binary", binary, "Binarize: left-comb, chi-ascending or max-first")
      ->check(CLI::IsMember({"left-comb", "chi-ascending", "max-first"}));
  cotree->add_option("-o,--output", out_file, "Write the Newick tree here");

  auto* color = app.add_subcommand("color", "Color a graph");
  color->add_option("graph", graph_file, "Edge-list file")->required();
  color->add_option("--method", method, "greedy or alg1")->check(CLI::IsMember({"greedy", "alg1"}));
  color->add_option("--order", order, "Vertex order for greedy (names)")->delimiter(',');
  color->add_option("--seed", seed, "Seed for random injections in alg1");
  color->add_option("-o,--output", out_file, "Write the coloring here");

  auto* verify = app.add_subcommand("verify", "Check a coloring");
  verify->add_option("graph", graph_file, "Edge-list file")->required();
  verify->add_option("coloring", coloring_file, "Coloring file")->required();
  verify->add_option("--cotree", cotree_file, "Binary cotree (Newick file) to verify against");

  auto* count = app.add_subcommand("count", "Count hc-colorings");
  count->add_option("graph", graph_file, "Edge-list file")->required();
  count->add_option("--cotree", cotree_file, "Count with respect to this cotree (Newick file)");

  auto* chk = app.add_subcommand("check", "Run the theorem checks on all small cographs");
  chk->add_option("--max-n", max_n, "Largest vertex count")->required();
  chk->add_option("--theorems", theorems, "Comma-separated theorem ids (default: all)");
  chk->add_option("--threads", threads, "Worker threads (0 = auto, capped by COGRAPH_HC_THREADS)");

  auto* gen = app.add_subcommand("gen", "Generate a random cograph");
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--max-arity", max_arity, "Largest number of children per cotree node");
  gen->add_option("--balance", balance, "Probability that an inner node is a join");
  gen->add_option("-o,--output", out_file, "Write the edge list here");
  gen->add_option("--cotree-out", cotree_out, "Write the generating cotree here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*recognize) return run_recognize(graph_file);
    if (*cotree) return run_cotree(graph_file, binary, out_file);
    if (*color) return run_color(graph_file, method, order, seed, out_file);
    if (*verify) return run_verify(graph_file, coloring_file, cotree_file);
    if (*count) return run_count(graph_file, cotree_file);
    if (*chk) return run_check(max_n, theorems, threads);
    if (*gen) return run_gen(n, gen_seed, max_arity, balance, out_file, cotree_out);
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
