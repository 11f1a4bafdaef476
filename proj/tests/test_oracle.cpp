#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cograph_hc/generator.hpp"
#include "cograph_hc/oracle.hpp"
#include "cograph_hc/theorems.hpp"
#include "fixtures.hpp"

using namespace cohc;

TEST_CASE("induced P4 search") {
  const auto w = oracle::find_induced_p4(fx::p4());
  REQUIRE(w);
  CHECK(is_induced_p4(fx::p4(), *w));
  CHECK(!oracle::find_induced_p4(cycle_graph(4)));
  CHECK(!oracle::find_induced_p4(fx::k2k1k1()));
  CHECK(oracle::find_induced_p4(cycle_graph(5)));
}

TEST_CASE("brute chromatic and grundy numbers") {
  CHECK(oracle::brute_chromatic(Graph(1)) == 1);
  CHECK(oracle::brute_chromatic(complete_graph(4)) == 4);
  CHECK(oracle::brute_chromatic(fx::k2k1k1()) == 2);
  CHECK(oracle::brute_chromatic(cycle_graph(5)) == 3);
  CHECK(oracle::brute_grundy(Graph(1)) == 1);
  CHECK(oracle::brute_grundy(fx::p4()) == 3);
  const auto table = oracle::subset_chromatic(fx::k2k1k1());
  CHECK(table.size() == 16);
  CHECK(table[0] == 0);
  CHECK(table[0b0011] == 2);
  CHECK(table[0b1100] == 1);
  CHECK(fx::error_key([] { oracle::brute_chromatic(Graph(13)); }) == "size-guard");
  CHECK(fx::error_key([] { oracle::brute_grundy(Graph(9)); }) == "size-guard");
}

TEST_CASE("first fit") {
  CHECK(oracle::first_fit(fx::p4(), {0, 3, 1, 2}) == fx::colors({1, 2, 3, 1}));
  const auto all = oracle::all_first_fit_colorings(fx::k2k1k1());
  CHECK(all.count(fx::colors({1, 2, 1, 1})) == 1);
  CHECK(all.count(fx::colors({1, 2, 1, 2})) == 0);
  CHECK(all.size() == 2);
}

TEST_CASE("binary cotrees of small graphs") {
  CHECK(oracle::all_binary_cotrees(Graph(1)).size() == 1);
  CHECK(oracle::all_binary_cotrees(complete_graph(2)).size() == 1);
  CHECK(oracle::all_binary_cotrees(fx::p4()).empty());
  const auto trees = oracle::all_binary_cotrees(fx::k2k1k1());
  std::set<std::string> text;
  for (const auto& t : trees) text.insert(newick_write(t.tree()));
  CHECK(text.size() == trees.size());
  // K2 + K1 + K1: 3 ways to split three components into a binary union tree.
  CHECK(trees.size() == 3);
  CHECK(text.count("((a,b)1,(c,d)0)0;") == 1);
  bool caterpillar = false;
  for (const auto& t : trees) caterpillar = caterpillar || make_discriminating(t.tree()) == require_cotree(fx::k2k1k1());
  CHECK(caterpillar);
  CHECK(oracle::all_binary_cotrees(Graph(4)).size() == 15);
}

TEST_CASE("partitions and minimum colorings") {
  const std::size_t bell[] = {1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(oracle::all_partitions(n).size() == bell[n - 1]);
  CHECK(oracle::all_partitions(3).front() == fx::colors({1, 1, 1}));
  CHECK(oracle::all_min_colorings(Graph(1)).size() == 1);
  CHECK(oracle::all_min_colorings(complete_graph(2)).size() == 2);
  CHECK(oracle::all_min_colorings(fx::k2k1k1()).size() == 8);
  CHECK(fx::error_key([] { oracle::all_partitions(8); }) == "size-guard");
}

TEST_CASE("tree oracle on the K2+K1+K1 cotrees") {
  const Graph g = fx::k2k1k1();
  const BinaryCotree cat(newick_read("(((a,b)1,c)0,d)0;", g));
  const BinaryCotree split(newick_read("((a,b)1,(c,d)0)0;", g));
  const Coloring sigma = fx::colors({1, 2, 2, 1});
  CHECK(oracle::satisfies_axioms(g, cat, sigma));
  CHECK(!oracle::satisfies_axioms(g, split, sigma));
  CHECK(oracle::color_minimal_along(g, cat, sigma));
  CHECK(!oracle::color_minimal_along(g, split, sigma));
  CHECK(!oracle::satisfies_axioms(g, cat, fx::colors({1, 1, 1, 1})));
  CHECK(oracle::component_masks(g, 0b1111) == std::vector<std::uint32_t>{0b0011, 0b0100, 0b1000});
}

TEST_CASE("cograph enumeration") {
  const std::size_t counts[] = {1, 2, 8, 52, 472};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t k = 0;
    for_each_cograph(n, [&](const Graph& g) {
      CHECK(!oracle::find_induced_p4(g));
      ++k;
    });
    CHECK(k == counts[n - 1]);
  }
  CHECK(fx::error_key([] { exhaustive_cographs(8); }) == "size-guard");
}

TEST_CASE("random cograph generator") {
  const GenParams p{30, 7, 3, 0.4};
  const GeneratedCograph a = random_cograph(p);
  const GeneratedCograph b = random_cograph(p);
  CHECK(a.graph == b.graph);
  CHECK(a.cotree == b.cotree);
  CHECK(realizes(a.cotree, a.graph));
  CHECK(a.graph.size() == 30);
  for (std::size_t i = 0; i < a.cotree.node_count(); ++i) CHECK(a.cotree.node(static_cast<NodeId>(i)).children.size() <= 3);
  CHECK(!(random_cograph({30, 8, 3, 0.4}).graph == a.graph));
  CHECK(random_cograph({20, 1, 4, 1.0}).graph.same_edges(complete_graph(20)));
  CHECK(random_cograph({20, 1, 4, 0.0}).graph.edge_count() == 0);
  CHECK(fx::error_key([] { random_cograph({0, 1, 4, 0.5}); }) == "bad-params");
  CHECK(fx::error_key([] { random_cograph({5, 1, 1, 0.5}); }) == "bad-params");
  CHECK(fx::error_key([] { random_cograph({5, 1, 4, 1.5}); }) == "bad-params");
}

TEST_CASE("theorem checks on a small corpus") {
  CHECK(oracle::theorem_name(oracle::TheoremId::GreedyIff) == "T-greedy-iff");
  CHECK(oracle::parse_theorem("COUNT") == oracle::TheoremId::Count);
  CHECK(!oracle::parse_theorem("T9"));

  const auto skip = oracle::check_theorems({fx::p4()}, {{oracle::TheoremId::T1}});
  REQUIRE(skip.size() == 1);
  CHECK(skip[0].checked == 0);
  CHECK(skip[0].skipped == 1);
  CHECK(skip[0].passed());

  std::vector<Graph> corpus;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : exhaustive_cographs(n)) corpus.push_back(g);
  oracle::CheckOptions one{{}, 1};
  oracle::CheckOptions many{{}, 4};
  const auto a = oracle::check_theorems(corpus, one);
  const auto b = oracle::check_theorems(corpus, many);
  CHECK(oracle::format_reports(a) == oracle::format_reports(b));
  for (const auto& r : a) CHECK(r.checked == corpus.size());
  CHECK(fx::error_key([] { oracle::check_theorems({Graph(8)}); }) == "size-guard");
}
