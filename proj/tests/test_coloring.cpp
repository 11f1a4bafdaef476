#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cograph_hc/generator.hpp"
#include "cograph_hc/oracle.hpp"
#include "fixtures.hpp"

using namespace cohc;

namespace {

const Coloring kA = fx::colors({1, 2, 1, 1});
const Coloring kB = fx::colors({1, 2, 1, 2});

BinaryCotree tree(const char* newick, const Graph& g) { return BinaryCotree(newick_read(newick, g)); }

}  // namespace

TEST_CASE("coloring basics") {
  CHECK(fx::error_key([] { fx::colors({1, 0}); }) == "bad-color");
  const Coloring c = fx::colors({5, 3, 5, 9});
  CHECK(c.color_set() == std::vector<Color>{3, 5, 9});
  CHECK(c.color_set({1, 3}) == std::vector<Color>{3, 9});
  CHECK(c.color_count() == 3);
  CHECK(c.canonical() == fx::colors({1, 2, 1, 3}));
}

TEST_CASE("proper colorings") {
  const Graph k2 = complete_graph(2);
  CHECK(is_proper(k2, fx::colors({1, 2})));
  CHECK(!is_proper(k2, fx::colors({1, 1})));
  CHECK(is_proper(fx::k2k1k1(), kB));
  CHECK(fx::error_key([&] { is_proper(k2, fx::colors({1})); }) == "coloring-domain-mismatch");
}

TEST_CASE("greedy coloring") {
  CHECK(greedy_coloring(fx::k2k1k1(), {0, 1, 2, 3}) == kA);
  CHECK(greedy_coloring(Graph(1), {0}) == fx::colors({1}));
  CHECK(greedy_coloring(fx::p4(), {0, 3, 1, 2}) == fx::colors({1, 2, 3, 1}));
  CHECK(fx::error_key([] { greedy_coloring(fx::k2k1k1(), {0, 1, 2}); }) == "not-a-permutation");
  CHECK(fx::error_key([] { greedy_coloring(fx::k2k1k1(), {0, 1, 2, 2}); }) == "not-a-permutation");
}

TEST_CASE("greedy recognition") {
  CHECK(is_greedy(fx::k2k1k1(), kA));
  CHECK(!is_greedy(fx::k2k1k1(), kB));
  CHECK(!is_greedy(fx::k2k1k1(), fx::colors({2, 3, 2, 2})));
  CHECK(fx::error_key([] { is_greedy(fx::k2k1k1(), fx::colors({1, 1, 1, 1})); }) == "not-proper");
}

TEST_CASE("is_greedy matches order enumeration up to 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_cograph(n, [](const Graph& g) {
      const auto reachable = oracle::all_first_fit_colorings(g);
      for (const Coloring& p : oracle::all_partitions(g.size())) {
        if (!oracle::proper(g, p)) continue;
        std::vector<Color> perm(p.color_count());
        std::iota(perm.begin(), perm.end(), 1);
        do {
          std::vector<Color> c(g.size());
          for (std::size_t v = 0; v < c.size(); ++v) c[v] = perm[p[static_cast<VertexId>(v)] - 1];
          const Coloring labeled(c);
          CHECK(is_greedy(g, labeled) == (reachable.count(labeled) > 0));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    });
}

TEST_CASE("verify_hc on the K2+K1+K1 cotrees") {
  const Graph g = fx::k2k1k1();
  const BinaryCotree cat = tree("(((a,b)1,c)0,d)0;", g);
  CHECK(verify_hc(g, cat, kA).accepted);
  CHECK(verify_hc(g, cat, kB).accepted);

  const Coloring sigma = fx::colors({1, 2, 2, 1});
  CHECK(verify_hc(g, cat, sigma).accepted);
  const BinaryCotree split = tree("((a,b)1,(c,d)0)0;", g);
  const Verdict v = verify_hc(g, split, sigma);
  CHECK(!v.accepted);
  CHECK(v.axiom == Axiom::K3);
  CHECK(newick_subtree(split.tree(), v.node) == "(c,d)0");
  CHECK(v.first_colors == std::vector<Color>{2});
  CHECK(v.second_colors == std::vector<Color>{1});
  CHECK(v.certificate_holds());

  const Verdict k2 = verify_hc(g, cat, fx::colors({1, 1, 1, 1}));
  CHECK(!k2.accepted);
  CHECK(k2.axiom == Axiom::K2);
  CHECK(newick_subtree(cat.tree(), k2.node) == "(a,b)1");
  CHECK(k2.certificate_holds());

  CHECK(fx::error_key([&] { verify_hc(g, tree("((a,c)1,(b,d)0)0;", g), kA); }) == "cotree-graph-mismatch");
  CHECK(fx::error_key([&] { verify_hc(g, cat, fx::colors({1, 2})); }) == "coloring-domain-mismatch");
}

TEST_CASE("verify_hc reports the deepest failure, leftmost on ties") {
  // Two K1+K1 pairs under a union; both pairs violate K3 at equal depth.
  const Graph g(4, {"a", "b", "c", "d"});
  const BinaryCotree t = tree("((a,b)0,(c,d)0)0;", g);
  const Verdict v = verify_hc(g, t, fx::colors({1, 2, 3, 4}));
  CHECK(!v.accepted);
  CHECK(newick_subtree(t.tree(), v.node) == "(a,b)0");
  const Verdict w = verify_hc(g, t, fx::colors({1, 1, 3, 4}));
  CHECK(newick_subtree(t.tree(), w.node) == "(c,d)0");
}

TEST_CASE("existential hc decision") {
  const Graph g = fx::k2k1k1();
  CHECK(is_hc_coloring(g, kA).accepted);
  CHECK(is_hc_coloring(g, kB).accepted);
  const Verdict two = is_hc_coloring(Graph(2), fx::colors({1, 2}));
  CHECK(!two.accepted);
  CHECK(two.axiom == Axiom::K3);
  CHECK(two.certificate_holds());
  const Verdict improper = is_hc_coloring(g, fx::colors({1, 1, 1, 1}));
  CHECK(improper.axiom == Axiom::Proper);
  CHECK(improper.certificate_holds());
  CHECK(fx::error_key([] { is_hc_coloring(fx::p4(), fx::colors({1, 2, 1, 2})); }) == "not-a-cograph");

  CHECK(is_recursively_minimal(g, kB));
  CHECK(!is_recursively_minimal(g, fx::colors({1, 2, 3, 3})));
  const Graph k2k1 = disjoint_union({complete_graph(2), Graph(1)});
  CHECK(!is_recursively_minimal(k2k1, fx::colors({1, 2, 3})));

  // Same answer through a non-discriminating cotree of the same graph.
  const Cotree cat = newick_read("(((a,b)1,c)0,d)0;", g);
  CHECK(is_hc_coloring(g, cat, kB).accepted);
  CHECK(!is_hc_coloring(g, cat, fx::colors({1, 2, 1, 3})).accepted);
}

TEST_CASE("existential decision agrees with all binary cotrees up to 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_cograph(n, [](const Graph& g) {
      const auto trees = oracle::all_binary_cotrees(g);
      for (const Coloring& c : oracle::all_min_colorings(g)) {
        bool some = false;
        for (const auto& t : trees) some = some || verify_hc(g, t, c).accepted;
        CHECK(is_hc_coloring(g, c).accepted == some);
      }
    });
}

TEST_CASE("coloring files") {
  const Graph g = fx::k2k1k1();
  CHECK(parse_coloring("# B\na\t1\nb 2\n2\t1\nd\t2\n", g) == kB);
  CHECK(format_coloring(kB, g) == "a\t1\nb\t2\nc\t1\nd\t2\n");
  CHECK(parse_coloring(format_coloring(kA, g), g) == kA);
  CHECK(fx::error_key([&] { parse_coloring("a\t1\nb\t2\nc\t1\n", g); }) == "coloring-domain-mismatch");
  CHECK(fx::error_key([&] { parse_coloring("a\t1\nb\t2\nc\t1\nd\t1\ne\t1\n", g); }) == "coloring-domain-mismatch");
  CHECK(fx::error_key([&] { parse_coloring("a\t1\na\t2\nc\t1\nd\t1\n", g); }) == "coloring-domain-mismatch");
  CHECK(fx::error_key([&] { parse_coloring("a\tx\nb\t2\nc\t1\nd\t1\n", g); }) == "parse-error");
  CHECK(fx::error_key([&] { parse_coloring("a\t0\nb\t2\nc\t1\nd\t1\n", g); }) == "parse-error");
  CHECK(fx::error_key([&] { read_coloring_file("/nonexistent/c.txt", g); }) == "io-error");
}
