#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <variant>

#include "cograph_hc/generator.hpp"
#include "cograph_hc/oracle.hpp"
#include "fixtures.hpp"

using namespace cohc;

TEST_CASE("build_cotree on small graphs") {
  const Recognition p4 = build_cotree(fx::p4());
  REQUIRE(std::holds_alternative<P4Witness>(p4));
  const P4Witness w = std::get<P4Witness>(p4);
  CHECK(is_induced_p4(fx::p4(), w));
  CHECK((w.path == std::array<VertexId, 4>{0, 1, 2, 3} || w.path == std::array<VertexId, 4>{3, 2, 1, 0}));

  const Cotree k1 = require_cotree(Graph(1));
  CHECK(k1.node_count() == 1);
  CHECK(k1.node(0).is_leaf());

  const Cotree t = require_cotree(fx::k2k1k1());
  CHECK(newick_write(t) == "((a,b)1,c,d)0;");
  CHECK(t.node(0).label == Label::Union);
  CHECK(t.node(0).children.size() == 3);
  CHECK(realized_graph(t) == fx::k2k1k1());

  CHECK(fx::error_key([] { build_cotree(Graph()); }) == "empty-graph");
  CHECK(fx::error_key([] { require_cotree(fx::p4()); }) == "not-a-cograph");
}

TEST_CASE("P4 witness inside a larger graph") {
  // C5 has no cotree; every witness must be an induced P4.
  const Graph c5 = cycle_graph(5);
  const Recognition r = build_cotree(c5);
  REQUIRE(std::holds_alternative<P4Witness>(r));
  CHECK(is_induced_p4(c5, std::get<P4Witness>(r)));
  CHECK(std::holds_alternative<Cotree>(build_cotree(cycle_graph(4))));
}

TEST_CASE("recognition agrees with the brute-force P4 search up to 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      Graph g(n);
      std::size_t bit = 0;
      for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
        for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v, ++bit)
          if (mask >> bit & 1U) g.add_edge(u, v);
      const Recognition r = build_cotree(g);
      const bool p4_free = !oracle::find_induced_p4(g);
      REQUIRE(std::holds_alternative<Cotree>(r) == p4_free);
      if (p4_free) {
        const Cotree& t = std::get<Cotree>(r);
        CHECK(realized_graph(t) == g);
        CHECK(is_discriminating(t));
      } else {
        CHECK(is_induced_p4(g, std::get<P4Witness>(r)));
      }
    }
  }
}

TEST_CASE("realized graphs") {
  CHECK(realized_graph(newick_read("v0;")).size() == 1);
  CHECK(realized_graph(newick_read("(a,b)1;")).edge_count() == 1);
  CHECK(realized_graph(newick_read("((a,b)1,c,d)0;")) == fx::k2k1k1());
  CHECK(realizes(newick_read("((a,b)1,c,d)0;", fx::k2k1k1()), fx::k2k1k1()));
  CHECK(!realizes(newick_read("((a,c)1,b,d)0;", fx::k2k1k1()), fx::k2k1k1()));
}

TEST_CASE("discriminating form") {
  CHECK(is_discriminating(newick_read("a;")));
  CHECK(!is_discriminating(newick_read("((a,b)0,c)0;")));
  const Cotree t = newick_read("((a,b)1,c,d)0;");
  CHECK(make_discriminating(t) == t);

  const Cotree cat = newick_read("(((a,b)0,c)0,d)0;");
  const Cotree flat = make_discriminating(cat);
  CHECK(newick_write(flat) == "(a,b,c,d)0;");
  CHECK(realized_graph(flat) == realized_graph(cat));
}

TEST_CASE("binarization") {
  const Cotree bin = newick_read("((a,b)1,c)0;");
  CHECK(to_binary(bin, BinarizeStrategy::LeftComb).tree() == bin);
  CHECK(to_binary(bin, BinarizeStrategy::ChiAscending).tree() == bin);

  const Cotree t = require_cotree(fx::k2k1k1());
  CHECK(newick_write(to_binary(t, BinarizeStrategy::LeftComb).tree()) == "(((a,b)1,c)0,d)0;");
  CHECK(newick_write(to_binary(t, BinarizeStrategy::ChiAscending).tree()) == "((c,d)0,(a,b)1)0;");
  CHECK(newick_write(to_binary(t, BinarizeStrategy::MaxFirst).tree()) == "(((a,b)1,c)0,d)0;");
  for (auto s : {BinarizeStrategy::LeftComb, BinarizeStrategy::ChiAscending, BinarizeStrategy::MaxFirst}) {
    CHECK(to_binary(t, s).tree().is_binary());
    CHECK(realized_graph(to_binary(t, s).tree()) == fx::k2k1k1());
  }
  CHECK(fx::error_key([&] { BinaryCotree{t}; }) == "not-binary");
}

TEST_CASE("binarization and contraction on random cotrees") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeneratedCograph gc = random_cograph({1 + seed % 30, seed, 2 + seed % 5, 0.5});
    const Cotree disc = make_discriminating(gc.cotree);
    CHECK(disc == require_cotree(gc.graph));
    for (auto s : {BinarizeStrategy::LeftComb, BinarizeStrategy::ChiAscending, BinarizeStrategy::MaxFirst}) {
      const BinaryCotree b = to_binary(gc.cotree, s);
      CHECK(realized_graph(b.tree()) == gc.graph);
      CHECK(make_discriminating(b.tree()) == disc);
    }
  }
}

TEST_CASE("every binary cotree contracts to the discriminating cotree") {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_cograph(n, [](const Graph& g) {
      const Cotree disc = require_cotree(g);
      for (const auto& t : oracle::all_binary_cotrees(g)) CHECK(make_discriminating(t.tree()) == disc);
    });
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(newick_read("a;")) == 1);
  CHECK(chromatic_number(newick_read("(((a,b)1,c)1,d)1;")) == 4);
  CHECK(chromatic_number(require_cotree(fx::k2k1k1())) == 2);
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_cograph(n, [](const Graph& g) { CHECK(chromatic_number(require_cotree(g)) == oracle::brute_chromatic(g)); });
}

TEST_CASE("newick text") {
  CHECK(newick_write(newick_read("v0;")) == "v0;");
  CHECK(newick_write(newick_read("(a,b)1;")) == "(a,b)1;");
  CHECK(newick_write(newick_read(" ( (a , b)1 ,c,d )0 ;\n")) == "((a,b)1,c,d)0;");

  CHECK(fx::error_key([] { newick_read("(a,b)2;"); }) == "bad-label");
  CHECK(fx::error_key([] { newick_read("(a,b);"); }) == "parse-error");
  CHECK(fx::error_key([] { newick_read("(a,b)1"); }) == "parse-error");
  CHECK(fx::error_key([] { newick_read("(a)1;"); }) == "parse-error");
  CHECK(fx::error_key([] { newick_read("(a,a)1;"); }) == "parse-error");
  CHECK(fx::error_key([] { newick_read("((a,b)1;"); }) == "parse-error");
  CHECK(fx::error_key([] { newick_read("(a,b)1;x"); }) == "parse-error");
  try {
    newick_read("(a,b)1;x");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("byte 7") != std::string::npos);
  }
  CHECK(fx::error_key([] { newick_read("(a,e)1;", fx::k2k1k1()); }) == "cotree-graph-mismatch");
  CHECK(fx::error_key([] { newick_read("(a,b)1;", fx::k2k1k1()); }) == "cotree-graph-mismatch");
}

TEST_CASE("newick roundtrip on random cotrees") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GeneratedCograph gc = random_cograph({1 + seed % 25, seed, 4, 0.5});
    CHECK(newick_read(newick_write(gc.cotree), gc.graph) == gc.cotree);
    CHECK(newick_write(newick_read(newick_write(gc.cotree))) == newick_write(gc.cotree));
  }
}
