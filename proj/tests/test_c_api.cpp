#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "cograph_hc/cograph_hc.h"

namespace {

const char* kK2K1K1 = "n 4\nnames a b c d\na b\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  hc_string_free(s);
  return out;
}

hc_graph* graph(const char* text) {
  hc_graph* g = nullptr;
  REQUIRE(hc_graph_parse(text, &g) == HC_OK);
  return g;
}

hc_cotree* cotree(const char* text, const hc_graph* g) {
  hc_cotree* t = nullptr;
  REQUIRE(hc_cotree_parse(text, g, &t) == HC_OK);
  return t;
}

hc_coloring* coloring(const char* text, const hc_graph* g) {
  hc_coloring* c = nullptr;
  REQUIRE(hc_coloring_parse(text, g, &c) == HC_OK);
  return c;
}

}  // namespace

TEST_CASE("graphs") {
  hc_graph* g = graph(kK2K1K1);
  CHECK(hc_graph_vertex_count(g) == 4);
  CHECK(hc_graph_edge_count(g) == 1);
  char* s = nullptr;
  REQUIRE(hc_graph_vertex_name(g, 2, &s) == HC_OK);
  CHECK(take(s) == "c");
  size_t v = 0;
  CHECK(hc_graph_find_vertex(g, "d", &v) == HC_OK);
  CHECK(v == 3);
  CHECK(hc_graph_find_vertex(g, "zz", &v) == HC_ERR_INVALID_ARGUMENT);
  CHECK(hc_graph_vertex_name(g, 9, &s) == HC_ERR_INVALID_ARGUMENT);
  REQUIRE(hc_graph_format(g, &s) == HC_OK);
  CHECK(take(s) == "n 4\nnames a b c d\n0 1\n");

  const std::string path = (std::filesystem::temp_directory_path() / "cohc_c_api_graph.txt").string();
  CHECK(hc_graph_write_file(g, path.c_str()) == HC_OK);
  hc_graph* back = nullptr;
  CHECK(hc_graph_read_file(path.c_str(), &back) == HC_OK);
  CHECK(hc_graph_edge_count(back) == 1);
  hc_graph_free(back);
  std::remove(path.c_str());
  hc_graph_free(g);

  hc_graph* bad = nullptr;
  CHECK(hc_graph_parse("n 2\n0 7\n", &bad) == HC_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(hc_last_error_key()) == "parse-error");
  CHECK(std::string(hc_last_error()).find("line 2") != std::string::npos);
  CHECK(hc_graph_read_file("/nonexistent/g.txt", &bad) == HC_ERR_IO);
  CHECK(hc_graph_parse(nullptr, &bad) == HC_ERR_INVALID_ARGUMENT);
  hc_graph_free(nullptr);
}

TEST_CASE("recognition and cotrees") {
  hc_graph* g = graph(kK2K1K1);
  int is_cograph = 0;
  hc_cotree* t = nullptr;
  int32_t w[4];
  REQUIRE(hc_recognize(g, &is_cograph, &t, w) == HC_OK);
  CHECK(is_cograph == 1);
  char* s = nullptr;
  REQUIRE(hc_cotree_format(t, &s) == HC_OK);
  CHECK(take(s) == "((a,b)1,c,d)0;");
  CHECK(hc_cotree_chromatic_number(t) == 2);
  CHECK(hc_cotree_is_binary(t) == 0);

  hc_cotree* b = nullptr;
  REQUIRE(hc_cotree_binarize(t, HC_BINARIZE_CHI_ASCENDING, &b) == HC_OK);
  REQUIRE(hc_cotree_format(b, &s) == HC_OK);
  CHECK(take(s) == "((c,d)0,(a,b)1)0;");
  CHECK(hc_cotree_is_binary(b) == 1);
  hc_cotree* d = nullptr;
  REQUIRE(hc_cotree_make_discriminating(b, &d) == HC_OK);
  REQUIRE(hc_cotree_format(d, &s) == HC_OK);
  CHECK(take(s) == "((a,b)1,c,d)0;");
  hc_cotree_free(d);
  hc_cotree_free(b);
  hc_cotree_free(t);

  hc_cotree* wrong = nullptr;
  CHECK(hc_cotree_parse("((a,e)1,b,d)0;", g, &wrong) == HC_ERR_MISMATCH);
  CHECK(hc_cotree_parse("(a,b)2;", nullptr, &wrong) == HC_ERR_PARSE);
  CHECK(std::string(hc_last_error_key()) == "bad-label");
  hc_graph_free(g);

  hc_graph* p4 = graph("n 4\n0 1\n1 2\n2 3\n");
  t = nullptr;
  REQUIRE(hc_recognize(p4, &is_cograph, &t, w) == HC_OK);
  CHECK(is_cograph == 0);
  CHECK(t == nullptr);
  CHECK(((w[0] == 0 && w[3] == 3) || (w[0] == 3 && w[3] == 0)));
  hc_graph_free(p4);
}

TEST_CASE("colorings and predicates") {
  hc_graph* g = graph(kK2K1K1);
  hc_coloring* a = coloring("a 1\nb 2\nc 1\nd 1\n", g);
  hc_coloring* b = coloring("a 1\nb 2\nc 1\nd 2\n", g);
  CHECK(hc_coloring_color_count(b) == 2);
  int32_t col = 0;
  CHECK(hc_coloring_color(b, 3, &col) == HC_OK);
  CHECK(col == 2);
  CHECK(hc_coloring_color(b, 4, &col) == HC_ERR_INVALID_ARGUMENT);
  char* s = nullptr;
  REQUIRE(hc_coloring_format(a, g, &s) == HC_OK);
  CHECK(take(s) == "a\t1\nb\t2\nc\t1\nd\t1\n");

  int yes = -1;
  CHECK(hc_is_proper(g, b, &yes) == HC_OK);
  CHECK(yes == 1);
  CHECK(hc_is_greedy(g, a, &yes) == HC_OK);
  CHECK(yes == 1);
  CHECK(hc_is_greedy(g, b, &yes) == HC_OK);
  CHECK(yes == 0);
  CHECK(hc_is_hc(g, b, &yes, &s) == HC_OK);
  CHECK(yes == 1);
  CHECK(take(s) == "accepted");

  hc_cotree* cat = cotree("(((a,b)1,c)0,d)0;", g);
  CHECK(hc_verify(g, cat, a, &yes, &s) == HC_OK);
  CHECK(yes == 1);
  take(s);
  hc_cotree* split = cotree("((a,b)1,(c,d)0)0;", g);
  hc_coloring* sigma = coloring("a 1\nb 2\nc 2\nd 1\n", g);
  CHECK(hc_verify(g, split, sigma, &yes, &s) == HC_OK);
  CHECK(yes == 0);
  CHECK(take(s) == "K3 violation at node (c,d)0: {c} colors {2} and {d} colors {1}");
  hc_cotree* flat = cotree("((a,b)1,c,d)0;", g);
  CHECK(hc_verify(g, flat, sigma, &yes, &s) == HC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hc_last_error_key()) == "not-binary");

  hc_coloring* bad = nullptr;
  CHECK(hc_coloring_parse("a 1\nb 2\n", g, &bad) == HC_ERR_MISMATCH);
  hc_coloring* same = coloring("a 1\nb 1\nc 1\nd 1\n", g);
  CHECK(hc_is_greedy(g, same, &yes) == HC_OK);
  CHECK(yes == 0);
  hc_cotree* wrong = cotree("(((a,c)1,b)0,d)0;", g);
  CHECK(hc_verify(g, wrong, a, &yes, &s) == HC_ERR_MISMATCH);
  CHECK(std::string(hc_last_error_key()) == "cotree-graph-mismatch");
  hc_cotree_free(wrong);

  hc_coloring_free(same);
  hc_coloring_free(sigma);
  hc_cotree_free(flat);
  hc_cotree_free(split);
  hc_cotree_free(cat);
  hc_coloring_free(b);
  hc_coloring_free(a);
  hc_graph_free(g);
}

TEST_CASE("coloring algorithms") {
  hc_graph* g = graph(kK2K1K1);
  hc_coloring* c = nullptr;
  REQUIRE(hc_color_greedy(g, nullptr, 0, &c) == HC_OK);
  char* s = nullptr;
  REQUIRE(hc_coloring_format(c, g, &s) == HC_OK);
  CHECK(take(s) == "a\t1\nb\t2\nc\t1\nd\t1\n");
  hc_coloring_free(c);

  const int32_t bad_order[] = {0, 1, 1, 2};
  CHECK(hc_color_greedy(g, bad_order, 4, &c) == HC_ERR_INVALID_ARGUMENT);

  REQUIRE(hc_color_alg1(g, HC_CHOOSER_IDENTITY, 0, &c) == HC_OK);
  REQUIRE(hc_coloring_format(c, g, &s) == HC_OK);
  CHECK(take(s) == "a\t1\nb\t2\nc\t1\nd\t1\n");
  hc_coloring_free(c);

  hc_coloring* r1 = nullptr;
  hc_coloring* r2 = nullptr;
  REQUIRE(hc_color_alg1(g, HC_CHOOSER_RANDOM, 42, &r1) == HC_OK);
  REQUIRE(hc_color_alg1(g, HC_CHOOSER_RANDOM, 42, &r2) == HC_OK);
  char* t1 = nullptr;
  char* t2 = nullptr;
  hc_coloring_format(r1, g, &t1);
  hc_coloring_format(r2, g, &t2);
  CHECK(take(t1) == take(t2));
  hc_coloring_free(r1);
  hc_coloring_free(r2);

  hc_cotree* cat = cotree("(((a,b)1,c)0,d)0;", g);
  REQUIRE(hc_color_alg2(g, cat, HC_CHOOSER_RANDOM, 3, &c) == HC_OK);
  int yes = 0;
  CHECK(hc_verify(g, cat, c, &yes, &s) == HC_OK);
  take(s);
  CHECK(yes == 1);

  hc_cotree* back = nullptr;
  REQUIRE(hc_reconstruct(g, c, &back) == HC_OK);
  CHECK(hc_cotree_is_binary(back) == 1);
  CHECK(hc_verify(g, back, c, &yes, &s) == HC_OK);
  take(s);
  CHECK(yes == 1);
  hc_cotree_free(back);
  hc_coloring_free(c);
  hc_cotree_free(cat);
  hc_graph_free(g);

  hc_graph* two = graph("n 2\n");
  hc_coloring* rainbow = coloring("v0 1\nv1 2\n", two);
  CHECK(hc_reconstruct(two, rainbow, &back) == HC_ERR_NOT_HC);
  hc_coloring_free(rainbow);
  hc_graph_free(two);

  hc_graph* p4 = graph("n 4\n0 1\n1 2\n2 3\n");
  CHECK(hc_color_alg1(p4, HC_CHOOSER_IDENTITY, 0, &c) == HC_ERR_NOT_COGRAPH);
  hc_graph_free(p4);
}

TEST_CASE("counting, checking and generation") {
  hc_graph* g = graph(kK2K1K1);
  char* report = nullptr;
  char* total = nullptr;
  REQUIRE(hc_count(g, nullptr, &report, &total) == HC_OK);
  CHECK(take(total) == "8");
  CHECK(take(report).find("labeled_total 8") != std::string::npos);
  hc_cotree* cat = cotree("(((a,b)1,c)0,d)0;", g);
  REQUIRE(hc_count(g, cat, &report, nullptr) == HC_OK);
  CHECK(take(report).rfind("node (((a,b)1,c)0,d)0 N 4 s 2\n", 0) == 0);
  hc_cotree_free(cat);
  hc_graph_free(g);

  int passed = 0;
  REQUIRE(hc_check(4, "T1,COUNT", 1, &passed, &report) == HC_OK);
  CHECK(passed == 1);
  const std::string text = take(report);
  CHECK(text.find("THEOREM T1 PASS checked=63 counterexamples=0") != std::string::npos);
  CHECK(text.find("THEOREM COUNT PASS") != std::string::npos);
  CHECK(hc_check(8, nullptr, 1, &passed, &report) == HC_ERR_SIZE_GUARD);
  CHECK(hc_check(3, "T7", 1, &passed, &report) == HC_ERR_INVALID_ARGUMENT);

  hc_graph* a = nullptr;
  hc_graph* b = nullptr;
  hc_cotree* ta = nullptr;
  hc_cotree* tb = nullptr;
  REQUIRE(hc_generate(25, 5, 3, 0.5, &a, &ta) == HC_OK);
  REQUIRE(hc_generate(25, 5, 3, 0.5, &b, nullptr) == HC_OK);
  char* sa = nullptr;
  char* sb = nullptr;
  hc_graph_format(a, &sa);
  hc_graph_format(b, &sb);
  CHECK(take(sa) == take(sb));
  CHECK(hc_graph_vertex_count(a) == 25);
  hc_cotree_free(ta);
  hc_graph_free(a);
  hc_graph_free(b);
  CHECK(hc_generate(0, 5, 3, 0.5, &a, &ta) == HC_ERR_INVALID_ARGUMENT);
}
