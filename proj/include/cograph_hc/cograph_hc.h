/* C interface to the cograph hierarchical-coloring library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns an hc_status; on failure hc_last_error() and
 * hc_last_error_key() describe the problem (per thread, valid until the next
 * call on that thread). Strings returned through char** are owned by the
 * caller and released with hc_string_free. Vertex ids are 0-based.
 */
#ifndef COGRAPH_HC_H
#define COGRAPH_HC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HC_API __declspec(dllexport)
#else
#define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hc_graph hc_graph;
typedef struct hc_cotree hc_cotree;
typedef struct hc_coloring hc_coloring;

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_INVALID_ARGUMENT = 1,
  HC_ERR_PARSE = 2,
  HC_ERR_IO = 3,
  HC_ERR_NOT_COGRAPH = 4,
  HC_ERR_MISMATCH = 5,
  HC_ERR_NOT_HC = 6,
  HC_ERR_SIZE_GUARD = 7,
  HC_ERR_INTERNAL = 8
} hc_status;

typedef enum hc_binarize { HC_BINARIZE_LEFT_COMB = 0, HC_BINARIZE_CHI_ASCENDING = 1, HC_BINARIZE_MAX_FIRST = 2 } hc_binarize;

typedef enum hc_chooser { HC_CHOOSER_IDENTITY = 0, HC_CHOOSER_RANDOM = 1 } hc_chooser;

HC_API const char* hc_last_error(void);
HC_API const char* hc_last_error_key(void);
HC_API void hc_string_free(char* s);

/* Graphs (edge-list text: "n <count>", optional "names ...", one "u v" per line). */
HC_API hc_status hc_graph_parse(const char* text, hc_graph** out);
HC_API hc_status hc_graph_read_file(const char* path, hc_graph** out);
HC_API hc_status hc_graph_write_file(const hc_graph* g, const char* path);
HC_API hc_status hc_graph_format(const hc_graph* g, char** out);
HC_API size_t hc_graph_vertex_count(const hc_graph* g);
HC_API size_t hc_graph_edge_count(const hc_graph* g);
HC_API hc_status hc_graph_vertex_name(const hc_graph* g, size_t v, char** out);
HC_API hc_status hc_graph_find_vertex(const hc_graph* g, const char* name, size_t* out);
HC_API void hc_graph_free(hc_graph* g);

/* Recognition. On a cograph sets *is_cograph = 1 and *cotree to the
 * discriminating cotree (if cotree is non-null); otherwise *is_cograph = 0
 * and witness[0..3] holds an induced P4 a-b-c-d (if witness is non-null). */
HC_API hc_status hc_recognize(const hc_graph* g, int* is_cograph, hc_cotree** cotree, int32_t witness[4]);

/* Cotrees (Newick with inner labels 0 = union, 1 = join). */
HC_API hc_status hc_cotree_parse(const char* text, const hc_graph* g, hc_cotree** out);
HC_API hc_status hc_cotree_read_file(const char* path, const hc_graph* g, hc_cotree** out);
HC_API hc_status hc_cotree_format(const hc_cotree* t, char** out);
HC_API hc_status hc_cotree_binarize(const hc_cotree* t, hc_binarize strategy, hc_cotree** out);
HC_API hc_status hc_cotree_make_discriminating(const hc_cotree* t, hc_cotree** out);
HC_API int hc_cotree_is_binary(const hc_cotree* t);
HC_API size_t hc_cotree_chromatic_number(const hc_cotree* t);
HC_API void hc_cotree_free(hc_cotree* t);

/* Colorings (one "vertex<TAB>color" per line). */
HC_API hc_status hc_coloring_parse(const char* text, const hc_graph* g, hc_coloring** out);
HC_API hc_status hc_coloring_read_file(const char* path, const hc_graph* g, hc_coloring** out);
HC_API hc_status hc_coloring_write_file(const hc_coloring* c, const hc_graph* g, const char* path);
HC_API hc_status hc_coloring_format(const hc_coloring* c, const hc_graph* g, char** out);
HC_API size_t hc_coloring_color_count(const hc_coloring* c);
HC_API hc_status hc_coloring_color(const hc_coloring* c, size_t v, int32_t* out);
HC_API void hc_coloring_free(hc_coloring* c);

/* Coloring algorithms. order may be null for 0..n-1. */
HC_API hc_status hc_color_greedy(const hc_graph* g, const int32_t* order, size_t order_len, hc_coloring** out);
HC_API hc_status hc_color_alg1(const hc_graph* g, hc_chooser chooser, uint64_t seed, hc_coloring** out);
HC_API hc_status hc_color_alg2(const hc_graph* g, const hc_cotree* t, hc_chooser chooser, uint64_t seed,
                               hc_coloring** out);

/* Predicates. *accepted is 1 or 0. report (optional) receives a one-line
 * verdict such as "accepted" or "K3 violation at node ...". */
HC_API hc_status hc_verify(const hc_graph* g, const hc_cotree* binary_tree, const hc_coloring* c, int* accepted,
                           char** report);
HC_API hc_status hc_is_hc(const hc_graph* g, const hc_coloring* c, int* accepted, char** report);
HC_API hc_status hc_is_greedy(const hc_graph* g, const hc_coloring* c, int* accepted);
HC_API hc_status hc_is_proper(const hc_graph* g, const hc_coloring* c, int* accepted);

/* Counting. t may be null for the total over all cotrees; a non-binary t is
 * binarized left-comb. report receives the per-node lines, labeled_total
 * the decimal total; either may be null. */
HC_API hc_status hc_count(const hc_graph* g, const hc_cotree* t, char** report, char** labeled_total);

/* Binary cotree for which c is an hc-coloring. */
HC_API hc_status hc_reconstruct(const hc_graph* g, const hc_coloring* c, hc_cotree** out);

/* Theorem checks over all labeled cographs with 1..max_n vertices.
 * theorems is a comma-separated list of ids or null for all; threads 0 = auto. */
HC_API hc_status hc_check(size_t max_n, const char* theorems, size_t threads, int* all_passed, char** report);

/* Seeded random cograph and the cotree it was sampled from. */
HC_API hc_status hc_generate(size_t n, uint64_t seed, size_t max_arity, double balance, hc_graph** graph,
                             hc_cotree** cotree);

#ifdef __cplusplus
}
#endif

#endif
