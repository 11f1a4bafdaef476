#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cograph_hc/bitset.hpp"

namespace cohc {

using VertexId = std::int32_t;

/// Strictly increasing list of vertex ids of one graph.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph over dense ids 0..n-1 with a name per vertex.
///
/// Adjacency is held as one neighbor bitset per vertex, so memory is n^2 bits.
/// The edge list is produced on demand in canonical order (u < v, ascending).
class Graph {
 public:
  Graph() = default;
  /// n isolated vertices named v0..v{n-1}.
  explicit Graph(std::size_t n);
  /// Names must be distinct, non-empty and free of whitespace and "#(),;:".
  Graph(std::size_t n, std::vector<std::string> names);

  std::size_t size() const { return adjacency_.size(); }
  bool empty() const { return adjacency_.empty(); }

  /// Throws "bad-vertex-id" for out-of-range ids and "self-loop" for u == v.
  /// Adding an existing edge is a no-op.
  void add_edge(VertexId u, VertexId v);
  /// Adds every edge between distinct parts; parts must be disjoint, sorted.
  void add_join_edges(const std::vector<VertexSet>& parts);

  bool adjacent(VertexId u, VertexId v) const { return adjacency_[u].test(static_cast<std::size_t>(v)); }
  const Bitset& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].count(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 when no vertex carries the name.
  VertexId find(std::string_view name) const;
  /// True when every vertex carries its default name v<i>.
  bool has_default_names() const;

  /// Same vertex count and edge set; names are ignored.
  bool same_edges(const Graph& other) const;
  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> adjacency_;
};

std::string default_vertex_name(std::size_t i);

/// Complement on the same vertex set and names.
Graph complement(const Graph& g);

/// Subgraph induced by vs, re-indexed densely in the order of vs.
/// Throws "empty-induced-set" or "bad-vertex-id".
Graph induced_subgraph(const Graph& g, const VertexSet& vs);

/// Components ordered by smallest member; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of g[vs] (vs sorted) without materializing the subgraph.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& vs);

/// Components of the complement of g[vs] without materializing it.
std::vector<VertexSet> complement_components(const Graph& g, const VertexSet& vs);

/// Vertex-disjoint union; ids of gs[i] are shifted by the sizes of gs[0..i).
/// Colliding names get a "_k" suffix. Throws "empty-list" on an empty list.
Graph disjoint_union(const std::vector<Graph>& gs);

/// disjoint_union plus every edge between distinct constituents.
Graph join(const std::vector<Graph>& gs);

VertexSet all_vertices(const Graph& g);

/// Small constructors used throughout tests and examples.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// Edge-list text format:
//   n <count>
//   names <name0> <name1> ...      (optional)
//   <u> <v>                        (ids or names, one edge per line)
// Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace cohc
