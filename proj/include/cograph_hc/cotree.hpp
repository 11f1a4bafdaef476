#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cograph_hc/graph.hpp"

namespace cohc {

/// Inner node operation: 0 is disjoint union, 1 is join.
enum class Label : std::uint8_t { Union = 0, Join = 1 };

using NodeId = std::int32_t;

struct CotreeNode {
  VertexId vertex = -1;  // >= 0 exactly for leaves
  Label label = Label::Union;
  std::vector<NodeId> children;

  bool is_leaf() const { return vertex >= 0; }
  bool operator==(const CotreeNode&) const = default;
};

/// Rooted tree whose leaves are the vertices 0..n-1 of a graph and whose inner
/// nodes are labeled union or join.
///
/// Node ids are assigned in preorder (the root is 0), so a node's id is smaller
/// than the ids of its descendants and children appear left to right.
/// Each tree carries the vertex names it was built from.
class Cotree {
 public:
  Cotree() = default;

  NodeId root() const { return 0; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t vertex_count() const { return names_.size(); }
  const CotreeNode& node(NodeId u) const { return nodes_[u]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Leaf node holding vertex v.
  NodeId leaf_of(VertexId v) const { return leaf_of_[v]; }
  /// -1 for the root.
  NodeId parent(NodeId u) const { return parent_[u]; }
  std::size_t depth(NodeId u) const { return depth_[u]; }

  /// L(T(u)) as sorted vertex ids.
  VertexSet leaves(NodeId u) const;
  /// Smallest vertex id below u.
  VertexId min_leaf(NodeId u) const { return min_leaf_[u]; }
  /// Number of leaves below u.
  std::size_t leaf_count(NodeId u) const { return leaf_count_[u]; }
  /// Leaves below u in left-to-right order.
  std::vector<VertexId> leaves_in_order(NodeId u) const;

  /// Children before parents, left to right.
  std::vector<NodeId> postorder() const;

  bool is_binary() const;

  bool operator==(const Cotree& o) const = default;

 private:
  friend class CotreeBuilder;

  std::vector<std::string> names_;
  std::vector<CotreeNode> nodes_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> leaf_of_;
  std::vector<std::size_t> depth_;
  std::vector<VertexId> min_leaf_;
  std::vector<std::size_t> leaf_count_;
  std::vector<std::size_t> leaf_begin_;   // offset of u's first leaf in leaf_order_
  std::vector<VertexId> leaf_order_;      // leaves in preorder
};

/// Assembles a Cotree from nodes added in any order.
class CotreeBuilder {
 public:
  /// Vertex names 0..n-1; defaults to v0..v{n-1}.
  explicit CotreeBuilder(std::size_t n);
  explicit CotreeBuilder(std::vector<std::string> names);

  NodeId add_leaf(VertexId v);
  NodeId add_inner(Label label, std::vector<NodeId> children);

  /// Validates and renumbers in preorder. Throws "invalid-cotree" when a
  /// vertex is missing or repeated, a node is shared or unreachable, or an
  /// inner node has fewer than two children.
  Cotree build(NodeId root) const;

 private:
  std::vector<std::string> names_;
  std::vector<CotreeNode> nodes_;
};

/// Cotree in which every inner node has exactly two children.
class BinaryCotree {
 public:
  /// Throws "not-binary".
  explicit BinaryCotree(Cotree t);
  const Cotree& tree() const { return tree_; }
  bool operator==(const BinaryCotree& o) const = default;

 private:
  Cotree tree_;
};

/// Induced path a-b-c-d: exactly the edges ab, bc and cd among the four.
struct P4Witness {
  std::array<VertexId, 4> path{};
  bool operator==(const P4Witness&) const = default;
};

/// True when the four vertices induce the path in the given order.
bool is_induced_p4(const Graph& g, const P4Witness& w);

using Recognition = std::variant<Cotree, P4Witness>;

/// Discriminating cotree of g with children ordered by smallest vertex, or a
/// P4 witness when g is not a cograph. Throws "empty-graph".
Recognition build_cotree(const Graph& g);

/// build_cotree that throws "not-a-cograph" (with the witness in the message).
Cotree require_cotree(const Graph& g);

/// Graph obtained by evaluating the unions and joins; names come from t.
Graph realized_graph(const Cotree& t);

/// True when t realizes exactly the edge set of g on the same vertex count.
bool realizes(const Cotree& t, const Graph& g);

/// No inner edge joins two nodes with the same label.
bool is_discriminating(const Cotree& t);

/// Contracts every inner edge with equal labels. The result is discriminating
/// and its children are ordered by smallest vertex.
Cotree make_discriminating(const Cotree& t);

/// Sorts every child list by smallest contained vertex.
Cotree canonical_order(const Cotree& t);

enum class BinarizeStrategy {
  /// Caterpillar over the children in their current order.
  LeftComb,
  /// Children of union nodes stably sorted by ascending chromatic number
  /// before combing; equal-chi children end up contiguous.
  ChiAscending,
  /// Children of union nodes: one child of maximum chromatic number first,
  /// the rest in their current order.
  MaxFirst,
};

/// Replaces every inner node with k > 2 children by a caterpillar
/// (...((c1,c2),c3),...,ck) of nodes with the same label.
BinaryCotree to_binary(const Cotree& t, BinarizeStrategy strategy);

/// chi per node: leaf 1, union max, join sum.
std::vector<std::size_t> chromatic_numbers(const Cotree& t);
std::size_t chromatic_number(const Cotree& t);

/// Inner nodes print as "(c1,...,ck)L" with L in {0,1}; leaves print their
/// vertex name; the tree ends with ';'.
std::string newick_write(const Cotree& t);
/// Newick text of the subtree at u, without the trailing ';'.
std::string newick_subtree(const Cotree& t, NodeId u);

/// Leaves get vertex ids in order of appearance. Throws "parse-error" with a
/// byte offset, or "bad-label".
Cotree newick_read(std::string_view text);
/// Leaf names are resolved against g and must cover V(g) exactly; throws
/// "cotree-graph-mismatch" otherwise.
Cotree newick_read(std::string_view text, const Graph& g);

Cotree read_newick_file(const std::string& path, const Graph& g);

}  // namespace cohc
