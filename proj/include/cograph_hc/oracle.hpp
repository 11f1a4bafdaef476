#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cograph_hc/coloring.hpp"
#include "cograph_hc/cotree.hpp"
#include "cograph_hc/graph.hpp"

/// Brute-force reference implementations. Nothing in here calls the fast
/// paths (recognition, verification, coloring algorithms); graphs are read
/// only through Graph::adjacent. Functions throw "size-guard" above their
/// limits.
namespace cohc::oracle {

inline constexpr std::size_t kMaxEnumerationN = 7;
inline constexpr std::size_t kMaxChromaticN = 12;
inline constexpr std::size_t kMaxOrderN = 8;

/// Checks every vertex quadruple.
std::optional<P4Witness> find_induced_p4(const Graph& g);

/// Smallest k admitting a proper k-coloring, by backtracking. 0 for n = 0.
std::size_t brute_chromatic(const Graph& g);

/// brute_chromatic of every induced subgraph, indexed by vertex bitmask.
std::vector<std::size_t> subset_chromatic(const Graph& g);

/// Largest number of colors used by first-fit over all n! vertex orders.
std::size_t brute_grundy(const Graph& g);

/// First-fit coloring in the given order (independent of greedy_coloring).
Coloring first_fit(const Graph& g, const std::vector<VertexId>& order);

/// Every coloring produced by first-fit over all n! orders.
std::set<Coloring> all_first_fit_colorings(const Graph& g);

/// All binary cotrees realizing g, each once: an inner node splits its leaf
/// set into an unordered pair whose cross pairs are all edges (join) or all
/// non-edges (union); the part holding the smaller vertex is the left child.
std::vector<BinaryCotree> all_binary_cotrees(const Graph& g);

/// All colorings of {0..n-1} up to renaming, as restricted growth strings
/// (colors 1..k in order of first use), proper or not.
std::vector<Coloring> all_partitions(std::size_t n);

/// Proper surjective colorings onto exactly {1..chi(g)}.
std::vector<Coloring> all_min_colorings(const Graph& g);

/// Components of the subgraph induced by a vertex bitmask, as bitmasks.
std::vector<std::uint32_t> component_masks(const Graph& g, std::uint32_t mask);

bool proper(const Graph& g, const Coloring& c);

/// Axiom and minimality checks along one binary cotree, on vertex bitmasks
/// (n <= 32).
class TreeOracle {
 public:
  TreeOracle(const Graph& g, const BinaryCotree& t);

  /// (K1)-(K3) evaluated at every node.
  bool satisfies_axioms(const Coloring& c) const;

  /// Proper, and every node u has |c(L(T(u)))| = chi(G(u)), with chi taken
  /// from a subset_chromatic table of the same graph.
  bool color_minimal(const Coloring& c, const std::vector<std::size_t>& chi) const;

 private:
  std::vector<std::uint64_t> color_masks(const Coloring& c) const;

  const Graph* graph_;
  std::vector<std::uint32_t> leaves_;  // leaf bitmask per node, preorder
  std::vector<int> left_, right_;      // -1 at leaves
  std::vector<bool> join_;
  std::vector<int> vertex_;
};

bool satisfies_axioms(const Graph& g, const BinaryCotree& t, const Coloring& c);

/// The direct definition of recursive minimality along t.
bool color_minimal_along(const Graph& g, const BinaryCotree& t, const Coloring& c);

}  // namespace cohc::oracle
