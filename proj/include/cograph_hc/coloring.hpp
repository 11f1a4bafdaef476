#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cograph_hc/cotree.hpp"
#include "cograph_hc/graph.hpp"

namespace cohc {

using Color = std::int32_t;

/// Total map vertex -> positive color. The color set is whatever the map hits.
class Coloring {
 public:
  Coloring() = default;
  /// Throws "bad-color" for colors below 1.
  explicit Coloring(std::vector<Color> colors);

  std::size_t size() const { return colors_.size(); }
  Color operator[](VertexId v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

  /// Sorted distinct colors.
  std::vector<Color> color_set() const;
  std::vector<Color> color_set(const VertexSet& vs) const;
  std::size_t color_count() const { return color_set().size(); }

  /// Color classes renamed 1..k in order of first appearance by vertex id.
  /// Two colorings induce the same partition iff their canonical forms agree.
  Coloring canonical() const;

  bool operator==(const Coloring&) const = default;
  auto operator<=>(const Coloring&) const = default;

 private:
  std::vector<Color> colors_;
};

enum class Axiom { None, K2, K3, Proper };

std::string_view axiom_name(Axiom a);

/// Outcome of an hc check. A rejection names the two vertex groups whose color
/// sets break the axiom, so it can be re-checked without the tree.
struct Verdict {
  bool accepted = true;
  Axiom axiom = Axiom::None;
  /// Failing cotree node for checks against a given tree; -1 otherwise.
  NodeId node = -1;
  /// Vertices of the failing subgraph.
  VertexSet scope;
  VertexSet first, second;
  std::vector<Color> first_colors, second_colors;

  /// True when the recorded color sets really violate the recorded axiom.
  bool certificate_holds() const;
};

/// Throws "coloring-domain-mismatch" when c is not defined on exactly V(g).
void check_domain(const Graph& g, const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);

/// Colors vertices in `order` with the smallest color missing among already
/// colored neighbors. Throws "not-a-permutation".
Coloring greedy_coloring(const Graph& g, const std::vector<VertexId>& order);

/// Whether some vertex order makes greedy_coloring produce exactly c: the
/// colors are 1..k and every vertex of color j sees all colors 1..j-1.
/// Throws "not-proper".
bool is_greedy(const Graph& g, const Coloring& c);

/// Checks (K1)-(K3) bottom-up along one binary cotree; the realization check
/// runs once so many colorings can be verified cheaply.
class HcVerifier {
 public:
  /// Throws "cotree-graph-mismatch" unless t realizes g.
  HcVerifier(const Graph& g, const BinaryCotree& t);

  /// Rejections report the deepest failing node, leftmost among equals.
  Verdict verify(const Coloring& c) const;

 private:
  Cotree tree_;
  std::vector<NodeId> postorder_;
};

Verdict verify_hc(const Graph& g, const BinaryCotree& t, const Coloring& c);

/// Whether some binary cotree of g admits c as an hc-coloring, decided top
/// down on the discriminating cotree. Rejections carry axiom Proper (a
/// monochromatic edge) or K3 (a union level where no component's colors
/// contain all the others). Throws "not-a-cograph".
Verdict is_hc_coloring(const Graph& g, const Coloring& c);
/// Same decision with a cotree of g supplied by the caller; it is contracted
/// to the discriminating form first when needed.
Verdict is_hc_coloring(const Graph& g, const Cotree& t, const Coloring& c);

/// Recursively minimal colorings are exactly the hc-colorings.
bool is_recursively_minimal(const Graph& g, const Coloring& c);

// Coloring file: one "vertex<TAB>color" line per vertex (names or ids),
// '#' comments and blank lines ignored.
Coloring parse_coloring(std::string_view text, const Graph& g);
std::string format_coloring(const Coloring& c, const Graph& g);
Coloring read_coloring_file(const std::string& path, const Graph& g);
void write_coloring_file(const Coloring& c, const Graph& g, const std::string& path);

}  // namespace cohc
