#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cograph_hc/coloring.hpp"
#include "cograph_hc/cotree.hpp"
#include "cograph_hc/graph.hpp"
#include "cograph_hc/rng.hpp"

namespace cohc {

using BigInt = boost::multiprecision::cpp_int;

/// Picks the injective recoloring applied to a non-maximum group at a union
/// node. Copied into each algorithm call, so a seeded chooser replays the same
/// choices every time it is passed in.
class InjectionChooser {
 public:
  enum class Strategy { IdentityPrefix, SeededRandom, ExhaustiveCallback };
  /// Receives the number of available injections and returns the index of
  /// the one to use, in lexicographic order of images.
  using Callback = std::function<std::size_t(std::size_t option_count)>;

  /// i-th smallest source color -> i-th smallest target color.
  static InjectionChooser identity_prefix();
  static InjectionChooser seeded_random(std::uint64_t seed);
  static InjectionChooser exhaustive(Callback pick);

  Strategy strategy() const { return strategy_; }

  /// Image of each color in `source` (sorted) inside `target` (sorted,
  /// at least as large); images are distinct.
  std::vector<Color> choose(const std::vector<Color>& source, const std::vector<Color>& target);

 private:
  Strategy strategy_ = Strategy::IdentityPrefix;
  Rng rng_{0};
  Callback pick_;
};

/// Drives an exhaustive chooser through every sequence of choices, depth
/// first. Usage: `for (ChoiceOdometer odo; odo.next();) run(odo.chooser());`
class ChoiceOdometer {
 public:
  /// Advances to the next choice sequence; false once all were visited.
  bool next();
  InjectionChooser chooser();

 private:
  std::vector<std::size_t> digits_;  // choice taken at each decision point
  std::vector<std::size_t> radix_;   // options seen at each decision point
  std::size_t depth_ = 0;
  bool started_ = false;
};

struct Alg1Result {
  Coloring coloring;
  Cotree cotree;  // the discriminating cotree the coloring was built on
};

/// Recursively minimal coloring on the discriminating cotree: every vertex
/// starts with its own color, then bottom-up every union node maps each
/// non-maximum component injectively into the colors of a component of
/// maximum chromatic number (first such component on ties). Colors are
/// finally renamed to 1..chi keeping their order. Throws "not-a-cograph".
Alg1Result alg1_color(const Graph& g, InjectionChooser chooser);

/// The same procedure along a caller-supplied cotree of any arity; the groups
/// at a union node are its children. Throws "cotree-graph-mismatch".
Coloring alg2_color(const Graph& g, const Cotree& t, InjectionChooser chooser);

/// Binary cotree for which c is an hc-coloring, built top down: a connected
/// part splits off the complement component holding its smallest vertex; a
/// disconnected part splits off a component with the fewest colors.
/// Throws "not-hc" when c is not an hc-coloring, "not-a-cograph".
BinaryCotree reconstruct_cotree(const Graph& g, const Coloring& c);

/// Number of injections from an s1-set into an s2-set, s2!/(s2-s1)!.
/// Throws "injection-size-order" when s1 > s2.
BigInt g_injections(std::size_t s1, std::size_t s2);

BigInt factorial(std::size_t n);

/// Per-node hc-coloring counts along one binary cotree.
///
/// per_node[u] counts the color-class partitions of G(u) (colorings up to
/// renaming) that are hc w.r.t. the subtree at u; colors[u] is the number of
/// colors they use. labeled_total counts colorings onto a fixed set of chi
/// colors: per_node[root] * chi!.
struct CountReport {
  BinaryCotree tree;
  std::vector<BigInt> per_node;
  std::vector<std::size_t> colors;
  BigInt labeled_total;
};

CountReport count_hc_wrt(const BinaryCotree& t);

/// All hc-colorings of g onto a fixed chi-set, whichever cotree explains
/// them: prod_i g(s_i, s) N(G_i) over the connected components G_i with
/// s_i = chi(G_i), s = chi(G). The per-node section describes the
/// max-first caterpillar cotree that realizes this count. Throws "not-a-cograph".
CountReport count_hc_total(const Graph& g);

/// "node <newick> N <int> s <int>" per node in preorder, then
/// "labeled_total <int>".
std::string format_count_report(const CountReport& r);

}  // namespace cohc
