#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cograph_hc/cotree.hpp"
#include "cograph_hc/graph.hpp"

namespace cohc {

inline constexpr std::size_t kMaxExhaustiveN = 7;

/// Calls f on every labeled cograph with n vertices, each exactly once, in
/// order of the edge bitmask. Throws "size-guard" for n > kMaxExhaustiveN.
void for_each_cograph(std::size_t n, const std::function<void(const Graph&)>& f);
std::vector<Graph> exhaustive_cographs(std::size_t n);

struct GenParams {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t max_arity = 4;  // >= 2
  double balance = 0.5;       // probability that an inner node is a join
};

struct GeneratedCograph {
  Graph graph;
  Cotree cotree;
};

/// Samples a cotree top down (arity uniform in [2, min(max_arity, leaves)],
/// split sizes from uniformly chosen cut points, label join with probability
/// balance, vertex ids randomly permuted) and returns it with the graph it
/// realizes. Same params, same output. Throws "bad-params".
GeneratedCograph random_cograph(const GenParams& p);

}  // namespace cohc
