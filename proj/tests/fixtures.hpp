#pragma once

#include <string>
#include <vector>

#include "cograph_hc/coloring.hpp"
#include "cograph_hc/cotree.hpp"
#include "cograph_hc/error.hpp"
#include "cograph_hc/graph.hpp"

namespace fx {

// K2 + K1 + K1 on a b c d, edge ab.
inline cohc::Graph k2k1k1() {
  cohc::Graph g(4, {"a", "b", "c", "d"});
  g.add_edge(0, 1);
  return g;
}

inline cohc::Graph p4() {
  cohc::Graph g(4, {"a", "b", "c", "d"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

inline cohc::Coloring colors(std::vector<cohc::Color> c) { return cohc::Coloring(std::move(c)); }

// Key of the thrown cohc::Error, or "" when f does not throw one.
template <class F>
std::string error_key(F&& f) {
  try {
    f();
  } catch (const cohc::Error& e) {
    return e.key();
  }
  return "";
}

}  // namespace fx
