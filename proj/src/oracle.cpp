#include "cograph_hc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "cograph_hc/error.hpp"

namespace cohc::oracle {

namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    throw Error(ErrorCode::SizeGuard, "size-guard",
                std::string(what) + " supports n <= " + std::to_string(limit) + ", got " + std::to_string(n));
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  guard(g.size(), 32, "bitmask oracle");
  const auto n = static_cast<VertexId>(g.size());
  std::vector<std::uint32_t> adj(g.size(), 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= 1U << v;
  return adj;
}

// Can the vertices in `order` be properly colored with k colors?
bool colorable(const std::vector<std::uint32_t>& adj, const std::vector<int>& order, std::size_t k) {
  std::vector<int> color(adj.size(), -1);
  std::function<bool(std::size_t, int)> go = [&](std::size_t i, int used) {
    if (i == order.size()) return true;
    const int v = order[i];
    const int top = std::min(used + 1, static_cast<int>(k));
    for (int c = 0; c < top; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (color[order[j]] == c && (adj[v] >> order[j] & 1U)) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (go(i + 1, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
  };
  return go(0, 0);
}

std::size_t chromatic_of(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  std::vector<int> order;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if (mask >> v & 1U) order.push_back(v);
  if (order.empty()) return 0;
  std::size_t k = 1;
  while (!colorable(adj, order, k)) ++k;
  return k;
}

std::vector<Color> first_fit_raw(const std::vector<std::uint32_t>& adj, const std::vector<VertexId>& order) {
  std::vector<Color> color(adj.size(), 0);
  for (VertexId v : order) {
    std::uint64_t taken = 0;
    for (std::size_t u = 0; u < adj.size(); ++u)
      if ((adj[v] >> u & 1U) && color[u] > 0) taken |= std::uint64_t{1} << color[u];
    Color c = 1;
    while (taken >> c & 1U) ++c;
    color[v] = c;
  }
  return color;
}

void check_order(std::size_t n, const std::vector<VertexId>& order) {
  std::vector<bool> seen(n, false);
  bool ok = order.size() == n;
  for (VertexId v : order) {
    if (!ok) break;
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) ok = false;
    else seen[v] = true;
  }
  if (!ok) throw Error(ErrorCode::InvalidArgument, "not-a-permutation", "order is not a permutation of the vertices");
}

}  // namespace

std::optional<P4Witness> find_induced_p4(const Graph& g) {
  const auto n = static_cast<VertexId>(g.size());
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        for (VertexId d = c + 1; d < n; ++d) {
          const std::array<VertexId, 4> q{a, b, c, d};
          std::array<int, 4> deg{};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          // Three edges with degrees {1,1,2,2} form exactly a path.
          if (edges != 3 || std::count(deg.begin(), deg.end(), 1) != 2 || std::count(deg.begin(), deg.end(), 2) != 2)
            continue;
          P4Witness w;
          int end = 0;
          while (deg[end] != 1) ++end;
          w.path[0] = q[end];
          std::array<bool, 4> used{};
          used[end] = true;
          for (int step = 1; step < 4; ++step)
            for (int i = 0; i < 4; ++i)
              if (!used[i] && g.adjacent(w.path[step - 1], q[i])) {
                w.path[step] = q[i];
                used[i] = true;
                break;
              }
          return w;
        }
  return std::nullopt;
}

std::size_t brute_chromatic(const Graph& g) {
  guard(g.size(), kMaxChromaticN, "brute_chromatic");
  const auto adj = adjacency_masks(g);
  return chromatic_of(adj, g.size() == 32 ? ~0U : (1U << g.size()) - 1);
}

std::vector<std::size_t> subset_chromatic(const Graph& g) {
  guard(g.size(), kMaxChromaticN, "subset_chromatic");
  const auto adj = adjacency_masks(g);
  std::vector<std::size_t> table(std::size_t{1} << g.size());
  for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = chromatic_of(adj, m);
  return table;
}

Coloring first_fit(const Graph& g, const std::vector<VertexId>& order) {
  check_order(g.size(), order);
  return Coloring(first_fit_raw(adjacency_masks(g), order));
}

std::size_t brute_grundy(const Graph& g) {
  guard(g.size(), kMaxOrderN, "brute_grundy");
  const auto adj = adjacency_masks(g);
  std::vector<VertexId> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = 0;
  do {
    const auto c = first_fit_raw(adj, order);
    if (!c.empty()) best = std::max(best, static_cast<std::size_t>(*std::max_element(c.begin(), c.end())));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::set<Coloring> all_first_fit_colorings(const Graph& g) {
  guard(g.size(), kMaxOrderN, "all_first_fit_colorings");
  const auto adj = adjacency_masks(g);
  std::vector<VertexId> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::set<Coloring> out;
  do {
    out.insert(Coloring(first_fit_raw(adj, order)));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<BinaryCotree> all_binary_cotrees(const Graph& g) {
  guard(g.size(), kMaxEnumerationN, "all_binary_cotrees");
  if (g.empty()) return {};
  const auto adj = adjacency_masks(g);

  // A subtree in preorder; children of node i sit at i+1 and i+1+|left|.
  struct Node {
    int vertex;
    Label label;
  };
  using Shape = std::vector<Node>;
  std::vector<std::vector<Shape>> memo(std::size_t{1} << g.size());
  std::vector<bool> done(memo.size(), false);

  std::function<const std::vector<Shape>&(std::uint32_t)> shapes = [&](std::uint32_t mask) -> const std::vector<Shape>& {
    if (done[mask]) return memo[mask];
    std::vector<Shape> out;
    if (std::popcount(mask) == 1) {
      out.push_back({{std::countr_zero(mask), Label::Union}});
    } else {
      const std::uint32_t low = mask & -mask;
      const std::uint32_t rest = mask & ~low;
      // Left part: low plus a proper subset of the rest.
      for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        const std::uint32_t left = low | sub;
        const std::uint32_t right = mask & ~left;
        if (right != 0) {
          bool all = true, none = true;
          for (std::uint32_t l = left; l; l &= l - 1) {
            const std::uint32_t cross = adj[std::countr_zero(l)] & right;
            if (cross != right) all = false;
            if (cross != 0) none = false;
          }
          if (all || none) {
            const Label label = all ? Label::Join : Label::Union;
            const auto& ls = shapes(left);
            const auto& rs = shapes(right);
            for (const auto& a : ls)
              for (const auto& b : rs) {
                Shape s;
                s.reserve(1 + a.size() + b.size());
                s.push_back({-1, label});
                s.insert(s.end(), a.begin(), a.end());
                s.insert(s.end(), b.begin(), b.end());
                out.push_back(std::move(s));
              }
          }
        }
        if (sub == 0) break;
      }
    }
    done[mask] = true;
    memo[mask] = std::move(out);
    return memo[mask];
  };

  const std::uint32_t full = (1U << g.size()) - 1;
  std::vector<BinaryCotree> trees;
  for (const Shape& s : shapes(full)) {
    CotreeBuilder b(g.names());
    std::size_t pos = 0;
    std::function<NodeId()> emit = [&]() -> NodeId {
      const Node nd = s[pos++];
      if (nd.vertex >= 0) return b.add_leaf(nd.vertex);
      const NodeId l = emit();
      const NodeId r = emit();
      return b.add_inner(nd.label, {l, r});
    };
    const NodeId root = emit();
    trees.emplace_back(b.build(root));
  }
  return trees;
}

std::vector<Coloring> all_partitions(std::size_t n) {
  guard(n, kMaxEnumerationN, "all_partitions");
  std::vector<Coloring> out;
  if (n == 0) return out;
  std::vector<Color> rgs(n, 1);
  std::function<void(std::size_t, Color)> go = [&](std::size_t i, Color top) {
    if (i == n) {
      out.emplace_back(rgs);
      return;
    }
    for (Color c = 1; c <= top + 1; ++c) {
      rgs[i] = c;
      go(i + 1, std::max(top, c));
    }
  };
  go(1, 1);
  return out;
}

std::vector<Coloring> all_min_colorings(const Graph& g) {
  guard(g.size(), kMaxEnumerationN, "all_min_colorings");
  std::vector<Coloring> out;
  if (g.empty()) return out;
  const std::size_t k = brute_chromatic(g);
  // Every assignment V -> {1..k}, kept when proper and onto.
  std::vector<Color> c(g.size(), 1);
  while (true) {
    Coloring col(c);
    if (col.color_count() == k && proper(g, col)) out.push_back(col);
    std::size_t i = 0;
    while (i < c.size() && c[i] == static_cast<Color>(k)) c[i++] = 1;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

std::vector<std::uint32_t> component_masks(const Graph& g, std::uint32_t mask) {
  const auto adj = adjacency_masks(g);
  std::vector<std::uint32_t> out;
  std::uint32_t left = mask;
  while (left) {
    std::uint32_t comp = left & -left;
    std::uint32_t grown = comp;
    do {
      comp = grown;
      for (std::uint32_t m = comp; m; m &= m - 1) grown |= adj[std::countr_zero(m)] & mask;
    } while (grown != comp);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool proper(const Graph& g, const Coloring& c) {
  const auto n = static_cast<VertexId>(g.size());
  if (c.size() != g.size()) return false;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) && c[u] == c[v]) return false;
  return true;
}

TreeOracle::TreeOracle(const Graph& g, const BinaryCotree& bt) : graph_(&g) {
  guard(g.size(), 32, "TreeOracle");
  const Cotree& t = bt.tree();
  const std::size_t m = t.node_count();
  leaves_.assign(m, 0);
  left_.assign(m, -1);
  right_.assign(m, -1);
  join_.assign(m, false);
  vertex_.assign(m, -1);
  for (std::size_t u = m; u-- > 0;) {
    const auto& nd = t.node(static_cast<NodeId>(u));
    if (nd.is_leaf()) {
      vertex_[u] = nd.vertex;
      leaves_[u] = 1U << nd.vertex;
      continue;
    }
    left_[u] = nd.children.at(0);
    right_[u] = nd.children.at(1);
    join_[u] = nd.label == Label::Join;
    leaves_[u] = leaves_[left_[u]] | leaves_[right_[u]];
  }
}

std::vector<std::uint64_t> TreeOracle::color_masks(const Coloring& c) const {
  if (c.size() != graph_->size())
    throw Error(ErrorCode::Mismatch, "coloring-domain-mismatch", "coloring size differs from vertex count");
  std::vector<Color> distinct = c.colors();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint64_t> mask(leaves_.size(), 0);
  for (std::size_t u = leaves_.size(); u-- > 0;) {
    if (vertex_[u] >= 0) {
      const auto rank = std::lower_bound(distinct.begin(), distinct.end(), c[vertex_[u]]) - distinct.begin();
      mask[u] = std::uint64_t{1} << rank;
    } else {
      mask[u] = mask[left_[u]] | mask[right_[u]];
    }
  }
  return mask;
}

bool TreeOracle::satisfies_axioms(const Coloring& c) const {
  const auto mask = color_masks(c);
  for (std::size_t u = 0; u < leaves_.size(); ++u) {
    if (vertex_[u] >= 0) continue;
    const std::uint64_t a = mask[left_[u]], b = mask[right_[u]];
    if (join_[u]) {
      if (a & b) return false;
    } else if ((a & b) != a && (a & b) != b) {
      return false;
    }
  }
  return true;
}

bool TreeOracle::color_minimal(const Coloring& c, const std::vector<std::size_t>& chi) const {
  if (!proper(*graph_, c)) return false;
  const auto mask = color_masks(c);
  for (std::size_t u = 0; u < leaves_.size(); ++u)
    if (static_cast<std::size_t>(std::popcount(mask[u])) != chi.at(leaves_[u])) return false;
  return true;
}

bool satisfies_axioms(const Graph& g, const BinaryCotree& t, const Coloring& c) {
  return TreeOracle(g, t).satisfies_axioms(c);
}

bool color_minimal_along(const Graph& g, const BinaryCotree& t, const Coloring& c) {
  return TreeOracle(g, t).color_minimal(c, subset_chromatic(g));
}

}  // namespace cohc::oracle
