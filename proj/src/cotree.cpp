#include "cograph_hc/cotree.hpp"

#include <algorithm>
#include <utility>

#include "cograph_hc/error.hpp"

namespace cohc {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, "invalid-cotree", what); }

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = default_vertex_name(i);
  return names;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cotree

VertexSet Cotree::leaves(NodeId u) const {
  VertexSet out = leaves_in_order(u);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Cotree::leaves_in_order(NodeId u) const {
  auto first = leaf_order_.begin() + static_cast<std::ptrdiff_t>(leaf_begin_[u]);
  return {first, first + static_cast<std::ptrdiff_t>(leaf_count_[u])};
}

std::vector<NodeId> Cotree::postorder() const {
  // Preorder numbering: reversing a right-to-left preorder gives a
  // left-to-right postorder.
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  if (nodes_.empty()) return out;
  std::vector<NodeId> stack{0};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (NodeId c : nodes_[u].children) stack.push_back(c);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool Cotree::is_binary() const {
  for (const auto& nd : nodes_)
    if (!nd.is_leaf() && nd.children.size() != 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// CotreeBuilder

CotreeBuilder::CotreeBuilder(std::size_t n) : names_(default_names(n)) {}

CotreeBuilder::CotreeBuilder(std::vector<std::string> names) : names_(std::move(names)) {}

NodeId CotreeBuilder::add_leaf(VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= names_.size()) invalid("leaf vertex " + std::to_string(v) + " out of range");
  CotreeNode nd;
  nd.vertex = v;
  nodes_.push_back(std::move(nd));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CotreeBuilder::add_inner(Label label, std::vector<NodeId> children) {
  CotreeNode nd;
  nd.label = label;
  nd.children = std::move(children);
  nodes_.push_back(std::move(nd));
  return static_cast<NodeId>(nodes_.size() - 1);
}

Cotree CotreeBuilder::build(NodeId root) const {
  const std::size_t n = names_.size();
  if (n == 0) invalid("no vertices");
  if (root < 0 || static_cast<std::size_t>(root) >= nodes_.size()) invalid("root out of range");

  Cotree t;
  t.names_ = names_;
  t.leaf_of_.assign(n, -1);

  // Preorder walk assigning new ids; children pushed in reverse.
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<std::pair<NodeId, NodeId>> stack{{root, -1}};  // (old id, new parent)
  while (!stack.empty()) {
    auto [old, parent] = stack.back();
    stack.pop_back();
    if (old < 0 || static_cast<std::size_t>(old) >= nodes_.size()) invalid("child id out of range");
    if (seen[old]) invalid("node " + std::to_string(old) + " reached twice");
    seen[old] = 1;
    const CotreeNode& src = nodes_[old];
    const auto id = static_cast<NodeId>(t.nodes_.size());
    CotreeNode nd;
    nd.vertex = src.vertex;
    nd.label = src.label;
    t.nodes_.push_back(std::move(nd));
    t.parent_.push_back(parent);
    t.depth_.push_back(parent < 0 ? 0 : t.depth_[parent] + 1);
    if (parent >= 0) t.nodes_[parent].children.push_back(id);
    if (src.is_leaf()) {
      if (!src.children.empty()) invalid("leaf with children");
      if (t.leaf_of_[src.vertex] >= 0) invalid("vertex " + names_[src.vertex] + " appears twice");
      t.leaf_of_[src.vertex] = id;
    } else {
      if (src.children.size() < 2) invalid("inner node with fewer than two children");
      for (auto it = src.children.rbegin(); it != src.children.rend(); ++it) stack.emplace_back(*it, id);
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (t.leaf_of_[v] < 0) invalid("vertex " + names_[v] + " has no leaf");

  // Leaf spans, counts and minima; nodes are in preorder so a reverse sweep
  // sees children before parents.
  const std::size_t m = t.nodes_.size();
  t.leaf_begin_.assign(m, 0);
  t.leaf_count_.assign(m, 0);
  t.min_leaf_.assign(m, static_cast<VertexId>(n));
  for (std::size_t u = 0; u < m; ++u) {
    if (t.nodes_[u].is_leaf()) {
      t.leaf_begin_[u] = t.leaf_order_.size();
      t.leaf_order_.push_back(t.nodes_[u].vertex);
    }
  }
  for (std::size_t k = m; k-- > 0;) {
    auto& nd = t.nodes_[k];
    if (nd.is_leaf()) {
      t.leaf_count_[k] = 1;
      t.min_leaf_[k] = nd.vertex;
    } else {
      t.leaf_begin_[k] = t.leaf_begin_[nd.children.front()];
      for (NodeId c : nd.children) {
        t.leaf_count_[k] += t.leaf_count_[c];
        t.min_leaf_[k] = std::min(t.min_leaf_[k], t.min_leaf_[c]);
      }
    }
  }
  return t;
}

BinaryCotree::BinaryCotree(Cotree t) : tree_(std::move(t)) {
  if (!tree_.is_binary()) throw Error(ErrorCode::InvalidArgument, "not-binary", "inner node with more than two children");
}

// ---------------------------------------------------------------------------
// Recognition

bool is_induced_p4(const Graph& g, const P4Witness& w) {
  const auto& p = w.path;
  for (VertexId v : p)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  return true;
}

namespace {

// Induced P4 inside vs: middle edge b-c, a in N(b) \ N[c], d in N(c) \ N[b]
// with a, d non-adjacent. Only called on sets that are connected with a
// connected complement, which always contain one.
P4Witness find_p4_in(const Graph& g, const VertexSet& vs) {
  Bitset mask(g.size());
  for (VertexId v : vs) mask.set(static_cast<std::size_t>(v));
  const std::size_t lo = static_cast<std::size_t>(vs.front()) / Bitset::kWordBits;
  const std::size_t hi = static_cast<std::size_t>(vs.back()) / Bitset::kWordBits;
  Bitset ends_a(g.size()), ends_d(g.size());

  for (VertexId b : vs) {
    const Bitset& nb = g.neighbors(b);
    for (VertexId c : vs) {
      if (c == b || !g.adjacent(b, c)) continue;
      const Bitset& nc = g.neighbors(c);
      for (std::size_t w = lo; w <= hi; ++w) {
        ends_a.word(w) = mask.word(w) & nb.word(w) & ~nc.word(w);
        ends_d.word(w) = mask.word(w) & nc.word(w) & ~nb.word(w);
      }
      ends_a.reset(static_cast<std::size_t>(c));
      ends_d.reset(static_cast<std::size_t>(b));
      bool any_d = false;
      for (std::size_t w = lo; w <= hi && !any_d; ++w) any_d = ends_d.word(w) != 0;
      if (!any_d) continue;
      for (std::size_t wa = lo; wa <= hi; ++wa) {
        for (Bitset::Word x = ends_a.word(wa); x; x &= x - 1) {
          const auto a = static_cast<VertexId>(wa * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
          const Bitset& na = g.neighbors(a);
          for (std::size_t w = lo; w <= hi; ++w) {
            if (Bitset::Word y = ends_d.word(w) & ~na.word(w)) {
              const auto d = static_cast<VertexId>(w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(y)));
              return P4Witness{{a, b, c, d}};
            }
          }
        }
      }
    }
  }
  throw Error(ErrorCode::InvalidArgument, "internal", "no induced P4 in a prime vertex set");
}

}  // namespace

Recognition build_cotree(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::InvalidArgument, "empty-graph", "graph has no vertices");

  // Each work item is a vertex set whose connectivity may already be known:
  // children of a union are connected, children of a join are co-connected.
  enum class Known { Nothing, Connected, CoConnected };
  struct Item {
    VertexSet vs;
    NodeId parent;
    Known known;
  };

  CotreeBuilder builder(g.names());
  std::vector<Item> stack;
  stack.push_back({all_vertices(g), -1, Known::Nothing});
  // Inner nodes are created only after their children exist, so record the
  // tree shape first and emit it bottom-up.
  struct Proto {
    VertexId vertex = -1;
    Label label = Label::Union;
    std::vector<std::size_t> children;
  };
  std::vector<Proto> protos;

  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const std::size_t self = protos.size();
    protos.emplace_back();
    if (item.parent >= 0) protos[static_cast<std::size_t>(item.parent)].children.push_back(self);

    if (item.vs.size() == 1) {
      protos[self].vertex = item.vs.front();
      continue;
    }
    std::vector<VertexSet> parts;
    if (item.known != Known::Connected) {
      parts = connected_components(g, item.vs);
      if (parts.size() > 1) {
        protos[self].label = Label::Union;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
          stack.push_back({std::move(*it), static_cast<NodeId>(self), Known::Connected});
        continue;
      }
      if (item.known == Known::CoConnected) return find_p4_in(g, item.vs);
    }
    parts = complement_components(g, item.vs);
    if (parts.size() == 1) return find_p4_in(g, item.vs);
    protos[self].label = Label::Join;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      stack.push_back({std::move(*it), static_cast<NodeId>(self), Known::CoConnected});
  }

  // Children were pushed in reverse and popped in order, so each child list
  // is already sorted by smallest vertex.
  std::vector<NodeId> ids(protos.size(), -1);
  for (std::size_t k = protos.size(); k-- > 0;) {
    if (protos[k].vertex >= 0) {
      ids[k] = builder.add_leaf(protos[k].vertex);
    } else {
      std::vector<NodeId> ch;
      ch.reserve(protos[k].children.size());
      for (std::size_t c : protos[k].children) ch.push_back(ids[c]);
      ids[k] = builder.add_inner(protos[k].label, std::move(ch));
    }
  }
  return builder.build(ids[0]);
}

Cotree require_cotree(const Graph& g) {
  Recognition r = build_cotree(g);
  if (auto* w = std::get_if<P4Witness>(&r)) {
    std::string msg = "induced P4";
    for (VertexId v : w->path) msg += " " + g.name(v);
    throw Error(ErrorCode::NotCograph, "not-a-cograph", msg);
  }
  return std::get<Cotree>(std::move(r));
}

Graph realized_graph(const Cotree& t) {
  Graph g(t.vertex_count(), t.names());
  for (NodeId u = 0; u < static_cast<NodeId>(t.node_count()); ++u) {
    const auto& nd = t.node(u);
    if (nd.is_leaf() || nd.label != Label::Join) continue;
    std::vector<VertexSet> parts;
    parts.reserve(nd.children.size());
    for (NodeId c : nd.children) parts.push_back(t.leaves(c));
    g.add_join_edges(parts);
  }
  return g;
}

bool realizes(const Cotree& t, const Graph& g) {
  return t.vertex_count() == g.size() && realized_graph(t).same_edges(g);
}

// ---------------------------------------------------------------------------
// Normal forms

bool is_discriminating(const Cotree& t) {
  for (NodeId u = 1; u < static_cast<NodeId>(t.node_count()); ++u) {
    const auto& nd = t.node(u);
    if (!nd.is_leaf() && nd.label == t.node(t.parent(u)).label) return false;
  }
  return true;
}

namespace {

// Rebuilds t bottom-up; `arrange` may reorder or regroup the already-rebuilt
// children of each inner node and returns the new builder id of that node.
template <class Arrange>
Cotree rebuild(const Cotree& t, Arrange&& arrange) {
  CotreeBuilder b(t.names());
  std::vector<NodeId> ids(t.node_count(), -1);
  for (NodeId u : t.postorder()) {
    const auto& nd = t.node(u);
    if (nd.is_leaf()) {
      ids[u] = b.add_leaf(nd.vertex);
      continue;
    }
    ids[u] = arrange(b, u, ids);
  }
  return b.build(ids[t.root()]);
}

std::vector<NodeId> sorted_by_min_leaf(const Cotree& t, const std::vector<NodeId>& children) {
  std::vector<NodeId> out = children;
  std::sort(out.begin(), out.end(), [&](NodeId x, NodeId y) { return t.min_leaf(x) < t.min_leaf(y); });
  return out;
}

}  // namespace

Cotree canonical_order(const Cotree& t) {
  return rebuild(t, [&](CotreeBuilder& b, NodeId u, const std::vector<NodeId>& ids) {
    std::vector<NodeId> ch;
    for (NodeId c : sorted_by_min_leaf(t, t.node(u).children)) ch.push_back(ids[c]);
    return b.add_inner(t.node(u).label, std::move(ch));
  });
}

Cotree make_discriminating(const Cotree& t) {
  // Flattened child lists, in original tree ids, for every node that survives.
  std::vector<std::vector<NodeId>> flat(t.node_count());
  for (NodeId u : t.postorder()) {
    const auto& nd = t.node(u);
    if (nd.is_leaf()) continue;
    for (NodeId c : nd.children) {
      const auto& cn = t.node(c);
      if (!cn.is_leaf() && cn.label == nd.label)
        flat[u].insert(flat[u].end(), flat[c].begin(), flat[c].end());
      else
        flat[u].push_back(c);
    }
    flat[u] = sorted_by_min_leaf(t, flat[u]);
  }
  return rebuild(t, [&](CotreeBuilder& b, NodeId u, const std::vector<NodeId>& ids) {
    std::vector<NodeId> ch;
    for (NodeId c : flat[u]) ch.push_back(ids[c]);
    return b.add_inner(t.node(u).label, std::move(ch));
  });
}

std::vector<std::size_t> chromatic_numbers(const Cotree& t) {
  std::vector<std::size_t> chi(t.node_count(), 1);
  for (NodeId u : t.postorder()) {
    const auto& nd = t.node(u);
    if (nd.is_leaf()) continue;
    std::size_t acc = 0;
    for (NodeId c : nd.children) acc = nd.label == Label::Join ? acc + chi[c] : std::max(acc, chi[c]);
    chi[u] = acc;
  }
  return chi;
}

std::size_t chromatic_number(const Cotree& t) { return chromatic_numbers(t)[t.root()]; }

BinaryCotree to_binary(const Cotree& t, BinarizeStrategy strategy) {
  const std::vector<std::size_t> chi = chromatic_numbers(t);
  Cotree out = rebuild(t, [&](CotreeBuilder& b, NodeId u, const std::vector<NodeId>& ids) {
    const auto& nd = t.node(u);
    std::vector<NodeId> order = nd.children;
    if (nd.label == Label::Union && order.size() > 2) {
      if (strategy == BinarizeStrategy::ChiAscending) {
        std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) { return chi[x] < chi[y]; });
      } else if (strategy == BinarizeStrategy::MaxFirst) {
        auto top = std::max_element(order.begin(), order.end(), [&](NodeId x, NodeId y) { return chi[x] < chi[y]; });
        std::rotate(order.begin(), top, top + 1);
      }
    }
    NodeId acc = ids[order[0]];
    for (std::size_t i = 1; i < order.size(); ++i) acc = b.add_inner(nd.label, {acc, ids[order[i]]});
    return acc;
  });
  return BinaryCotree(std::move(out));
}

}  // namespace cohc
