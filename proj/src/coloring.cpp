#include "cograph_hc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cograph_hc/error.hpp"

namespace cohc {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (Color c : colors_)
    if (c < 1) throw Error(ErrorCode::InvalidArgument, "bad-color", "colors must be positive, got " + std::to_string(c));
}

std::vector<Color> Coloring::color_set() const {
  std::vector<Color> s = colors_;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Color> Coloring::color_set(const VertexSet& vs) const {
  std::vector<Color> s;
  s.reserve(vs.size());
  for (VertexId v : vs) s.push_back(colors_[v]);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Coloring Coloring::canonical() const {
  std::unordered_map<Color, Color> rename;
  std::vector<Color> out(colors_.size());
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    auto [it, fresh] = rename.emplace(colors_[v], static_cast<Color>(rename.size() + 1));
    out[v] = it->second;
  }
  return Coloring(std::move(out));
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::None: return "none";
    case Axiom::K2: return "K2";
    case Axiom::K3: return "K3";
    case Axiom::Proper: return "proper";
  }
  return "?";
}

bool Verdict::certificate_holds() const {
  if (accepted) return axiom == Axiom::None;
  const auto& a = first_colors;
  const auto& b = second_colors;
  std::vector<Color> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  switch (axiom) {
    case Axiom::K2: return !common.empty();
    case Axiom::K3: return common != a && common != b;
    case Axiom::Proper: return a.size() == 1 && a == b;
    case Axiom::None: return false;
  }
  return false;
}

void check_domain(const Graph& g, const Coloring& c) {
  if (c.size() != g.size())
    throw Error(ErrorCode::Mismatch, "coloring-domain-mismatch",
                "coloring covers " + std::to_string(c.size()) + " vertices, graph has " + std::to_string(g.size()));
}

bool is_proper(const Graph& g, const Coloring& c) {
  check_domain(g, c);
  for (const auto& [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

Coloring greedy_coloring(const Graph& g, const std::vector<VertexId>& order) {
  const std::size_t n = g.size();
  if (order.size() != n) throw Error(ErrorCode::InvalidArgument, "not-a-permutation", "order has wrong length");
  std::vector<Color> color(n, 0);
  std::vector<char> placed(n, 0);
  for (VertexId v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || placed[v])
      throw Error(ErrorCode::InvalidArgument, "not-a-permutation", "vertex " + std::to_string(v) + " invalid or repeated");
    placed[v] = 1;
  }
  std::vector<std::size_t> seen_at;  // seen_at[c] == stamp when color c is taken
  std::size_t stamp = 0;
  for (VertexId v : order) {
    ++stamp;
    g.neighbors(v).for_each([&](std::size_t w) {
      Color c = color[w];
      if (c == 0) return;
      if (static_cast<std::size_t>(c) >= seen_at.size()) seen_at.resize(static_cast<std::size_t>(c) + 1, 0);
      seen_at[c] = stamp;
    });
    Color c = 1;
    while (static_cast<std::size_t>(c) < seen_at.size() && seen_at[c] == stamp) ++c;
    color[v] = c;
  }
  return Coloring(std::move(color));
}

bool is_greedy(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error(ErrorCode::InvalidArgument, "not-proper", "coloring has a monochromatic edge");
  auto colors = c.color_set();
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] != static_cast<Color>(i + 1)) return false;
  std::vector<std::size_t> seen_at(colors.size() + 1, 0);
  for (VertexId v = 0; v < static_cast<VertexId>(g.size()); ++v) {
    const auto stamp = static_cast<std::size_t>(v) + 1;
    g.neighbors(v).for_each([&](std::size_t w) { seen_at[c[static_cast<VertexId>(w)]] = stamp; });
    for (Color j = 1; j < c[v]; ++j)
      if (seen_at[j] != stamp) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Verification against a fixed binary cotree

HcVerifier::HcVerifier(const Graph& g, const BinaryCotree& t) : tree_(t.tree()), postorder_(tree_.postorder()) {
  if (!realizes(tree_, g))
    throw Error(ErrorCode::Mismatch, "cotree-graph-mismatch", "the cotree does not realize the graph");
}

namespace {

// Sorted color list -> ranks 0..k-1 so set relations can use 64-bit masks.
struct Ranked {
  std::vector<std::uint32_t> rank;  // per vertex
  std::size_t k = 0;
};

Ranked rank_colors(const Coloring& c) {
  auto set = c.color_set();
  Ranked r;
  r.k = set.size();
  r.rank.resize(c.size());
  for (std::size_t v = 0; v < c.size(); ++v)
    r.rank[v] = static_cast<std::uint32_t>(std::lower_bound(set.begin(), set.end(), c[static_cast<VertexId>(v)]) - set.begin());
  return r;
}

// Set operations over either masks or sorted rank lists.
struct MaskSets {
  using Set = std::uint64_t;
  static Set single(std::uint32_t r) { return std::uint64_t{1} << r; }
  static Set unite(const Set& a, const Set& b) { return a | b; }
  static bool disjoint(const Set& a, const Set& b) { return (a & b) == 0; }
  static bool subset(const Set& a, const Set& b) { return (a & ~b) == 0; }
};

struct ListSets {
  using Set = std::vector<std::uint32_t>;
  static Set single(std::uint32_t r) { return {r}; }
  static Set unite(const Set& a, const Set& b) {
    Set out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static bool disjoint(const Set& a, const Set& b) {
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] == b[j]) return false;
      a[i] < b[j] ? ++i : ++j;
    }
    return true;
  }
  static bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
};

template <class Ops>
NodeId deepest_failure(const Cotree& t, const std::vector<NodeId>& postorder, const Ranked& r, Axiom& axiom) {
  std::vector<typename Ops::Set> sets(t.node_count());
  NodeId worst = -1;
  for (NodeId u : postorder) {
    const auto& nd = t.node(u);
    if (nd.is_leaf()) {
      sets[u] = Ops::single(r.rank[nd.vertex]);
      continue;
    }
    const auto& a = sets[nd.children[0]];
    const auto& b = sets[nd.children[1]];
    const bool ok = nd.label == Label::Join ? Ops::disjoint(a, b) : (Ops::subset(a, b) || Ops::subset(b, a));
    if (!ok) {
      const bool deeper = worst < 0 || t.depth(u) > t.depth(worst) || (t.depth(u) == t.depth(worst) && u < worst);
      if (deeper) {
        worst = u;
        axiom = nd.label == Label::Join ? Axiom::K2 : Axiom::K3;
      }
    }
    sets[u] = Ops::unite(a, b);
  }
  return worst;
}

}  // namespace

Verdict HcVerifier::verify(const Coloring& c) const {
  if (c.size() != tree_.vertex_count())
    throw Error(ErrorCode::Mismatch, "coloring-domain-mismatch", "coloring does not match the cotree's vertices");
  const Ranked r = rank_colors(c);
  Verdict v;
  Axiom axiom = Axiom::None;
  const NodeId bad = r.k <= 64 ? deepest_failure<MaskSets>(tree_, postorder_, r, axiom)
                               : deepest_failure<ListSets>(tree_, postorder_, r, axiom);
  if (bad < 0) return v;
  const auto& nd = tree_.node(bad);
  v.accepted = false;
  v.axiom = axiom;
  v.node = bad;
  v.scope = tree_.leaves(bad);
  v.first = tree_.leaves(nd.children[0]);
  v.second = tree_.leaves(nd.children[1]);
  v.first_colors = c.color_set(v.first);
  v.second_colors = c.color_set(v.second);
  return v;
}

Verdict verify_hc(const Graph& g, const BinaryCotree& t, const Coloring& c) {
  check_domain(g, c);
  return HcVerifier(g, t).verify(c);
}

// ---------------------------------------------------------------------------
// Existential check

namespace {

Verdict hc_decide(const Graph& g, const Cotree& t, const Coloring& c) {
  Verdict v;
  for (const auto& [x, y] : g.edges()) {
    if (c[x] == c[y]) {
      v.accepted = false;
      v.axiom = Axiom::Proper;
      v.scope = {x, y};
      v.first = {x};
      v.second = {y};
      v.first_colors = {c[x]};
      v.second_colors = {c[y]};
      return v;
    }
  }

  // In the discriminating cotree the children of a join are the complement
  // components and the children of a union are the connected components, so
  // the top-down split is read off the tree. Preorder ids make the first
  // failure the topmost one.
  std::vector<std::vector<Color>> sets(t.node_count());
  for (NodeId u : t.postorder()) {
    const auto& nd = t.node(u);
    if (nd.is_leaf()) {
      sets[u] = {c[nd.vertex]};
      continue;
    }
    for (NodeId ch : nd.children) {
      std::vector<Color> merged;
      std::set_union(sets[u].begin(), sets[u].end(), sets[ch].begin(), sets[ch].end(), std::back_inserter(merged));
      sets[u] = std::move(merged);
    }
  }

  auto reject = [&](NodeId u, Axiom axiom, NodeId a, NodeId b) {
    v.accepted = false;
    v.axiom = axiom;
    v.scope = t.leaves(u);
    v.first = t.leaves(a);
    v.second = t.leaves(b);
    v.first_colors = sets[a];
    v.second_colors = sets[b];
  };

  for (NodeId u = 0; u < static_cast<NodeId>(t.node_count()); ++u) {
    const auto& nd = t.node(u);
    if (nd.is_leaf()) continue;
    const auto& ch = nd.children;
    if (nd.label == Label::Join) continue;  // complement components of a properly colored graph
    // Some child must carry every other child's colors; the widest child is
    // the only candidate.
    NodeId widest = ch[0];
    for (NodeId x : ch)
      if (sets[x].size() > sets[widest].size()) widest = x;
    for (NodeId x : ch) {
      if (x == widest) continue;
      if (!std::includes(sets[widest].begin(), sets[widest].end(), sets[x].begin(), sets[x].end())) {
        reject(u, Axiom::K3, widest, x);
        return v;
      }
    }
  }
  return v;
}

}  // namespace

Verdict is_hc_coloring(const Graph& g, const Coloring& c) {
  check_domain(g, c);
  return hc_decide(g, require_cotree(g), c);
}

Verdict is_hc_coloring(const Graph& g, const Cotree& t, const Coloring& c) {
  check_domain(g, c);
  if (!realizes(t, g)) throw Error(ErrorCode::Mismatch, "cotree-graph-mismatch", "the cotree does not realize the graph");
  return hc_decide(g, is_discriminating(t) ? t : make_discriminating(t), c);
}

bool is_recursively_minimal(const Graph& g, const Coloring& c) { return is_hc_coloring(g, c).accepted; }

// ---------------------------------------------------------------------------
// Coloring file format

Coloring parse_coloring(std::string_view text, const Graph& g) {
  std::unordered_map<std::string_view, VertexId> by_name;
  for (std::size_t v = 0; v < g.size(); ++v) by_name.emplace(g.name(static_cast<VertexId>(v)), static_cast<VertexId>(v));

  std::vector<Color> colors(g.size(), 0);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string vertex, color, extra;
    if (!(fields >> vertex)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!(fields >> color) || (fields >> extra))
      throw Error(ErrorCode::Parse, "parse-error", where + "expected '<vertex>\\t<color>'");
    VertexId v = -1;
    if (auto it = by_name.find(vertex); it != by_name.end()) {
      v = it->second;
    } else {
      std::size_t id = 0;
      auto [p, ec] = std::from_chars(vertex.data(), vertex.data() + vertex.size(), id);
      if (ec != std::errc() || p != vertex.data() + vertex.size() || id >= g.size())
        throw Error(ErrorCode::Mismatch, "coloring-domain-mismatch", where + "unknown vertex '" + vertex + "'");
      v = static_cast<VertexId>(id);
    }
    long long value = 0;
    auto [p, ec] = std::from_chars(color.data(), color.data() + color.size(), value);
    if (ec != std::errc() || p != color.data() + color.size() || value < 1 || value > INT32_MAX)
      throw Error(ErrorCode::Parse, "parse-error", where + "color '" + color + "' is not a positive integer");
    if (colors[v] != 0)
      throw Error(ErrorCode::Mismatch, "coloring-domain-mismatch", where + "vertex '" + vertex + "' colored twice");
    colors[v] = static_cast<Color>(value);
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (colors[v] == 0)
      throw Error(ErrorCode::Mismatch, "coloring-domain-mismatch", "vertex '" + g.name(static_cast<VertexId>(v)) + "' has no color");
  return Coloring(std::move(colors));
}

std::string format_coloring(const Coloring& c, const Graph& g) {
  check_domain(g, c);
  std::string out;
  for (std::size_t v = 0; v < c.size(); ++v)
    out += g.name(static_cast<VertexId>(v)) + "\t" + std::to_string(c[static_cast<VertexId>(v)]) + "\n";
  return out;
}

Coloring read_coloring_file(const std::string& path, const Graph& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "io-error", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_coloring(buf.str(), g);
}

void write_coloring_file(const Coloring& c, const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "io-error", "cannot write " + path);
  out << format_coloring(c, g);
}

}  // namespace cohc
